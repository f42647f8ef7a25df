#include "almg/workstats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace almg {

namespace {

struct InitialEigenpair {
    double energy = 0.0;
    int index = 0;
    std::vector<double> vec;
};

// Eigenvalue + eigenvector of H(gamma_i) for the requested initial state.
// Ground/Highest go through inverse iteration (extremal states are well
// separated inside a sector); an explicit Index takes the full-vector solve.
InitialEigenpair initial_state(const QuenchSpec& spec, const SpinSector& sector,
                               const TridiagonalOperator& h_i) {
    InitialEigenpair out;
    const int dim = static_cast<int>(sector.dim());
    if (spec.initial == InitialState::Index) {
        if (spec.index < 0 || spec.index >= dim)
            throw ParameterError("initial state index out of range for sector dim "
                                 + std::to_string(dim));
        auto full = eigh_tridiagonal(h_i, true);
        out.index = spec.index;
        out.energy = full.values[spec.index];
        out.vec.assign(full.vectors.begin() + spec.index * dim,
                       full.vectors.begin() + (spec.index + 1) * dim);
        return out;
    }
    auto values = eigh_tridiagonal(h_i, false).values;
    out.index = spec.initial == InitialState::Ground ? 0 : dim - 1;
    out.energy = values[out.index];
    out.vec = eigenvector_near(h_i, out.energy);
    return out;
}

}  // namespace

void QuenchSpec::validate() const {
    ModelParams mp{N, gamma_i, alpha};
    mp.validate();
    const double gf = gamma_f();
    if (!(gf >= 0.0 && gf <= 1.0))
        throw ParameterError("quench leaves gamma_f = " + std::to_string(gf)
                             + " outside [0, 1]");
}

std::size_t WorkDistribution::support(double floor) const {
    std::size_t n = 0;
    for (double p : probs)
        if (p > floor) ++n;
    return n;
}

double shannon_entropy(const double* p, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        if (p[i] > 1e-300) s -= p[i] * std::log(p[i]);
    return s;
}

WorkDistribution quench_distribution(const QuenchSpec& spec) {
    spec.validate();
    ModelParams pi{spec.N, spec.gamma_i, spec.alpha};
    const auto sector = build_sector(pi, spec.parity);
    const auto h_i = build_hamiltonian(pi, sector);
    const auto init = initial_state(spec, sector, h_i);
    const std::size_t dim = sector.dim();

    WorkDistribution wd;
    wd.initial_index = init.index;
    wd.initial_energy = init.energy;

    if (spec.delta_gamma == 0.0) {
        // identity quench: deterministic work, S_W = 0 exactly
        auto values = eigh_tridiagonal(h_i, false).values;
        wd.works.resize(dim);
        wd.probs.assign(dim, 0.0);
        for (std::size_t k = 0; k < dim; ++k) wd.works[k] = values[k] - init.energy;
        wd.probs[init.index] = 1.0;
        wd.entropy = 0.0;
        wd.mean = 0.0;
        wd.variance = 0.0;
        return wd;
    }

    ModelParams pf{spec.N, spec.gamma_f(), spec.alpha};
    const auto h_f = build_hamiltonian(pf, sector);
    auto res = eigh_with_overlaps(h_f, init.vec);

    wd.works.resize(dim);
    wd.probs.resize(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        wd.works[k] = res.values[k] - init.energy;
        wd.probs[k] = res.overlaps[k] * res.overlaps[k];
    }
    wd.entropy = shannon_entropy(wd.probs.data(), dim);
    double mean = 0.0;
    for (std::size_t k = 0; k < dim; ++k) mean += wd.probs[k] * wd.works[k];
    double var = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
        const double dw = wd.works[k] - mean;
        var += wd.probs[k] * dw * dw;
    }
    wd.mean = mean;
    wd.variance = var;
    return wd;
}

std::vector<std::pair<double, double>> merged_work_pairs(const WorkDistribution& wd,
                                                         double tol) {
    std::vector<std::pair<double, double>> out;
    for (std::size_t k = 0; k < wd.works.size(); ++k) {
        if (!out.empty() && wd.works[k] - out.back().first <= tol) {
            out.back().second += wd.probs[k];
        } else {
            out.emplace_back(wd.works[k], wd.probs[k]);
        }
    }
    return out;
}

CriticalQuench critical_quench(double gamma_i, double alpha, int which) {
    if (which != 1 && which != 2)
        throw ParameterError("critical_quench: which must be 1 or 2");
    if (!(gamma_i >= 1.0 / 3.0 - 1e-12 && gamma_i <= 1.0))
        throw ParameterError("critical_quench is valid for gamma_i in [1/3, 1]");
    CriticalQuench cq;
    cq.which = which;
    if (which == 1) {
        const double den = 2.0 * (3.0 * gamma_i - 3.0 * alpha + 1.0);
        if (std::abs(den) < 1e-12)
            throw ParameterError("critical_quench: singular denominator");
        cq.value = -(3.0 * gamma_i - 1.0) * (2.0 * gamma_i - alpha) / den;
    } else {
        const double den = 2.0 * (2.0 * alpha + gamma_i - 1.0);
        if (std::abs(den) < 1e-12)
            throw ParameterError("critical_quench: singular denominator");
        cq.value = (4.0 * alpha * (1.0 - gamma_i - alpha)
                    - (1.0 - gamma_i) * (1.0 - gamma_i)) / den;
    }
    const double gf = gamma_i + cq.value;
    cq.gamma_f_in_range = gf >= 0.0 && gf <= 1.0;
    return cq;
}

double mean_postquench_excitation(const QuenchSpec& spec) {
    spec.validate();
    ModelParams pi{spec.N, spec.gamma_i, spec.alpha};
    const auto sector = build_sector(pi, spec.parity);
    const auto h_i = build_hamiltonian(pi, sector);
    const auto init = initial_state(spec, sector, h_i);

    ModelParams pf{spec.N, spec.gamma_f(), spec.alpha};
    const auto h_f = build_hamiltonian(pf, sector);
    const double expect = h_f.quadratic_form(init.vec);
    const double e0f = eigh_tridiagonal(h_f, false).values.front();
    return (expect - e0f) / spec.N;
}

std::vector<double> overlap_probabilities(const Spectrum& initial, const Spectrum& final_) {
    const std::size_t dim = initial.dim();
    if (final_.dim() != dim || !initial.has_vectors() || !final_.has_vectors())
        throw ParameterError("overlap_probabilities needs two vector-bearing spectra of equal dim");
    std::vector<double> p(dim * dim);
    for (std::size_t n = 0; n < dim; ++n) {
        const double* vi = initial.vector(n);
        for (std::size_t k = 0; k < dim; ++k) {
            const double* vf = final_.vector(k);
            double dot = 0.0;
            for (std::size_t r = 0; r < dim; ++r) dot += vi[r] * vf[r];
            p[n * dim + k] = dot * dot;
        }
    }
    return p;
}

EnergyResolvedEntropy entropy_vs_energy(double gamma_i, double alpha, int N,
                                        double delta_gamma, Parity parity) {
    ModelParams pi{N, gamma_i, alpha};
    pi.validate();
    const double gf = gamma_i + delta_gamma;
    if (!(gf >= 0.0 && gf <= 1.0))
        throw ParameterError("entropy_vs_energy: gamma_f outside [0, 1]");

    const auto spec_i = solve_sector(pi, parity, true);
    const auto spec_f = solve_sector(ModelParams{N, gf, alpha}, parity, true);
    const auto p = overlap_probabilities(spec_i, spec_f);
    const std::size_t dim = spec_i.dim();

    EnergyResolvedEntropy out;
    out.eps = excitation_energies(spec_i);
    out.entropy.resize(dim);
    for (std::size_t n = 0; n < dim; ++n)
        out.entropy[n] = shannon_entropy(p.data() + n * dim, dim);
    return out;
}

}  // namespace almg
