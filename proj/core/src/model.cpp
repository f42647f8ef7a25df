#include "almg/model.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "almg/csv.hpp"

namespace almg {

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

void ModelParams::validate() const {
    if (N < 2 || N % 2 != 0)
        throw ParameterError("N must be an even integer >= 2, got " + std::to_string(N));
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw ParameterError("gamma must lie in [0, 1], got " + std::to_string(gamma));
    if (!(alpha >= 0.0))
        throw ParameterError("alpha must be >= 0 (0 only as plain-LMG compatibility mode)");
}

double TridiagonalOperator::norm_inf() const {
    const std::size_t n = dim();
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = std::abs(diag[i]);
        if (i > 0) row += std::abs(offdiag[i - 1]);
        if (i + 1 < n) row += std::abs(offdiag[i]);
        best = std::max(best, row);
    }
    return best;
}

double TridiagonalOperator::quadratic_form(const std::vector<double>& v) const {
    const std::size_t n = dim();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += diag[i] * v[i] * v[i];
    for (std::size_t i = 0; i + 1 < n; ++i) acc += 2.0 * offdiag[i] * v[i] * v[i + 1];
    return acc;
}

void TridiagonalOperator::apply(const std::vector<double>& x, std::vector<double>& y) const {
    const std::size_t n = dim();
    y.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = diag[i] * x[i];
        if (i > 0) acc += offdiag[i - 1] * x[i - 1];
        if (i + 1 < n) acc += offdiag[i] * x[i + 1];
        y[i] = acc;
    }
}

std::vector<double> TridiagonalOperator::dense() const {
    const std::size_t n = dim();
    std::vector<double> a(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        a[i * n + i] = diag[i];
        if (i + 1 < n) {
            a[i * n + i + 1] = offdiag[i];
            a[(i + 1) * n + i] = offdiag[i];
        }
    }
    return a;
}

SpinSector build_sector(const ModelParams& params, Parity parity) {
    params.validate();
    SpinSector sector;
    sector.j = params.j();
    sector.parity = parity;
    const int start = (parity == Parity::Even) ? -sector.j : -sector.j + 1;
    const int stop = (parity == Parity::Even) ? sector.j : sector.j - 1;
    for (int m = start; m <= stop; m += 2) sector.basis.push_back(m);
    return sector;
}

TridiagonalOperator build_hamiltonian(const ModelParams& params, const SpinSector& sector) {
    params.validate();
    const double N = params.N;
    const double j = sector.j;
    const double jj = j * (j + 1.0);
    const double g = params.gamma;
    const double a = params.alpha;
    const std::size_t dim = sector.dim();

    TridiagonalOperator op;
    op.diag.resize(dim);
    op.offdiag.resize(dim > 0 ? dim - 1 : 0);

    for (std::size_t i = 0; i < dim; ++i) {
        const double m = sector.basis[i];
        // <m|Jx^2|m> = (j(j+1) - m^2)/2; the anharmonic term is evaluated
        // per basis state without expanding the product.
        const double k = m + N / 2.0;
        op.diag[i] = (2.0 * g / N) * (jj - (jj - m * m) / 2.0)
                     + (1.0 - g) * k
                     - (a / N) * k * (k + 1.0);
    }
    for (std::size_t i = 0; i + 1 < dim; ++i) {
        const double m = sector.basis[i];
        // <m+2|Jx^2|m> = (1/4) sqrt[(jj - m(m+1))(jj - (m+1)(m+2))]
        op.offdiag[i] = -(2.0 * g / N) * 0.25
                        * std::sqrt((jj - m * (m + 1.0)) * (jj - (m + 1.0) * (m + 2.0)));
    }
    return op;
}

StateVector coherent_state(int j, double p, double q) {
    if (j < 1) throw ParameterError("coherent_state needs j >= 1");
    const double r2 = p * p + q * q;
    if (!(r2 < 4.0))
        throw DomainError("coherent_state: (p, q) must satisfy p^2 + q^2 < 4");

    StateVector state;
    state.j = j;
    state.amplitudes.assign(2 * j + 1, {0.0, 0.0});

    const std::complex<double> xi{q / std::sqrt(4.0 - r2), p / std::sqrt(4.0 - r2)};
    const double mod = std::abs(xi);
    if (mod == 0.0) {
        state.amplitudes[0] = 1.0;  // m = -j
        return state;
    }
    const double arg = std::arg(xi);
    const double log_norm = j * std::log1p(mod * mod);
    double norm2 = 0.0;
    for (int m = -j; m <= j; ++m) {
        // binomial weight in log space: (2j)! / ((j+m)!(j-m)!) overflows
        // past j ~ 85 otherwise
        const double lw = 0.5 * (std::lgamma(2.0 * j + 1.0) - std::lgamma(j + m + 1.0)
                                 - std::lgamma(j - m + 1.0));
        const double lmag = lw + (j + m) * std::log(mod) - log_norm;
        const double mag = std::exp(lmag);
        const double phase = (j + m) * arg;
        state.amplitudes[m + j] = std::polar(mag, phase);
        norm2 += mag * mag;
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& c : state.amplitudes) c *= inv;
    return state;
}

double jz_expectation(const StateVector& state) {
    double acc = 0.0;
    for (int m = -state.j; m <= state.j; ++m)
        acc += m * std::norm(state.amplitudes[m + state.j]);
    return acc;
}

double energy_expectation(const ModelParams& params, const StateVector& state) {
    params.validate();
    const int j = state.j;
    if (2 * j != params.N)
        throw ParameterError("energy_expectation: state j does not match params N/2");
    const double N = params.N;
    const double jj = double(j) * (j + 1.0);
    const double g = params.gamma;
    const double a = params.alpha;

    double acc = 0.0;
    for (int m = -j; m <= j; ++m) {
        const double k = m + N / 2.0;
        const double diag = (2.0 * g / N) * (jj - (jj - double(m) * m) / 2.0)
                            + (1.0 - g) * k - (a / N) * k * (k + 1.0);
        acc += diag * std::norm(state.amplitudes[m + j]);
    }
    for (int m = -j; m + 2 <= j; ++m) {
        const double off2 = -(2.0 * g / N) * 0.25
                            * std::sqrt((jj - double(m) * (m + 1.0)) * (jj - (m + 1.0) * (m + 2.0)));
        acc += 2.0 * off2
               * std::real(std::conj(state.amplitudes[m + 2 + j]) * state.amplitudes[m + j]);
    }
    return acc;
}

void dump_dense_csv(const ModelParams& params, const SpinSector& sector,
                    const TridiagonalOperator& op, const std::string& path) {
    if (params.N > 40)
        throw ParameterError("dense dump limited to N <= 40");
    const std::size_t n = op.dim();
    const auto a = op.dense();
    std::vector<std::string> header{"m"};
    for (std::size_t c = 0; c < n; ++c)
        header.push_back("m" + std::to_string(sector.basis[c]));
    csv::Writer w(path, header);
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<csv::Value> row;
        row.emplace_back(static_cast<long long>(sector.basis[r]));
        for (std::size_t c = 0; c < n; ++c) row.emplace_back(a[r * n + c]);
        w.row(row);
    }
}

}  // namespace almg
