#include "almg/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "almg/parallel.hpp"
#include "almg/workstats.hpp"

namespace almg {

DosHistogram make_dos_histogram(const std::vector<double>& eps, int bins, int N,
                                double eps_max) {
    if (bins < 2) throw ParameterError("dos histogram: need at least 2 bins");
    if (eps.empty()) throw ParameterError("dos histogram: empty spectrum");
    bool clamp_top = false;
    if (eps_max <= 0.0) {
        eps_max = *std::max_element(eps.begin(), eps.end());
        clamp_top = true;
    }
    if (eps_max <= 0.0) eps_max = 1.0;

    DosHistogram h;
    h.eps_max = eps_max;
    h.norm_N = N;
    h.counts.assign(bins, 0);
    const double width = eps_max / bins;
    for (double e : eps) {
        if (e < 0.0 || (!clamp_top && e >= eps_max)) continue;
        int b = std::min(static_cast<int>(e / width), bins - 1);
        ++h.counts[b];
    }
    h.rescaled.resize(bins);
    for (int b = 0; b < bins; ++b)
        h.rescaled[b] = static_cast<double>(h.counts[b]) / (width * N);
    return h;
}

DosHistogram quantum_dos(const Spectrum& spec, int bins) {
    if (bins == 0)
        bins = std::max<int>(50, static_cast<int>(spec.dim()) / 20);
    return make_dos_histogram(excitation_energies(spec), bins, spec.params.N);
}

std::vector<double> merged_excitation_energies(const ModelParams& params) {
    const auto even = solve_sector(params, Parity::Even, false);
    const auto odd = solve_sector(params, Parity::Odd, false);
    const double e0 = even.values.front();  // the ground state has even parity
    std::vector<double> eps;
    eps.reserve(even.dim() + odd.dim());
    for (double v : even.values) eps.push_back((v - e0) / params.N);
    for (double v : odd.values) eps.push_back((v - e0) / params.N);
    std::sort(eps.begin(), eps.end());
    return eps;
}

std::vector<double> default_sweep_grid() {
    std::vector<double> g(161);
    for (int i = 0; i < 161; ++i) g[i] = 0.2 + 1.6 * i / 160.0;
    return g;
}

namespace {

// entropy of a quench to x * dgc from a fixed initial vector
double sweep_entropy(const ModelParams& base, const SpinSector& sector,
                     const std::vector<double>& v, double gamma_f) {
    ModelParams pf = base;
    pf.gamma = gamma_f;
    const auto h_f = build_hamiltonian(pf, sector);
    const auto res = eigh_with_overlaps(h_f, v);
    double s = 0.0;
    for (double o : res.overlaps) {
        const double p = o * o;
        if (p > 1e-300) s -= p * std::log(p);
    }
    return s;
}

}  // namespace

EntropySweep entropy_sweep(int which, double gamma_i, double alpha, int N,
                           const std::vector<double>& grid) {
    EntropySweep sw;
    sw.which = which;
    sw.gamma_i = gamma_i;
    sw.alpha = alpha;
    sw.N = N;
    sw.critical_quench = critical_quench(gamma_i, alpha, which).value;
    if (grid.size() < 3) throw ParameterError("entropy_sweep: grid too small");

    ModelParams base{N, gamma_i, alpha};
    const auto sector = build_sector(base, Parity::Even);
    const auto h_i = build_hamiltonian(base, sector);
    const auto values = eigh_tridiagonal(h_i, false).values;
    const double e_init = which == 1 ? values.front() : values.back();
    const auto v = eigenvector_near(h_i, e_init);

    for (double x : grid) {
        const double gf = gamma_i + x * sw.critical_quench;
        if (gf < 0.0 || gf > 1.0) {
            ++sw.dropped;
            continue;
        }
        sw.grid.push_back(x);
    }
    sw.entropies.resize(sw.grid.size());
    parallel_for(sw.grid.size(), [&](std::size_t i) {
        sw.entropies[i] = sweep_entropy(base, sector, v,
                                        gamma_i + sw.grid[i] * sw.critical_quench);
    });

    const std::size_t k = static_cast<std::size_t>(
        std::max_element(sw.entropies.begin(), sw.entropies.end()) - sw.entropies.begin());
    sw.argmax = sw.grid[k];
    sw.max_entropy = sw.entropies[k];

    if (k > 0 && k + 1 < sw.grid.size()) {
        // parabola in ln(strength) through the three points around the maximum
        const double x0 = std::log(sw.grid[k - 1]), x1 = std::log(sw.grid[k]),
                     x2 = std::log(sw.grid[k + 1]);
        const double y0 = sw.entropies[k - 1], y1 = sw.entropies[k], y2 = sw.entropies[k + 1];
        const double den = (x0 - x1) * (x0 - x2) * (x1 - x2);
        const double A = (x2 * (y1 - y0) + x1 * (y0 - y2) + x0 * (y2 - y1)) / den;
        const double B = (x2 * x2 * (y0 - y1) + x1 * x1 * (y2 - y0) + x0 * x0 * (y1 - y2)) / den;
        if (A < 0.0) {
            const double xs = std::exp(-B / (2.0 * A));
            if (xs > sw.grid[k - 1] && xs < sw.grid[k + 1]) {
                const double gf = gamma_i + xs * sw.critical_quench;
                if (gf >= 0.0 && gf <= 1.0) {
                    const double s = sweep_entropy(base, sector, v, gf);
                    if (s >= sw.max_entropy) {
                        sw.argmax = xs;
                        sw.max_entropy = s;
                    }
                }
            }
        }
    }
    return sw;
}

LinearFit ols_fit(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n != y.size() || n < 2) throw ParameterError("ols_fit: need >= 2 paired points");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) throw ParameterError("ols_fit: degenerate x values");
    LinearFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (f.slope * x[i] + f.intercept);
        ss_res += r * r;
    }
    f.r2 = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
    if (n > 2) {
        const double sigma2 = ss_res / (n - 2);
        f.slope_se = std::sqrt(sigma2 / sxx);
        f.intercept_se = std::sqrt(sigma2 * (1.0 / n + mx * mx / sxx));
    }
    return f;
}

ScalingFit scaling_fit(int which, double gamma_i, double alpha,
                       const std::vector<int>& sizes) {
    if (sizes.size() < 4)
        throw ParameterError("scaling_fit: need at least 4 sizes");
    ScalingFit fit;
    fit.which = which;
    fit.gamma_i = gamma_i;
    fit.alpha = alpha;
    fit.sizes = sizes;
    for (int N : sizes) {
        const auto sw = entropy_sweep(which, gamma_i, alpha, N);
        fit.argmax.push_back(sw.argmax);
        fit.max_entropy.push_back(sw.max_entropy);
    }
    std::vector<double> lnN, lnDist;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        lnN.push_back(std::log(static_cast<double>(sizes[i])));
        lnDist.push_back(std::log(std::abs(1.0 - fit.argmax[i])));
    }
    for (std::size_t i = 1; i < sizes.size(); ++i)
        if (std::abs(1.0 - fit.argmax[i]) >= std::abs(1.0 - fit.argmax[i - 1]))
            fit.low_confidence = true;

    const auto fmu = ols_fit(lnN, lnDist);
    fit.mu = -fmu.slope;
    fit.mu_se = fmu.slope_se;
    fit.mu_r2 = fmu.r2;
    const auto fnu = ols_fit(lnN, fit.max_entropy);
    fit.nu = fnu.slope;
    fit.nu_se = fnu.slope_se;
    fit.nu_r2 = fnu.r2;
    return fit;
}

std::vector<std::pair<double, double>> gs_qpt_marker(double alpha, int N,
                                                     const std::vector<double>& gamma_grid) {
    if (gamma_grid.size() < 3)
        throw ParameterError("gs_qpt_marker: need at least 3 grid points");
    const double h = gamma_grid[1] - gamma_grid[0];
    for (std::size_t i = 1; i + 1 < gamma_grid.size(); ++i)
        if (std::abs((gamma_grid[i + 1] - gamma_grid[i]) - h) > 1e-9 * std::max(1.0, std::abs(h)))
            throw ParameterError("gs_qpt_marker: grid must be uniform");

    std::vector<double> e0(gamma_grid.size());
    parallel_for(gamma_grid.size(), [&](std::size_t i) {
        ModelParams mp{N, gamma_grid[i], alpha};
        e0[i] = solve_sector(mp, Parity::Even, false).values.front() / N;
    });
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 1; i + 1 < gamma_grid.size(); ++i)
        out.emplace_back(gamma_grid[i], (e0[i + 1] - 2.0 * e0[i] + e0[i - 1]) / (h * h));
    return out;
}

std::vector<double> moving_average(const std::vector<double>& y, int window) {
    if (window < 1 || window % 2 == 0)
        throw ParameterError("moving_average: window must be odd and >= 1");
    const int n = static_cast<int>(y.size());
    const int half = window / 2;
    std::vector<double> out(y.size());
    for (int i = 0; i < n; ++i) {
        const int lo = std::max(0, i - half);
        const int hi = std::min(n - 1, i + half);
        double acc = 0.0;
        for (int k = lo; k <= hi; ++k) acc += y[k];
        out[i] = acc / (hi - lo + 1);
    }
    return out;
}

std::vector<Peak> dominant_peaks(const std::vector<double>& y, int window,
                                 double min_prom_frac_range,
                                 double min_prom_frac_height) {
    const int n = static_cast<int>(y.size());
    if (n < 3) return {};
    const double lo = *std::min_element(y.begin(), y.end());
    const double hi = *std::max_element(y.begin(), y.end());
    const double range = hi - lo;

    std::vector<Peak> out;
    for (int i = 1; i + 1 < n; ++i) {  // endpoints are never peaks
        const int a = std::max(0, i - window);
        const int b = std::min(n - 1, i + window);
        bool is_max = true;
        for (int k = a; k <= b && is_max; ++k)
            if (k != i && (y[k] > y[i] || (y[k] == y[i] && k < i))) is_max = false;
        if (!is_max) continue;
        // prominence: drop to the lowest valley before a higher point in
        // either direction
        double lmin = y[i];
        for (int k = i - 1; k >= 0 && y[k] <= y[i]; --k) lmin = std::min(lmin, y[k]);
        double rmin = y[i];
        for (int k = i + 1; k < n && y[k] <= y[i]; ++k) rmin = std::min(rmin, y[k]);
        const double prom = y[i] - std::max(lmin, rmin);
        if (prom >= std::max(min_prom_frac_range * range,
                             min_prom_frac_height * (y[i] - lo)))
            out.push_back({static_cast<std::size_t>(i), y[i], prom});
    }
    return out;
}

}  // namespace almg
