#pragma once

#include <vector>

#include "almg/eigensolve.hpp"

namespace almg {

/// Histogram of rescaled excitation energies. rescaled[b] = count / (width N),
/// the convention under which the full-spectrum histogram tracks the
/// semiclassical phase-space density.
struct DosHistogram {
    double eps_max = 0.0;
    int norm_N = 0;
    std::vector<long long> counts;
    std::vector<double> rescaled;

    int bins() const { return static_cast<int>(counts.size()); }
    double width() const { return eps_max / bins(); }
    double center(int b) const { return (b + 0.5) * width(); }
};

/// eps_max <= 0 uses max(eps) so every value lands in a bin
/// (sum of counts = number of values).
DosHistogram make_dos_histogram(const std::vector<double>& eps, int bins, int N,
                                double eps_max = 0.0);

/// Default binning: max(50, dim/20).
DosHistogram quantum_dos(const Spectrum& spec, int bins = 0);

/// Ascending eps_n over both parity sectors, measured from the global
/// (even-sector) ground state.
std::vector<double> merged_excitation_energies(const ModelParams& params);

struct EntropySweep {
    int which = 1;
    double gamma_i = 0.0, alpha = 0.0;
    int N = 0;
    double critical_quench = 0.0;           // delta gamma_{c,a}
    std::vector<double> grid;               // kept rescaled strengths
    std::vector<double> entropies;          // S_W per kept point
    std::size_t dropped = 0;                // grid points with gamma_f outside [0,1]
    double argmax = 1.0;                    // refined rescaled strength of max S_W
    double max_entropy = 0.0;               // S_W at the refined argmax
};

std::vector<double> default_sweep_grid();  // 161 points over [0.2, 1.8]

/// S_W over a grid of rescaled quench strengths; initial state is the ground
/// state for the first transition and the highest state for the second.
/// The grid argmax is refined by a parabola in ln(strength) through the three
/// surrounding points and re-evaluated exactly.
EntropySweep entropy_sweep(int which, double gamma_i, double alpha, int N,
                           const std::vector<double>& grid = default_sweep_grid());

struct LinearFit {
    double slope = 0.0, intercept = 0.0;
    double slope_se = 0.0, intercept_se = 0.0;
    double r2 = 1.0;
};

/// Ordinary least squares y = slope x + intercept.
LinearFit ols_fit(const std::vector<double>& x, const std::vector<double>& y);

struct ScalingFit {
    int which = 1;
    double gamma_i = 0.0, alpha = 0.0;
    std::vector<int> sizes;
    std::vector<double> argmax;        // per size
    std::vector<double> max_entropy;   // per size
    double mu = 0.0, mu_se = 0.0, mu_r2 = 0.0;
    double nu = 0.0, nu_se = 0.0, nu_r2 = 0.0;
    bool low_confidence = false;  // |1 - argmax| not monotone across sizes
};

/// mu from the (negated) OLS slope of ln|1 - argmax| vs ln N,
/// nu from the OLS slope of max entropy vs ln N.
ScalingFit scaling_fit(int which, double gamma_i, double alpha,
                       const std::vector<int>& sizes);

/// Second central finite difference of the ground-state energy density over a
/// uniform gamma grid; returns (gamma, d2) for interior grid points.
std::vector<std::pair<double, double>> gs_qpt_marker(double alpha, int N,
                                                     const std::vector<double>& gamma_grid);

/// Centered moving average (window must be odd).
std::vector<double> moving_average(const std::vector<double>& y, int window);

struct Peak {
    std::size_t index = 0;
    double height = 0.0;
    double prominence = 0.0;
};

/// Windowed local maxima filtered by prominence:
/// prominence >= max(min_prom_frac_range * range, min_prom_frac_height * height).
std::vector<Peak> dominant_peaks(const std::vector<double>& y, int window,
                                 double min_prom_frac_range = 0.05,
                                 double min_prom_frac_height = 0.15);

}  // namespace almg
