#pragma once

#include <utility>
#include <vector>

#include "almg/eigensolve.hpp"
#include "almg/model.hpp"

namespace almg {

enum class InitialState { Ground, Highest, Index };

/// A sudden quench gamma_i -> gamma_f = gamma_i + delta_gamma at fixed
/// (N, alpha), starting from one eigenstate of H(gamma_i). Parity is
/// conserved (only gamma changes), so everything lives in one sector.
struct QuenchSpec {
    double gamma_i = 0.0;
    double delta_gamma = 0.0;
    double alpha = 0.0;
    int N = 0;
    InitialState initial = InitialState::Ground;
    int index = 0;  // used when initial == Index
    Parity parity = Parity::Even;

    double gamma_f() const { return gamma_i + delta_gamma; }
    void validate() const;
};

/// Two-point-measurement work distribution of a sudden quench:
/// works[k] = E_k^f - E_n^i with probs[k] = |<psi_k^f|psi_n^i>|^2,
/// kept as the exact multiset over k (no binning).
struct WorkDistribution {
    std::vector<double> works;
    std::vector<double> probs;
    double entropy = 0.0;   // -sum p ln p over k, 0 ln 0 := 0
    double mean = 0.0;
    double variance = 0.0;
    int initial_index = 0;
    double initial_energy = 0.0;

    std::size_t support(double floor = 1e-8) const;
};

WorkDistribution quench_distribution(const QuenchSpec& spec);

/// (W, P) pairs with degenerate work values merged (tolerance scales with N);
/// affects plots/CSV only, never the entropy.
std::vector<std::pair<double, double>> merged_work_pairs(const WorkDistribution& wd,
                                                         double tol);

struct CriticalQuench {
    int which = 1;  // 1 or 2
    double value = 0.0;
    bool gamma_f_in_range = true;  // warning flag: gamma_i + value inside [0, 1]
};

/// Mean-field critical quench strengths:
/// which = 1 (start: ground state):   -(3g-1)(2g-a) / (2(3g-3a+1))
/// which = 2 (start: highest state):  (4a(1-g-a)-(1-g)^2) / (2(2a+g-1))
/// valid for gamma_i in [1/3, 1].
CriticalQuench critical_quench(double gamma_i, double alpha, int which);

/// (<psi_n^i| H_f |psi_n^i> - E_0^f) / N, computed from the tridiagonal
/// quadratic form plus a values-only solve of H_f.
double mean_postquench_excitation(const QuenchSpec& spec);

struct EnergyResolvedEntropy {
    std::vector<double> eps;      // eps_n of the initial Hamiltonian
    std::vector<double> entropy;  // S_W of the n-th initial eigenstate
};

/// Work-distribution entropy of every initial eigenstate for a small fixed
/// quench; one pair of eigendecompositions plus an overlap matrix.
EnergyResolvedEntropy entropy_vs_energy(double gamma_i, double alpha, int N,
                                        double delta_gamma, Parity parity = Parity::Even);

/// Row-major overlap probability matrix p[n * dim + k] = |<psi_k^f|psi_n^i>|^2
/// from two vector-bearing spectra of equal dimension.
std::vector<double> overlap_probabilities(const Spectrum& initial, const Spectrum& final_);

/// Entropy of a probability row with the 1e-300 underflow floor.
double shannon_entropy(const double* p, std::size_t n);

}  // namespace almg
