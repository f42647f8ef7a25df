#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "almg/errors.hpp"

namespace almg {

enum class Parity { Even, Odd };

const char* to_string(Parity p);

/// Parameters of the anharmonic collective-spin Hamiltonian
///
///   H = (2 gamma / N) (J^2 - Jx^2) + (1 - gamma)(Jz + N/2)
///       - (alpha / N)(Jz + N/2)(Jz + N/2 + 1)
///
/// for N spin-1/2 particles in the maximal-spin sector j = N/2.
/// All energies are unitless (hbar = 1).
struct ModelParams {
    int N = 0;             // even, >= 2
    double gamma = 0.0;    // control parameter, in [0, 1]
    double alpha = 0.0;    // anharmonicity strength, > 0 (0 = plain-LMG compatibility mode)

    int j() const { return N / 2; }
    void validate() const;
};

/// One parity block of the j = N/2 Dicke ladder. The basis lists the
/// magnetic quantum numbers m in ascending order with step 2, so the
/// Hamiltonian is exactly tridiagonal in this ordering (Jx^2 couples
/// m <-> m +/- 2 only).
struct SpinSector {
    int j = 0;
    Parity parity = Parity::Even;
    std::vector<int> basis;  // m values, ascending, step 2

    std::size_t dim() const { return basis.size(); }
};

/// Real symmetric tridiagonal matrix: diag has length dim,
/// offdiag length dim - 1.
struct TridiagonalOperator {
    std::vector<double> diag;
    std::vector<double> offdiag;

    std::size_t dim() const { return diag.size(); }
    /// Infinity norm of the symmetric matrix.
    double norm_inf() const;
    /// Quadratic form v^T T v for a unit-length real vector.
    double quadratic_form(const std::vector<double>& v) const;
    /// y = T x
    void apply(const std::vector<double>& x, std::vector<double>& y) const;
    /// Row-major dense copy, for debug dumps and small-N checks.
    std::vector<double> dense() const;
};

SpinSector build_sector(const ModelParams& params, Parity parity);

TridiagonalOperator build_hamiltonian(const ModelParams& params, const SpinSector& sector);

/// State in the full (2j+1)-dimensional |j, m> basis, m = -j..j ascending.
struct StateVector {
    int j = 0;
    std::vector<std::complex<double>> amplitudes;
};

/// SU(2) coherent state parametrized by the phase-space point (p, q) with
/// p^2 + q^2 < 4, xi = (q + i p) / sqrt(4 - p^2 - q^2). Amplitudes carry
/// binomial weights accumulated in log space; xi = 0 gives |j, -j>.
StateVector coherent_state(int j, double p, double q);

double jz_expectation(const StateVector& state);

/// <state| H |state> in the full basis (H is banded: diagonal plus m <-> m+2).
double energy_expectation(const ModelParams& params, const StateVector& state);

/// Dense sector matrix dump for inspection; refuses N > 40.
void dump_dense_csv(const ModelParams& params, const SpinSector& sector,
                    const TridiagonalOperator& op, const std::string& path);

}  // namespace almg
