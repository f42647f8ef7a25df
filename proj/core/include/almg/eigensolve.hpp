#pragma once

#include <vector>

#include "almg/model.hpp"

namespace almg {

/// Full eigendecomposition of one parity sector at fixed (N, gamma, alpha).
/// Eigenvalues ascend; eigenvectors (when requested) are stored column-major,
/// column k contiguous at vectors[k * dim].
struct Spectrum {
    ModelParams params;
    SpinSector sector;
    std::vector<double> values;
    std::vector<double> vectors;  // empty unless requested

    std::size_t dim() const { return values.size(); }
    bool has_vectors() const { return !vectors.empty(); }
    const double* vector(std::size_t k) const { return vectors.data() + k * dim(); }
};

/// Raw solver output for a bare tridiagonal operator.
struct TridiagEigenResult {
    std::vector<double> values;   // ascending
    std::vector<double> vectors;  // column-major, empty unless requested
};

/// Implicit-shift QL on the tridiagonal form. O(dim^2) without vectors,
/// O(dim^3) with. Deterministic. Throws NumericalError (carrying the failing
/// index) if any eigenvalue needs more than 50 sweeps.
TridiagEigenResult eigh_tridiagonal(const TridiagonalOperator& op, bool want_vectors);

/// Same rotation sequence as eigh_tridiagonal, but instead of accumulating
/// the full eigenvector matrix Q it accumulates the row v^T Q, i.e. the
/// overlaps <q_k | v> of a fixed state with every eigenvector, in O(dim^2).
struct OverlapResult {
    std::vector<double> values;    // ascending
    std::vector<double> overlaps;  // overlaps[k] = <q_k | v>
};
OverlapResult eigh_with_overlaps(const TridiagonalOperator& op, const std::vector<double>& v);

/// One eigenvector by inverse iteration at an eigenvalue lambda already known
/// to solver accuracy. Intended for well-separated (extremal) states.
std::vector<double> eigenvector_near(const TridiagonalOperator& op, double lambda);

/// Convenience: build the sector Hamiltonian and diagonalize it.
Spectrum solve_sector(const ModelParams& params, Parity parity, bool want_vectors);

/// Rescaled excitation energies eps_n = (E_n - E_0) / N; eps_0 is exactly 0.
std::vector<double> excitation_energies(const Spectrum& spec);

}  // namespace almg
