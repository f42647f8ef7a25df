// Test-only oracles, independent of the library's computational paths:
// dense collective-spin matrices built from ladder operators, Sturm-sequence
// bisection for tridiagonal eigenvalues, finite differences, and a brute-force
// fixed-point scan.
#pragma once

#include <cstddef>
#include <vector>

#include "almg/classical.hpp"
#include "almg/model.hpp"

namespace oracle {

/// Row-major (2j+1)x(2j+1) dense matrix over |j, m>, m = -j..j ascending.
struct Dense {
    std::size_t n = 0;
    std::vector<double> a;

    double& at(std::size_t r, std::size_t c) { return a[r * n + c]; }
    double at(std::size_t r, std::size_t c) const { return a[r * n + c]; }
};

Dense identity(std::size_t n);
Dense multiply(const Dense& x, const Dense& y);
Dense add(const Dense& x, const Dense& y, double cx = 1.0, double cy = 1.0);

/// Collective operators from the ladder algebra
/// J+- |j,m> = sqrt(j(j+1) - m(m+-1)) |j, m+-1>.
Dense jx_dense(int j);
Dense jz_dense(int j);
Dense jsq_dense(int j);  // Jx^2 + Jy^2 + Jz^2 via ladder products

/// Dense Hamiltonian assembled by explicit matrix arithmetic; set
/// include_anharmonic = false for the plain two-term model.
Dense hamiltonian_dense(const almg::ModelParams& params, bool include_anharmonic = true);

/// Indices (into the full m = -j..j basis) belonging to one parity block,
/// ascending in m.
std::vector<std::size_t> parity_indices(int j, almg::Parity parity);

/// Submatrix extraction.
Dense project(const Dense& full, const std::vector<std::size_t>& idx);

/// All eigenvalues of a symmetric tridiagonal matrix by bisection on the
/// Sturm sequence. Intended for dim <= ~16.
std::vector<double> sturm_eigenvalues(const std::vector<double>& diag,
                                      const std::vector<double>& off);

/// Central finite-difference gradient of the classical Hamiltonian.
almg::PhaseVelocity fd_gradient(double gamma, double alpha, almg::PhasePoint pt,
                                double h = 1e-6);

/// Brute-force stationary points of the flow: sign-change scan on a grid
/// followed by Newton polishing; returns deduplicated roots.
std::vector<almg::PhasePoint> scan_fixed_points(double gamma, double alpha,
                                                int grid = 400);

}  // namespace oracle
