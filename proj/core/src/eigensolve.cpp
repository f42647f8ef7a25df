#include "almg/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "almg/rng.hpp"

namespace almg {

namespace {

constexpr int kMaxSweepsPerEigenvalue = 50;

// Implicit-shift QL with eps-scaled off-diagonal deflation:
// |e[m]| <= eps (|d[m]| + |d[m+1]|). Each Givens rotation acting on the
// (i, i+1) plane is reported through `rotate(i, c, s)` so callers can
// accumulate full eigenvectors, an overlap row, or nothing.
template <class Rotate>
void ql_implicit(std::vector<double>& d, std::vector<double>& e, Rotate&& rotate) {
    const std::size_t n = d.size();
    if (n <= 1) return;
    const double eps = std::numeric_limits<double>::epsilon();
    e.resize(n, 0.0);  // e[n-1] is workspace

    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == kMaxSweepsPerEigenvalue)
                    throw NumericalError("tridiagonal QL: eigenvalue did not converge",
                                         static_cast<long>(l));
                // Wilkinson-style shift from the leading 2x2 block
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool annihilated = false;
                for (std::size_t i = m; i-- > l;) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        annihilated = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    rotate(i, c, s);
                }
                if (annihilated) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

std::vector<std::size_t> ascending_order(const std::vector<double>& d) {
    std::vector<std::size_t> idx(d.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
    return idx;
}

}  // namespace

TridiagEigenResult eigh_tridiagonal(const TridiagonalOperator& op, bool want_vectors) {
    const std::size_t n = op.dim();
    TridiagEigenResult out;
    out.values = op.diag;
    std::vector<double> e = op.offdiag;

    if (!want_vectors) {
        ql_implicit(out.values, e, [](std::size_t, double, double) {});
        std::sort(out.values.begin(), out.values.end());
        return out;
    }

    // Column-major identity; rotations mix two adjacent (contiguous) columns.
    std::vector<double> z(n * n, 0.0);
    for (std::size_t k = 0; k < n; ++k) z[k * n + k] = 1.0;
    ql_implicit(out.values, e, [&](std::size_t i, double c, double s) {
        double* zi = z.data() + i * n;
        double* zi1 = zi + n;
        for (std::size_t k = 0; k < n; ++k) {
            const double f = zi1[k];
            zi1[k] = s * zi[k] + c * f;
            zi[k] = c * zi[k] - s * f;
        }
    });

    const auto order = ascending_order(out.values);
    TridiagEigenResult sorted;
    sorted.values.resize(n);
    sorted.vectors.resize(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        sorted.values[k] = out.values[order[k]];
        std::copy_n(z.data() + order[k] * n, n, sorted.vectors.data() + k * n);
    }
    return sorted;
}

OverlapResult eigh_with_overlaps(const TridiagonalOperator& op, const std::vector<double>& v) {
    const std::size_t n = op.dim();
    if (v.size() != n)
        throw ParameterError("eigh_with_overlaps: vector length mismatch");
    std::vector<double> d = op.diag;
    std::vector<double> e = op.offdiag;
    std::vector<double> w = v;  // row v^T Q under the same rotations
    ql_implicit(d, e, [&](std::size_t i, double c, double s) {
        const double f = w[i + 1];
        w[i + 1] = s * w[i] + c * f;
        w[i] = c * w[i] - s * f;
    });
    const auto order = ascending_order(d);
    OverlapResult out;
    out.values.resize(n);
    out.overlaps.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = d[order[k]];
        out.overlaps[k] = w[order[k]];
    }
    return out;
}

std::vector<double> eigenvector_near(const TridiagonalOperator& op, double lambda) {
    const std::size_t n = op.dim();
    if (n == 1) return {1.0};
    const double scale = std::max(op.norm_inf(), 1.0);
    const double tiny = std::numeric_limits<double>::epsilon() * scale;

    // LU of (T - lambda I) with partial pivoting; pivoting introduces a
    // second superdiagonal.
    std::vector<double> dl(n - 1), dd(n), du1(n - 1), du2(n > 2 ? n - 2 : 0);
    std::vector<char> swapped(n - 1, 0);

    auto factor = [&](double shift) {
        for (std::size_t i = 0; i < n; ++i) dd[i] = op.diag[i] - shift;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            dl[i] = op.offdiag[i];
            du1[i] = op.offdiag[i];
        }
        std::fill(du2.begin(), du2.end(), 0.0);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (std::abs(dl[i]) > std::abs(dd[i])) {
                swapped[i] = 1;
                std::swap(dd[i], dl[i]);
                std::swap(du1[i], dd[i + 1]);
                if (i + 2 < n) {
                    du2[i] = du1[i + 1];
                    du1[i + 1] = 0.0;
                }
            } else {
                swapped[i] = 0;
            }
            if (dd[i] == 0.0) dd[i] = tiny;
            const double mult = dl[i] / dd[i];
            dl[i] = mult;
            dd[i + 1] -= mult * du1[i];
            if (i + 2 < n) du1[i + 1] -= mult * du2[i];
        }
        if (dd[n - 1] == 0.0) dd[n - 1] = tiny;
    };

    auto solve = [&](std::vector<double>& x) {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (swapped[i]) std::swap(x[i], x[i + 1]);
            x[i + 1] -= dl[i] * x[i];
        }
        for (std::size_t i = n; i-- > 0;) {
            double acc = x[i];
            if (i + 1 < n) acc -= du1[i] * x[i + 1];
            if (i + 2 < n) acc -= du2[i] * x[i + 2];
            x[i] = acc / dd[i];
        }
    };

    auto normalize = [&](std::vector<double>& x) {
        double nrm = 0.0;
        for (double c : x) nrm += c * c;
        nrm = std::sqrt(nrm);
        for (double& c : x) c /= nrm;
    };

    std::vector<double> x(n), hx;
    for (std::size_t i = 0; i < n; ++i)
        x[i] = rng::uniform01(0x5eedULL + n, i) - 0.5;
    normalize(x);

    double shift = lambda;
    for (int attempt = 0; attempt < 3; ++attempt) {
        factor(shift);
        for (int it = 0; it < 5; ++it) {
            solve(x);
            normalize(x);
            op.apply(x, hx);
            double resid = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double r = hx[i] - lambda * x[i];
                resid += r * r;
            }
            if (std::sqrt(resid) <= 1e-10 * scale) {
                if (x[0] < 0.0)  // fix the overall sign for reproducibility
                    for (double& c : x) c = -c;
                return x;
            }
        }
        shift = lambda + (attempt + 1) * 16.0 * tiny;  // nudge off an exact pivot collapse
    }
    throw NumericalError("inverse iteration did not converge");
}

Spectrum solve_sector(const ModelParams& params, Parity parity, bool want_vectors) {
    Spectrum spec;
    spec.params = params;
    spec.sector = build_sector(params, parity);
    const auto op = build_hamiltonian(params, spec.sector);
    auto res = eigh_tridiagonal(op, want_vectors);
    spec.values = std::move(res.values);
    spec.vectors = std::move(res.vectors);
    return spec;
}

std::vector<double> excitation_energies(const Spectrum& spec) {
    std::vector<double> eps(spec.values.size());
    const double e0 = spec.values.empty() ? 0.0 : spec.values.front();
    for (std::size_t i = 0; i < eps.size(); ++i)
        eps[i] = (spec.values[i] - e0) / spec.params.N;
    return eps;
}

}  // namespace almg
