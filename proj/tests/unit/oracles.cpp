#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace oracle {

using almg::ModelParams;
using almg::Parity;
using almg::PhasePoint;
using almg::PhaseVelocity;

Dense identity(std::size_t n) {
    Dense d;
    d.n = n;
    d.a.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) d.at(i, i) = 1.0;
    return d;
}

Dense multiply(const Dense& x, const Dense& y) {
    Dense out;
    out.n = x.n;
    out.a.assign(x.n * x.n, 0.0);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t k = 0; k < x.n; ++k) {
            const double v = x.at(i, k);
            if (v == 0.0) continue;
            for (std::size_t jj = 0; jj < x.n; ++jj)
                out.at(i, jj) += v * y.at(k, jj);
        }
    return out;
}

Dense add(const Dense& x, const Dense& y, double cx, double cy) {
    Dense out;
    out.n = x.n;
    out.a.resize(x.n * x.n);
    for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = cx * x.a[i] + cy * y.a[i];
    return out;
}

namespace {
// ladder amplitude sqrt(j(j+1) - m(m+1)) raising from m to m+1
double raise_amp(int j, int m) {
    return std::sqrt(double(j) * (j + 1.0) - double(m) * (m + 1.0));
}
}  // namespace

Dense jx_dense(int j) {
    const std::size_t n = 2 * j + 1;
    Dense d;
    d.n = n;
    d.a.assign(n * n, 0.0);
    for (int m = -j; m < j; ++m) {
        const double amp = 0.5 * raise_amp(j, m);
        const std::size_t lo = m + j, hi = m + j + 1;
        d.at(hi, lo) = amp;  // (J+ + J-)/2
        d.at(lo, hi) = amp;
    }
    return d;
}

Dense jz_dense(int j) {
    const std::size_t n = 2 * j + 1;
    Dense d;
    d.n = n;
    d.a.assign(n * n, 0.0);
    for (int m = -j; m <= j; ++m) d.at(m + j, m + j) = m;
    return d;
}

Dense jsq_dense(int j) {
    const std::size_t n = 2 * j + 1;
    // Jy = (J+ - J-)/(2i): Jy^2 = -(J+^2 - J+J- - J-J+ + J-^2)/4, real.
    Dense jp, jm;
    jp.n = jm.n = n;
    jp.a.assign(n * n, 0.0);
    jm.a.assign(n * n, 0.0);
    for (int m = -j; m < j; ++m) {
        jp.at(m + j + 1, m + j) = raise_amp(j, m);
        jm.at(m + j, m + j + 1) = raise_amp(j, m);
    }
    const Dense jx = jx_dense(j);
    const Dense jz = jz_dense(j);
    const Dense jx2 = multiply(jx, jx);
    const Dense jz2 = multiply(jz, jz);
    Dense jy2 = add(multiply(jp, jp), multiply(jm, jm));
    jy2 = add(jy2, add(multiply(jp, jm), multiply(jm, jp)), 1.0, -1.0);
    for (double& v : jy2.a) v *= -0.25;
    return add(add(jx2, jy2), jz2);
}

Dense hamiltonian_dense(const ModelParams& params, bool include_anharmonic) {
    const int j = params.j();
    const double N = params.N;
    const Dense jx = jx_dense(j);
    const Dense jz = jz_dense(j);
    Dense h = add(jsq_dense(j), multiply(jx, jx), 2.0 * params.gamma / N,
                  -2.0 * params.gamma / N);
    Dense shifted = add(jz, identity(2 * j + 1), 1.0, N / 2.0);
    h = add(h, shifted, 1.0, 1.0 - params.gamma);
    if (include_anharmonic) {
        const Dense shifted1 = add(jz, identity(2 * j + 1), 1.0, N / 2.0 + 1.0);
        h = add(h, multiply(shifted, shifted1), 1.0, -params.alpha / N);
    }
    return h;
}

std::vector<std::size_t> parity_indices(int j, Parity parity) {
    std::vector<std::size_t> idx;
    for (int m = -j; m <= j; ++m) {
        const bool even = ((j + m) % 2) == 0;
        if (even == (parity == Parity::Even)) idx.push_back(m + j);
    }
    return idx;
}

Dense project(const Dense& full, const std::vector<std::size_t>& idx) {
    Dense out;
    out.n = idx.size();
    out.a.resize(out.n * out.n);
    for (std::size_t r = 0; r < out.n; ++r)
        for (std::size_t c = 0; c < out.n; ++c)
            out.at(r, c) = full.at(idx[r], idx[c]);
    return out;
}

namespace {
// eigenvalues of T strictly below x, by the Sturm pivot recurrence
int count_below(const std::vector<double>& diag, const std::vector<double>& off, double x) {
    const double tiny = std::numeric_limits<double>::min();
    int count = 0;
    double d = diag[0] - x;
    if (d < 0) ++count;
    for (std::size_t i = 1; i < diag.size(); ++i) {
        if (d == 0.0) d = tiny;
        d = (diag[i] - x) - off[i - 1] * off[i - 1] / d;
        if (d < 0) ++count;
    }
    return count;
}
}  // namespace

std::vector<double> sturm_eigenvalues(const std::vector<double>& diag,
                                      const std::vector<double>& off) {
    const std::size_t n = diag.size();
    double lo = diag[0], hi = diag[0];
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(off[i - 1]);
        if (i + 1 < n) r += std::abs(off[i]);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    const double scale = std::max({std::abs(lo), std::abs(hi), 1.0});
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        double a = lo, b = hi;
        while (b - a > 1e-14 * scale) {
            const double mid = 0.5 * (a + b);
            if (count_below(diag, off, mid) <= static_cast<int>(k))
                a = mid;
            else
                b = mid;
        }
        out[k] = 0.5 * (a + b);
    }
    return out;
}

PhaseVelocity fd_gradient(double gamma, double alpha, PhasePoint pt, double h) {
    auto hc = [&](double p, double q) {
        return almg::classical_hamiltonian(gamma, alpha, {p, q});
    };
    PhaseVelocity v;
    v.dq = (hc(pt.p + h, pt.q) - hc(pt.p - h, pt.q)) / (2.0 * h);    // dH/dp
    v.dp = -(hc(pt.p, pt.q + h) - hc(pt.p, pt.q - h)) / (2.0 * h);   // -dH/dq
    return v;
}

std::vector<PhasePoint> scan_fixed_points(double gamma, double alpha, int grid) {
    auto eom = [&](PhasePoint s) {
        const double p = s.p, q = s.q;
        const double r2 = p * p + q * q;
        PhaseVelocity v;
        v.dq = (1.0 - gamma) / 2.0 * p + gamma / 4.0 * q * q * p - alpha / 4.0 * p * r2;
        v.dp = -(1.0 - gamma) / 2.0 * q + gamma / 4.0 * q * (4.0 - p * p - 2.0 * q * q)
               + alpha / 4.0 * q * r2;
        return v;
    };
    auto newton = [&](PhasePoint s) {
        for (int it = 0; it < 60; ++it) {
            const PhaseVelocity f = eom(s);
            const double h = 1e-7;
            const PhaseVelocity fp = eom({s.p + h, s.q});
            const PhaseVelocity fq = eom({s.p, s.q + h});
            const double a11 = (fp.dq - f.dq) / h, a12 = (fq.dq - f.dq) / h;
            const double a21 = (fp.dp - f.dp) / h, a22 = (fq.dp - f.dp) / h;
            const double det = a11 * a22 - a12 * a21;
            if (std::abs(det) < 1e-14) break;
            s.p -= (a22 * f.dq - a12 * f.dp) / det;
            s.q -= (-a21 * f.dq + a11 * f.dp) / det;
            if (std::abs(f.dq) + std::abs(f.dp) < 1e-14) break;
        }
        return s;
    };

    std::vector<PhasePoint> roots;
    const double lim = 2.0;
    for (int i = 0; i <= grid; ++i)
        for (int k = 0; k <= grid; ++k) {
            PhasePoint s{-lim + 2.0 * lim * i / grid, -lim + 2.0 * lim * k / grid};
            if (s.radius2() > 4.0) continue;
            const PhaseVelocity f = eom(s);
            if (std::abs(f.dq) + std::abs(f.dp) > 0.02) continue;
            PhasePoint r = newton(s);
            if (r.radius2() > 4.0 + 1e-9) continue;
            const PhaseVelocity res = eom(r);
            if (std::abs(res.dq) + std::abs(res.dp) > 1e-10) continue;
            bool dup = false;
            for (const auto& seen : roots)
                if (std::abs(seen.p - r.p) + std::abs(seen.q - r.q) < 1e-5) dup = true;
            if (!dup) roots.push_back(r);
        }
    return roots;
}

}  // namespace oracle
