#include "almg/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "almg/parallel.hpp"
#include "almg/rng.hpp"

namespace almg {

namespace {

constexpr double kDegenerateHessian = 1e-10;

void check_point(PhasePoint pt) {
    if (pt.radius2() > 4.0 + 1e-12)
        throw DomainError("phase-space point outside the disk p^2 + q^2 <= 4");
}

Stability classify(double gamma, double alpha, PhasePoint pt) {
    const double p = pt.p, q = pt.q;
    const double hpp = (1.0 - gamma) / 2.0 + gamma * q * q / 4.0
                       - alpha * (3.0 * p * p + q * q) / 4.0;
    const double hqq = (1.0 - gamma) / 2.0 - gamma * (4.0 - p * p - 2.0 * q * q) / 4.0
                       + gamma * q * q - alpha * (p * p + 3.0 * q * q) / 4.0;
    const double hpq = (gamma - alpha) * p * q / 2.0;
    const double det = hpp * hqq - hpq * hpq;
    if (std::abs(det) <= kDegenerateHessian) return Stability::Bifurcation;
    if (det < 0.0) return Stability::Saddle;
    return (hpp + hqq) < 0.0 ? Stability::Maximum : Stability::Minimum;
}

void push_point(FixedPointReport& rep, double p, double q) {
    FixedPoint fp;
    fp.pt = {p, q};
    fp.energy = classical_hamiltonian(rep.gamma, rep.alpha, fp.pt);
    fp.stability = classify(rep.gamma, rep.alpha, fp.pt);
    rep.points.push_back(fp);
}

}  // namespace

const char* to_string(Stability s) {
    switch (s) {
        case Stability::Minimum: return "minimum";
        case Stability::Saddle: return "saddle";
        case Stability::Maximum: return "maximum";
        case Stability::Bifurcation: return "bifurcation";
    }
    return "?";
}

double classical_hamiltonian(double gamma, double alpha, PhasePoint pt) {
    check_point(pt);
    const double r2 = pt.radius2();
    return (1.0 - gamma) / 4.0 * r2 - gamma / 8.0 * pt.q * pt.q * (4.0 - r2)
           - alpha / 16.0 * r2 * r2 + gamma / 2.0;
}

PhaseVelocity equations_of_motion(double gamma, double alpha, PhasePoint pt) {
    check_point(pt);
    const double p = pt.p, q = pt.q;
    const double r2 = p * p + q * q;
    PhaseVelocity v;
    v.dq = (1.0 - gamma) / 2.0 * p + gamma / 4.0 * q * q * p - alpha / 4.0 * p * r2;
    v.dp = -(1.0 - gamma) / 2.0 * q + gamma / 4.0 * q * (4.0 - p * p - 2.0 * q * q)
           + alpha / 4.0 * q * r2;
    return v;
}

FixedPointReport find_fixed_points(double gamma, double alpha) {
    FixedPointReport rep;
    rep.gamma = gamma;
    rep.alpha = alpha;

    push_point(rep, 0.0, 0.0);

    // q-axis pair, appearing at the gamma = 1/3 bifurcation
    if (gamma >= 1.0 / 3.0 && 2.0 * gamma - alpha > 0.0) {
        const double q2 = 2.0 * (3.0 * gamma - 1.0) / (2.0 * gamma - alpha);
        if (q2 > 1e-14 && q2 <= 4.0 + 1e-12) {
            const double q1 = std::sqrt(std::min(q2, 4.0));
            push_point(rep, 0.0, q1);
            push_point(rep, 0.0, -q1);
        }
    }

    // p-axis pair: 2(1-g)/a inside the disk. The rim value of H_c is
    // E2 = 1 - g/2 - a everywhere, so these are interior extrema whenever
    // they exist.
    if (alpha > 0.0) {
        const double p2 = 2.0 * (1.0 - gamma) / alpha;
        if (p2 > 1e-14 && p2 <= 4.0 + 1e-12) {
            const double p3 = std::sqrt(std::min(p2, 4.0));
            push_point(rep, p3, 0.0);
            push_point(rep, -p3, 0.0);
        }
    }

    // rim family at p^2 + q^2 = 4
    if (gamma > 0.0 && gamma >= std::abs(1.0 - 2.0 * alpha)) {
        const double p2sq = (2.0 * gamma + 2.0 - 4.0 * alpha) / gamma;
        const double q2sq = (4.0 * alpha - 2.0 + 2.0 * gamma) / gamma;
        if (p2sq > 1e-14 && q2sq > 1e-14) {
            const double pr = std::sqrt(p2sq), qr = std::sqrt(q2sq);
            push_point(rep, pr, qr);
            push_point(rep, pr, -qr);
            push_point(rep, -pr, qr);
            push_point(rep, -pr, -qr);
        }
    }
    return rep;
}

CriticalEnergies critical_energies(double gamma, double alpha) {
    if (!(gamma >= 0.0 && gamma <= 1.0) || !(alpha >= 0.0))
        throw ParameterError("critical_energies: need gamma in [0,1], alpha >= 0");
    if (std::abs(2.0 * gamma - alpha) < 1e-12)
        throw ParameterError("critical_energies: singular denominator 2 gamma = alpha");
    CriticalEnergies ce;
    ce.gamma = gamma;
    ce.alpha = alpha;
    if (gamma >= 1.0 / 3.0) {
        ce.eps_c1 = (3.0 * gamma - 1.0) * (3.0 * gamma - 1.0) / (4.0 * (2.0 * gamma - alpha));
        const double u = 1.0 + gamma - 2.0 * alpha;
        ce.eps_c2 = u * u / (4.0 * (2.0 * gamma - alpha));
    } else {
        ce.eps_c2 = 1.0 - gamma - alpha;
    }
    return ce;
}

EnergyRange classical_energy_range(double gamma, double alpha) {
    const auto rep = find_fixed_points(gamma, alpha);
    // rim value is an energy level even when no rim fixed point exists
    double lo = 1.0 - gamma / 2.0 - alpha;
    double hi = lo;
    for (const auto& fp : rep.points) {
        lo = std::min(lo, fp.energy);
        hi = std::max(hi, fp.energy);
    }
    return {lo, hi};
}

Trajectory integrate_trajectory(double gamma, double alpha, PhasePoint start,
                                double dt, long steps) {
    if (!(dt > 0.0)) throw ParameterError("integrate_trajectory: dt must be > 0");
    if (steps < 0) throw ParameterError("integrate_trajectory: steps must be >= 0");
    check_point(start);

    auto deriv = [&](PhasePoint s) {
        const double p = s.p, q = s.q;
        const double r2 = p * p + q * q;
        PhaseVelocity v;
        v.dq = (1.0 - gamma) / 2.0 * p + gamma / 4.0 * q * q * p - alpha / 4.0 * p * r2;
        v.dp = -(1.0 - gamma) / 2.0 * q + gamma / 4.0 * q * (4.0 - p * p - 2.0 * q * q)
               + alpha / 4.0 * q * r2;
        return v;
    };

    Trajectory traj;
    traj.dt = dt;
    traj.points.reserve(static_cast<std::size_t>(steps) + 1);
    traj.points.push_back(start);
    PhasePoint s = start;
    for (long k = 0; k < steps; ++k) {
        const PhaseVelocity k1 = deriv(s);
        const PhaseVelocity k2 = deriv({s.p + 0.5 * dt * k1.dp, s.q + 0.5 * dt * k1.dq});
        const PhaseVelocity k3 = deriv({s.p + 0.5 * dt * k2.dp, s.q + 0.5 * dt * k2.dq});
        const PhaseVelocity k4 = deriv({s.p + dt * k3.dp, s.q + dt * k3.dq});
        PhasePoint next{s.p + dt / 6.0 * (k1.dp + 2.0 * (k2.dp + k3.dp) + k4.dp),
                        s.q + dt / 6.0 * (k1.dq + 2.0 * (k2.dq + k3.dq) + k4.dq)};
        if (next.radius2() > 4.0) {
            traj.boundary_exit = true;
            break;
        }
        traj.points.push_back(next);
        s = next;
    }
    return traj;
}

namespace {

// Uniform sample over the disk of radius 2 from two counter-driven uniforms.
inline PhasePoint disk_sample(std::uint64_t seed, std::uint64_t i) {
    const double u = rng::uniform01(seed, 2 * i);
    const double th = 6.283185307179586476925286766559 * rng::uniform01(seed, 2 * i + 1);
    const double r = 2.0 * std::sqrt(u);
    return {r * std::cos(th), r * std::sin(th)};
}

inline double hc_raw(double gamma, double alpha, PhasePoint pt) {
    const double r2 = pt.radius2();
    return (1.0 - gamma) / 4.0 * r2 - gamma / 8.0 * pt.q * pt.q * (4.0 - r2)
           - alpha / 16.0 * r2 * r2 + gamma / 2.0;
}

constexpr long long kChunk = 1 << 20;

}  // namespace

SemiclassicalDos semiclassical_dos(double gamma, double alpha, int bins,
                                   double eps_max, long long samples,
                                   std::uint64_t seed) {
    if (bins < 2) throw ParameterError("semiclassical_dos: need at least 2 bins");
    if (samples < 1) throw ParameterError("semiclassical_dos: need samples >= 1");
    const auto range = classical_energy_range(gamma, alpha);
    if (eps_max <= 0.0) eps_max = range.max - range.min;
    const double shift = range.min;
    const double width = eps_max / bins;

    const std::size_t nchunks = static_cast<std::size_t>((samples + kChunk - 1) / kChunk);
    std::vector<std::vector<long long>> partial(nchunks);
    parallel_for(nchunks, [&](std::size_t c) {
        std::vector<long long> counts(bins, 0);
        const long long lo = static_cast<long long>(c) * kChunk;
        const long long hi = std::min(samples, lo + kChunk);
        for (long long i = lo; i < hi; ++i) {
            const double h = hc_raw(gamma, alpha, disk_sample(seed, static_cast<std::uint64_t>(i)))
                             - shift;
            if (h < 0.0 || h >= eps_max) continue;
            ++counts[static_cast<std::size_t>(h / width)];
        }
        partial[c] = std::move(counts);
    });

    SemiclassicalDos out;
    out.gamma = gamma;
    out.alpha = alpha;
    out.energy_shift = shift;
    out.samples = samples;
    out.seed = seed;
    out.bins.resize(bins);
    for (int b = 0; b < bins; ++b) {
        long long cnt = 0;
        for (const auto& pc : partial) cnt += pc[b];
        DosBin& bin = out.bins[b];
        bin.eps_lo = b * width;
        bin.eps_hi = (b + 1) * width;
        bin.count = cnt;
        const double phat = static_cast<double>(cnt) / samples;
        bin.rho = phat / width;
        bin.stderr_rho = cnt == 0
                             ? std::numeric_limits<double>::infinity()
                             : std::sqrt(phat * (1.0 - phat) / samples) / width;
    }
    return out;
}

std::vector<double> semiclassical_dos_at(double gamma, double alpha,
                                         const std::vector<double>& centers,
                                         const std::vector<double>& halfwidths,
                                         long long samples, std::uint64_t seed) {
    if (centers.size() != halfwidths.size())
        throw ParameterError("semiclassical_dos_at: size mismatch");
    const std::size_t nw = centers.size();
    std::vector<double> lo(nw), hi(nw);
    for (std::size_t i = 0; i < nw; ++i) {
        lo[i] = centers[i] - halfwidths[i];
        hi[i] = centers[i] + halfwidths[i];
        if (i > 0 && lo[i] < hi[i - 1])
            throw ParameterError("semiclassical_dos_at: windows must be disjoint ascending");
    }
    const double shift = classical_energy_range(gamma, alpha).min;

    const std::size_t nchunks = static_cast<std::size_t>((samples + kChunk - 1) / kChunk);
    std::vector<std::vector<long long>> partial(nchunks);
    parallel_for(nchunks, [&](std::size_t c) {
        std::vector<long long> counts(nw, 0);
        const long long b = static_cast<long long>(c) * kChunk;
        const long long e = std::min(samples, b + kChunk);
        for (long long i = b; i < e; ++i) {
            const double h = hc_raw(gamma, alpha, disk_sample(seed, static_cast<std::uint64_t>(i)))
                             - shift;
            // first window whose upper edge is above h
            const auto it = std::upper_bound(hi.begin(), hi.end(), h);
            if (it == hi.end()) continue;
            const std::size_t w = static_cast<std::size_t>(it - hi.begin());
            if (h >= lo[w]) ++counts[w];
        }
        partial[c] = std::move(counts);
    });

    std::vector<double> rho(nw, 0.0);
    for (std::size_t w = 0; w < nw; ++w) {
        long long cnt = 0;
        for (const auto& pc : partial) cnt += pc[w];
        rho[w] = static_cast<double>(cnt) / samples / (hi[w] - lo[w]);
    }
    return rho;
}

}  // namespace almg
