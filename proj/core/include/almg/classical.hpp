#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "almg/errors.hpp"

namespace almg {

/// Canonical phase-space point; the accessible region is the disk
/// p^2 + q^2 <= 4.
struct PhasePoint {
    double p = 0.0;
    double q = 0.0;
    double radius2() const { return p * p + q * q; }
};

struct PhaseVelocity {
    double dq = 0.0;  // dq/dt
    double dp = 0.0;  // dp/dt
};

/// H_c(p, q) = (1-g)/4 (p^2+q^2) - g/8 q^2 (4-p^2-q^2) - a/16 (p^2+q^2)^2 + g/2
double classical_hamiltonian(double gamma, double alpha, PhasePoint pt);

PhaseVelocity equations_of_motion(double gamma, double alpha, PhasePoint pt);

enum class Stability { Minimum, Saddle, Maximum, Bifurcation };
const char* to_string(Stability s);

struct FixedPoint {
    PhasePoint pt;
    double energy = 0.0;
    Stability stability = Stability::Minimum;
};

struct FixedPointReport {
    double gamma = 0.0, alpha = 0.0;
    std::vector<FixedPoint> points;
};

/// All stationary points of the flow: the origin, the q-axis pair
/// q* = +-sqrt(2(3g-1)/(2g-a)) for g >= 1/3, the p-axis pair
/// p* = +-sqrt(2(1-g)/a) while it stays inside the disk, and the
/// rim family at p^2+q^2 = 4 for g >= |1-2a|. Stability is classified
/// from the Hessian of H_c; degenerate Hessians are labeled Bifurcation.
FixedPointReport find_fixed_points(double gamma, double alpha);

struct CriticalEnergies {
    double gamma = 0.0, alpha = 0.0;
    std::optional<double> eps_c1;  // exists only for gamma >= 1/3
    double eps_c2 = 0.0;
};

/// eps_c1 = (3g-1)^2 / (4(2g-a));
/// eps_c2 = 1-g-a for g < 1/3, (1+g-2a)^2 / (4(2g-a)) for g >= 1/3.
CriticalEnergies critical_energies(double gamma, double alpha);

/// [min, max] of H_c over the closed disk (exact, from the stationary-point
/// energies and the rim value).
struct EnergyRange {
    double min = 0.0;
    double max = 0.0;
};
EnergyRange classical_energy_range(double gamma, double alpha);

struct Trajectory {
    double dt = 0.0;
    std::vector<PhasePoint> points;  // points[0] is the start
    bool boundary_exit = false;      // true if integration left the disk early
};

/// Classic fixed-step RK4. Stops (with boundary_exit) before recording any
/// point outside the disk.
Trajectory integrate_trajectory(double gamma, double alpha, PhasePoint start,
                                double dt, long steps);

struct DosBin {
    double eps_lo = 0.0, eps_hi = 0.0;
    long long count = 0;
    double rho = 0.0;
    double stderr_rho = 0.0;  // +inf marks an empty bin (infinite relative error)
};

struct SemiclassicalDos {
    double gamma = 0.0, alpha = 0.0;
    double energy_shift = 0.0;  // classical minimum subtracted from H_c
    long long samples = 0;
    std::uint64_t seed = 0;
    std::vector<DosBin> bins;
};

/// Monte Carlo estimate of the phase-space volume density
/// rho_sc(eps) = (1/4pi) d(Area)/d(eps), from uniform samples over the disk
/// (area 4 pi). eps is measured from the classical minimum. eps_max <= 0
/// selects the full classical range. Bit-reproducible for a fixed seed,
/// independent of the worker count.
SemiclassicalDos semiclassical_dos(double gamma, double alpha, int bins,
                                   double eps_max, long long samples,
                                   std::uint64_t seed);

/// rho_sc estimated in narrow windows [center_i - halfwidth_i, center_i + halfwidth_i)
/// (same sampling scheme; windows must be disjoint and ascending).
std::vector<double> semiclassical_dos_at(double gamma, double alpha,
                                         const std::vector<double>& centers,
                                         const std::vector<double>& halfwidths,
                                         long long samples, std::uint64_t seed);

}  // namespace almg
