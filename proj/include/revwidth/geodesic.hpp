#pragma once

// Cogeodesic flow of H = p_z²/(1 + u′²) + p_θ²/u² on a sphere of revolution,
// integrated with classical RK4. Along the H-flow at H = 1 the speed is 2, so
// arc length is 2t.

#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <vector>

#include "revwidth/errors.hpp"
#include "revwidth/numerics.hpp"
#include "revwidth/spheroid.hpp"
#include "revwidth/surface.hpp"

namespace revwidth {

struct PhaseState {
    double z = 0.0;
    double theta = 0.0;
    double p_z = 0.0;
    double p_theta = 0.0;
};

struct TimedState {
    double t = 0.0;
    PhaseState s;
};

struct Trajectory {
    std::vector<TimedState> states;
    double dt = 0.0;
    double length = 0.0;
    double h_drift = 0.0;  ///< max |H(t) − H(0)|
    double j_drift = 0.0;  ///< max |J(t) − J(0)|
};

inline constexpr double kPoleAbort = 1e-6;

inline double hamiltonian(const SurfaceProfile& p, const PhaseState& s) {
    if (!(s.z > p.a() && s.z < p.b())) {
        throw PoleError("hamiltonian: z = " + detail::fmt_real(s.z) + " is not inside (a, b)");
    }
    const double u = p.u(s.z);
    if (!(u > 0.0)) throw PoleError("hamiltonian: u(z) = 0");
    const double du = p.du(s.z);
    return s.p_z * s.p_z / (1.0 + du * du) + s.p_theta * s.p_theta / (u * u);
}

inline double angular_momentum(const PhaseState& s) { return s.p_theta; }

namespace detail {

/// Hamilton's equations (ż, θ̇, ṗ_z, ṗ_θ).
inline std::array<double, 4> hamilton_rhs(const SurfaceProfile& p, const std::array<double, 4>& y) {
    const double z = y[0], pz = y[2], pt = y[3];
    const double u = p.u(z), du = p.du(z), ddu = p.ddu(z);
    const double m = 1.0 + du * du;
    return {2.0 * pz / m, 2.0 * pt / (u * u),
            2.0 * pz * pz * du * ddu / (m * m) + 2.0 * pt * pt * du / (u * u * u), 0.0};
}

template <class Rhs>
std::array<double, 4> rk4_step(Rhs&& f, const std::array<double, 4>& y, double h) {
    auto axpy = [](const std::array<double, 4>& a, double s, const std::array<double, 4>& b) {
        return std::array<double, 4>{a[0] + s * b[0], a[1] + s * b[1], a[2] + s * b[2], a[3] + s * b[3]};
    };
    const auto k1 = f(y);
    const auto k2 = f(axpy(y, 0.5 * h, k1));
    const auto k3 = f(axpy(y, 0.5 * h, k2));
    const auto k4 = f(axpy(y, h, k3));
    std::array<double, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

}  // namespace detail

/// Fixed-step RK4 integration of the H-flow up to t_max. Every
/// `record_every`-th state is stored (the last one always is).
inline Trajectory flow(const SurfaceProfile& p, const PhaseState& s0, double t_max, double dt,
                       std::size_t record_every = 1) {
    if (!(dt > 0.0) || !(t_max >= 0.0)) throw DomainError("flow: require dt > 0 and t_max >= 0");
    if (record_every == 0) record_every = 1;
    const double h0 = hamiltonian(p, s0);
    if (!(h0 > 0.0 && h0 <= 1.0 + 1e-12)) throw DomainError("flow: require 0 < H(s0) <= 1");
    const double j0 = angular_momentum(s0);

    Trajectory tr;
    tr.dt = dt;
    tr.states.push_back({0.0, s0});
    std::array<double, 4> y{s0.z, s0.theta, s0.p_z, s0.p_theta};
    auto rhs = [&p](const std::array<double, 4>& v) { return detail::hamilton_rhs(p, v); };

    const auto steps = static_cast<std::size_t>(std::llround(t_max / dt));
    for (std::size_t k = 1; k <= steps; ++k) {
        y = detail::rk4_step(rhs, y, dt);
        const PhaseState s{y[0], y[1], y[2], y[3]};
        if (!(s.z > p.a() && s.z < p.b()) || p.u(s.z) < kPoleAbort) {
            throw PoleError("flow: trajectory reached a pole at t = " +
                            detail::fmt_real(static_cast<double>(k) * dt));
        }
        tr.h_drift = std::max(tr.h_drift, std::abs(hamiltonian(p, s) - h0));
        tr.j_drift = std::max(tr.j_drift, std::abs(angular_momentum(s) - j0));
        if (k % record_every == 0 || k == steps) tr.states.push_back({static_cast<double>(k) * dt, s});
    }
    tr.length = 2.0 * std::sqrt(h0) * static_cast<double>(steps) * dt;
    return tr;
}

inline void write_csv(std::ostream& out, const SurfaceProfile& p, const Trajectory& tr) {
    out << "t,z,theta,p_z,p_theta,H,J\n";
    char buf[256];
    for (const auto& ts : tr.states) {
        const auto& s = ts.s;
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n", ts.t, s.z,
                      s.theta, s.p_z, s.p_theta, hamiltonian(p, s), angular_momentum(s));
        out << buf;
    }
}

/// Length of a meridian: 2∫ₐᵇ √(1 + u′²) dz.
inline double meridian_length(const SurfaceProfile& p, double tol = kQuadratureTol) {
    auto f = [&p](double z) {
        const double du = p.du(z);
        return std::sqrt(1.0 + du * du);
    };
    return 2.0 * integrate_sqrt_singular(f, p.a(), p.b(), 0.5 * tol);
}

/// Δθ over one full oscillation of z (z₊ → z₋ → z₊) on the H = 1 level:
/// 2j∫ √(1 + u′²) / (u√(u² − j²)) dz between the turning points.
inline double first_return_angle(const SurfaceProfile& p, double j, double tol = kQuadratureTol) {
    const double U = p.equator_radius();
    if (!(std::abs(j) > 0.0 && std::abs(j) < U)) {
        throw DomainError("first_return_angle: require 0 < |j| < u(z0)");
    }
    const auto tp = turning_points(p, 1.0, j);
    const double aj = std::abs(j);
    const auto c = p.spheroid_c();
    const double s = tp.z_plus;
    auto f = [&p, aj, c, s](double z) {
        const double u = p.u(z), du = p.du(z);
        // spheroid: u² − j² = (s − z)(s + z)/c² with s = z₊
        const double gap = c ? (s - z) * (s + z) / (*c * *c) : (u - aj) * (u + aj);
        if (!(gap > 0.0)) return 0.0;
        return std::sqrt(1.0 + du * du) / (u * std::sqrt(gap));
    };
    return 2.0 * aj * integrate_sqrt_singular(f, tp.z_minus, tp.z_plus, 0.25 * tol);
}

/// Same angle measured on the RK4 flow: Δθ between the start at z₊ and the
/// second upward-to-downward turn of z (p_z changes sign from + to −).
inline double first_return_angle_ode(const SurfaceProfile& p, double j, std::size_t steps_per_unit = 2000) {
    const double U = p.equator_radius();
    if (!(std::abs(j) > 0.0 && std::abs(j) < U)) {
        throw DomainError("first_return_angle_ode: require 0 < |j| < u(z0)");
    }
    const auto tp = turning_points(p, 1.0, j);
    std::array<double, 4> y{tp.z_plus, 0.0, 0.0, j};
    auto rhs = [&p](const std::array<double, 4>& v) { return detail::hamilton_rhs(p, v); };
    const double dt = 1.0 / static_cast<double>(steps_per_unit);
    // leave z₊ (p_z < 0), pass z₋ (p_z turns +), come back to z₊ (p_z turns −)
    int phase = 0;
    for (std::size_t k = 0; k < 1000 * steps_per_unit; ++k) {
        const auto next = detail::rk4_step(rhs, y, dt);
        if (phase == 0 && next[2] < 0.0) phase = 1;
        if (phase == 1 && next[2] > 0.0) phase = 2;
        if (phase == 2 && next[2] <= 0.0) {
            // linear interpolation of θ at p_z = 0
            const double s = y[2] / (y[2] - next[2]);
            return std::abs(y[1] + s * (next[1] - y[1]));
        }
        y = next;
    }
    throw ConvergenceError("first_return_angle_ode: no return within the step budget");
}

struct ClosedGeodesic {
    double length = 0.0;
    int equator_crossings = 0;
    double closure_gap = 0.0;
    double j = 0.0;  ///< angular momentum after shooting refinement
};

namespace detail {

struct ThetaRun {
    double z, p_z, length;
    int crossings;
};

/// Integrates the spheroid geodesic with θ as time from (z₊, θ = 0, p_z = 0)
/// for Δθ = span: dz/dθ = ż/θ̇, dp_z/dθ = ṗ_z/θ̇, ds/dθ = u²/j.
inline ThetaRun integrate_in_theta(const SurfaceProfile& p, double j, double span, std::size_t steps) {
    const auto tp = turning_points(p, 1.0, j);
    std::array<double, 4> y{tp.z_plus, 0.0, 0.0, 0.0};  // (z, p_z, s, unused)
    auto rhs = [&p, j](const std::array<double, 4>& v) {
        const double z = v[0], pz = v[1];
        const double u = p.u(z), du = p.du(z), ddu = p.ddu(z);
        const double m = 1.0 + du * du;
        const double inv_thetadot = u * u / (2.0 * j);
        const double zdot = 2.0 * pz / m;
        const double pzdot = 2.0 * pz * pz * du * ddu / (m * m) + 2.0 * j * j * du / (u * u * u);
        return std::array<double, 4>{zdot * inv_thetadot, pzdot * inv_thetadot, u * u / j, 0.0};
    };
    const double h = span / static_cast<double>(steps);
    int crossings = 0;
    double prev = y[0] - p.z0();
    for (std::size_t k = 0; k < steps; ++k) {
        y = rk4_step(rhs, y, h);
        const double cur = y[0] - p.z0();
        if ((prev > 0.0 && cur <= 0.0) || (prev < 0.0 && cur >= 0.0)) {
            if (cur != 0.0 || k + 1 < steps) ++crossings;
        }
        if (cur != 0.0) prev = cur;
    }
    return {y[0], y[1], y[2], crossings};
}

}  // namespace detail

/// The simple closed geodesic of length α(c) on 𝓔(1,1,c), c < 1/2: started at
/// a turning point with p_θ = j₀(c), followed for Δθ = 2π (two oscillations of
/// z, each advancing θ by π). j is refined so that z returns to z₊ after
/// Δθ = π.
inline ClosedGeodesic closed_geodesic_alpha(double c, std::size_t steps = 20000) {
    if (!(c > 0.0 && c < 0.5)) {
        throw DomainError("closed_geodesic_alpha: require 0 < c < 1/2, got c = " + detail::fmt_real(c));
    }
    const auto p = spheroid_profile(c);
    double j = spheroid::j0(c);

    auto half_miss = [&](double jj) { return detail::integrate_in_theta(p, jj, kPi, steps / 2).p_z; };
    const double delta = 1e-4 * std::min(j, 1.0 - j);
    const double lo = j - delta, hi = j + delta;
    if (half_miss(lo) * half_miss(hi) < 0.0) j = find_root(half_miss, lo, hi, 1e-14);

    const auto tp = turning_points(p, 1.0, j);
    const auto run = detail::integrate_in_theta(p, j, kTwoPi, steps);
    ClosedGeodesic out;
    out.length = run.length;
    out.equator_crossings = run.crossings;
    out.closure_gap = std::hypot(run.z - tp.z_plus, run.p_z);
    out.j = j;
    if (out.closure_gap > 1e-4) {
        throw NonClosureError("closed_geodesic_alpha: closure gap " + detail::fmt_real(out.closure_gap));
    }
    return out;
}

}  // namespace revwidth
