#pragma once

// Spheres of revolution  S = {(u(z)cos θ, u(z)sin θ, z) : z ∈ [a, b]}.

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "revwidth/errors.hpp"
#include "revwidth/numerics.hpp"

namespace revwidth {

/// Profile of a sphere of revolution with a single equator at z0.
///
/// `du` is mandatory and analytic; `ddu` is optional (the geodesic integrator
/// falls back to a central difference of `du`). Instances are immutable once
/// built by one of the factories below, which validate the invariants.
class SurfaceProfile {
public:
    using Fn = std::function<double(double)>;

    static SurfaceProfile make(Fn u, Fn du, double a, double b, std::string label, Fn ddu = {});

    double u(double z) const { return u_(z); }
    double du(double z) const { return du_(z); }
    double ddu(double z) const;

    double a() const { return a_; }
    double b() const { return b_; }
    double z0() const { return z0_; }
    double equator_radius() const { return u0_; }
    const std::string& label() const { return label_; }

    /// Set only for 𝓔(1,1,c); enables closed forms downstream.
    std::optional<double> spheroid_c() const { return spheroid_c_; }

private:
    friend SurfaceProfile spheroid_profile(double c);
    SurfaceProfile() = default;

    Fn u_, du_, ddu_;
    double a_ = 0.0, b_ = 0.0, z0_ = 0.0, u0_ = 0.0;
    std::string label_;
    std::optional<double> spheroid_c_;
};

struct TurningPair {
    double z_minus;
    double z_plus;
};

// ---------------------------------------------------------------------------

inline double SurfaceProfile::ddu(double z) const {
    if (ddu_) return ddu_(z);
    const double h = 1e-6 * std::max(1.0, b_ - a_);
    return (du_(z + h) - du_(z - h)) / (2.0 * h);
}

inline SurfaceProfile SurfaceProfile::make(Fn u, Fn du, double a, double b, std::string label,
                                           Fn ddu) {
    if (!u || !du) throw DomainError("SurfaceProfile: u and du are required");
    if (!(a < b)) throw DomainError("SurfaceProfile: require a < b");
    const double scale = std::max(1.0, std::abs(u((a + b) / 2)));
    if (std::abs(u(a)) > 1e-9 * scale || std::abs(u(b)) > 1e-9 * scale) {
        throw DomainError("SurfaceProfile '" + label + "': u must vanish at both poles");
    }

    // Sample u' for sign changes; exactly one is allowed (the equator).
    constexpr int kSamples = 2000;
    int sign_changes = 0;
    double prev_z = 0.0;
    double prev_d = 0.0;
    bool have_prev = false;
    double z_lo = a, z_hi = b;
    for (int i = 1; i < kSamples; ++i) {
        const double z = a + (b - a) * i / kSamples;
        if (!(u(z) > 0.0)) {
            throw DomainError("SurfaceProfile '" + label + "': u must be positive inside (a, b)");
        }
        const double d = du(z);
        if (d == 0.0) continue;
        if (have_prev && (d > 0.0) != (prev_d > 0.0)) {
            ++sign_changes;
            z_lo = prev_z;
            z_hi = z;
        }
        prev_z = z;
        prev_d = d;
        have_prev = true;
    }
    if (sign_changes != 1) {
        throw DomainError("SurfaceProfile '" + label + "': expected a unique equator, found " +
                          std::to_string(sign_changes) + " critical points of u");
    }

    SurfaceProfile p;
    p.z0_ = find_root(du, z_lo, z_hi, 1e-14);
    p.u_ = std::move(u);
    p.du_ = std::move(du);
    p.ddu_ = std::move(ddu);
    p.a_ = a;
    p.b_ = b;
    p.u0_ = p.u_(p.z0_);
    p.label_ = std::move(label);
    return p;
}

/// 𝓔(1,1,c): u(z) = √(1 − z²/c²) on [−c, c].
inline SurfaceProfile spheroid_profile(double c) {
    if (!(c > 0.0)) throw DomainError("spheroid_profile: require c > 0, got " + detail::fmt_real(c));
    SurfaceProfile p;
    const double c2 = c * c;
    // c − z is exact near the north pole, so u keeps full relative accuracy there.
    p.u_ = [c](double z) { return std::sqrt(std::max(0.0, (c - z) * (c + z))) / c; };
    p.du_ = [c, c2](double z) {
        const double u = std::sqrt((c - z) * (c + z)) / c;
        return -z / (c2 * u);
    };
    p.ddu_ = [c, c2](double z) {
        const double u = std::sqrt((c - z) * (c + z)) / c;
        return -1.0 / (c2 * u * u * u);
    };
    p.a_ = -c;
    p.b_ = c;
    p.z0_ = 0.0;
    p.u0_ = 1.0;
    p.label_ = c == 1.0 ? "round" : "spheroid(c=" + detail::fmt_real(c) + ")";
    p.spheroid_c_ = c;
    return p;
}

inline SurfaceProfile round_sphere() { return spheroid_profile(1.0); }

/// Egg-shaped test surface u(z) = √(1 − z²)(1 + εz), |ε| < 1/2.
inline SurfaceProfile egg_profile(double eps) {
    if (!(std::abs(eps) < 0.5)) throw DomainError("egg_profile: require |eps| < 1/2");
    auto u = [eps](double z) {
        return std::sqrt(std::max(0.0, (1.0 - z) * (1.0 + z))) * (1.0 + eps * z);
    };
    auto du = [eps](double z) {
        const double s = std::sqrt((1.0 - z) * (1.0 + z));
        return (-z * (1.0 + eps * z) + eps * s * s) / s;
    };
    auto ddu = [eps](double z) {
        const double s2 = (1.0 - z) * (1.0 + z);
        const double s = std::sqrt(s2);
        // d/dz [(ε − z − 2εz²)/s]
        const double num = eps - z - 2.0 * eps * z * z;
        return ((-1.0 - 4.0 * eps * z) * s2 + num * z) / (s2 * s);
    };
    return SurfaceProfile::make(u, du, -1.0, 1.0, "egg(eps=" + detail::fmt_real(eps) + ")", ddu);
}

/// Roots z₋ ≤ z0 ≤ z₊ of u(z)²h = j². Closed form for spheroids.
inline TurningPair turning_points(const SurfaceProfile& p, double h, double j) {
    if (!(h > 0.0 && h <= 1.0)) throw DomainError("turning_points: require 0 < h <= 1");
    const double jmax = p.equator_radius() * std::sqrt(h);
    const double aj = std::abs(j);
    if (aj > jmax * (1.0 + 1e-14)) {
        throw DomainError("turning_points: |j| = " + detail::fmt_real(aj) +
                          " outside the admissible region (max " + detail::fmt_real(jmax) + ")");
    }
    if (aj >= jmax) return {p.z0(), p.z0()};
    if (aj == 0.0) return {p.a(), p.b()};
    if (auto c = p.spheroid_c()) {
        const double r = aj / std::sqrt(h);
        const double s = *c * std::sqrt((1.0 - r) * (1.0 + r));
        return {-s, s};
    }
    auto f = [&](double z) {
        const double u = p.u(z);
        return u * u * h - j * j;
    };
    return {find_root(f, p.a(), p.z0(), 1e-13), find_root(f, p.z0(), p.b(), 1e-13)};
}

}  // namespace revwidth
