#pragma once

// The toric domain Ω_S ⊂ ℝ²₊ whose toric manifold is D*(S ∖ {north pole}):
// action integrals of the geodesic flow, the boundary curve ρ(j), and the
// shape tests run on it (Zoll defect, convexity class, inscribed triangle,
// area).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "revwidth/errors.hpp"
#include "revwidth/numerics.hpp"
#include "revwidth/parallel.hpp"
#include "revwidth/spheroid.hpp"
#include "revwidth/surface.hpp"

namespace revwidth {

struct ToricSample {
    double j = 0.0;
    double rho1 = 0.0;
    double rho2 = 0.0;
};

/// Sampled boundary of Ω, ordered by increasing j: it starts on the x-axis at
/// (equator_length, 0) and ends on the y-axis at (0, equator_length).
struct ToricProfile {
    std::vector<ToricSample> samples;
    double equator_length = 0.0;
    double meridian_length = 0.0;
    std::string label;
    std::shared_ptr<const SurfaceProfile> surface;  ///< set when sampled by quadrature
    std::optional<double> spheroid_c;               ///< set when sampled in closed form

    double j_max() const { return equator_length / kTwoPi; }
};

/// Radial action 2∫_{z₋}^{z₊} √((h − j²/u²)(u′² + 1)) dz at (h, j).
inline double action_I2(const SurfaceProfile& p, double h, double j, double tol = kQuadratureTol) {
    if (!(h > 0.0 && h <= 1.0)) throw DomainError("action_I2: require 0 < h <= 1");
    const double jmax = p.equator_radius() * std::sqrt(h);
    if (std::abs(j) >= jmax) {
        if (std::abs(j) > jmax * (1.0 + 1e-14)) {
            throw DomainError("action_I2: |j| outside the admissible region");
        }
        return 0.0;
    }
    const auto tp = turning_points(p, h, j);
    const double j2 = j * j;
    auto f = [&](double z) {
        const double u = p.u(z);
        const double du = p.du(z);
        const double radial = j2 == 0.0 ? h : h - j2 / (u * u);
        return std::sqrt(std::max(0.0, radial) * (1.0 + du * du));
    };
    return 2.0 * integrate_sqrt_singular(f, tp.z_minus, tp.z_plus, 0.5 * tol);
}

/// Θ_i(j): the p_θ dθ contribution to the i-th action, i ∈ {1, 2}.
inline double theta_correction(int i, double j) {
    if (i != 1 && i != 2) throw DomainError("theta_correction: index must be 1 or 2");
    if (i == 2) return j > 0.0 ? kTwoPi * j : 0.0;
    return j < 0.0 ? -kTwoPi * j : 0.0;
}

/// ρ(j) = (I₂(1, j) + Θ₁(j), I₂(1, j) + Θ₂(j)) on a Chebyshev–Lobatto grid in
/// j ∈ [−u(z0), u(z0)]. Only j ≥ 0 is integrated; I₂ is even in j.
inline ToricProfile boundary_curve(const SurfaceProfile& p, std::size_t n_samples,
                                   double tol = kQuadratureTol) {
    if (n_samples < 16) throw DomainError("boundary_curve: need at least 16 samples");
    const double U = p.equator_radius();
    const auto grid = symmetric_lobatto_grid(n_samples, U);
    const std::size_t n = grid.size();
    const std::size_t mid = n / 2;  // grid[mid] == 0

    std::vector<double> radial(n - mid);
    parallel_for(radial.size(), [&](std::size_t i) {
        const double j = grid[mid + i];
        radial[i] = (mid + i == n - 1) ? 0.0 : action_I2(p, 1.0, j, tol);
    });

    ToricProfile t;
    t.samples.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double j = grid[k];
        const double I = k >= mid ? radial[k - mid] : radial[mid - k];
        t.samples[k] = {j, I + theta_correction(1, j), I + theta_correction(2, j)};
    }
    t.equator_length = kTwoPi * U;
    t.meridian_length = radial[0];
    t.label = p.label();
    t.surface = std::make_shared<const SurfaceProfile>(p);
    return t;
}

/// Closed-form boundary of Ω_c for the spheroid 𝓔(1,1,c), same grid as boundary_curve.
inline ToricProfile spheroid_boundary_curve(double c, std::size_t n_samples) {
    if (!(c > 0.0)) throw DomainError("spheroid_boundary_curve: require c > 0");
    if (n_samples < 16) throw DomainError("spheroid_boundary_curve: need at least 16 samples");
    const auto grid = symmetric_lobatto_grid(n_samples, 1.0);
    const std::size_t n = grid.size();
    const std::size_t mid = n / 2;
    std::vector<double> gv(n - mid);
    parallel_for(gv.size(), [&](std::size_t i) { gv[i] = spheroid::g(c, grid[mid + i]); });

    ToricProfile t;
    t.samples.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double j = grid[k];
        const double gj = k >= mid ? gv[k - mid] : gv[mid - k];
        t.samples[k] = {j, gj + theta_correction(1, j), gj + theta_correction(2, j)};
    }
    t.equator_length = kTwoPi;
    t.meridian_length = gv[0];
    t.label = c == 1.0 ? "round" : "spheroid(c=" + detail::fmt_real(c) + ")";
    t.spheroid_c = c;
    return t;
}

/// A toric profile given directly by boundary points (x-axis end first).
/// The j column is only a curve parameter here.
inline ToricProfile custom_profile(std::vector<ToricSample> samples, std::string label) {
    if (samples.size() < 2) throw DomainError("custom_profile: need at least two points");
    ToricProfile t;
    t.equator_length = samples.front().rho1;
    t.meridian_length = samples.back().rho2;
    t.samples = std::move(samples);
    t.label = std::move(label);
    return t;
}

/// Sup over j ≥ 0 of |ρ₁(j) − (ℓ − 2πj·ℓ/equator_length)| with ℓ = meridian
/// length; zero exactly for the affine profile of a Zoll sphere.
inline double zoll_defect(const ToricProfile& t) {
    const double ell = t.meridian_length;
    double worst = 0.0;
    for (const auto& s : t.samples) {
        if (s.j < 0.0) continue;
        const double linear = ell - kTwoPi * s.j * ell / t.equator_length;
        worst = std::max(worst, std::abs(s.rho1 - linear));
    }
    return worst;
}

enum class DomainShape { Concave, WeaklyConvex, Neither };

inline std::string_view to_string(DomainShape s) {
    switch (s) {
        case DomainShape::Concave: return "concave";
        case DomainShape::WeaklyConvex: return "weakly_convex";
        case DomainShape::Neither: return "neither";
    }
    return "unknown";
}

inline constexpr double kCurvatureTol = 1e-7;

namespace detail {

/// sin of the turning angle at b along a → b → c; positive = left turn.
inline double turn(double ax, double ay, double bx, double by, double cx, double cy) {
    const double ux = bx - ax, uy = by - ay;
    const double vx = cx - bx, vy = cy - by;
    const double lu = std::hypot(ux, uy), lv = std::hypot(vx, vy);
    if (lu == 0.0 || lv == 0.0) return 0.0;
    return (ux * vy - uy * vx) / (lu * lv);
}

}  // namespace detail

/// Convexity class of the toric domain from the discrete turning of its
/// boundary, traversed from the x-axis to the y-axis with Ω on the left.
///
/// Weakly convex: no right turn anywhere, axis corners included. Concave: no
/// left turn at interior points. A smooth branch (j < 0 or j > 0) that turns
/// both ways beyond tolerance throws IndeterminateError.
inline DomainShape classify(const ToricProfile& t, double tol = kCurvatureTol) {
    const auto& s = t.samples;
    const std::size_t n = s.size();
    if (n < 3) throw DomainError("classify: need at least three boundary samples");

    bool any_left_interior = false;
    bool any_right = false;
    bool branch_left[2] = {false, false};
    bool branch_right[2] = {false, false};

    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double tr = detail::turn(s[i - 1].rho1, s[i - 1].rho2, s[i].rho1, s[i].rho2,
                                       s[i + 1].rho1, s[i + 1].rho2);
        if (tr > tol) any_left_interior = true;
        if (tr < -tol) any_right = true;
        if (s[i].j != 0.0) {
            const int b = s[i].j > 0.0 ? 1 : 0;
            if (tr > tol) branch_left[b] = true;
            if (tr < -tol) branch_right[b] = true;
        }
    }
    for (int b = 0; b < 2; ++b) {
        if (branch_left[b] && branch_right[b]) {
            throw IndeterminateError("classify: boundary curvature changes sign on the " +
                                     std::string(b == 1 ? "j > 0" : "j < 0") + " branch");
        }
    }
    // axis corners: (0,0) → first sample → second, and second-to-last → last → (0,0)
    const double t_first = detail::turn(0.0, 0.0, s[0].rho1, s[0].rho2, s[1].rho1, s[1].rho2);
    const double t_last = detail::turn(s[n - 2].rho1, s[n - 2].rho2, s[n - 1].rho1,
                                       s[n - 1].rho2, 0.0, 0.0);
    if (t_first < -tol || t_last < -tol) any_right = true;

    if (!any_right) return DomainShape::WeaklyConvex;
    if (!any_left_interior) return DomainShape::Concave;
    return DomainShape::Neither;
}

/// Largest m with the open triangle {x, y > 0, x + y < m} inside Ω: the
/// minimum of ρ₁ + ρ₂ over the boundary, refined between neighbouring
/// samples when the source surface is known.
inline double max_inscribed_triangle(const ToricProfile& t) {
    const auto& s = t.samples;
    std::size_t best = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i].rho1 + s[i].rho2 < s[best].rho1 + s[best].rho2) best = i;
    }
    double value = s[best].rho1 + s[best].rho2;
    if (best == 0 || best + 1 == s.size()) return value;

    std::function<double(double)> sum;
    if (t.spheroid_c) {
        const double c = *t.spheroid_c;
        sum = [c](double j) { return 2.0 * spheroid::g(c, std::abs(j)) + kTwoPi * std::abs(j); };
    } else if (t.surface) {
        const auto surf = t.surface;
        sum = [surf](double j) {
            return 2.0 * action_I2(*surf, 1.0, std::abs(j), 1e-12) + kTwoPi * std::abs(j);
        };
    } else {
        return value;
    }
    const double j = minimize_golden(sum, s[best - 1].j, s[best + 1].j, 1e-9);
    return std::min(value, sum(j));
}

/// Area of Ω (shoelace formula over the origin and the boundary samples).
inline double profile_area(const ToricProfile& t) {
    double twice = 0.0;
    const auto& s = t.samples;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        twice += s[i].rho1 * s[i + 1].rho2 - s[i + 1].rho1 * s[i].rho2;
    }
    return 0.5 * std::abs(twice);
}

/// Surface area of 𝓔(1,1,c) in closed form.
inline double spheroid_surface_area(double c) {
    if (!(c > 0.0)) throw DomainError("spheroid_surface_area: require c > 0");
    if (c == 1.0) return 4.0 * kPi;
    if (c < 1.0) {
        const double e = std::sqrt((1.0 - c) * (1.0 + c));
        return kTwoPi * (1.0 + c * c / e * std::atanh(e));
    }
    const double e = std::sqrt(1.0 - 1.0 / (c * c));
    return kTwoPi * (1.0 + c / e * std::asin(e));
}

inline void write_csv(std::ostream& out, const ToricProfile& t) {
    out << "j,rho1,rho2\n";
    char buf[128];
    for (const auto& s : t.samples) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", s.j, s.rho1, s.rho2);
        out << buf;
    }
}

}  // namespace revwidth
