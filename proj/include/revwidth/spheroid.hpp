#pragma once

// Closed forms for the spheroid 𝓔(1,1,c): the boundary function g_c of its
// toric domain, its derivatives, j₀(c), α(c), β(c), c₀ and the width w(c).

#include <cmath>
#include <string>
#include <string_view>
#include <utility>

#include "revwidth/errors.hpp"
#include "revwidth/numerics.hpp"

namespace revwidth::spheroid {

namespace detail {

inline void check_cj(const char* who, double c, double j) {
    if (!(c > 0.0)) throw DomainError(std::string(who) + ": require c > 0");
    if (!(j >= 0.0 && j <= 1.0)) throw DomainError(std::string(who) + ": require j in [0, 1]");
}

/// Characteristic (c² − 1)/c² of the recast third-kind integral.
inline double n_c(double c) { return (c - 1.0) * (c + 1.0) / (c * c); }

}  // namespace detail

/// k_c(j) = (c² − 1)(1 − j²)/c²
inline double k_mod(double c, double j) {
    return (c - 1.0) * (c + 1.0) * (1.0 - j) * (1.0 + j) / (c * c);
}

/// g_c(j) = −4j²cK(k) + 4cE(k) + (4j²/c)Π((c²−1)/c², k) − 2πj,  k = k_c(j).
///
/// This form is regular on all of [0, 1]; the equivalent expression with
/// Π(1 − j², k) degenerates at j = 0 and is never used.
inline double g(double c, double j) {
    detail::check_cj("g", c, j);
    if (j == 1.0) return 0.0;
    const double k = k_mod(c, j);
    const double j2 = j * j;
    double val = 4.0 * c * ellip_E(k);
    if (j2 > 0.0) {
        val += -4.0 * j2 * c * ellip_K(k) + 4.0 * j2 / c * ellip_Pi(detail::n_c(c), k) - kTwoPi * j;
    }
    return val;
}

/// Direct quadrature of g_c(j) = 4∫₀^{c√(1−j²)} √((c²(1−j²) − z²)(c⁴ + (1−c²)z²)) / (c(c² − z²)) dz.
/// Shares no code with g() beyond the quadrature kernel.
inline double g_quad(double c, double j, double tol = kQuadratureTol) {
    detail::check_cj("g_quad", c, j);
    const double s = c * std::sqrt((1.0 - j) * (1.0 + j));
    const double c2 = c * c;
    auto f = [&](double z) {
        const double a = (s - z) * (s + z);
        const double b = c2 * c2 + (1.0 - c2) * z * z;
        return std::sqrt(std::max(0.0, a) * b) / (c * (c - z) * (c + z));
    };
    return 4.0 * integrate_sqrt_singular(f, 0.0, s, 0.25 * tol);
}

/// g′_c(j). At j = 0 and j = 1 the limits −2π and −2πc are returned.
inline double g_d1(double c, double j) {
    detail::check_cj("g_d1", c, j);
    if (j == 0.0) return -kTwoPi;
    if (j == 1.0) return -kTwoPi * c;
    // −(4j/c)((c²−1)K + Π(1−j², k)) with Π(1−j², k) rewritten through the
    // reduction Π(n,k) = π/(2√(1−n)√(1−k/n)) + K(k) − Π(k/n, k).
    const double k = k_mod(c, j);
    return -4.0 * j * c * ellip_K(k) + 4.0 * j / c * ellip_Pi(detail::n_c(c), k) - kTwoPi;
}

/// g″_c(j) = −(4c/(1 − j²))(K(k) − E(k)); undefined at j = 1.
inline double g_d2(double c, double j) {
    detail::check_cj("g_d2", c, j);
    if (j == 1.0) throw DomainError("g_d2: undefined at j = 1");
    return -4.0 * c / ((1.0 - j) * (1.0 + j)) * ellip_K_minus_E(k_mod(c, j));
}

/// Unique j with g′_c(j) = −π, for 0 < c < 1/2.
inline double j0(double c) {
    if (!(c > 0.0 && c < 0.5)) {
        throw DomainError("j0: defined only for 0 < c < 1/2, got c = " + revwidth::detail::fmt_real(c));
    }
    // g′ is increasing from −2π at j = 0 to −2πc > −π at j = 1.
    return find_root([c](double j) { return g_d1(c, j) + kPi; }, 0.0, 1.0);
}

/// Left side of the defining equation of j₀:  −jcK(k) + (j/c)Π((c²−1)/c², k).
inline double j0_equation_lhs(double c, double j) {
    const double k = k_mod(c, j);
    return -j * c * ellip_K(k) + j / c * ellip_Pi(detail::n_c(c), k);
}

/// α(c) = 8cE(k_c(j₀(c))), the length of the closed geodesic meeting the
/// equator four times (equivalently 2g_c(j₀) + 2πj₀).
inline double alpha(double c) {
    if (!(c > 0.0 && c < 0.5)) {
        throw DomainError("alpha: defined only for 0 < c < 1/2, got c = " + revwidth::detail::fmt_real(c));
    }
    return 8.0 * c * ellip_E(k_mod(c, j0(c)));
}

/// β(c) = 4E(1 − c²), the meridian length.
inline double beta(double c) {
    if (!(c > 0.0)) throw DomainError("beta: require c > 0");
    return 4.0 * ellip_E((1.0 - c) * (1.0 + c));
}

/// Root of β(c) = 4π in [2, 3], at the given bracket tolerance.
inline double c0_with_tol(double tol) {
    return find_root([](double c) { return beta(c) - 4.0 * kPi; }, 2.0, 3.0, tol);
}

/// c₀, computed once per process.
inline double c0() {
    static const double value = c0_with_tol(kRootTol);
    return value;
}

enum class Regime { OblateSteep, Middle, Prolate, ProlateCapped };

inline std::string_view to_string(Regime r) {
    switch (r) {
        case Regime::OblateSteep: return "oblate_steep";
        case Regime::Middle: return "middle";
        case Regime::Prolate: return "prolate";
        case Regime::ProlateCapped: return "prolate_capped";
    }
    return "unknown";
}

inline Regime regime(double c) {
    if (!(c > 0.0)) throw DomainError("regime: require c > 0");
    if (c < 0.5) return Regime::OblateSteep;
    if (c <= 1.0) return Regime::Middle;
    if (c < c0()) return Regime::Prolate;
    return Regime::ProlateCapped;
}

/// Gromov width of D*𝓔(1,1,c): α(c), 2π, β(c) or 4π by regime.
inline double gromov_width(double c) {
    switch (regime(c)) {
        case Regime::OblateSteep: return alpha(c);
        case Regime::Middle: return kTwoPi;
        case Regime::Prolate: return beta(c);
        case Regime::ProlateCapped: return 4.0 * kPi;
    }
    return 0.0;
}

/// Boundary point of Ω_c: (g(j), g(j) + 2πj) for j ≥ 0, mirrored for j < 0.
inline std::pair<double, double> rho(double c, double j) {
    if (!(j >= -1.0 && j <= 1.0)) throw DomainError("rho: require j in [-1, 1]");
    if (j >= 0.0) {
        const double gj = g(c, j);
        return {gj, gj + kTwoPi * j};
    }
    const double gj = g(c, -j);
    return {gj - kTwoPi * j, gj};
}

}  // namespace revwidth::spheroid
