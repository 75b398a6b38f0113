#pragma once

// Special functions and numerical kernels shared by every other module:
// double-exponential quadrature, complete elliptic integrals in the
// parameter convention  K(k) = ∫₀^{π/2} dθ / √(1 − k sin²θ),  bracketed
// root finding and a golden-section minimizer.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "revwidth/errors.hpp"

namespace revwidth {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Default tolerances. Special functions are relative, general quadrature and
/// root brackets are absolute.
inline constexpr double kSpecialFunctionRelTol = 1e-12;
inline constexpr double kQuadratureTol = 1e-10;
inline constexpr double kRootTol = 1e-12;

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;  ///< |I_level − I_{level−1}|, an overestimate for DE rules
    int levels = 0;
    std::size_t evaluations = 0;
};

namespace detail {

/// Shortest text that reads back as x.
inline std::string fmt_real(double x) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, r.ptr);
}

}  // namespace detail

/// Tanh-sinh quadrature of f over [a, b].
///
/// Abscissas are built from their distance to the nearest endpoint, so nodes
/// never land on a or b unless that distance underflows; such nodes are
/// skipped. Levels halve the step in t until two successive estimates differ
/// by at most max(abs_tol, rel_tol·|I|).
template <class F>
QuadratureResult tanh_sinh(F&& f, double a, double b, double abs_tol, double rel_tol = 0.0,
                           int max_level = 12) {
    if (a == b) return {};
    if (!(a < b)) throw DomainError("tanh_sinh: require a < b, got [" + detail::fmt_real(a) +
                                    ", " + detail::fmt_real(b) + "]");

    constexpr double kHalfPi = 0.5 * std::numbers::pi;
    constexpr double kTMax = 6.5;
    const double half = 0.5 * (b - a);

    QuadratureResult res;

    // Sum of f·w over nodes t = offset + k·h, k = 0, 1, 2, ... on both sides of 0.
    auto accumulate = [&](double h, double offset, std::size_t stride) {
        double sum = 0.0;
        for (std::size_t k = 0;; k += stride) {
            const double t = offset + static_cast<double>(k) * h;
            if (t > kTMax) break;
            const double u = kHalfPi * std::sinh(t);
            const double e = std::exp(-2.0 * u);
            // 1 − tanh(u) and the weight sech²(u)·(π/2)cosh(t), both without cancellation.
            const double delta = 2.0 * e / (1.0 + e);
            const double w = kHalfPi * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
            if (w == 0.0) break;
            const double d = half * delta;  // distance of the node from the endpoint
            const double xr = b - d;
            const double xl = a + d;
            if (t == 0.0) {
                sum += w * f(0.5 * (a + b));
                ++res.evaluations;
                continue;
            }
            if (xr > a && xr < b) {
                sum += w * f(xr);
                ++res.evaluations;
            }
            if (xl > a && xl < b) {
                sum += w * f(xl);
                ++res.evaluations;
            }
        }
        return sum;
    };

    double h = 1.0;
    double sum = accumulate(h, 0.0, 1);
    double estimate = half * h * sum;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        sum += accumulate(2.0 * h, h, 1);  // new odd nodes only
        const double next = half * h * sum;
        res.error = std::abs(next - estimate);
        res.levels = level;
        estimate = next;
        if (!std::isfinite(estimate)) {
            throw ConvergenceError("tanh_sinh: non-finite integrand on [" + detail::fmt_real(a) +
                                   ", " + detail::fmt_real(b) + "]");
        }
        if (level >= 3 && res.error <= std::max(abs_tol, rel_tol * std::abs(estimate))) {
            res.value = estimate;
            return res;
        }
    }
    throw ConvergenceError("tanh_sinh: error estimate " + detail::fmt_real(res.error) +
                           " stalled above tolerance " + detail::fmt_real(abs_tol));
}

/// ∫ₐᵇ f for integrands with square-root zeros or inverse-square-root poles at
/// the endpoints. The substitution x = (a+b)/2 − (b−a)/2·cos φ turns both into
/// bounded behaviour; the φ-integral is then done by tanh-sinh.
template <class F>
double integrate_sqrt_singular(F&& f, double a, double b, double tol = kQuadratureTol) {
    if (a == b) return 0.0;
    if (!(a < b)) throw DomainError("integrate_sqrt_singular: require a < b");
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    // dx/dφ = half·sin φ = √((x − a)(b − x)) is taken from the rounded node x
    // itself, so f and the Jacobian always refer to the same point. Nodes that
    // round onto an endpoint are moved one ulp inside.
    auto g = [&](double phi) {
        double x = mid - half * std::cos(phi);
        if (x <= a) x = std::nextafter(a, b);
        if (x >= b) x = std::nextafter(b, a);
        return f(x) * std::sqrt((x - a) * (b - x));
    };
    return tanh_sinh(g, 0.0, std::numbers::pi, tol, 0.0, 14).value;
}

// ---------------------------------------------------------------------------
// Complete elliptic integrals, parameter convention (k plays the role of m).

/// Quadrature definitions; these are the reference values for the AGM path.
inline double ellip_K_quad(double k, double rel_tol = kSpecialFunctionRelTol) {
    if (!(k < 1.0)) throw DomainError("ellip_K: require k < 1, got " + detail::fmt_real(k));
    auto f = [k](double t) {
        const double s = std::sin(t);
        return 1.0 / std::sqrt(1.0 - k * s * s);
    };
    return tanh_sinh(f, 0.0, 0.5 * kPi, 0.0, 0.1 * rel_tol, 14).value;
}

inline double ellip_E_quad(double k, double rel_tol = kSpecialFunctionRelTol) {
    if (!(k <= 1.0)) throw DomainError("ellip_E: require k <= 1, got " + detail::fmt_real(k));
    auto f = [k](double t) {
        const double s = std::sin(t);
        return std::sqrt(std::max(0.0, 1.0 - k * s * s));
    };
    return tanh_sinh(f, 0.0, 0.5 * kPi, 0.0, 0.1 * rel_tol, 14).value;
}

inline double ellip_Pi_quad(double n, double k, double rel_tol = kSpecialFunctionRelTol) {
    if (!(n < 1.0)) throw DomainError("ellip_Pi: require n < 1, got " + detail::fmt_real(n));
    if (!(k < 1.0)) throw DomainError("ellip_Pi: require k < 1, got " + detail::fmt_real(k));
    auto f = [n, k](double t) {
        const double s2 = std::sin(t) * std::sin(t);
        return 1.0 / ((1.0 - n * s2) * std::sqrt(1.0 - k * s2));
    };
    return tanh_sinh(f, 0.0, 0.5 * kPi, 0.0, 0.1 * rel_tol, 14).value;
}

namespace detail {

struct AgmResult {
    double agm;
    double sum;  ///< Σ 2^{n−1} c_n² with c₀² = k
};

inline AgmResult agm(double k) {
    double a = 1.0;
    double b = std::sqrt(1.0 - k);
    double sum = 0.5 * k;
    double pow2 = 0.5;
    for (int i = 0; i < 64; ++i) {
        const double c = 0.5 * (a - b);
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
        pow2 *= 2.0;
        sum += pow2 * c * c;
        if (std::abs(c) <= 1e-17 * a) break;
    }
    return {a, sum};
}

}  // namespace detail

/// K(k) by the arithmetic-geometric mean; valid for every k < 1, negative included.
inline double ellip_K(double k) {
    if (!(k < 1.0)) throw DomainError("ellip_K: require k < 1, got " + detail::fmt_real(k));
    return 0.5 * kPi / detail::agm(k).agm;
}

inline double ellip_E(double k) {
    if (!(k <= 1.0)) throw DomainError("ellip_E: require k <= 1, got " + detail::fmt_real(k));
    if (k == 1.0) return 1.0;
    const auto r = detail::agm(k);
    return 0.5 * kPi / r.agm * (1.0 - r.sum);
}

/// K(k) − E(k) without cancellation for small |k| (equals K·Σ 2^{n−1}c_n²).
inline double ellip_K_minus_E(double k) {
    if (!(k < 1.0)) throw DomainError("ellip_K_minus_E: require k < 1, got " + detail::fmt_real(k));
    const auto r = detail::agm(k);
    return 0.5 * kPi / r.agm * r.sum;
}

/// Π(n, k) has no cheap AGM form for both signs of n; it always goes through quadrature.
inline double ellip_Pi(double n, double k) { return ellip_Pi_quad(n, k); }

// ---------------------------------------------------------------------------

enum class RootMethod { SecantBisection, Bisection };

/// Root of f on [lo, hi] given a sign change. Secant (regula falsi, Illinois
/// variant) steps are taken while they shrink the bracket fast enough,
/// bisection otherwise. Terminates when the bracket is narrower than tol.
template <class F>
double find_root(F&& f, double lo, double hi, double tol = kRootTol,
                 RootMethod method = RootMethod::SecantBisection, int max_iter = 400) {
    if (lo > hi) std::swap(lo, hi);
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw BracketError("find_root: no sign change on [" + detail::fmt_real(lo) + ", " +
                           detail::fmt_real(hi) + "]: f = " + detail::fmt_real(flo) + ", " +
                           detail::fmt_real(fhi));
    }
    int side = 0;  // which end was retained last time (Illinois bookkeeping)
    double width_before = hi - lo;
    for (int it = 0; it < max_iter && hi - lo > tol; ++it) {
        double x;
        const bool force_bisect = method == RootMethod::Bisection || (it % 3 == 2 && hi - lo > 0.5 * width_before);
        if (it % 3 == 2) width_before = hi - lo;
        if (force_bisect) {
            x = 0.5 * (lo + hi);
        } else {
            x = (lo * fhi - hi * flo) / (fhi - flo);
            // keep the step strictly inside so the bracket always shrinks
            const double guard = 0.25 * tol;
            x = std::clamp(x, lo + guard, hi - guard);
        }
        const double fx = f(x);
        if (fx == 0.0) return x;
        if ((fx > 0.0) == (flo > 0.0)) {
            lo = x;
            flo = fx;
            if (side == -1 && !force_bisect) fhi *= 0.5;
            side = -1;
        } else {
            hi = x;
            fhi = fx;
            if (side == 1 && !force_bisect) flo *= 0.5;
            side = 1;
        }
    }
    if (hi - lo > tol) {
        throw ConvergenceError("find_root: bracket width " + detail::fmt_real(hi - lo) +
                               " above tolerance after max_iter");
    }
    // flo/fhi may carry Illinois scaling; re-evaluate for the final interpolation.
    const double a = f(lo), b = f(hi);
    if (a == b) return 0.5 * (lo + hi);
    return std::clamp((lo * b - hi * a) / (b - a), lo, hi);
}

/// Golden-section minimization of a unimodal f on [lo, hi].
template <class F>
double minimize_golden(F&& f, double lo, double hi, double tol = 1e-10) {
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    while (hi - lo > tol) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    return f1 < f2 ? x1 : x2;
}

/// Chebyshev–Lobatto nodes on [−half_width, half_width], clustered at both
/// ends, exactly antisymmetric, always containing 0 (inserted when n is even).
inline std::vector<double> symmetric_lobatto_grid(std::size_t n, double half_width) {
    if (n < 2) throw DomainError("symmetric_lobatto_grid: need n >= 2");
    std::vector<double> nodes(n);
    for (std::size_t k = 0; k < n; ++k) {
        nodes[k] = -half_width * std::cos(kPi * static_cast<double>(k) / static_cast<double>(n - 1));
    }
    for (std::size_t k = 0; k < n / 2; ++k) nodes[n - 1 - k] = -nodes[k];
    nodes.front() = -half_width;
    nodes.back() = half_width;
    if (n % 2 == 1) {
        nodes[n / 2] = 0.0;
    } else {
        nodes.insert(nodes.begin() + static_cast<std::ptrdiff_t>(n / 2), 0.0);
    }
    return nodes;
}

}  // namespace revwidth
