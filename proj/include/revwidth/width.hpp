#pragma once

#include <optional>

#include "revwidth/ech.hpp"
#include "revwidth/spheroid.hpp"

namespace revwidth {

/// Everything known about D*𝓔(1,1,c) at one value of c.
struct WidthReport {
    double c = 0.0;
    spheroid::Regime regime = spheroid::Regime::Middle;
    std::optional<double> j0;     ///< present iff regime is oblate_steep
    std::optional<double> alpha;  ///< present iff regime is oblate_steep
    double beta = 0.0;
    double width = 0.0;
    std::optional<double> c1;     ///< proven for c >= 1
    std::optional<double> c3;     ///< proven for c < c0
};

inline WidthReport width(double c) {
    if (!(c > 0.0)) throw DomainError("width: require c > 0");
    WidthReport r;
    r.c = c;
    r.regime = spheroid::regime(c);
    if (r.regime == spheroid::Regime::OblateSteep) {
        r.j0 = spheroid::j0(c);
        r.alpha = 8.0 * c * ellip_E(spheroid::k_mod(c, *r.j0));
    }
    r.beta = spheroid::beta(c);
    switch (r.regime) {
        case spheroid::Regime::OblateSteep: r.width = *r.alpha; break;
        case spheroid::Regime::Middle: r.width = kTwoPi; break;
        case spheroid::Regime::Prolate: r.width = r.beta; break;
        case spheroid::Regime::ProlateCapped: r.width = 4.0 * kPi; break;
    }
    if (c >= 1.0) r.c1 = ech::spheroid_capacity(c, 1);
    if (c < spheroid::c0()) r.c3 = ech::spheroid_capacity(c, 3);
    return r;
}

}  // namespace revwidth
