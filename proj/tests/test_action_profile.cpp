#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "revwidth/action_profile.hpp"
#include "revwidth/geodesic.hpp"
#include "revwidth/spheroid.hpp"

using namespace revwidth;

TEST(ActionI2, Examples) {
    for (double c : {0.4, 1.0, 2.0}) {
        const auto p = spheroid_profile(c);
        EXPECT_NEAR(action_I2(p, 1.0, 0.0), spheroid::beta(c), 1e-10) << c;
        EXPECT_EQ(action_I2(p, 1.0, 1.0), 0.0);
    }
    EXPECT_NEAR(action_I2(round_sphere(), 1.0, 0.5), kPi, 1e-10);
}

TEST(ActionI2, SpheroidMatchesClosedForm) {
    for (double c : {0.3, 0.8, 1.7}) {
        const auto p = spheroid_profile(c);
        for (double j : {0.1, 0.4, 0.9, 0.999}) {
            EXPECT_NEAR(action_I2(p, 1.0, j), spheroid::g(c, j), 1e-10) << c << " " << j;
            EXPECT_EQ(action_I2(p, 1.0, -j), action_I2(p, 1.0, j));
        }
    }
}

TEST(ActionI2, HomogeneousInEnergy) {
    // I₂(h, j) = √h · I₂(1, j/√h)
    const auto p = egg_profile(0.2);
    const double h = 0.49;
    for (double j : {0.1, 0.4}) {
        EXPECT_NEAR(action_I2(p, h, j), std::sqrt(h) * action_I2(p, 1.0, j / std::sqrt(h)), 1e-10);
    }
}

TEST(ActionI2, DomainErrors) {
    const auto p = spheroid_profile(1.3);
    EXPECT_THROW(action_I2(p, 1.0, 1.2), DomainError);
    EXPECT_THROW(action_I2(p, 0.0, 0.1), DomainError);
    EXPECT_THROW(action_I2(p, 1.1, 0.1), DomainError);
}

TEST(ThetaCorrection, Examples) {
    EXPECT_DOUBLE_EQ(theta_correction(2, 0.3), 0.6 * kPi);
    EXPECT_EQ(theta_correction(1, 0.3), 0.0);
    EXPECT_DOUBLE_EQ(theta_correction(1, -0.3), 0.6 * kPi);
    EXPECT_EQ(theta_correction(2, -0.3), 0.0);
    EXPECT_EQ(theta_correction(1, 0.0), 0.0);
    EXPECT_EQ(theta_correction(2, 0.0), 0.0);
    EXPECT_THROW(theta_correction(3, 0.1), DomainError);
}

TEST(BoundaryCurve, RoundSphereIsSquare) {
    const auto t = boundary_curve(round_sphere(), 128);
    for (const auto& s : t.samples) {
        if (s.j >= 0) {
            EXPECT_NEAR(s.rho1, kTwoPi * (1 - s.j), 1e-10);
            EXPECT_NEAR(s.rho2, kTwoPi, 1e-10);
        } else {
            EXPECT_NEAR(s.rho1, kTwoPi, 1e-10);
            EXPECT_NEAR(s.rho2, kTwoPi * (1 + s.j), 1e-10);
        }
    }
}

TEST(BoundaryCurve, EndpointsAndCorner) {
    for (double c : {0.4, 1.0, 2.2}) {
        const auto t = boundary_curve(spheroid_profile(c), 64);
        EXPECT_EQ(t.samples.front().j, -1.0);
        EXPECT_EQ(t.samples.front().rho2, 0.0);
        EXPECT_DOUBLE_EQ(t.samples.front().rho1, kTwoPi);
        EXPECT_EQ(t.samples.back().rho1, 0.0);
        EXPECT_DOUBLE_EQ(t.samples.back().rho2, kTwoPi);
        const auto& mid = t.samples[t.samples.size() / 2];
        EXPECT_EQ(mid.j, 0.0);
        EXPECT_NEAR(mid.rho1, spheroid::beta(c), 1e-10);
        EXPECT_NEAR(mid.rho2, spheroid::beta(c), 1e-10);
        EXPECT_DOUBLE_EQ(t.equator_length, kTwoPi);
    }
}

TEST(BoundaryCurve, InvariantsOnEgg) {
    const auto p = egg_profile(0.25);
    const auto t = boundary_curve(p, 96);
    const std::size_t n = t.samples.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& s = t.samples[i];
        const auto& m = t.samples[n - 1 - i];
        EXPECT_EQ(s.j, -m.j);
        EXPECT_LT(std::abs(s.rho1 - m.rho2), 1e-9);
        if (s.j >= 0) {
            EXPECT_NEAR(s.rho2 - s.rho1, kTwoPi * s.j, 1e-12);
        }
    }
    EXPECT_NEAR(t.equator_length, kTwoPi * p.equator_radius(), 1e-15);
    EXPECT_NEAR(t.meridian_length, meridian_length(p), 1e-9);
    EXPECT_NEAR(t.samples.back().rho2, t.equator_length, 1e-12);
}

TEST(BoundaryCurve, QuadratureMatchesClosedForm) {
    for (double c : {0.35, 0.9, 1.6, 2.8}) {
        const auto q = boundary_curve(spheroid_profile(c), 80);
        const auto f = spheroid_boundary_curve(c, 80);
        ASSERT_EQ(q.samples.size(), f.samples.size());
        for (std::size_t i = 0; i < q.samples.size(); ++i) {
            const auto [x, y] = spheroid::rho(c, q.samples[i].j);
            EXPECT_NEAR(q.samples[i].rho1, x, 1e-8);
            EXPECT_NEAR(q.samples[i].rho2, y, 1e-8);
            EXPECT_NEAR(f.samples[i].rho1, x, 1e-13);
        }
    }
}

TEST(BoundaryCurve, TooFewSamples) {
    EXPECT_THROW(boundary_curve(round_sphere(), 8), DomainError);
    EXPECT_THROW(spheroid_boundary_curve(1.0, 15), DomainError);
}

TEST(ZollDefect, Examples) {
    EXPECT_LT(zoll_defect(boundary_curve(round_sphere(), 64)), 1e-9);
    EXPECT_GT(zoll_defect(spheroid_boundary_curve(2.0, 64)), 1e-3);
    EXPECT_GT(zoll_defect(spheroid_boundary_curve(0.5, 64)), 1e-3);
}

TEST(Classify, Examples) {
    EXPECT_EQ(classify(spheroid_boundary_curve(0.5, 257)), DomainShape::Neither);
    EXPECT_EQ(classify(spheroid_boundary_curve(1.5, 257)), DomainShape::WeaklyConvex);
    EXPECT_EQ(classify(spheroid_boundary_curve(1.0, 257)), DomainShape::WeaklyConvex);
    EXPECT_EQ(classify(boundary_curve(spheroid_profile(1.5), 129)), DomainShape::WeaklyConvex);
    EXPECT_EQ(classify(boundary_curve(spheroid_profile(0.5), 129)), DomainShape::Neither);
}

TEST(Classify, ConcaveAndMixedCustomDomains) {
    // quarter-disk complement: boundary bulges toward the origin
    std::vector<ToricSample> concave;
    for (int i = 0; i <= 32; ++i) {
        const double t = 0.5 * kPi * i / 32.0;
        concave.push_back({static_cast<double>(i), 1.0 - std::sin(t), 1.0 - std::cos(t)});
    }
    EXPECT_EQ(classify(custom_profile(concave, "concave")), DomainShape::Concave);

    // ellipse quarter: convex
    std::vector<ToricSample> convex;
    for (int i = 0; i <= 32; ++i) {
        const double t = 0.5 * kPi * i / 32.0;
        convex.push_back({static_cast<double>(i), 2.0 * std::cos(t), std::sin(t)});
    }
    EXPECT_EQ(classify(custom_profile(convex, "ellipse")), DomainShape::WeaklyConvex);

    // S-shaped branch: curvature changes sign inside one branch
    std::vector<ToricSample> mixed;
    for (int i = 0; i <= 40; ++i) {
        const double x = 1.0 - i / 40.0;
        mixed.push_back({0.5 + i / 80.0, x, 0.5 + 0.2 * std::sin(2 * kPi * x)});
    }
    EXPECT_THROW(classify(custom_profile(mixed, "s-curve")), IndeterminateError);
}

TEST(MaxInscribedTriangle, Examples) {
    for (double c : {0.1, 0.3, 0.45}) {
        EXPECT_NEAR(max_inscribed_triangle(spheroid_boundary_curve(c, 257)), spheroid::alpha(c), 1e-10);
    }
    for (double c : {0.5, 0.7, 1.0}) {
        EXPECT_NEAR(max_inscribed_triangle(spheroid_boundary_curve(c, 257)), kTwoPi, 1e-10);
    }
    EXPECT_NEAR(max_inscribed_triangle(boundary_curve(round_sphere(), 64)), kTwoPi, 1e-10);
    // refinement through action_I2 on the quadrature path
    EXPECT_NEAR(max_inscribed_triangle(boundary_curve(spheroid_profile(0.3), 65)), spheroid::alpha(0.3), 1e-8);
}

TEST(MaxInscribedTriangle, BoundedByEquatorAndAtLeastShorterLength) {
    for (double c : {0.2, 0.4, 0.6, 1.0, 1.5, 3.0}) {
        const auto t = spheroid_boundary_curve(c, 257);
        const double m = max_inscribed_triangle(t);
        EXPECT_LE(m, t.equator_length + 1e-12) << c;
        EXPECT_GE(m, std::min(t.equator_length, t.meridian_length) - 1e-12) << c;
    }
}

TEST(ProfileArea, Examples) {
    EXPECT_NEAR(profile_area(boundary_curve(round_sphere(), 64)), 4 * kPi * kPi, 1e-9);
    for (double c : {0.5, 2.0}) {
        const double exact = kPi * spheroid_surface_area(c);
        EXPECT_NEAR(profile_area(spheroid_boundary_curve(c, 4096)), exact, 1e-6 * exact);
        const double coarse = profile_area(spheroid_boundary_curve(c, 16));
        EXPECT_NEAR(coarse, exact, 5e-2 * exact);
        // chords lie inside a convex domain and outside a concave branch
        if (c > 1.0) {
            EXPECT_LT(coarse, exact);
        } else {
            EXPECT_GT(coarse, exact);
        }
    }
}

TEST(SurfaceArea, RoundAndLimits) {
    EXPECT_DOUBLE_EQ(spheroid_surface_area(1.0), 4 * kPi);
    EXPECT_NEAR(spheroid_surface_area(1.0 + 1e-7), 4 * kPi, 1e-5);
    EXPECT_NEAR(spheroid_surface_area(1.0 - 1e-7), 4 * kPi, 1e-5);
    EXPECT_NEAR(spheroid_surface_area(1e-6), kTwoPi, 1e-4);  // flat disk, two sides
}

TEST(ToricCsv, HeaderAndRows) {
    std::ostringstream os;
    write_csv(os, spheroid_boundary_curve(1.0, 16));
    const std::string s = os.str();
    EXPECT_EQ(s.rfind("j,rho1,rho2\n", 0), 0u);
    EXPECT_NE(s.find("\n-1,6.28318530718,0\n"), std::string::npos);
    EXPECT_NE(s.find("\n0,6.28318530718,6.28318530718\n"), std::string::npos);
}
