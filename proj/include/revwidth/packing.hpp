#pragma once

// Weight sequences of weakly convex toric domains, the explicit packing
// B⁴(β) ⊔ ⨆ B⁴(wᵢ) ↪ B⁴(2β) for prolate spheroids, and a packing verifier.
//
// A ball B⁴(w) is represented by its moment image, the triangle
// T(w) = {x, y ≥ 0, x + y ≤ w}, placed by an integral unimodular map.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include "json.hpp"
#include "revwidth/action_profile.hpp"
#include "revwidth/errors.hpp"
#include "revwidth/parallel.hpp"
#include "revwidth/spheroid.hpp"

namespace revwidth {

struct WeightSequence {
    double head = 0.0;
    std::vector<double> tail;
    std::size_t depth = 0;
};

using IntMat2 = std::array<std::array<int, 2>, 2>;

/// image = linear · T(size) + offset
struct TrianglePlacement {
    double size = 0.0;
    IntMat2 linear{{{1, 0}, {0, 1}}};
    std::array<double, 2> offset{0.0, 0.0};

    std::array<std::array<double, 2>, 3> vertices() const {
        const auto& L = linear;
        return {{{offset[0], offset[1]},
                 {offset[0] + L[0][0] * size, offset[1] + L[1][0] * size},
                 {offset[0] + L[0][1] * size, offset[1] + L[1][1] * size}}};
    }
    int det() const { return linear[0][0] * linear[1][1] - linear[0][1] * linear[1][0]; }
};

struct Packing {
    double container = 0.0;
    std::vector<TrianglePlacement> pieces;
};

inline constexpr std::size_t kDefaultWeightDepth = 6;
inline constexpr double kPackingTol = 1e-9;

namespace detail {

struct Pt {
    double x, y;
};

/// orig = M·local + v, M integral with det ±1.
struct Chart {
    IntMat2 M{{{1, 0}, {0, 1}}};
    std::array<double, 2> v{0.0, 0.0};
};

inline IntMat2 mul(const IntMat2& A, const IntMat2& B) {
    IntMat2 C{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) C[i][j] = A[i][0] * B[0][j] + A[i][1] * B[1][j];
    return C;
}

inline IntMat2 inverse(const IntMat2& A) {
    const int d = A[0][0] * A[1][1] - A[0][1] * A[1][0];
    return {{{A[1][1] * d, -A[0][1] * d}, {-A[1][0] * d, A[0][0] * d}}};
}

/// Local coordinates change by local′ = C·local + d; returns the chart of the new frame.
inline Chart descend(const Chart& parent, const IntMat2& C, std::array<double, 2> d) {
    const IntMat2 Ci = inverse(C);
    Chart child;
    child.M = mul(parent.M, Ci);
    const double cx = Ci[0][0] * d[0] + Ci[0][1] * d[1];
    const double cy = Ci[1][0] * d[0] + Ci[1][1] * d[1];
    child.v = {parent.v[0] - (parent.M[0][0] * cx + parent.M[0][1] * cy),
               parent.v[1] - (parent.M[1][0] * cx + parent.M[1][1] * cy)};
    return child;
}

inline std::vector<Pt> apply(const std::vector<Pt>& pts, std::size_t from, std::size_t to,
                             const IntMat2& C, std::array<double, 2> d, double snap) {
    std::vector<Pt> out;
    out.reserve(to - from + 1);
    for (std::size_t i = from; i <= to; ++i) {
        double x = C[0][0] * pts[i].x + C[0][1] * pts[i].y + d[0];
        double y = C[1][0] * pts[i].x + C[1][1] * pts[i].y + d[1];
        if (std::abs(x) < snap) x = 0.0;
        if (std::abs(y) < snap) y = 0.0;
        out.push_back({x, y});
    }
    return out;
}

inline constexpr IntMat2 kToOmega1{{{0, 1}, {-1, -1}}};
inline constexpr IntMat2 kToOmega2{{{-1, -1}, {1, 0}}};
inline constexpr IntMat2 kToLeft{{{1, 0}, {1, 1}}};
inline constexpr IntMat2 kToRight{{{1, 1}, {0, 1}}};

}  // namespace detail

/// One inscribed triangle of the weight recursion, placed in the original
/// coordinates of Ω. `path` is "1" or "2" for the first triangle of Ω₁′ or
/// Ω₂′, extended by 'L' (y-axis side) or 'R' (x-axis side) per level.
struct WeightPiece {
    TrianglePlacement placement;
    std::string path;
    int side() const { return path.empty() ? 0 : path[0] - '0'; }
    std::size_t level() const { return path.size(); }
};

struct WeightDecomposition {
    double head = 0.0;
    std::vector<WeightPiece> pieces;  ///< non-increasing size, Ω₁ side first on ties
};

namespace detail {

/// Concave region under the polyline q (from (0, Y) to (X, 0)); appends its
/// inscribed triangle and recurses into the two leftover corners.
inline void peel_concave(const std::vector<Pt>& q, const Chart& chart, std::string path,
                         std::size_t level, std::size_t depth, double tol,
                         std::vector<WeightPiece>& out) {
    if (level > depth || q.size() < 2) return;
    double w = q[0].x + q[0].y;
    for (const auto& p : q) w = std::min(w, p.x + p.y);
    if (w <= tol) return;

    out.push_back({{w, chart.M, chart.v}, path});

    std::size_t k1 = q.size(), k2 = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i].x + q[i].y <= w + tol) {
            k1 = std::min(k1, i);
            k2 = i;
        }
    }
    const double Y = q.front().y, X = q.back().x;
    if (k1 > 0 && Y - w > tol) {
        const std::array<double, 2> d{0.0, -w};
        peel_concave(apply(q, 0, k1, kToLeft, d, tol), descend(chart, kToLeft, d), path + 'L',
                     level + 1, depth, tol, out);
    }
    if (k2 + 1 < q.size() && X - w > tol) {
        const std::array<double, 2> d{-w, 0.0};
        peel_concave(apply(q, k2, q.size() - 1, kToRight, d, tol), descend(chart, kToRight, d),
                     path + 'R', level + 1, depth, tol, out);
    }
}

}  // namespace detail

/// Full weight recursion with placements. The boundary polyline of Ω is taken
/// as sampled; w₀ is the largest x + y over the samples.
inline WeightDecomposition weight_decomposition(const ToricProfile& t,
                                                std::size_t depth = kDefaultWeightDepth) {
    if (classify(t) != DomainShape::WeaklyConvex) {
        throw ClassificationError("weight_sequence: domain '" + t.label + "' is not weakly convex");
    }
    std::vector<detail::Pt> P;
    P.reserve(t.samples.size());
    for (const auto& s : t.samples) P.push_back({s.rho1, s.rho2});

    WeightDecomposition out;
    double w0 = 0.0;
    for (const auto& p : P) w0 = std::max(w0, p.x + p.y);
    out.head = w0;
    const double tol = kPackingTol * std::max(1.0, w0);

    std::size_t i1 = P.size(), i2 = 0;
    for (std::size_t i = 0; i < P.size(); ++i) {
        if (P[i].x + P[i].y >= w0 - tol) {
            i1 = std::min(i1, i);
            i2 = i;
        }
    }
    if (depth >= 1) {
        const detail::Chart root;
        if (i1 > 0) {
            const std::array<double, 2> d{0.0, w0};
            detail::peel_concave(detail::apply(P, 0, i1, detail::kToOmega1, d, tol),
                                 detail::descend(root, detail::kToOmega1, d), "1", 1, depth, tol,
                                 out.pieces);
        }
        if (i2 + 1 < P.size()) {
            const std::array<double, 2> d{w0, 0.0};
            detail::peel_concave(detail::apply(P, i2, P.size() - 1, detail::kToOmega2, d, tol),
                                 detail::descend(root, detail::kToOmega2, d), "2", 1, depth, tol,
                                 out.pieces);
        }
    }
    // Stable insertion sort with a tie band; ties keep Ω₁ before Ω₂, then level order.
    auto before = [tol](const WeightPiece& a, const WeightPiece& b) {
        const double sa = a.placement.size, sb = b.placement.size;
        if (sa > sb + tol) return true;
        if (sb > sa + tol) return false;
        if (a.level() != b.level()) return a.level() < b.level();
        return a.side() < b.side();
    };
    auto& v = out.pieces;
    for (std::size_t i = 1; i < v.size(); ++i) {
        for (std::size_t k = i; k > 0 && before(v[k], v[k - 1]); --k) std::swap(v[k], v[k - 1]);
    }
    return out;
}

inline WeightSequence weight_sequence(const ToricProfile& t, std::size_t depth = kDefaultWeightDepth) {
    const auto dec = weight_decomposition(t, depth);
    WeightSequence ws;
    ws.head = dec.head;
    ws.depth = depth;
    for (const auto& p : dec.pieces) ws.tail.push_back(p.placement.size);
    return ws;
}

// ---------------------------------------------------------------------------

/// Packing of B⁴(β(c)) and the weight balls of Ω_c into B⁴(2β(c)), 1 < c ≤ c₀.
/// The ball sits at (0,0), (β,0), (β,β); the first Ω₁-side triangle of size
/// β − 2π moves to (4π−β, 2π), (2π, 2π), (β, β); the rest of the Ω₁ side is
/// carried into (0,0), (0,2π), (β−2π, 2π).
inline Packing build_prolate_packing(double c, std::size_t samples = 1025,
                                     std::size_t depth = kDefaultWeightDepth) {
    if (!(c > 1.0 && c <= spheroid::c0())) {
        throw DomainError("build_prolate_packing: require 1 < c <= c0, got c = " +
                          revwidth::detail::fmt_real(c));
    }
    const double beta = spheroid::beta(c);
    const auto dec = weight_decomposition(spheroid_boundary_curve(c, samples), depth);

    Packing pk;
    pk.container = dec.head;
    pk.pieces.push_back({beta, {{{1, 1}, {0, 1}}}, {0.0, 0.0}});

    const IntMat2 L{{{-1, 0}, {1, -1}}};
    const std::array<double, 2> Q{beta, beta - kTwoPi};
    for (const auto& wp : dec.pieces) {
        TrianglePlacement tp = wp.placement;
        if (wp.path == "1L") {
            tp.linear = {{{-1, 1}, {0, 1}}};
            tp.offset = {kTwoPi, kTwoPi};
        } else if (wp.side() == 1 && wp.level() >= 2) {
            tp.linear = detail::mul(L, wp.placement.linear);
            const double dx = wp.placement.offset[0] - Q[0];
            const double dy = wp.placement.offset[1] - Q[1];
            tp.offset = {L[0][0] * dx + L[0][1] * dy, L[1][0] * dx + L[1][1] * dy + kTwoPi};
        }
        pk.pieces.push_back(tp);
    }
    return pk;
}

struct PackingReport {
    bool ok = true;
    std::vector<std::string> violations;
};

namespace detail {

/// True when the triangles overlap in more than a tol-band (separating axis test).
inline bool interiors_overlap(const std::array<std::array<double, 2>, 3>& A,
                              const std::array<std::array<double, 2>, 3>& B, double tol) {
    auto separated_by_edges_of = [tol](const auto& T, const auto& A_, const auto& B_) {
        for (int e = 0; e < 3; ++e) {
            const auto& p = T[e];
            const auto& q = T[(e + 1) % 3];
            const double nx = q[1] - p[1], ny = p[0] - q[0];
            const double len = std::hypot(nx, ny);
            if (len == 0.0) continue;
            double amin = INFINITY, amax = -INFINITY, bmin = INFINITY, bmax = -INFINITY;
            for (const auto& v : A_) {
                const double s = (v[0] * nx + v[1] * ny) / len;
                amin = std::min(amin, s);
                amax = std::max(amax, s);
            }
            for (const auto& v : B_) {
                const double s = (v[0] * nx + v[1] * ny) / len;
                bmin = std::min(bmin, s);
                bmax = std::max(bmax, s);
            }
            if (amax <= bmin + tol || bmax <= amin + tol) return true;
        }
        return false;
    };
    return !separated_by_edges_of(A, A, B) && !separated_by_edges_of(B, A, B);
}

inline std::string describe(std::size_t i, const TrianglePlacement& t) {
    const auto v = t.vertices();
    std::string s = "piece " + std::to_string(i) + " (size " + revwidth::detail::fmt_real(t.size) + ", vertices";
    for (const auto& p : v) s += " (" + revwidth::detail::fmt_real(p[0]) + ", " + revwidth::detail::fmt_real(p[1]) + ")";
    return s + ")";
}

}  // namespace detail

/// Checks every piece of p lies in T(container), interiors are pairwise
/// disjoint, placements are unimodular, and a piece of size `ball` has a
/// vertex at the origin. Shared edges within a 1e−9 band count as touching.
inline PackingReport verify_packing(const Packing& p, double ball) {
    PackingReport r;
    const double tol = kPackingTol * std::max(1.0, p.container);
    auto fail = [&r](std::string msg) {
        r.ok = false;
        r.violations.push_back(std::move(msg));
    };
    const std::size_t n = p.pieces.size();
    std::vector<std::array<std::array<double, 2>, 3>> verts(n);
    bool ball_found = !(ball > 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& t = p.pieces[i];
        verts[i] = t.vertices();
        const int d = t.det();
        if (d != 1 && d != -1) {
            fail(detail::describe(i, t) + ": linear part has determinant " + std::to_string(d));
        }
        if (!(t.size >= 0.0)) fail(detail::describe(i, t) + ": negative size");
        for (const auto& v : verts[i]) {
            if (v[0] < -tol || v[1] < -tol || v[0] + v[1] > p.container + tol) {
                fail(detail::describe(i, t) + ": not contained in T(" +
                     revwidth::detail::fmt_real(p.container) + ")");
                break;
            }
        }
        if (!ball_found && std::abs(t.size - ball) <= tol) {
            for (const auto& v : verts[i]) {
                if (std::abs(v[0]) <= tol && std::abs(v[1]) <= tol) ball_found = true;
            }
        }
    }
    if (!ball_found) {
        fail("ball T(" + revwidth::detail::fmt_real(ball) + ") with a vertex at the origin is missing");
    }

    std::mutex m;
    parallel_for(n, [&](std::size_t i) {
        if (p.pieces[i].size <= tol) return;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (p.pieces[j].size <= tol) continue;
            if (detail::interiors_overlap(verts[i], verts[j], tol)) {
                std::lock_guard lock(m);
                fail("pieces " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
            }
        }
    });
    // parallel order is not deterministic; report in a fixed order
    std::sort(r.violations.begin(), r.violations.end());
    return r;
}

struct EmbeddingVerdict {
    double width_lower_bound = 0.0;
    std::string method;
};

/// Largest ball shown to embed in D*𝓔(1,1,c) by the constructions available
/// here: an inscribed triangle (c ≤ 1), the weight-sequence packing
/// (1 < c ≤ c₀), and the inclusion Ω_{c₀} ⊂ Ω_c (c > c₀).
inline EmbeddingVerdict ball_embedding_verdict(double c) {
    if (!(c > 0.0)) throw DomainError("ball_embedding_verdict: require c > 0");
    if (c <= 1.0) {
        return {max_inscribed_triangle(spheroid_boundary_curve(c, 1025)), "triangle"};
    }
    const double c0 = spheroid::c0();
    if (c <= c0) {
        const double beta = spheroid::beta(c);
        const auto rep = verify_packing(build_prolate_packing(c), beta);
        if (!rep.ok) {
            throw InconsistencyError("ball_embedding_verdict: packing for c = " +
                                     revwidth::detail::fmt_real(c) + " failed: " + rep.violations.front());
        }
        return {beta, "weight-sequence packing"};
    }
    // g_c ≥ g_{c₀} on [0, 1] gives Ω_{c₀} ⊂ Ω_c
    const auto grid = symmetric_lobatto_grid(65, 1.0);
    for (double j : grid) {
        if (j < 0.0) continue;
        if (spheroid::g(c, j) < spheroid::g(c0, j) - 1e-12) {
            throw InconsistencyError("ball_embedding_verdict: g_c < g_c0 at j = " +
                                     revwidth::detail::fmt_real(j));
        }
    }
    return {4.0 * kPi, "inclusion of Omega_c0"};
}

// ---------------------------------------------------------------------------
// JSON: {container, pieces: [{size, linear: [[..],[..]], offset: [..]}]}

inline void to_json(nlohmann::json& j, const TrianglePlacement& t) {
    j = nlohmann::json{{"size", t.size},
                       {"linear", {{t.linear[0][0], t.linear[0][1]}, {t.linear[1][0], t.linear[1][1]}}},
                       {"offset", {t.offset[0], t.offset[1]}}};
}

inline void from_json(const nlohmann::json& j, TrianglePlacement& t) {
    t.size = j.at("size").get<double>();
    const auto& L = j.at("linear");
    for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) t.linear[r][s] = L.at(r).at(s).get<int>();
    t.offset = {j.at("offset").at(0).get<double>(), j.at("offset").at(1).get<double>()};
}

inline void to_json(nlohmann::json& j, const Packing& p) {
    j = nlohmann::json{{"container", p.container}, {"pieces", p.pieces}};
}

inline void from_json(const nlohmann::json& j, Packing& p) {
    p.container = j.at("container").get<double>();
    p.pieces = j.at("pieces").get<std::vector<TrianglePlacement>>();
}

}  // namespace revwidth
