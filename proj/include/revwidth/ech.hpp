#pragma once

// ECH index arithmetic for orbit sets in the unit cotangent bundle of a
// sphere (H₁ ≅ ℤ/2), ECH capacities of Zoll spheres, and the two spheroid
// capacities c₁ and c₃.

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "revwidth/errors.hpp"
#include "revwidth/numerics.hpp"
#include "revwidth/spheroid.hpp"

namespace revwidth::ech {

/// A simple Reeb orbit. sl, lk and CZ are caller-supplied integers.
struct OrbitDatum {
    std::string name;
    int sl_square = 0;          ///< transverse self-linking of the doubled orbit
    std::map<int, int> cz;      ///< iterate k ↦ CZ_τ(αᵏ)
    int homology_class = 0;     ///< 0 or 1 in H₁ ≅ ℤ/2
    double action = 0.0;
};

struct OrbitEntry {
    OrbitDatum orbit;
    int multiplicity = 1;
};

struct OrbitSet {
    std::vector<OrbitEntry> entries;

    int homology_class() const {
        int total = 0;
        for (const auto& e : entries) total += e.multiplicity * e.orbit.homology_class;
        return ((total % 2) + 2) % 2;
    }
};

/// Symmetric table of lk(αᵢ², αⱼ²).
class LinkingTable {
public:
    void set(const std::string& a, const std::string& b, int value) {
        table_[key(a, b)] = value;
    }
    bool contains(const std::string& a, const std::string& b) const {
        return table_.count(key(a, b)) != 0;
    }
    int at(const std::string& a, const std::string& b) const {
        auto it = table_.find(key(a, b));
        if (it == table_.end()) {
            throw std::out_of_range("LinkingTable: no entry for (" + a + ", " + b + ")");
        }
        return it->second;
    }

private:
    static std::pair<std::string, std::string> key(const std::string& a, const std::string& b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    }
    std::map<std::pair<std::string, std::string>, int> table_;
};

/// |α| = Σ (mᵢ²/4)sl(αᵢ²) + Σ_{i<j} (1/4)mᵢmⱼ lk(αᵢ², αⱼ²) + Σᵢ Σ_{k≤mᵢ} CZ_τ(αᵢᵏ),
/// each unordered pair counted once.
/// The quarter-integer sums are accumulated ×4 so integrality is checked exactly.
inline std::int64_t ech_index(const OrbitSet& s, const LinkingTable& lk) {
    std::set<std::string> names;
    for (const auto& e : s.entries) {
        if (e.multiplicity < 1) throw std::invalid_argument("ech_index: multiplicity must be >= 1");
        if (!names.insert(e.orbit.name).second) {
            throw std::invalid_argument("ech_index: orbit '" + e.orbit.name + "' listed twice");
        }
    }
    if (s.homology_class() != 0) throw HomologyError("ech_index: orbit set is not nullhomologous");

    std::int64_t quarter_sum = 0;
    std::int64_t cz_sum = 0;
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        const auto& ei = s.entries[i];
        const std::int64_t mi = ei.multiplicity;
        quarter_sum += mi * mi * ei.orbit.sl_square;
        for (std::size_t j = i + 1; j < s.entries.size(); ++j) {
            const auto& ej = s.entries[j];
            quarter_sum += mi * ej.multiplicity * lk.at(ei.orbit.name, ej.orbit.name);
        }
        for (int k = 1; k <= ei.multiplicity; ++k) {
            auto it = ei.orbit.cz.find(k);
            if (it == ei.orbit.cz.end()) {
                throw std::invalid_argument("ech_index: CZ of iterate " + std::to_string(k) +
                                            " of '" + ei.orbit.name + "' not supplied");
            }
            cz_sum += it->second;
        }
    }
    if (quarter_sum % 4 != 0) {
        throw IntegralityError("ech_index: non-integral grading (" + std::to_string(quarter_sum) +
                               "/4 from linking terms)");
    }
    return quarter_sum / 4 + cz_sum;
}

inline double total_action(const OrbitSet& s) {
    double total = 0.0;
    for (const auto& e : s.entries) total += e.multiplicity * e.orbit.action;
    return total;
}

/// CZ_τ of the equator of 𝓔(1,1,c) for c < 1/2: rotation number 1/c gives 2⌊1/c⌋ + 1.
inline int cz_equator(double c) {
    if (!(c > 0.0 && c < 0.5)) throw DomainError("cz_equator: require 0 < c < 1/2");
    const double r = 1.0 / c;
    if (std::abs(r - std::round(r)) <= 1e-12 * r) {
        throw DegenerateError("cz_equator: 1/c is an integer, the equator is resonant");
    }
    return 2 * static_cast<int>(std::floor(r)) + 1;
}

/// (c₀, …, c_{k_max}) of a Zoll sphere with simple geodesics of length ell:
/// the values ell·(m₁ + m₂) over m₁, m₂ ≥ 0 with m₁ + m₂ even, sorted with
/// multiplicity. The sum 2n occurs 2n + 1 times.
inline std::vector<double> zoll_capacities(double ell, std::size_t k_max) {
    if (!(ell > 0.0)) throw DomainError("zoll_capacities: require ell > 0");
    std::vector<double> out;
    out.reserve(k_max + 1);
    for (std::int64_t n = 0; out.size() <= k_max; ++n) {
        for (std::int64_t m1 = 0; m1 <= 2 * n && out.size() <= k_max; ++m1) {
            out.push_back(ell * static_cast<double>(2 * n));
        }
    }
    return out;
}

/// c₃ = 2w(c) for 0 < c < c₀ and c₁ = 4π for c ≥ 1; other (c, k) are not exposed.
inline double spheroid_capacity(double c, int k) {
    if (k == 3) {
        if (!(c > 0.0 && c < spheroid::c0())) {
            throw DomainError("spheroid_capacity: c3 known only for 0 < c < c0");
        }
        return 2.0 * spheroid::gromov_width(c);
    }
    if (k == 1) {
        if (!(c >= 1.0)) throw DomainError("spheroid_capacity: c1 known only for c >= 1");
        return 4.0 * kPi;
    }
    throw DomainError("spheroid_capacity: only k = 1 and k = 3 are available");
}

}  // namespace revwidth::ech
