#pragma once

// Command-line front end. run() takes the arguments after the program name
// and writes to the given streams, so it can be driven from tests.
//
// Exit codes: 0 success, 2 usage or domain error, 3 numerical failure.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "revwidth/action_profile.hpp"
#include "revwidth/ech.hpp"
#include "revwidth/errors.hpp"
#include "revwidth/geodesic.hpp"
#include "revwidth/packing.hpp"
#include "revwidth/parallel.hpp"
#include "revwidth/spheroid.hpp"
#include "revwidth/surface.hpp"
#include "revwidth/width.hpp"

namespace revwidth::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// x rounded to 12 significant digits.
inline double sig12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

inline std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

inline nlohmann::json num(double x) {
    return std::isfinite(x) ? nlohmann::json(sig12(x)) : nlohmann::json(nullptr);
}

inline nlohmann::json num(const std::optional<double>& x) {
    return x ? num(*x) : nlohmann::json(nullptr);
}

inline std::string cell(const std::optional<double>& x) { return x ? fmt12(*x) : std::string(); }

inline nlohmann::json to_json(const WidthReport& r) {
    return {{"c", num(r.c)},
            {"regime", std::string(spheroid::to_string(r.regime))},
            {"j0", num(r.j0)},
            {"alpha", num(r.alpha)},
            {"beta", num(r.beta)},
            {"width", num(r.width)},
            {"c1", num(r.c1)},
            {"c3", num(r.c3)}};
}

struct Options {
    double c = std::numeric_limits<double>::quiet_NaN();
    double c_min = std::numeric_limits<double>::quiet_NaN();
    double c_max = std::numeric_limits<double>::quiet_NaN();
    std::size_t n = 100;
    std::size_t samples = 257;
    std::size_t depth = kDefaultWeightDepth;
    std::string profile;
    double eps = 0.2;
    std::string format;
    std::string out_path;
    double tol = kQuadratureTol;
    // capacities
    double ell = std::numeric_limits<double>::quiet_NaN();
    std::size_t k_max = 9;
    // geodesic
    std::string mode = "flow";
    double j = std::numeric_limits<double>::quiet_NaN();
    double t_max = 10.0;
    double dt = 1e-3;
    std::size_t every = 100;
};

namespace detail {

inline void require_c(const Options& o) {
    if (!(o.c > 0.0) || !std::isfinite(o.c)) throw UsageError("--c must be a positive real");
}

/// Surface for --profile (quadrature path) or the spheroid of --c.
inline SurfaceProfile surface_for(const Options& o) {
    if (o.profile.empty() || o.profile == "spheroid") {
        require_c(o);
        return spheroid_profile(o.c);
    }
    if (o.profile == "round") return round_sphere();
    if (o.profile == "egg") return egg_profile(o.eps);
    throw UsageError("unknown profile '" + o.profile + "' (expected spheroid, round or egg)");
}

/// Closed form for plain --c, quadrature when --profile is given.
inline ToricProfile toric_for(const Options& o) {
    if (o.samples < 16) throw UsageError("--samples must be at least 16");
    if (o.profile.empty()) {
        require_c(o);
        return spheroid_boundary_curve(o.c, o.samples);
    }
    return boundary_curve(surface_for(o), o.samples, o.tol);
}

inline std::string csv_or_json(const Options& o, const char* fallback) {
    const std::string f = o.format.empty() ? fallback : o.format;
    if (f != "csv" && f != "json") throw UsageError("--format must be csv or json");
    return f;
}

inline void run_width(const Options& o, std::ostream& out) {
    require_c(o);
    const auto fmt = csv_or_json(o, "json");
    const auto r = width(o.c);
    if (fmt == "json") {
        out << to_json(r).dump(2) << "\n";
    } else {
        out << "c,width,alpha,beta,c1,c3\n"
            << fmt12(r.c) << "," << fmt12(r.width) << "," << cell(r.alpha) << "," << fmt12(r.beta)
            << "," << cell(r.c1) << "," << cell(r.c3) << "\n";
    }
}

inline void run_sweep(const Options& o, std::ostream& out) {
    if (!(o.c_min > 0.0 && o.c_min < o.c_max) || !std::isfinite(o.c_max)) {
        throw UsageError("sweep needs 0 < --c-min < --c-max");
    }
    if (o.n < 2) throw UsageError("sweep needs --n >= 2");
    const auto fmt = csv_or_json(o, "csv");
    std::vector<WidthReport> rows(o.n);
    parallel_for(o.n, [&](std::size_t i) {
        const double t = static_cast<double>(i) / static_cast<double>(o.n - 1);
        const double c = i + 1 == o.n ? o.c_max : o.c_min + t * (o.c_max - o.c_min);
        rows[i] = width(c);
    });
    if (fmt == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        out << arr.dump(2) << "\n";
        return;
    }
    out << "c,width,alpha,beta,c1,c3\n";
    for (const auto& r : rows) {
        out << fmt12(r.c) << "," << fmt12(r.width) << "," << cell(r.alpha) << "," << fmt12(r.beta)
            << "," << cell(r.c1) << "," << cell(r.c3) << "\n";
    }
}

inline void run_profile(const Options& o, std::ostream& out) {
    const auto fmt = csv_or_json(o, "csv");
    const auto t = toric_for(o);
    if (fmt == "csv") {
        write_csv(out, t);
        return;
    }
    nlohmann::json s = nlohmann::json::array();
    for (const auto& p : t.samples) s.push_back({num(p.j), num(p.rho1), num(p.rho2)});
    out << nlohmann::json{{"label", t.label},
                          {"equator_length", num(t.equator_length)},
                          {"meridian_length", num(t.meridian_length)},
                          {"samples", s}}
               .dump(2)
        << "\n";
}

inline void run_capacities(const Options& o, std::ostream& out) {
    const auto fmt = csv_or_json(o, "json");
    if (!std::isnan(o.ell)) {
        if (!(o.ell > 0.0)) throw UsageError("--ell must be positive");
        const auto caps = ech::zoll_capacities(o.ell, o.k_max);
        if (fmt == "csv") {
            out << "k,capacity\n";
            for (std::size_t k = 0; k < caps.size(); ++k) out << k << "," << fmt12(caps[k]) << "\n";
        } else {
            nlohmann::json arr = nlohmann::json::array();
            for (double v : caps) arr.push_back(num(v));
            out << nlohmann::json{{"ell", num(o.ell)}, {"capacities", arr}}.dump(2) << "\n";
        }
        return;
    }
    require_c(o);
    const auto r = width(o.c);
    if (fmt == "csv") {
        out << "c,c1,c3\n" << fmt12(o.c) << "," << cell(r.c1) << "," << cell(r.c3) << "\n";
    } else {
        out << nlohmann::json{{"c", num(o.c)}, {"c1", num(r.c1)}, {"c3", num(r.c3)}}.dump(2) << "\n";
    }
}

inline void run_weights(const Options& o, std::ostream& out) {
    const auto fmt = csv_or_json(o, "json");
    const auto ws = weight_sequence(toric_for(o), o.depth);
    if (fmt == "csv") {
        out << "index,weight\n0," << fmt12(ws.head) << "\n";
        for (std::size_t i = 0; i < ws.tail.size(); ++i) out << i + 1 << "," << fmt12(ws.tail[i]) << "\n";
        return;
    }
    nlohmann::json tail = nlohmann::json::array();
    for (double w : ws.tail) tail.push_back(num(w));
    out << nlohmann::json{{"head", num(ws.head)}, {"tail", tail}, {"depth", ws.depth}}.dump(2) << "\n";
}

inline void run_packing(const Options& o, std::ostream& out) {
    require_c(o);
    const auto fmt = csv_or_json(o, "json");
    if (fmt != "json") throw UsageError("packing output is json only");
    const auto pk = build_prolate_packing(o.c);
    const double ball = spheroid::beta(o.c);
    const auto rep = verify_packing(pk, ball);
    nlohmann::json pieces = nlohmann::json::array();
    for (const auto& t : pk.pieces) {
        pieces.push_back({{"size", num(t.size)},
                          {"linear", {{t.linear[0][0], t.linear[0][1]}, {t.linear[1][0], t.linear[1][1]}}},
                          {"offset", {num(t.offset[0]), num(t.offset[1])}}});
    }
    out << nlohmann::json{{"container", num(pk.container)},
                          {"ball", num(ball)},
                          {"pieces", pieces},
                          {"ok", rep.ok},
                          {"violations", rep.violations}}
               .dump(2)
        << "\n";
}

inline void run_geodesic(const Options& o, std::ostream& out) {
    if (o.mode == "alpha") {
        require_c(o);
        const auto g = closed_geodesic_alpha(o.c);
        out << nlohmann::json{{"c", num(o.c)},
                              {"length", num(g.length)},
                              {"equator_crossings", g.equator_crossings},
                              {"closure_gap", num(g.closure_gap)}}
                   .dump(2)
            << "\n";
        return;
    }
    const auto p = surface_for(o);
    if (o.mode == "meridian") {
        out << nlohmann::json{{"label", p.label()}, {"meridian_length", num(meridian_length(p, o.tol))}}.dump(2)
            << "\n";
        return;
    }
    if (o.mode == "return") {
        if (std::isnan(o.j)) throw UsageError("--j is required for mode return");
        out << nlohmann::json{{"label", p.label()}, {"j", num(o.j)},
                              {"first_return_angle", num(first_return_angle(p, o.j, o.tol))}}
                   .dump(2)
            << "\n";
        return;
    }
    if (o.mode != "flow") throw UsageError("--mode must be flow, meridian, alpha or return");
    if (std::isnan(o.j)) throw UsageError("--j is required for mode flow");
    if (!(o.dt > 0.0 && o.t_max > 0.0)) throw UsageError("--dt and --t-max must be positive");
    const auto tp = turning_points(p, 1.0, o.j);
    const double z = std::abs(o.j) >= p.equator_radius() ? p.z0() : tp.z_plus;
    const auto tr = flow(p, PhaseState{z, 0.0, 0.0, o.j}, o.t_max, o.dt, o.every);
    write_csv(out, p, tr);
}

inline void run_classify(const Options& o, std::ostream& out) {
    const auto fmt = csv_or_json(o, "json");
    const auto t = toric_for(o);
    const auto cls = classify(t);
    if (fmt == "csv") {
        out << "label,class\n" << t.label << "," << to_string(cls) << "\n";
    } else {
        out << nlohmann::json{{"label", t.label}, {"class", std::string(to_string(cls))}}.dump(2) << "\n";
    }
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gromov widths and toric domains of disk cotangent bundles of spheres of revolution",
                 "revwidth"};
    app.require_subcommand(1);
    Options o;

    auto common = [&o](CLI::App* s) {
        s->add_option("--format", o.format, "csv or json");
        s->add_option("--out", o.out_path, "output file (default: standard output)");
        s->add_option("--tol", o.tol, "quadrature tolerance")->check(CLI::PositiveNumber);
    };
    auto with_surface = [&o](CLI::App* s) {
        s->add_option("--c", o.c, "spheroid parameter c of E(1,1,c)");
        s->add_option("--profile", o.profile, "spheroid, round or egg (quadrature path)");
        s->add_option("--eps", o.eps, "egg asymmetry, |eps| < 1/2");
    };

    auto* w = app.add_subcommand("width", "Gromov width report for one c");
    w->add_option("--c", o.c)->required();
    common(w);

    auto* sw = app.add_subcommand("sweep", "width table over a range of c");
    sw->add_option("--c-min", o.c_min)->required();
    sw->add_option("--c-max", o.c_max)->required();
    sw->add_option("--n", o.n);
    common(sw);

    auto* pr = app.add_subcommand("profile", "boundary samples j,rho1,rho2 of the toric domain");
    with_surface(pr);
    pr->add_option("--samples", o.samples);
    common(pr);

    auto* ca = app.add_subcommand("capacities", "ECH capacities c1, c3 or Zoll capacities");
    ca->add_option("--c", o.c);
    ca->add_option("--ell", o.ell, "Zoll length");
    ca->add_option("--k", o.k_max, "largest capacity index");
    common(ca);

    auto* we = app.add_subcommand("weights", "weight sequence of a weakly convex domain");
    with_surface(we);
    we->add_option("--samples", o.samples);
    we->add_option("--depth", o.depth);
    common(we);

    auto* pa = app.add_subcommand("packing", "ball packing into T(2 beta(c)), 1 < c <= c0");
    pa->add_option("--c", o.c)->required();
    common(pa);

    auto* ge = app.add_subcommand("geodesic", "geodesic flow, meridian length, alpha geodesic");
    with_surface(ge);
    ge->add_option("--mode", o.mode, "flow, meridian, alpha or return");
    ge->add_option("--j", o.j, "angular momentum p_theta");
    ge->add_option("--t-max", o.t_max);
    ge->add_option("--dt", o.dt);
    ge->add_option("--every", o.every, "record every n-th step");
    common(ge);

    auto* cl = app.add_subcommand("classify", "concave / weakly_convex / neither");
    with_surface(cl);
    cl->add_option("--samples", o.samples);
    common(cl);

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.push_back("revwidth");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    std::ostringstream buf;
    try {
        if (w->parsed()) detail::run_width(o, buf);
        else if (sw->parsed()) detail::run_sweep(o, buf);
        else if (pr->parsed()) detail::run_profile(o, buf);
        else if (ca->parsed()) detail::run_capacities(o, buf);
        else if (we->parsed()) detail::run_weights(o, buf);
        else if (pa->parsed()) detail::run_packing(o, buf);
        else if (ge->parsed()) detail::run_geodesic(o, buf);
        else if (cl->parsed()) detail::run_classify(o, buf);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ClassificationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }

    if (o.out_path.empty()) {
        out << buf.str();
    } else {
        std::ofstream f(o.out_path, std::ios::binary);
        if (!f) {
            err << "error: cannot open " << o.out_path << "\n";
            return kExitUsage;
        }
        f << buf.str();
    }
    return kExitOk;
}

}  // namespace revwidth::cli
