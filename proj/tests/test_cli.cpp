#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "revwidth/cli.hpp"

using namespace revwidth;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& s) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> row;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) row.push_back(cell);
        if (!line.empty() && line.back() == ',') row.emplace_back();
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

TEST(Cli, WidthJson) {
    auto r = run({"width", "--c", "0.75"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["width"].get<double>(), kTwoPi, 1e-10);
    EXPECT_EQ(j["regime"], "middle");
    EXPECT_TRUE(j["j0"].is_null());
    for (const char* key : {"c", "regime", "j0", "alpha", "beta", "width", "c1", "c3"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }

    r = run({"width", "--c", "5"});
    ASSERT_EQ(r.code, 0);
    j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["width"].get<double>(), 4 * kPi, 1e-10);
    EXPECT_NEAR(j["c1"].get<double>(), 4 * kPi, 1e-10);
    EXPECT_TRUE(j["c3"].is_null());
}

TEST(Cli, WidthErrors) {
    EXPECT_EQ(run({"width", "--c", "-1"}).code, 2);
    EXPECT_EQ(run({"width"}).code, 2);
    EXPECT_EQ(run({"width", "--c", "1", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"nonsense"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, SweepMonotone) {
    const auto r = run({"sweep", "--c-min", "0.1", "--c-max", "4", "--n", "100"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 101u);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "c,width,alpha,beta,c1,c3");
    double prev = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        ASSERT_EQ(rows[i].size(), 6u) << i;
        const double w = std::stod(rows[i][1]);
        EXPECT_GE(w, prev - 1e-11);
        prev = w;
    }
    EXPECT_DOUBLE_EQ(std::stod(rows.back()[0]), 4.0);
}

TEST(Cli, SweepSpecialRows) {
    const auto r = run({"sweep", "--c-min", "0.5", "--c-max", "1", "--n", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[1][0], "0.5");
    EXPECT_NEAR(std::stod(rows[1][1]), kTwoPi, 1e-10);
    EXPECT_EQ(rows[2][0], "1");
    EXPECT_NEAR(std::stod(rows[2][1]), kTwoPi, 1e-10);
    EXPECT_NEAR(std::stod(rows[2][3]), kTwoPi, 1e-10);
    EXPECT_EQ(run({"sweep", "--c-min", "2", "--c-max", "1"}).code, 2);
    EXPECT_EQ(run({"sweep", "--c-min", "0.5", "--c-max", "1", "--n", "1"}).code, 2);
}

TEST(Cli, ProfileRoundCorners) {
    const auto r = run({"profile", "--c", "1", "--samples", "64"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("j,rho1,rho2\n", 0), 0u);
    EXPECT_NE(r.out.find("\n-1,6.28318530718,0\n"), std::string::npos);
    EXPECT_NE(r.out.find("\n0,6.28318530718,6.28318530718\n"), std::string::npos);
    EXPECT_NE(r.out.find("\n1,0,6.28318530718\n"), std::string::npos);
}

TEST(Cli, ProfileMinimumSum) {
    const auto r = run({"profile", "--c", "0.5", "--samples", "257", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    double m = 1e9;
    for (const auto& s : j["samples"]) m = std::min(m, s[1].get<double>() + s[2].get<double>());
    EXPECT_NEAR(m, kTwoPi, 1e-10);
}

TEST(Cli, ProfileQuadraturePath) {
    const auto a = run({"profile", "--profile", "spheroid", "--c", "1.5", "--samples", "32"});
    const auto b = run({"profile", "--c", "1.5", "--samples", "32"});
    ASSERT_EQ(a.code, 0) << a.err;
    const auto ra = csv_rows(a.out), rb = csv_rows(b.out);
    ASSERT_EQ(ra.size(), rb.size());
    for (std::size_t i = 1; i < ra.size(); ++i) EXPECT_NEAR(std::stod(ra[i][1]), std::stod(rb[i][1]), 1e-8);
    EXPECT_EQ(run({"profile", "--profile", "torus"}).code, 2);
    EXPECT_EQ(run({"profile", "--c", "1", "--samples", "4"}).code, 2);
}

TEST(Cli, ClassifyAndWeights) {
    auto r = run({"classify", "--c", "1.5"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["class"], "weakly_convex");
    r = run({"classify", "--c", "0.3", "--format", "csv"});
    EXPECT_EQ(r.out, "label,class\nspheroid(c=0.3),neither\n");

    r = run({"weights", "--c", "1.5", "--samples", "513"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["head"].get<double>(), 2 * spheroid::beta(1.5), 1e-8);
    EXPECT_EQ(run({"weights", "--c", "0.5"}).code, 2);
}

TEST(Cli, CapacitiesAndPacking) {
    auto r = run({"capacities", "--ell", "6.283185307179586", "--k", "9"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["capacities"].size(), 10u);
    EXPECT_NEAR(j["capacities"][9].get<double>(), 12 * kPi, 1e-10);

    r = run({"packing", "--c", "1.2"});
    ASSERT_EQ(r.code, 0) << r.err;
    j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["ok"].get<bool>());
    EXPECT_EQ(run({"packing", "--c", "0.9"}).code, 2);
}

TEST(Cli, Geodesic) {
    auto r = run({"geodesic", "--mode", "meridian", "--c", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(nlohmann::json::parse(r.out)["meridian_length"].get<double>(), spheroid::beta(2.0), 1e-10);

    r = run({"geodesic", "--mode", "alpha", "--c", "0.3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["equator_crossings"], 4);

    r = run({"geodesic", "--c", "0.7", "--j", "0.5", "--t-max", "1", "--every", "500"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(csv_rows(r.out).size(), 4u);
    EXPECT_EQ(run({"geodesic", "--c", "0.7"}).code, 2);
    EXPECT_EQ(run({"geodesic", "--mode", "alpha", "--c", "0.7"}).code, 2);
    EXPECT_EQ(run({"geodesic", "--mode", "bogus", "--c", "0.7"}).code, 2);
}

TEST(Cli, Deterministic) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"sweep", "--c-min", "0.2", "--c-max", "3", "--n", "40"},
             {"profile", "--profile", "egg", "--samples", "48"},
             {"packing", "--c", "2"}}) {
        const auto a = run(args), b = run(args);
        EXPECT_EQ(a.code, 0) << a.err;
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(Cli, OutFile) {
    const auto path = std::filesystem::temp_directory_path() / "revwidth_cli_out_test.json";
    const auto r = run({"width", "--c", "1", "--out", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    EXPECT_EQ(ss.str(), run({"width", "--c", "1"}).out);
    std::filesystem::remove(path);
}
