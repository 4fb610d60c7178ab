#include "cli.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>

using namespace metrocap;
using namespace metrocap::cli;
using nlohmann::json;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "metrocap");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int status = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string &s) {
    std::vector<std::string> lines;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) {
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> split_csv(const std::string &line) {
    std::vector<std::string> cells;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, ',');) {
        cells.push_back(cell);
    }
    return cells;
}

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override { unsetenv("METROCAP_FORMAT"); }
    void TearDown() override { unsetenv("METROCAP_FORMAT"); }
};

}  // namespace

TEST_F(CliTest, capacity_su_two_copies) {
    const auto r = invoke({"capacity", "--model", "su", "--n", "2", "--t", "2", "--l", "inf", "--base", "e"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["schema"], "1");
    EXPECT_NEAR(j["value"].get<double>(), std::log(10.0), 1e-15);
    EXPECT_EQ(j["optimal_p"][0]["p"], "9/10");
}

TEST_F(CliTest, scaling_mp_slope_near_one) {
    const auto r = invoke({"scaling", "--model", "mp", "--t", "2", "--n-range", "10:1000:10", "--format", "csv"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto lines = split_lines(r.out);
    ASSERT_EQ(lines.size(), 101u);
    EXPECT_EQ(lines[0], "model,n,t,l,capacity_nats,baseline_nats,fitted_slope");
    const auto row = split_csv(lines[1]);
    ASSERT_EQ(row.size(), 7u);
    EXPECT_EQ(row[1], "10");
    EXPECT_NEAR(std::stod(row[4]), std::log(11.0), 1e-15);
    EXPECT_NEAR(std::stod(row[6]), 1.0, 0.05);
}

TEST_F(CliTest, simulate_bs4_lattice_succeeds) {
    const auto r = invoke({"simulate", "--model", "mp", "--n", "3", "--t", "2", "--state", "bs4", "--codebook", "lattice"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_NEAR(j["success_prob"].get<double>(), 1.0, 1e-9);
    EXPECT_NEAR(j["entropy_nats"].get<double>(), std::log(4.0), 1e-9);
    EXPECT_EQ(j["state_tag"], "bs4");
    EXPECT_EQ(j["codebook_tag"], "lattice");
    EXPECT_EQ(j["seed"], 20240601);
}

TEST_F(CliTest, simulate_su_bn1_is_deterministic) {
    const std::vector<std::string> args{"simulate", "--model", "su", "--n", "2", "--state", "bn1", "--seed", "5"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    ASSERT_EQ(a.status, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_NEAR(json::parse(a.out)["entropy_nats"].get<double>(), std::log(10.0), 1e-6);
}

TEST_F(CliTest, bounds_mp_lattice_radius) {
    const auto r = invoke({"bounds", "--model", "mp", "--n", "3", "--t", "2", "--eps", "0.5"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_NEAR(j["lower_nats"].get<double>(), 0.0, 1e-14);
    EXPECT_NEAR(j["upper_nats"].get<double>(), std::log(8.0), 1e-14);
    EXPECT_EQ(j["lattice_size"], 4);
    EXPECT_NEAR(j["radius_rad"].get<double>(), kPi / 4, 1e-9);
}

TEST_F(CliTest, decompose_lists_entries) {
    const auto r = invoke({"decompose", "--model", "su", "--n", "3", "--t", "2", "--l", "1", "--format", "csv"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto lines = split_lines(r.out);
    ASSERT_EQ(lines.size(), 3u);
    EXPECT_EQ(lines[0], "model,n,t,l,label,dim,mult,eff_mult");
}

TEST_F(CliTest, validation_errors_exit_two_on_one_line) {
    const std::vector<std::vector<std::string>> bad{
        {"capacity", "--model", "so", "--n", "2"},
        {"capacity", "--model", "su", "--n", "2", "--t", "0"},
        {"capacity", "--model", "su", "--n", "-1"},
        {"capacity", "--model", "su", "--n", "20000"},
        {"capacity", "--model", "su", "--n", "2", "--l", "0"},
        {"capacity", "--model", "su", "--n", "2", "--base", "10"},
        {"capacity", "--model", "su", "--n", "2", "--format", "xml"},
        {"bounds", "--model", "su", "--n", "2", "--eps", "1.5"},
        {"bounds", "--model", "su", "--n", "2", "--alpha", "3", "--beta", "0.5"},
        {"simulate", "--model", "mp", "--n", "13", "--t", "2"},
        {"simulate", "--model", "su", "--n", "9", "--t", "2"},
        {"simulate", "--model", "su", "--n", "2", "--t", "3"},
        {"simulate", "--model", "mp", "--n", "2", "--state", "ghz"},
        {"scaling", "--model", "mp", "--n-range", "10:5"},
        {"scaling", "--model", "mp", "--n-range", "abc"},
        {"frobnicate"},
        {},
    };
    for (const auto &args : bad) {
        const auto r = invoke(args);
        std::string joined;
        for (const auto &a : args) {
            joined += a + " ";
        }
        EXPECT_EQ(r.status, 2) << joined;
        EXPECT_TRUE(r.out.empty()) << joined;
        const auto lines = split_lines(r.err);
        EXPECT_EQ(lines.size(), 1u) << joined << "\n" << r.err;
    }
}

TEST_F(CliTest, cap_is_stated_in_diagnostic) {
    const auto r = invoke({"simulate", "--model", "su", "--n", "9"});
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.err.find('8'), std::string::npos) << r.err;
}

TEST_F(CliTest, json_round_trip_regenerates_identical_csv) {
    const std::vector<std::vector<std::string>> configs{
        {"decompose", "--model", "su", "--n", "6", "--t", "3"},
        {"capacity", "--model", "mp", "--n", "7", "--t", "3"},
        {"capacity", "--model", "su", "--n", "50", "--t", "3", "--base", "2"},
        {"bounds", "--model", "su", "--n", "4", "--eps", "0.1"},
        {"bounds", "--model", "mp", "--n", "9", "--t", "3", "--alpha", "1.5", "--beta", "0.5"},
        {"simulate", "--model", "mp", "--n", "4", "--state", "noon"},
        {"simulate", "--model", "su", "--n", "3", "--base", "2"},
        {"scaling", "--model", "su", "--t", "3", "--n-range", "5:50:5"},
    };
    for (auto args : configs) {
        auto json_args = args;
        json_args.insert(json_args.end(), {"--format", "json"});
        auto csv_args = args;
        csv_args.insert(csv_args.end(), {"--format", "csv"});
        const auto j = invoke(json_args);
        const auto c = invoke(csv_args);
        ASSERT_EQ(j.status, 0) << j.err;
        ASSERT_EQ(c.status, 0) << c.err;
        EXPECT_EQ(csv_from_json(json::parse(j.out)), c.out) << args[0];
    }
}

TEST_F(CliTest, base_two_is_nats_over_ln2) {
    const auto check = [](const json &e, const json &b, const std::string &ke, const std::string &kb) {
        const double ve = e[ke].get<double>();
        const double vb = b[kb].get<double>();
        EXPECT_NEAR(vb, ve / kLn2, 1e-12 * std::max(1.0, std::abs(vb))) << ke;
    };
    {
        const auto e = json::parse(invoke({"capacity", "--model", "su", "--n", "30", "--t", "3"}).out);
        const auto b = json::parse(invoke({"capacity", "--model", "su", "--n", "30", "--t", "3", "--base", "2"}).out);
        check(e, b, "value", "value");
        check(e, b, "baseline", "baseline");
    }
    {
        const auto e = json::parse(invoke({"bounds", "--model", "su", "--n", "5", "--eps", "0.3"}).out);
        const auto b = json::parse(invoke({"bounds", "--model", "su", "--n", "5", "--eps", "0.3", "--base", "2"}).out);
        check(e, b, "lower_nats", "lower_bits");
        check(e, b, "upper_nats", "upper_bits");
    }
    {
        const auto e = json::parse(invoke({"simulate", "--model", "mp", "--n", "5"}).out);
        const auto b = json::parse(invoke({"simulate", "--model", "mp", "--n", "5", "--base", "2"}).out);
        check(e, b, "entropy_nats", "entropy_bits");
    }
    {
        const auto e = json::parse(invoke({"scaling", "--model", "mp", "--t", "3", "--n-range", "2:20:3"}).out);
        const auto b = json::parse(invoke({"scaling", "--model", "mp", "--t", "3", "--n-range", "2:20:3", "--base", "2"}).out);
        for (std::size_t i = 0; i < e["points"].size(); ++i) {
            check(e["points"][i], b["points"][i], "capacity", "capacity");
        }
    }
}

TEST_F(CliTest, environment_selects_default_format) {
    setenv("METROCAP_FORMAT", "csv", 1);
    const auto csv = invoke({"capacity", "--model", "mp", "--n", "3"});
    ASSERT_EQ(csv.status, 0);
    EXPECT_EQ(csv.out.rfind("model,n,t,l,", 0), 0u);
    const auto forced = invoke({"capacity", "--model", "mp", "--n", "3", "--format", "json"});
    EXPECT_NO_THROW(json::parse(forced.out));
    setenv("METROCAP_FORMAT", "yaml", 1);
    EXPECT_EQ(invoke({"capacity", "--model", "mp", "--n", "3"}).status, 2);
}

TEST_F(CliTest, help_exits_zero) {
    const auto r = invoke({"--help"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("capacity"), std::string::npos);
}

TEST(NRange, parsing) {
    const auto r = NRange::parse("10:100:5");
    EXPECT_EQ(r.start, 10);
    EXPECT_EQ(r.stop, 100);
    EXPECT_EQ(r.stride, 5);
    EXPECT_EQ(NRange::parse("3:7").stride, 1);
    EXPECT_ANY_THROW(NRange::parse("3"));
    EXPECT_ANY_THROW(NRange::parse("3:7:0"));
}
