#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <random>

#include "osculate/io.hpp"
#include "test_support.hpp"

namespace osculate {
namespace {

ErrorKind parse_error_kind(std::string_view text) {
    try {
        parse_problem(text);
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected an error for: " << text;
    return ErrorKind::BadGridSpec;
}

TEST(FormatDoubleTest, ShortestRoundTrip) {
    EXPECT_EQ(format_double(0.125), "0.125");
    EXPECT_EQ(format_double(-2.0), "-2");
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(1e-16), "1e-16");
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> dist(-1e6, 1e6);
    for (int k = 0; k < 1000; ++k) {
        const double v = dist(rng) * std::pow(10.0, static_cast<double>(k % 40 - 20));
        EXPECT_EQ(std::stod(format_double(v)), v);
    }
}

TEST(LoadProblemTest, Fixtures) {
    const auto cubic = parse_problem(R"({"nodes":[0,1], "m":1, "derivatives":[[0,0],[1,3]]})");
    EXPECT_EQ(cubic, testing::cubic_fixture());

    const auto taylor = parse_problem(R"({"nodes":[0], "m":2, "derivatives":[[1,2,3]], "label":"taylor"})");
    EXPECT_EQ(taylor.m, 2u);
    EXPECT_EQ(taylor.label, "taylor");
    EXPECT_EQ(taylor.derivatives, (std::vector<std::vector<double>>{{1.0, 2.0, 3.0}}));
}

TEST(LoadProblemTest, Errors) {
    EXPECT_EQ(parse_error_kind(R"({"nodes":[0,0], "m":0, "derivatives":[[1],[2]]})"), ErrorKind::ValidationError);
    EXPECT_EQ(parse_error_kind(R"({"nodes":[0,1e999], "m":0, "derivatives":[[1],[2]]})"), ErrorKind::ValidationError);
    EXPECT_EQ(parse_error_kind(R"({"nodes":[0,1], "m":0, "derivatives":[[1],[2]])"), ErrorKind::ParseError);
    EXPECT_EQ(parse_error_kind(R"({"nodes":[0,1], "derivatives":[[1],[2]]})"), ErrorKind::SchemaError);
    EXPECT_EQ(parse_error_kind(R"({"nodes":[0,1], "m":1, "derivatives":[[1,0],[2]]})"), ErrorKind::SchemaError);
    EXPECT_EQ(parse_error_kind(R"({"nodes":[0,1], "m":0, "derivatives":[[1]]})"), ErrorKind::SchemaError);
    EXPECT_EQ(parse_error_kind(R"({"nodes":[0,1], "m":-1, "derivatives":[[1],[2]]})"), ErrorKind::SchemaError);
    EXPECT_EQ(parse_error_kind(R"({"nodes":["a"], "m":0, "derivatives":[[1]]})"), ErrorKind::SchemaError);
    EXPECT_EQ(parse_error_kind(R"({"nodes":[], "m":0, "derivatives":[]})"), ErrorKind::SchemaError);
    EXPECT_EQ(parse_error_kind(R"([1, 2])"), ErrorKind::SchemaError);
}

TEST(LoadProblemTest, ParseErrorNamesLine) {
    try {
        parse_problem("{\n  \"nodes\": [0, 1],\n  \"m\": ,\n}", "p.json");
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("p.json:3:"), std::string::npos) << e.what();
    }
}

TEST(LoadProblemTest, MissingFile) {
    EXPECT_THROW(load_problem("/nonexistent/problem.json"), Error);
}

TEST(ProblemRoundTripTest, RandomProblems) {
    const auto dir = std::filesystem::temp_directory_path();
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        ProblemFile p = random_problem(rng(), trial % 6, trial % 4);
        if (trial % 3 == 0) p.label.reset();
        if (trial % 3 == 1) p.label = "quote \" and\nnewline";
        EXPECT_EQ(parse_problem(problem_to_json(p)), p);
        const auto path = (dir / ("osculate_roundtrip_" + std::to_string(trial) + ".json")).string();
        save_problem(path, p);
        EXPECT_EQ(load_problem(path), p);
        std::filesystem::remove(path);
    }
}

TEST(FitJsonTest, CubicFixtureGolden) {
    const auto text = fit_to_json(testing::build(testing::cubic_fixture()));
    const auto doc = nlohmann::json::parse(text);
    EXPECT_EQ(doc["A"], nlohmann::json::parse("[[0,0],[1,1]]"));
    EXPECT_EQ(doc["B"], nlohmann::json::parse("[[1,2],[1,-2]]"));
    EXPECT_EQ(doc["delta"], nlohmann::json::parse("[-1,1]"));
    EXPECT_EQ(doc["small_l"], nlohmann::json::parse("[[1,-1],[1,1]]"));
}

TEST(FitJsonTest, ConstantOneTablesMatch) {
    const auto f = build_interpolant(NodeSet({-1.0, 0.0, 2.0}), OsculatoryData::constant_one(3, 2));
    const auto doc = nlohmann::json::parse(fit_to_json(f));
    EXPECT_EQ(doc["A"], doc["B"]);
}

TEST(CsvTest, Layout) {
    EXPECT_EQ(to_csv({"x", "value"}, {{0.5, 0.125}, {1.0, -2.0}}), "x,value\n0.5,0.125\n1,-2\n");
    EXPECT_EQ(to_csv({"x", "value"}, {}), "x,value\n");
}

TEST(GridSpecTest, RangeAndList) {
    EXPECT_EQ(make_grid(GridSpec{0.0, 0.0, 1, std::nullopt}), std::vector<double>({0.0}));
    EXPECT_EQ(make_grid(GridSpec{0.0, 1.0, 5, std::nullopt}), std::vector<double>({0.0, 0.25, 0.5, 0.75, 1.0}));
    const auto g = make_grid(GridSpec{-1.0, 1.0, 7, std::nullopt});
    EXPECT_EQ(g.front(), -1.0);
    EXPECT_EQ(g.back(), 1.0);
    EXPECT_EQ(make_grid(GridSpec{{}, {}, {}, parse_number_list("0.5, -1,2e-3")}),
              std::vector<double>({0.5, -1.0, 2e-3}));
}

TEST(GridSpecTest, BadSpecs) {
    auto kind = [](const GridSpec& s) {
        try {
            make_grid(s);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::ValidationError;
    };
    EXPECT_EQ(kind(GridSpec{}), ErrorKind::BadGridSpec);
    EXPECT_EQ(kind(GridSpec{0.0, 1.0, 0, std::nullopt}), ErrorKind::BadGridSpec);
    EXPECT_EQ(kind(GridSpec{0.0, {}, 3, std::nullopt}), ErrorKind::BadGridSpec);
    EXPECT_EQ(kind(GridSpec{0.0, 1.0, 3, std::vector<double>{1.0}}), ErrorKind::BadGridSpec);
    EXPECT_THROW(parse_number_list("1,,2"), Error);
    EXPECT_THROW(parse_number_list("1,x"), Error);
}

}  // namespace
}  // namespace osculate
