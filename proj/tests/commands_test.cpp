#include <gtest/gtest.h>

#include <cmath>

#include "osculate/commands.hpp"
#include "test_support.hpp"

namespace osculate {
namespace {

TEST(RandomProblemTest, RespectsGeneratorContract) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto p = random_problem(seed, 6, 2);
        ASSERT_EQ(p.nodes.size(), 7u);
        for (std::size_t i = 0; i < p.nodes.size(); ++i) {
            EXPECT_GE(p.nodes[i], -2.0);
            EXPECT_LE(p.nodes[i], 2.0);
            for (std::size_t j = 0; j < i; ++j) EXPECT_GE(std::abs(p.nodes[i] - p.nodes[j]), 0.1);
            for (double v : p.derivatives[i]) EXPECT_LE(std::abs(v), 10.0);
        }
    }
    EXPECT_EQ(random_problem(7, 4, 3), random_problem(7, 4, 3));
}

TEST(VerifyTest, CubicFixture) {
    const auto r = verify_problem(testing::cubic_fixture());
    EXPECT_TRUE(r.passed());
    EXPECT_LE(r.worst(), 1e-12);
}

TEST(VerifyTest, ConstantOne) {
    ProblemFile p;
    p.nodes = {-1.0, 0.2, 1.5};
    p.m = 2;
    p.derivatives = {{1, 0, 0}, {1, 0, 0}, {1, 0, 0}};
    EXPECT_TRUE(verify_problem(p).passed());
}

TEST(VerifyTest, SeedSeven) {
    const auto r = verify_problem(random_problem(7, 4, 3));
    EXPECT_TRUE(r.passed()) << format_report(r);
    EXPECT_EQ(r.derivative.size(), 3u);
}

TEST(VerifyTest, SizeLimitPropagates) {
    try {
        verify_problem(random_problem(1, 16, 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SizeLimit);
    }
}

TEST(EvalReportTest, CubicFixture) {
    const auto f = testing::build(testing::cubic_fixture());
    EXPECT_EQ(eval_report(f, EvalRequest{{0.5}, EvalMethod::direct, true, std::nullopt}),
              "x,direct,barycentric,abs_diff\n0.5,0.125,0.125,0\n");
    EXPECT_EQ(eval_report(f, EvalRequest{{1.0}, EvalMethod::direct, false, 1}), "x,value\n1,3\n");
    EXPECT_EQ(eval_report(f, EvalRequest{{0.0}, EvalMethod::barycentric, false, std::nullopt}), "x,value\n0,0\n");
    EXPECT_THROW(eval_report(f, EvalRequest{{0.0}, EvalMethod::barycentric, false, 1}), Error);
}

TEST(RungeTest, NodeFamilies) {
    EXPECT_EQ(node_family(NodeFamily::equispaced, 2), std::vector<double>({-1.0, 1.0}));
    EXPECT_EQ(node_family(NodeFamily::equispaced, 1), std::vector<double>({0.0}));
    const auto cheb = node_family(NodeFamily::chebyshev, 5);
    EXPECT_NEAR(cheb[2], 0.0, 1e-16);
    EXPECT_NEAR(cheb[0], std::cos(M_PI / 10.0), 1e-16);
}

TEST(RungeTest, SingleNodeGivesTangentLine) {
    const auto run = runge_run(NodeFamily::chebyshev, 1, 1);
    const double x0 = node_family(NodeFamily::chebyshev, 1)[0];
    for (const auto& row : run.rows) {
        const double x = row[1];
        EXPECT_NEAR(row[3], runge(x0) + runge_prime(x0) * (x - x0), 1e-14);
    }
}

TEST(RungeTest, LinearInterpolantHitsEndpoints) {
    const auto run = runge_run(NodeFamily::equispaced, 2, 0);
    ASSERT_EQ(run.rows.size(), kRungeGridPoints);
    EXPECT_EQ(run.rows.front()[4], 0.0);
    EXPECT_EQ(run.rows.back()[4], 0.0);
}

TEST(RungeTest, ChebyshevBeatsEquispaced) {
    const auto cheb = runge_run(NodeFamily::chebyshev, 20, 1);
    const auto equi = runge_run(NodeFamily::equispaced, 20, 1);
    EXPECT_LT(cheb.max_error, equi.max_error);
}

TEST(RungeTest, RejectsUnsupportedOrder) {
    EXPECT_THROW(runge_run(NodeFamily::chebyshev, 5, 2), Error);
    EXPECT_THROW(runge_run(NodeFamily::chebyshev, 0, 1), Error);
}

}  // namespace
}  // namespace osculate
