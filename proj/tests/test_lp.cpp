#include "hzono/errors.hpp"
#include "hzono/lp.hpp"
#include "hzono/oracle.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hzono;
namespace tk = hzono::testkit;

namespace {

LinearProgram box_lp(Index n)
{
    LinearProgram lp;
    lp.objective = Vector::Zero(n);
    lp.A_eq = Matrix(0, n);
    lp.b_eq = Vector(0);
    lp.lower = Vector::Zero(n);
    lp.upper = Vector::Ones(n);
    return lp;
}

LinearProgram random_lp(tk::Rng& rng, bool feasible_by_construction)
{
    const Index n = tk::uniform_int(rng, 1, 6);
    const Index m = tk::uniform_int(rng, 0, static_cast<int>(std::min<Index>(n, 4)));
    LinearProgram lp;
    lp.lower = tk::random_vector(n, rng, 2.0);
    lp.upper = lp.lower;
    for (Index j = 0; j < n; ++j)
        lp.upper(j) += tk::uniform(rng, 0.2, 3.0);
    lp.A_eq = tk::random_matrix(m, n, rng);
    if (m >= 2 && tk::uniform_int(rng, 0, 4) == 0)
        lp.A_eq.row(m - 1) = 2.0 * lp.A_eq.row(0);
    if (feasible_by_construction) {
        Vector x(n);
        for (Index j = 0; j < n; ++j)
            x(j) = tk::uniform(rng, lp.lower(j) + 0.1, lp.upper(j) - 0.1);
        lp.b_eq = lp.A_eq * x;
    } else {
        lp.b_eq = tk::random_vector(m, rng, 3.0);
    }
    lp.objective = tk::random_vector(n, rng);
    return lp;
}

}  // namespace

TEST(SolveLp, MinimizeOverUnitInterval)
{
    LinearProgram lp = box_lp(1);
    lp.objective(0) = 1.0;
    const auto r = solve_lp(lp);
    ASSERT_TRUE(r.optimal());
    EXPECT_DOUBLE_EQ(r.value, 0.0);
}

TEST(SolveLp, SingleEqualityConstraint)
{
    LinearProgram lp = box_lp(2);
    lp.objective = vector({1.0, 0.0});
    lp.A_eq = matrix({{1.0, 1.0}});
    lp.b_eq = vector({1.0});
    const auto r = solve_lp(lp);
    ASSERT_TRUE(r.optimal());
    EXPECT_NEAR(r.value, 0.0, 1e-12);
    EXPECT_NEAR(r.point(0), 0.0, 1e-12);
    EXPECT_NEAR(r.point(1), 1.0, 1e-12);
}

TEST(SolveLp, InfeasibleSystem)
{
    LinearProgram lp = box_lp(2);
    lp.A_eq = matrix({{1.0, 1.0}});
    lp.b_eq = vector({3.0});
    EXPECT_EQ(solve_lp(lp).status, LpStatus::Infeasible);
}

TEST(SolveLp, InconsistentDependentRows)
{
    LinearProgram lp = box_lp(2);
    lp.A_eq = matrix({{1.0, 1.0}, {2.0, 2.0}});
    lp.b_eq = vector({1.0, 1.0});
    EXPECT_EQ(solve_lp(lp).status, LpStatus::Infeasible);
    lp.b_eq = vector({1.0, 2.0});
    EXPECT_TRUE(solve_lp(lp).optimal());
}

TEST(SolveLp, MalformedProblemsThrow)
{
    LinearProgram lp = box_lp(2);
    lp.upper(0) = -1.0;
    EXPECT_THROW(solve_lp(lp), DimensionMismatch);
    lp = box_lp(2);
    lp.b_eq = Vector::Zero(1);
    EXPECT_THROW(solve_lp(lp), DimensionMismatch);
    lp = box_lp(2);
    lp.upper(1) = std::numeric_limits<double>::infinity();
    EXPECT_THROW(solve_lp(lp), DimensionMismatch);
}

TEST(SolveLp, DeterministicResults)
{
    tk::Rng rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        const LinearProgram lp = random_lp(rng, true);
        const auto a = solve_lp(lp);
        const auto b = solve_lp(lp);
        ASSERT_EQ(a.status, b.status);
        EXPECT_EQ(a.value, b.value);
        EXPECT_TRUE(a.point == b.point);
    }
}

TEST(SolveLp, AgreesWithVertexEnumeration)
{
    tk::Rng rng(2);
    for (int trial = 0; trial < 300; ++trial) {
        const LinearProgram lp = random_lp(rng, trial % 2 == 0);
        const auto r = solve_lp(lp);
        const auto brute = tk::brute_minimum(lp);
        ASSERT_EQ(r.optimal(), brute.has_value()) << "trial " << trial;
        if (brute) {
            EXPECT_NEAR(r.value, *brute, 1e-6) << "trial " << trial;
            const Vector residual = lp.A_eq * r.point - lp.b_eq;
            if (residual.size() > 0)
                EXPECT_LE(residual.cwiseAbs().maxCoeff(), 1e-8);
            EXPECT_TRUE((r.point.array() >= lp.lower.array()).all());
            EXPECT_TRUE((r.point.array() <= lp.upper.array()).all());
        }
    }
}

TEST(SolveLp, SampledFeasibilityIsNeverContradicted)
{
    tk::Rng rng(3);
    int certified = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const LinearProgram lp = random_lp(rng, true);
        const auto x = tk::rejection_feasible_point(lp.A_eq, lp.b_eq, lp.lower, lp.upper, 20000, rng);
        if (!x)
            continue;
        ++certified;
        const auto r = solve_lp(lp);
        ASSERT_TRUE(r.optimal());
        EXPECT_LE(r.value, lp.objective.dot(*x) + 1e-9);
    }
    EXPECT_GT(certified, 150);
}

TEST(SolveLp, RandomConstrainedZonotopeFeasibility)
{
    tk::Rng rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const Index ng = tk::uniform_int(rng, 2, 5);
        const Index nc = tk::uniform_int(rng, 1, 2);
        ConstrainedZonotope Z(tk::random_matrix(2, ng, rng), Vector::Zero(2), tk::random_matrix(nc, ng, rng),
                              tk::random_vector(nc, rng, 1.5));
        const LinearProgram lp = factor_lp(Z);
        const auto sampled = tk::rejection_feasible_point(lp.A_eq, lp.b_eq, lp.lower, lp.upper, 20000, rng);
        const bool brute = !tk::factor_vertices(Z).empty();
        EXPECT_EQ(!is_empty(Z), brute);
        if (sampled)
            EXPECT_FALSE(is_empty(Z));
    }
}

TEST(BoundedSimplex, WarmStartMatchesColdSolves)
{
    tk::Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        LinearProgram lp = random_lp(rng, true);
        BoundedSimplex warm(lp);
        ASSERT_TRUE(warm.feasible());
        for (int k = 0; k < 10; ++k) {
            lp.objective = tk::random_vector(lp.lower.size(), rng);
            const auto w = warm.minimize(lp.objective);
            const auto cold = solve_lp(lp);
            ASSERT_TRUE(w.optimal());
            EXPECT_NEAR(w.value, cold.value, 1e-9);
        }
    }
}

TEST(BoundedSimplex, DegenerateHighlyRedundantSystem)
{
    // many copies of the same rows plus a fixed variable
    LinearProgram lp = box_lp(4);
    Matrix rows = matrix({{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}});
    lp.A_eq = Matrix(12, 4);
    lp.b_eq = Vector(12);
    for (int copy = 0; copy < 4; ++copy)
        for (int r = 0; r < 3; ++r) {
            lp.A_eq.row(copy * 3 + r) = (copy + 1.0) * rows.row(r);
            lp.b_eq(copy * 3 + r) = (copy + 1.0) * 1.0;
        }
    lp.lower(3) = 0.5;
    lp.upper(3) = 0.5;
    lp.objective = vector({1.0, -1.0, 1.0, 0.0});
    const auto r = solve_lp(lp);
    const auto brute = tk::brute_minimum(lp);
    ASSERT_TRUE(r.optimal());
    ASSERT_TRUE(brute.has_value());
    EXPECT_NEAR(r.value, *brute, 1e-9);
}
