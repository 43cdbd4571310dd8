#include "hzono/errors.hpp"
#include "hzono/oracle.hpp"
#include "hzono/rlt.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <omp.h>

using namespace hzono;
namespace tk = hzono::testkit;

namespace {

bool same_column(const std::vector<std::optional<double>>& a, const std::vector<std::optional<double>>& b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].has_value() != b[i].has_value() || (a[i] && *a[i] != *b[i]))
            return false;
    return true;
}

class ThreadCount : public ::testing::TestWithParam<int> {
protected:
    void SetUp() override
    {
        saved_ = omp_get_max_threads();
        omp_set_num_threads(GetParam());
    }
    void TearDown() override { omp_set_num_threads(saved_); }

private:
    int saved_ = 1;
};

}  // namespace

TEST_P(ThreadCount, LeafSupportIsBitwiseIdentical)
{
    tk::Rng rng(21);
    const auto dirs = sample_directions(2, 24, 2);
    for (int trial = 0; trial < 10; ++trial) {
        const auto H = tk::random_hz({2, 3, tk::uniform_int(rng, 1, 5), 2}, rng);
        EXPECT_TRUE(same_column(kernels::serial::leaf_support(H, dirs, 20),
                                kernels::parallel::leaf_support(H, dirs, 20)));
    }
}

TEST_P(ThreadCount, ContainsIsIdentical)
{
    tk::Rng rng(22);
    for (int trial = 0; trial < 10; ++trial) {
        const auto H = tk::random_hz({2, 3, tk::uniform_int(rng, 1, 4), 1}, rng);
        const auto [lo, hi] = tk::generator_box(H);
        auto points = tk::box_points(lo, hi, 80, rng);
        const auto inside = tk::member_points(H, 20, rng);
        points.insert(points.end(), inside.begin(), inside.end());
        EXPECT_EQ(kernels::serial::contains_points(H, points, kMembershipTol, 20),
                  kernels::parallel::contains_points(H, points, kMembershipTol, 20));
    }
}

TEST_P(ThreadCount, LeafFeasibilityIsIdentical)
{
    tk::Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const Index nb = tk::uniform_int(rng, 1, 5);
        const HybridZonotope H(tk::random_matrix(2, 2, rng), tk::random_matrix(2, nb, rng), Vector::Zero(2),
                               tk::random_matrix(1, 2, rng), tk::random_matrix(1, nb, rng),
                               tk::random_vector(1, rng, 2.0));
        EXPECT_EQ(kernels::serial::leaf_feasibility(H, 20), kernels::parallel::leaf_feasibility(H, 20));
    }
}

TEST_P(ThreadCount, LeafSupportPointsAreIdentical)
{
    tk::Rng rng(24);
    const auto dirs = angle_directions(36);
    for (int trial = 0; trial < 5; ++trial) {
        const auto H = tk::random_hz({2, 3, 3, 1}, rng);
        const auto a = kernels::serial::leaf_support_points(H, dirs, 20);
        const auto b = kernels::parallel::leaf_support_points(H, dirs, 20);
        ASSERT_EQ(a.size(), b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            EXPECT_EQ(a[i].x, b[i].x);
            EXPECT_EQ(a[i].y, b[i].y);
        }
    }
}

TEST_P(ThreadCount, RltLiftIsIdentical)
{
    tk::Rng rng(25);
    for (int trial = 0; trial < 4; ++trial) {
        const auto H = tk::random_hz({2, 2, 3, 1}, rng);
        for (int d = 1; d <= 3; ++d)
            EXPECT_TRUE(tk::identical(build_xd(H, d, Exec::Serial).projected,
                                      build_xd(H, d, Exec::Parallel).projected));
    }
}

TEST_P(ThreadCount, CapExceptionPropagates)
{
    tk::Rng rng(26);
    const auto H = tk::random_hz({1, 1, 6, 0}, rng);
    EXPECT_THROW(kernels::parallel::leaf_feasibility(H, 5), EnumerationCapExceeded);
    EXPECT_THROW(kernels::serial::leaf_feasibility(H, 5), EnumerationCapExceeded);
}

INSTANTIATE_TEST_SUITE_P(Kernels, ThreadCount, ::testing::Values(1, 2, 4));
