#include "hzono/errors.hpp"
#include "hzono/oracle.hpp"
#include "hzono/rlt.hpp"
#include "hzono/set_ops.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <chrono>

using namespace hzono;
namespace tk = hzono::testkit;

namespace {

// Evaluates every lifted variable at a point (x, y) of the ZO factor space.
Vector lift_point(const RltLift& lift, const Vector& x, const Vector& y)
{
    const HybridZonotope& P = lift.projected;
    Vector z = Vector::Zero(P.n_g());
    auto product = [&](IndexSet J) {
        double v = 1.0;
        for (int j : J.elements())
            v *= x(j);
        return v;
    };
    for (const auto& [J, ref] : lift.table.w)
        if (ref.kind == ColumnRef::Kind::Continuous)
            z(ref.index) = product(J);
    for (const auto& [key, ref] : lift.table.v)
        z(ref.index) = product(key.first) * y(key.second);
    const Vector residual = P.Ac() * z + P.Ab() * x - P.b();
    for (const auto& s : lift.table.slacks) {
        Index row = -1;
        for (Index i = 0; i < P.n_c() && row < 0; ++i)
            if (P.Ac()(i, s.column) == -1.0)
                row = i;
        z(s.column) = residual(row);
    }
    return z;
}

HybridZonotope l_shape()
{
    return union_of({box(vector({0.0, 0.0}), vector({3.0, 1.0})), box(vector({0.0, 0.0}), vector({1.0, 3.0}))});
}

std::vector<std::optional<double>> relax_support(const HybridZonotope& H, const std::vector<Vector>& dirs)
{
    return support(convex_relaxation(H), dirs);
}

}  // namespace

TEST(FCoefficients, SignsAlternateWithSubsetSize)
{
    const auto f = f_coefficients(IndexSet::of({0}), IndexSet::of({1, 2}));
    ASSERT_EQ(f.size(), 4U);
    EXPECT_EQ(f.at(IndexSet::of({0})), 1);
    EXPECT_EQ(f.at(IndexSet::of({0, 1})), -1);
    EXPECT_EQ(f.at(IndexSet::of({0, 2})), -1);
    EXPECT_EQ(f.at(IndexSet::of({0, 1, 2})), 1);
    EXPECT_EQ(f_coefficients(IndexSet(), IndexSet()).size(), 1U);
    EXPECT_THROW(f_coefficients(IndexSet::of({0, 1}), IndexSet::of({1})), OverlappingIndexSets);
}

TEST(FCoefficients, EvaluatesBoundFactorProduct)
{
    // prod_{J1} x_j prod_{J2} (1 - x_j) at binary points
    const IndexSet J1 = IndexSet::of({1});
    const IndexSet J2 = IndexSet::of({0, 2});
    const auto f = f_coefficients(J1, J2);
    for (std::uint32_t mask = 0; mask < 8; ++mask) {
        auto bit = [&](int j) { return static_cast<double>((mask >> j) & 1U); };
        double lin = 0.0;
        for (const auto& [S, sign] : f) {
            double w = 1.0;
            for (int j : S.elements())
                w *= bit(j);
            lin += sign * w;
        }
        EXPECT_DOUBLE_EQ(lin, bit(1) * (1.0 - bit(0)) * (1.0 - bit(2)));
    }
}

TEST(RltComplexity, PublishedInstances)
{
    EXPECT_EQ(rlt_complexity({21, 5, 14}, 5), (ComplexityTuple{2042, 5, 1792}));
    EXPECT_EQ(rlt_complexity({21, 5, 14}, 1), (ComplexityTuple{1118, 5, 504}));
    EXPECT_EQ(rlt_complexity({1, 1, 0}, 1), (ComplexityTuple{6, 1, 4}));
}

TEST(RltComplexity, FullLevelClosedForm)
{
    for (std::size_t ng = 0; ng <= 4; ++ng)
        for (std::size_t nb = 1; nb <= 6; ++nb)
            for (std::size_t nc = 0; nc <= 3; ++nc) {
                const auto t = rlt_complexity({ng, nb, nc}, static_cast<int>(nb));
                EXPECT_EQ(t.n_g, (std::size_t{1} << nb) * (3 * ng + 1) - nb - 1);
                EXPECT_EQ(t.n_c, (std::size_t{1} << nb) * (nc + 2 * ng));
            }
}

TEST(RltComplexity, LevelRangeIsChecked)
{
    EXPECT_THROW(rlt_complexity({2, 3, 1}, 0), LevelOutOfRange);
    EXPECT_THROW(rlt_complexity({2, 3, 1}, 4), LevelOutOfRange);
    EXPECT_THROW(rlt_complexity({2, 0, 1}, 1), LevelOutOfRange);
    tk::Rng rng(31);
    const auto H = tk::random_hz({2, 2, 2, 1}, rng);
    EXPECT_THROW(rlt_sharpen(H, 3), LevelOutOfRange);
    EXPECT_THROW(rlt_sharpen(H, 0), LevelOutOfRange);
}

TEST(RltSharpen, ConstrainedZonotopeIsUnchanged)
{
    tk::Rng rng(32);
    const HybridZonotope H(tk::random_cz(2, 3, 1, rng));
    EXPECT_TRUE(tk::identical(rlt_sharpen(H, 1), H));
    EXPECT_TRUE(tk::identical(rlt_convex_hull(H), H.as_constrained_zonotope()));
}

TEST(RltSharpen, ActualComplexityAddsOrderBoundSlacks)
{
    tk::Rng rng(33);
    for (int nb = 1; nb <= 4; ++nb)
        for (int d = 1; d <= nb; ++d) {
            const auto H = tk::random_hz({2, 2, static_cast<Index>(nb), 2}, rng);
            const auto out = rlt_sharpen(H, d);
            const auto report = rlt_report(H, out, d);
            const int D = std::min(d + 1, nb);
            const std::size_t extra = (std::size_t{1} << D) * binomial(nb, D);
            EXPECT_EQ(report.nominal, rlt_complexity(complexity(H), d));
            EXPECT_EQ(report.actual.n_g, report.nominal.n_g + extra);
            EXPECT_EQ(report.actual.n_b, report.nominal.n_b);
            EXPECT_EQ(report.actual.n_c, report.nominal.n_c + extra);
            EXPECT_EQ(build_xd(H, d).table.order_bound_slacks(), extra);
            EXPECT_EQ(out.form(), FactorForm::ZO);
            EXPECT_EQ(out.dim(), H.dim());
        }
}

TEST(RltSharpen, LiftedColumnsHaveZeroGenerators)
{
    tk::Rng rng(34);
    const auto H = tk::random_hz({2, 3, 3, 1}, rng);
    const auto Z = convert_form(H, FactorForm::ZO);
    const auto out = rlt_sharpen(H, 2);
    const RltLift lift = build_xd(H, 2);
    for (Index k = 0; k < Z.n_g(); ++k)
        EXPECT_EQ(out.Gc().col(lift.table.v_ref(IndexSet(), k).index), Z.Gc().col(k));
    EXPECT_EQ(out.Gb(), Z.Gb());
    for (const auto& s : lift.table.slacks)
        EXPECT_TRUE(out.Gc().col(s.column).isZero());
}

TEST(RltLift, SlacksStayInUnitIntervalAtFeasiblePoints)
{
    tk::Rng rng(35);
    for (int trial = 0; trial < 10; ++trial) {
        const auto H = tk::random_hz({2, 2, 3, 1}, rng);
        const auto Z = convert_form(H, FactorForm::ZO);
        for (int d = 1; d <= 3; ++d) {
            const RltLift lift = build_xd(H, d);
            for (const auto& l : leaves(Z)) {
                const Vector x = Eigen::Map<const Eigen::VectorXd>(l.assignment.bits.data(),
                                                                    static_cast<Index>(l.assignment.bits.size()));
                for (const auto& y : tk::factor_vertices(l.set)) {
                    const Vector z = lift_point(lift, x, y);
                    const Vector residual = lift.projected.Ac() * z + lift.projected.Ab() * x - lift.projected.b();
                    EXPECT_LT(residual.cwiseAbs().maxCoeff(), 1e-9);
                    for (const auto& s : lift.table.slacks) {
                        EXPECT_GE(z(s.column), -1e-9);
                        EXPECT_LE(z(s.column), 1.0 + 1e-9);
                    }
                }
            }
        }
    }
}

TEST(RltSharpen, SetIsUnchangedAtEveryLevel)
{
    tk::Rng rng(36);
    for (int trial = 0; trial < 6; ++trial) {
        const auto H = tk::random_hz({2, 2, 3, 1}, rng);
        const auto [lo, hi] = tk::generator_box(H);
        auto points = tk::box_points(lo, hi, 60, rng);
        const auto inside = tk::member_points(H, 40, rng);
        points.insert(points.end(), inside.begin(), inside.end());
        std::vector<bool> expected;
        for (const auto& p : points)
            expected.push_back(tk::brute_contains(H, p));
        for (int d = 1; d <= 3; ++d)
            EXPECT_EQ(contains(rlt_sharpen(H, d), points), expected) << "level " << d;
    }
}

TEST(RltSharpen, RelaxationTightensMonotonically)
{
    tk::Rng rng(37);
    const auto dirs = sample_directions(2, 64, 1);
    for (int trial = 0; trial < 6; ++trial) {
        const auto H = tk::random_hz({2, 2, 3, 1}, rng);
        auto previous = relax_support(H, dirs);
        for (int d = 1; d <= 3; ++d) {
            const auto current = relax_support(rlt_sharpen(H, d), dirs);
            for (std::size_t k = 0; k < dirs.size(); ++k)
                EXPECT_LE(*current[k], *previous[k] + 1e-6);
            previous = current;
        }
    }
}

TEST(RltConvexHull, MatchesLeafSupport)
{
    tk::Rng rng(38);
    const auto dirs = sample_directions(2, 64, 2);
    for (int trial = 0; trial < 8; ++trial) {
        const auto H = tk::random_hz({2, 2, tk::uniform_int(rng, 1, 3), tk::uniform_int(rng, 0, 2)}, rng);
        const auto hull = support(rlt_convex_hull(H), dirs);
        EXPECT_LT(tk::max_abs_difference(hull, tk::brute_support(H, dirs)), 1e-6);
    }
}

TEST(RltConvexHull, TwoPointSetGivesSegment)
{
    const HybridZonotope H(Matrix(), matrix({{1.0}}), vector({0.0}), Matrix(), Matrix(), Vector());
    const auto hull = rlt_convex_hull(H);
    EXPECT_NEAR(*support(hull, vector({1.0})), 1.0, 1e-9);
    EXPECT_NEAR(*support(hull, vector({-1.0})), 1.0, 1e-9);
    EXPECT_TRUE(contains(hull, vector({0.3})));
}

TEST(RltConvexHull, LShapedUnion)
{
    const HybridZonotope H = l_shape();
    const auto dirs = sample_directions(2, 64, 0);
    EXPECT_LT(tk::max_abs_difference(support(rlt_convex_hull(H), dirs), tk::brute_support(H, dirs)), 1e-6);
    EXPECT_EQ(check_sharpness(rlt_sharpen(H, static_cast<int>(H.n_b())), 64).verdict, SharpnessVerdict::Sharp);
}

TEST(RltSharpen, SerialAndParallelBuildsAgree)
{
    tk::Rng rng(39);
    const auto H = tk::random_hz({2, 3, 4, 2}, rng);
    for (int d = 1; d <= 4; ++d)
        EXPECT_TRUE(tk::identical(rlt_sharpen(H, d, Exec::Serial), rlt_sharpen(H, d, Exec::Parallel)));
}
