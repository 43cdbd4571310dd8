#include "hzono/errors.hpp"
#include "hzono/oracle.hpp"
#include "hzono/relu_graph.hpp"
#include "hzono/rlt.hpp"
#include "hzono/set_ops.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace hzono;
namespace tk = hzono::testkit;

namespace {

ReluNetwork random_network(tk::Rng& rng, Index inputs, const std::vector<Index>& widths)
{
    ReluNetwork net;
    for (Index i = 0; i < inputs; ++i)
        net.input_box.emplace_back(-1.0, 1.0);
    Index prev = inputs;
    for (Index w : widths) {
        net.layers.push_back({tk::random_matrix(w, prev, rng), tk::random_vector(w, rng, 0.5)});
        prev = w;
    }
    return net;
}

}  // namespace

TEST(ReluGraph1d, CrossingIntervalHasOneBinary)
{
    const HybridZonotope H = relu_graph_1d(-1.0, 2.0);
    EXPECT_EQ(complexity(H), (ComplexityTuple{4, 1, 2}));
    EXPECT_TRUE(contains(H, vector({-0.5, 0.0})));
    EXPECT_TRUE(contains(H, vector({1.5, 1.5})));
    EXPECT_TRUE(contains(H, vector({0.0, 0.0})));
    EXPECT_FALSE(contains(H, vector({0.5, 0.0})));
    EXPECT_FALSE(contains(H, vector({-0.5, 0.5})));
    EXPECT_FALSE(contains(H, vector({2.5, 2.5})));
}

TEST(ReluGraph1d, RelaxationIsTheTriangle)
{
    const HybridZonotope H = relu_graph_1d(-1.0, 2.0);
    const auto R = convex_relaxation(H);
    EXPECT_NEAR(area_2d(R, 720), 1.0, 1e-6);
    EXPECT_EQ(check_sharpness(H, 64).verdict, SharpnessVerdict::Sharp);
}

TEST(ReluGraph1d, OneSidedIntervalsAreSegments)
{
    const HybridZonotope pos = relu_graph_1d(0.5, 2.0);
    EXPECT_EQ(pos.n_b(), 0);
    EXPECT_TRUE(contains(pos, vector({1.0, 1.0})));
    EXPECT_FALSE(contains(pos, vector({1.0, 0.0})));
    const HybridZonotope neg = relu_graph_1d(-3.0, -1.0);
    EXPECT_EQ(neg.n_b(), 0);
    EXPECT_TRUE(contains(neg, vector({-2.0, 0.0})));
    EXPECT_FALSE(contains(neg, vector({-0.5, 0.0})));
    EXPECT_THROW(relu_graph_1d(1.0, 0.0), EmptyInterval);
}

TEST(ReluNetwork, ValidateRejectsMalformed)
{
    ReluNetwork net = substitute_network();
    EXPECT_NO_THROW(net.validate());
    net.layers[1].b = Vector::Zero(2);
    EXPECT_THROW(net.validate(), DimensionMismatch);
    net = substitute_network();
    net.input_box[0] = {1.0, -1.0};
    EXPECT_THROW(net.validate(), EmptyInterval);
    net = substitute_network();
    net.input_box.clear();
    EXPECT_THROW(net.validate(), DimensionMismatch);
}

TEST(ReluNetwork, PreactivationBoundsContainSamples)
{
    tk::Rng rng(41);
    const ReluNetwork net = random_network(rng, 2, {3, 3, 1});
    const auto bounds = preactivation_bounds(net);
    ASSERT_EQ(bounds.size(), 3U);
    for (int s = 0; s < 200; ++s) {
        Vector a = tk::random_vector(2, rng, 1.0);
        for (std::size_t l = 0; l < net.layers.size(); ++l) {
            const Vector z = net.layers[l].W * a + net.layers[l].b;
            EXPECT_TRUE((z.array() >= bounds[l].lo.array() - 1e-12).all());
            EXPECT_TRUE((z.array() <= bounds[l].hi.array() + 1e-12).all());
            a = l + 1 < net.layers.size() ? Vector(z.cwiseMax(0.0)) : z;
        }
    }
}

TEST(NetworkGraph, ContainsSampledInputOutputPairs)
{
    tk::Rng rng(42);
    for (int trial = 0; trial < 4; ++trial) {
        const ReluNetwork net = random_network(rng, 2, {3, 1});
        const HybridZonotope G = network_graph(net);
        ASSERT_EQ(G.dim(), 3);
        std::vector<Vector> on;
        std::vector<Vector> off;
        for (int s = 0; s < 40; ++s) {
            const Vector x = tk::random_vector(2, rng, 1.0);
            const double y = net.evaluate(x)(0);
            on.push_back(vector({x(0), x(1), y}));
            off.push_back(vector({x(0), x(1), y + 0.05}));
        }
        for (bool v : contains(G, on))
            EXPECT_TRUE(v);
        for (bool v : contains(G, off))
            EXPECT_FALSE(v);
    }
}

TEST(NetworkGraph, TwoHiddenLayers)
{
    tk::Rng rng(43);
    const ReluNetwork net = random_network(rng, 1, {2, 2, 1});
    const HybridZonotope G = network_graph(net);
    for (int s = 0; s < 30; ++s) {
        const double x = tk::uniform(rng, -1.0, 1.0);
        const double y = net.evaluate(vector({x}))(0);
        EXPECT_TRUE(contains(G, vector({x, y})));
        EXPECT_FALSE(contains(G, vector({x, y - 0.05})));
    }
}

TEST(LevelSet, MatchesNetworkThreshold)
{
    const ReluNetwork net = substitute_network();
    const HybridZonotope X = level_set_above(net, 0.5);
    EXPECT_EQ(X.dim(), 2);
    tk::Rng rng(44);
    std::vector<Vector> points;
    std::vector<bool> expected;
    for (int s = 0; s < 300; ++s) {
        const Vector x = tk::random_vector(2, rng, 2.0);
        const double y = net.evaluate(x)(0);
        // skip points too close to the level curve for a sampled comparison
        if (std::abs(y - 0.5) < 1e-3)
            continue;
        points.push_back(x);
        expected.push_back(y >= 0.5);
    }
    EXPECT_EQ(contains(X, points), expected);
    EXPECT_THROW(level_set_above(random_network(rng, 2, {2, 2}), 0.0), DimensionMismatch);
}

TEST(LevelSet, SubstituteIsNonconvexAndRltRepairsIt)
{
    const HybridZonotope X = level_set_above(substitute_network(), 0.5);
    EXPECT_EQ(check_sharpness(X, 64).verdict, SharpnessVerdict::NotSharp);
    const auto sharp = rlt_sharpen(X, static_cast<int>(X.n_b()));
    EXPECT_EQ(check_sharpness(sharp, 64).verdict, SharpnessVerdict::Sharp);
}
