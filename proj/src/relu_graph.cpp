#include "hzono/relu_graph.hpp"

#include "hzono/errors.hpp"
#include "hzono/set_ops.hpp"

#include <string>

namespace hzono {

Index ReluNetwork::output_dim() const
{
    return layers.empty() ? input_dim() : layers.back().W.rows();
}

void ReluNetwork::validate() const
{
    if (input_box.empty())
        throw DimensionMismatch("network: input box is empty");
    for (const auto& [lo, hi] : input_box)
        if (lo > hi)
            throw EmptyInterval("network: input interval with lo > hi");
    Index width = input_dim();
    for (std::size_t l = 0; l < layers.size(); ++l) {
        if (layers[l].W.cols() != width)
            throw DimensionMismatch("network: layer " + std::to_string(l) +
                                    " input width does not chain");
        if (layers[l].b.size() != layers[l].W.rows())
            throw DimensionMismatch("network: layer " + std::to_string(l) + " bias length");
        width = layers[l].W.rows();
    }
}

Vector ReluNetwork::evaluate(const Vector& x) const
{
    Vector h = x;
    for (std::size_t l = 0; l < layers.size(); ++l) {
        h = layers[l].W * h + layers[l].b;
        if (l + 1 < layers.size())
            h = h.cwiseMax(0.0);
    }
    return h;
}

std::vector<Bounds> preactivation_bounds(const ReluNetwork& net)
{
    net.validate();
    Vector lo(net.input_dim());
    Vector hi(net.input_dim());
    for (Index i = 0; i < net.input_dim(); ++i) {
        lo(i) = net.input_box[static_cast<std::size_t>(i)].first;
        hi(i) = net.input_box[static_cast<std::size_t>(i)].second;
    }
    std::vector<Bounds> out;
    for (std::size_t l = 0; l < net.layers.size(); ++l) {
        const Matrix& W = net.layers[l].W;
        const Matrix Wp = W.cwiseMax(0.0);
        const Matrix Wn = W.cwiseMin(0.0);
        Bounds z{Wp * lo + Wn * hi + net.layers[l].b, Wp * hi + Wn * lo + net.layers[l].b};
        out.push_back(z);
        lo = z.lo.cwiseMax(0.0);
        hi = z.hi.cwiseMax(0.0);
    }
    return out;
}

HybridZonotope relu_graph_1d(double lo, double hi)
{
    if (lo > hi)
        throw EmptyInterval("relu_graph_1d: lo > hi");
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    if (lo >= 0.0)
        return zonotope(matrix({{half}, {half}}), vector({mid, mid}));
    if (hi <= 0.0)
        return zonotope(matrix({{half}, {0.0}}), vector({mid, 0.0}));

    // ZO factors (a, c, s1, s2) and sigma:
    //   (t, s) = (lo a + hi c, hi c),  a + s1 = 1 - sigma,  c + s2 = sigma
    const HybridZonotope zo(matrix({{lo, hi, 0.0, 0.0}, {0.0, hi, 0.0, 0.0}}), zeros(2, 1),
                            zeros(2), matrix({{1.0, 0.0, 1.0, 0.0}, {0.0, 1.0, 0.0, 1.0}}),
                            matrix({{1.0}, {-1.0}}), vector({1.0, 0.0}), FactorForm::ZO);
    return convert_form(zo, FactorForm::PM1);
}

HybridZonotope network_graph(const ReluNetwork& net)
{
    const std::vector<Bounds> bounds = preactivation_bounds(net);
    const Index n0 = net.input_dim();

    Vector lo(n0);
    Vector hi(n0);
    for (Index i = 0; i < n0; ++i) {
        lo(i) = net.input_box[static_cast<std::size_t>(i)].first;
        hi(i) = net.input_box[static_cast<std::size_t>(i)].second;
    }
    // graph so far lives in (x, h); start with h = x
    HybridZonotope graph = affine_map(box(lo, hi), vcat(identity(n0), identity(n0)));
    Index width = n0;

    for (std::size_t l = 0; l < net.layers.size(); ++l) {
        const DenseLayer& layer = net.layers[l];
        const Index k = layer.W.rows();
        if (l + 1 == net.layers.size()) {
            // linear output layer
            Matrix R = zeros(n0 + k, n0 + width);
            R.topLeftCorner(n0, n0) = identity(n0);
            R.bottomRightCorner(k, width) = layer.W;
            graph = affine_map(graph, R, vcat(zeros(n0), layer.b));
            width = k;
            break;
        }

        HybridZonotope neurons = relu_graph_1d(bounds[l].lo(0), bounds[l].hi(0));
        for (Index i = 1; i < k; ++i)
            neurons = cartesian_product(neurons, relu_graph_1d(bounds[l].lo(i), bounds[l].hi(i)));

        // (x, h, t1, s1, ..., tk, sk) with t = W h + b
        const HybridZonotope lifted = cartesian_product(graph, neurons);
        Matrix couple = zeros(k, lifted.dim());
        couple.block(0, n0, k, width) = -layer.W;
        for (Index i = 0; i < k; ++i)
            couple(i, n0 + width + 2 * i) = 1.0;
        const HybridZonotope coupled = generalized_intersection(lifted, point(layer.b), couple);

        // keep (x, s)
        Matrix keep = zeros(n0 + k, lifted.dim());
        keep.topLeftCorner(n0, n0) = identity(n0);
        for (Index i = 0; i < k; ++i)
            keep(n0 + i, n0 + width + 2 * i + 1) = 1.0;
        graph = affine_map(coupled, keep);
        width = k;
    }
    return graph;
}

HybridZonotope level_set_above(const ReluNetwork& net, double threshold)
{
    if (net.output_dim() != 1)
        throw DimensionMismatch("level_set_above: network must have a single output");
    const HybridZonotope graph = network_graph(net);
    const Index n0 = net.input_dim();
    Vector up = zeros(n0 + 1);
    up(n0) = 1.0;
    const HybridZonotope above = halfspace_intersection(graph, up, threshold);
    return affine_map(above, hcat(identity(n0), zeros(n0, 1)));
}

ReluNetwork substitute_network()
{
    ReluNetwork net;
    net.input_box = {{-2.0, 2.0}, {-2.0, 2.0}};
    net.layers.push_back({matrix({{1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}}), vector({-1.0, -1.0, -1.5})});
    net.layers.push_back({matrix({{1.0, 1.0, 1.0}}), vector({0.0})});
    return net;
}

}  // namespace hzono
