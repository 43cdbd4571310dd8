#ifndef HZONO_RELU_GRAPH_HPP_
#define HZONO_RELU_GRAPH_HPP_

#include "hzono/matrix.hpp"
#include "hzono/zonotope.hpp"

#include <utility>
#include <vector>

namespace hzono {

struct DenseLayer {
    Matrix W;
    Vector b;
};

// Feedforward network; ReLU after every layer except the last.
struct ReluNetwork {
    std::vector<DenseLayer> layers;
    std::vector<std::pair<double, double>> input_box;

    Index input_dim() const { return static_cast<Index>(input_box.size()); }
    Index output_dim() const;

    // Throws DimensionMismatch / EmptyInterval on malformed networks.
    void validate() const;
    Vector evaluate(const Vector& x) const;
};

struct Bounds {
    Vector lo;
    Vector hi;
};

// Interval arithmetic bounds of every layer's preactivation over the input box.
std::vector<Bounds> preactivation_bounds(const ReluNetwork& net);

/// {(t, max(0, t)) | t in [lo, hi]}, PM1 form.
///
/// When lo < 0 < hi the two pieces are joined by a one-binary disjunctive
/// encoding (4 continuous factors, 2 constraints) whose relaxation is the
/// triangle (lo,0), (0,0), (hi,hi). Otherwise the graph is one segment and a
/// zonotope is returned. Throws EmptyInterval when lo > hi.
HybridZonotope relu_graph_1d(double lo, double hi);

/// {(x, N(x)) | x in the input box}, PM1 form.
///
/// Each hidden layer takes the product of the graph so far with the per-neuron
/// ReLU graphs, couples preactivations to the previous layer through a
/// generalized intersection, and drops the preactivation coordinates.
HybridZonotope network_graph(const ReluNetwork& net);

// {x in input box | N(x) >= threshold}; the network must have one output.
HybridZonotope level_set_above(const ReluNetwork& net, double threshold);

// Small two-input network with three ReLU neurons whose superlevel sets are
// nonconvex; it stands in for a trained network in the level-set demo.
ReluNetwork substitute_network();

}  // namespace hzono

#endif  // HZONO_RELU_GRAPH_HPP_
