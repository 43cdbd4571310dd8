#ifndef HZONO_RLT_HPP_
#define HZONO_RLT_HPP_

#include "hzono/index_set.hpp"
#include "hzono/parallel.hpp"
#include "hzono/zonotope.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace hzono {

// Linearized bound-factor product: sum over I subset of J2 of (-1)^|I| w_{J1 u I}.
// Keys are J1 u I; values are +1 or -1. Throws OverlappingIndexSets.
std::map<IndexSet, int> f_coefficients(IndexSet J1, IndexSet J2);

// Where a lifted variable lives in the output factor vector.
struct ColumnRef {
    enum class Kind { Constant, Binary, Continuous };
    Kind kind = Kind::Constant;
    Index index = 0;

    friend bool operator==(const ColumnRef&, const ColumnRef&) = default;
};

enum class SlackKind {
    ProductLower,  // f_d^k(J1,J2) = s
    ProductUpper,  // f_d(J1,J2) - f_d^k(J1,J2) = s
    OrderBound,    // f_D(J1,J2) = s, order D = min(d+1, n_b)
};

struct SlackInfo {
    Index column = 0;
    SlackKind kind = SlackKind::ProductLower;
    IndexSet J1;
    IndexSet J2;
    Index k = -1;  // continuous factor, -1 for OrderBound
};

/// Column assignment of the lifted variables.
///
/// w_{} is the constant 1, w_{i} is binary factor i and v_{{},k} is
/// continuous factor k of the input; everything else gets a fresh continuous
/// column. w_J is allocated for every |J| >= 2 and v_{J,k} for every
/// nonempty J whatever the level.
struct RltVariableTable {
    std::map<IndexSet, ColumnRef> w;
    std::map<std::pair<IndexSet, Index>, ColumnRef> v;
    std::vector<SlackInfo> slacks;

    ColumnRef w_ref(IndexSet J) const { return w.at(J); }
    ColumnRef v_ref(IndexSet J, Index k) const { return v.at({J, k}); }
    std::size_t order_bound_slacks() const;
};

struct RltComplexityReport {
    // closed-form count, which leaves out the order-D bound slacks
    ComplexityTuple nominal;
    ComplexityTuple actual;
    int level = 0;
};

struct RltLift {
    // X_{P,d} in the (x, y) = (xi_b, xi_c) coordinates of the ZO form of H
    HybridZonotope projected;
    RltVariableTable table;
};

/// Level-d RLT system of the factor space of H, as a ZO hybrid zonotope.
///
/// Rows: the equality system multiplied by w_J for |J| <= d (ordered by |J|
/// then mask), then f_d^k = s and f_d - f_d^k = s for every order-d pair and
/// every k, then f_D = s for every order-D pair. Slacks live in [0, 1]. The
/// binary factors are the original ones. Throws LevelOutOfRange unless
/// 1 <= d <= n_b.
RltLift build_xd(const HybridZonotope& H, int d, Exec exec = Exec::Parallel);

// Same set as H with a relaxation between conv(H) and relax(H); ZO form.
// Returns H unchanged when n_b = 0.
HybridZonotope rlt_sharpen(const HybridZonotope& H, int d, Exec exec = Exec::Parallel);

// relax(rlt_sharpen(H, n_b)), which is conv(H).
ConstrainedZonotope rlt_convex_hull(const HybridZonotope& H, Exec exec = Exec::Parallel);

// Closed-form output complexity (n_g', n_b, n_c') of the level-d RLT.
ComplexityTuple rlt_complexity(const ComplexityTuple& t, int d);

RltComplexityReport rlt_report(const HybridZonotope& input, const HybridZonotope& output, int d);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace hzono

#endif  // HZONO_RLT_HPP_
