#ifndef HZONO_SET_OPS_HPP_
#define HZONO_SET_OPS_HPP_

#include "hzono/matrix.hpp"
#include "hzono/zonotope.hpp"

#include <vector>

namespace hzono {

// Generators concatenated, centers summed, constraints block-diagonal.
HybridZonotope minkowski_sum(const HybridZonotope& Z1, const HybridZonotope& Z2);

// <R Gc, R Gb, R c + s, Ac, Ab, b>
HybridZonotope affine_map(const HybridZonotope& H, const Matrix& R, const Vector& s);
HybridZonotope affine_map(const HybridZonotope& H, const Matrix& R);

HybridZonotope cartesian_product(const HybridZonotope& Z1, const HybridZonotope& Z2);

/// {x in X | R x in Z}.
///
/// X keeps its generators, Z's factors are appended with zero generators and
/// n(Z) coupling rows R (Gc xi_c + Gb xi_b) - (Gc_Z eta_c + Gb_Z eta_b) = c_Z - R c
/// are added after the stacked constraints of X and Z.
HybridZonotope generalized_intersection(const HybridZonotope& X, const HybridZonotope& Z,
                                        const Matrix& R);

/// {x in H | a^T x >= k}, as an intersection with the interval [k, M] where M
/// bounds a^T x over relax(H) (one LP) plus a small margin.
HybridZonotope halfspace_intersection(const HybridZonotope& H, const Vector& a, double k);

// Margin added to the LP bound of halfspace_intersection.
inline constexpr double kHalfspaceMargin = 1e-6;

/// Z union {x}. Z must be in ZO form; the result is in ZO form with
/// complexity (2 n_g + n_b, n_b + 1, n_g + n_b + n_c). All zero blocks are
/// kept so that the complexity is exact.
HybridZonotope union_with_point(const HybridZonotope& Z, const Vector& x);

/// Union of N sets through U_i = (Z_i x {1}) union {0}, the Minkowski sum of
/// the U_i, the hyperplane cut on the last coordinate and the projection back
/// to R^n. Inputs are converted to ZO form; the result is ZO form.
HybridZonotope union_of(const std::vector<HybridZonotope>& sets);

// <[Gc Gb], c, [Ac Ab], b>, same factor form.
ConstrainedZonotope convex_relaxation(const HybridZonotope& H);

}  // namespace hzono

#endif  // HZONO_SET_OPS_HPP_
