#ifndef HZONO_ORACLE_HPP_
#define HZONO_ORACLE_HPP_

#include "hzono/geometry2d.hpp"
#include "hzono/lp.hpp"
#include "hzono/parallel.hpp"
#include "hzono/zonotope.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hzono {

struct OracleOptions {
    std::size_t max_binary = kDefaultMaxBinaryFactors;
    Exec exec = Exec::Parallel;
};

inline constexpr double kMembershipTol = 1e-6;
inline constexpr double kSharpnessTol = 1e-6;

// Factor-space LP of a constrained zonotope: A xi = b with xi in the factor
// box, zero objective.
LinearProgram factor_lp(const ConstrainedZonotope& Z);

/// Repeated support queries on one constrained zonotope. Phase 1 runs once;
/// each query warm-starts from the previous optimal basis.
class SupportEvaluator {
public:
    explicit SupportEvaluator(const ConstrainedZonotope& Z);

    bool empty();
    // max u^T x over the set, nullopt when empty
    std::optional<double> value(const Vector& u);
    // a maximizer in the ambient space
    std::optional<Vector> argmax(const Vector& u);

private:
    std::optional<Vector> solve_factors(const Vector& u);

    Matrix G_;
    Vector c_;
    BoundedSimplex simplex_;
};

std::optional<double> support(const ConstrainedZonotope& Z, const Vector& u);
// Max over leaves; infeasible leaves are skipped.
std::optional<double> support(const HybridZonotope& H, const Vector& u,
                              const OracleOptions& options = {});
std::vector<std::optional<double>> support(const ConstrainedZonotope& Z,
                                           const std::vector<Vector>& directions);
std::vector<std::optional<double>> support(const HybridZonotope& H,
                                           const std::vector<Vector>& directions,
                                           const OracleOptions& options = {});

// Is there a factor vector with |G xi + c - p|_inf <= tol and A xi = b?
bool contains(const ConstrainedZonotope& Z, const Vector& p, double tol = kMembershipTol);
bool contains(const HybridZonotope& H, const Vector& p, double tol = kMembershipTol,
              const OracleOptions& options = {});
// Feasible leaves and their bounding boxes are computed once; each point is
// then tested only against the leaves whose box contains it.
std::vector<bool> contains(const HybridZonotope& H, const std::vector<Vector>& points,
                           double tol = kMembershipTol, const OracleOptions& options = {});

bool is_empty(const ConstrainedZonotope& Z);
bool is_empty(const HybridZonotope& H, const OracleOptions& options = {});

// Leaves whose factor LP is feasible, in enumeration order.
std::vector<Leaf> feasible_leaves(const HybridZonotope& H, const OracleOptions& options = {});

/// All 2n signed axes first, then low-discrepancy unit vectors up to `count`.
/// Deterministic in (n, count, seed).
std::vector<Vector> sample_directions(Index n, std::size_t count, std::uint64_t seed = 0);

enum class SharpnessVerdict { Sharp, NotSharp, Inconclusive };

std::string to_string(SharpnessVerdict verdict);

struct SharpnessReport {
    std::vector<Vector> directions;
    // nullopt marks an empty set in that column
    std::vector<std::optional<double>> relax_support;
    std::vector<std::optional<double>> hull_support;
    double max_gap = 0.0;
    double tol = kSharpnessTol;
    SharpnessVerdict verdict = SharpnessVerdict::Inconclusive;
};

/// Compares support values of relax(H) with max-over-leaves support of H.
/// Hitting the leaf cap gives an Inconclusive report instead of an error.
SharpnessReport check_sharpness(const HybridZonotope& H, std::size_t n_dirs,
                                double tol = kSharpnessTol, std::uint64_t seed = 0,
                                const OracleOptions& options = {});

// Unit directions at angles 2 pi i / n_angles.
std::vector<Vector> angle_directions(std::size_t n_angles);

/// Convex hull of the support points at n_angles uniform directions.
/// Throws DimensionMismatch unless the set lives in R^2 and EmptySet when it
/// is empty.
Polygon boundary_2d(const ConstrainedZonotope& Z, std::size_t n_angles);
double area_2d(const ConstrainedZonotope& Z, std::size_t n_angles);

// Same construction for conv(H), from the support points of every feasible leaf.
Polygon hull_boundary_2d(const HybridZonotope& H, std::size_t n_angles,
                         const OracleOptions& options = {});

namespace kernels {

// Reference implementations, one leaf or point after another.
namespace serial {
std::vector<std::optional<double>> leaf_support(const HybridZonotope& H,
                                                const std::vector<Vector>& directions,
                                                std::size_t max_binary);
std::vector<bool> contains_points(const HybridZonotope& H, const std::vector<Vector>& points,
                                  double tol, std::size_t max_binary);
std::vector<bool> leaf_feasibility(const HybridZonotope& H, std::size_t max_binary);
std::vector<Point2> leaf_support_points(const HybridZonotope& H,
                                        const std::vector<Vector>& directions,
                                        std::size_t max_binary);
}  // namespace serial

// OpenMP over leaves (or points); reductions run in leaf order afterwards.
namespace parallel {
std::vector<std::optional<double>> leaf_support(const HybridZonotope& H,
                                                const std::vector<Vector>& directions,
                                                std::size_t max_binary);
std::vector<bool> contains_points(const HybridZonotope& H, const std::vector<Vector>& points,
                                  double tol, std::size_t max_binary);
std::vector<bool> leaf_feasibility(const HybridZonotope& H, std::size_t max_binary);
std::vector<Point2> leaf_support_points(const HybridZonotope& H,
                                        const std::vector<Vector>& directions,
                                        std::size_t max_binary);
}  // namespace parallel

}  // namespace kernels

}  // namespace hzono

#endif  // HZONO_ORACLE_HPP_
