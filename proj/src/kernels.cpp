#include "hzono/oracle.hpp"

#include "hzono/set_ops.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>

namespace hzono {

int max_threads() { return omp_get_max_threads(); }

namespace kernels {

namespace {

using Column = std::vector<std::optional<double>>;

Column one_leaf_support(const HybridZonotope& H, std::uint64_t index,
                        const std::vector<Vector>& directions)
{
    SupportEvaluator eval(leaf(H, leaf_assignment(H, index)));
    Column out(directions.size());
    if (eval.empty())
        return out;
    for (std::size_t k = 0; k < directions.size(); ++k)
        out[k] = eval.value(directions[k]);
    return out;
}

std::vector<Point2> one_leaf_points(const HybridZonotope& H, std::uint64_t index,
                                    const std::vector<Vector>& directions)
{
    SupportEvaluator eval(leaf(H, leaf_assignment(H, index)));
    std::vector<Point2> out;
    if (eval.empty())
        return out;
    out.reserve(directions.size());
    for (const auto& u : directions) {
        const auto x = eval.argmax(u);
        out.push_back({(*x)(0), (*x)(1)});
    }
    return out;
}

// Elementwise max in leaf order.
Column reduce_max(const std::vector<Column>& per_leaf, std::size_t n_dirs)
{
    Column out(n_dirs);
    for (const auto& col : per_leaf)
        for (std::size_t k = 0; k < n_dirs; ++k)
            if (col[k] && (!out[k] || *col[k] > *out[k]))
                out[k] = col[k];
    return out;
}

// A feasible leaf with its axis-aligned bounding box.
struct BoxedLeaf {
    ConstrainedZonotope set;
    Vector lo;
    Vector hi;
};

std::optional<BoxedLeaf> boxed_leaf(const HybridZonotope& H, std::uint64_t index)
{
    ConstrainedZonotope z = leaf(H, leaf_assignment(H, index));
    SupportEvaluator eval(z);
    if (eval.empty())
        return std::nullopt;
    const Index n = H.dim();
    BoxedLeaf out{std::move(z), Vector(n), Vector(n)};
    for (Index k = 0; k < n; ++k) {
        Vector u = Vector::Zero(n);
        u(k) = 1.0;
        out.hi(k) = *eval.value(u);
        u(k) = -1.0;
        out.lo(k) = -*eval.value(u);
    }
    return out;
}

std::vector<BoxedLeaf> compact(std::vector<std::optional<BoxedLeaf>>& per_leaf)
{
    std::vector<BoxedLeaf> out;
    for (auto& b : per_leaf)
        if (b)
            out.push_back(std::move(*b));
    return out;
}

bool contains_one(const std::vector<BoxedLeaf>& boxes, const Vector& p, double tol)
{
    for (const auto& box : boxes) {
        const double margin = tol + 1e-9 * (1.0 + box.hi.cwiseAbs().maxCoeff() + box.lo.cwiseAbs().maxCoeff());
        if ((p.array() < box.lo.array() - margin).any() || (p.array() > box.hi.array() + margin).any())
            continue;
        if (contains(box.set, p, tol))
            return true;
    }
    return false;
}

bool leaf_is_feasible(const HybridZonotope& H, std::uint64_t index)
{
    BoundedSimplex simplex(factor_lp(leaf(H, leaf_assignment(H, index))));
    return simplex.feasible();
}

// OpenMP loop that carries the first exception out of the parallel region.
template <typename Body>
void omp_for(std::int64_t n, int chunk, Body&& body)
{
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, chunk)
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            body(i);
        } catch (...) {
#pragma omp critical(hzono_kernel_error)
            if (!error)
                error = std::current_exception();
        }
    }
    if (error)
        std::rethrow_exception(error);
}

std::vector<bool> to_bool(const std::vector<char>& flags)
{
    return std::vector<bool>(flags.begin(), flags.end());
}

}  // namespace

namespace serial {

std::vector<std::optional<double>> leaf_support(const HybridZonotope& H,
                                                const std::vector<Vector>& directions,
                                                std::size_t max_binary)
{
    const std::uint64_t count = leaf_count(H, max_binary);
    std::vector<Column> per_leaf(count);
    for (std::uint64_t i = 0; i < count; ++i)
        per_leaf[i] = one_leaf_support(H, i, directions);
    return reduce_max(per_leaf, directions.size());
}

std::vector<bool> contains_points(const HybridZonotope& H, const std::vector<Vector>& points,
                                  double tol, std::size_t max_binary)
{
    const std::uint64_t count = leaf_count(H, max_binary);
    std::vector<std::optional<BoxedLeaf>> per_leaf(count);
    for (std::uint64_t i = 0; i < count; ++i)
        per_leaf[i] = boxed_leaf(H, i);
    const std::vector<BoxedLeaf> boxes = compact(per_leaf);
    std::vector<char> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        out[i] = contains_one(boxes, points[i], tol);
    return to_bool(out);
}

std::vector<bool> leaf_feasibility(const HybridZonotope& H, std::size_t max_binary)
{
    const std::uint64_t count = leaf_count(H, max_binary);
    std::vector<char> out(count);
    for (std::uint64_t i = 0; i < count; ++i)
        out[i] = leaf_is_feasible(H, i);
    return to_bool(out);
}

std::vector<Point2> leaf_support_points(const HybridZonotope& H,
                                        const std::vector<Vector>& directions,
                                        std::size_t max_binary)
{
    const std::uint64_t count = leaf_count(H, max_binary);
    std::vector<Point2> out;
    for (std::uint64_t i = 0; i < count; ++i) {
        const auto pts = one_leaf_points(H, i, directions);
        out.insert(out.end(), pts.begin(), pts.end());
    }
    return out;
}

}  // namespace serial

namespace parallel {

std::vector<std::optional<double>> leaf_support(const HybridZonotope& H,
                                                const std::vector<Vector>& directions,
                                                std::size_t max_binary)
{
    const auto count = static_cast<std::int64_t>(leaf_count(H, max_binary));
    std::vector<Column> per_leaf(static_cast<std::size_t>(count));
    omp_for(count, 1, [&](std::int64_t i) {
        per_leaf[static_cast<std::size_t>(i)] =
            one_leaf_support(H, static_cast<std::uint64_t>(i), directions);
    });
    return reduce_max(per_leaf, directions.size());
}

std::vector<bool> contains_points(const HybridZonotope& H, const std::vector<Vector>& points,
                                  double tol, std::size_t max_binary)
{
    const auto count = static_cast<std::int64_t>(leaf_count(H, max_binary));
    std::vector<std::optional<BoxedLeaf>> per_leaf(static_cast<std::size_t>(count));
    omp_for(count, 1, [&](std::int64_t i) {
        per_leaf[static_cast<std::size_t>(i)] = boxed_leaf(H, static_cast<std::uint64_t>(i));
    });
    const std::vector<BoxedLeaf> boxes = compact(per_leaf);
    const auto n = static_cast<std::int64_t>(points.size());
    std::vector<char> out(points.size());
    omp_for(n, 4, [&](std::int64_t i) {
        out[static_cast<std::size_t>(i)] = contains_one(boxes, points[static_cast<std::size_t>(i)], tol);
    });
    return to_bool(out);
}

std::vector<bool> leaf_feasibility(const HybridZonotope& H, std::size_t max_binary)
{
    const auto count = static_cast<std::int64_t>(leaf_count(H, max_binary));
    std::vector<char> out(static_cast<std::size_t>(count));
    omp_for(count, 1, [&](std::int64_t i) {
        out[static_cast<std::size_t>(i)] = leaf_is_feasible(H, static_cast<std::uint64_t>(i));
    });
    return to_bool(out);
}

std::vector<Point2> leaf_support_points(const HybridZonotope& H,
                                        const std::vector<Vector>& directions,
                                        std::size_t max_binary)
{
    const auto count = static_cast<std::int64_t>(leaf_count(H, max_binary));
    std::vector<std::vector<Point2>> per_leaf(static_cast<std::size_t>(count));
    omp_for(count, 1, [&](std::int64_t i) {
        per_leaf[static_cast<std::size_t>(i)] =
            one_leaf_points(H, static_cast<std::uint64_t>(i), directions);
    });
    std::vector<Point2> out;
    for (const auto& pts : per_leaf)
        out.insert(out.end(), pts.begin(), pts.end());
    return out;
}

}  // namespace parallel

}  // namespace kernels

}  // namespace hzono
