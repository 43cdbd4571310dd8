#include "hzono/oracle.hpp"

#include "hzono/errors.hpp"
#include "hzono/set_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace hzono {

LinearProgram factor_lp(const ConstrainedZonotope& Z)
{
    LinearProgram lp;
    lp.objective = Vector::Zero(Z.n_g());
    lp.A_eq = Z.A();
    lp.b_eq = Z.b();
    lp.lower = Vector::Constant(Z.n_g(), factor_lower(Z.form()));
    lp.upper = Vector::Constant(Z.n_g(), factor_upper(Z.form()));
    return lp;
}

SupportEvaluator::SupportEvaluator(const ConstrainedZonotope& Z)
    : G_(Z.G()), c_(Z.c()), simplex_(factor_lp(Z))
{
}

bool SupportEvaluator::empty() { return !simplex_.feasible(); }

std::optional<Vector> SupportEvaluator::solve_factors(const Vector& u)
{
    if (u.size() != c_.size())
        throw DimensionMismatch("support: direction length differs from set dimension");
    if (!simplex_.feasible())
        return std::nullopt;
    const Vector cost = -(G_.transpose() * u);
    const LpResult r = simplex_.minimize(cost);
    if (!r.optimal())
        return std::nullopt;
    return r.point;
}

std::optional<double> SupportEvaluator::value(const Vector& u)
{
    const auto xi = solve_factors(u);
    if (!xi)
        return std::nullopt;
    return u.dot(c_) + (G_.transpose() * u).dot(*xi);
}

std::optional<Vector> SupportEvaluator::argmax(const Vector& u)
{
    const auto xi = solve_factors(u);
    if (!xi)
        return std::nullopt;
    return Vector(G_ * *xi + c_);
}

std::optional<double> support(const ConstrainedZonotope& Z, const Vector& u)
{
    SupportEvaluator eval(Z);
    return eval.value(u);
}

std::vector<std::optional<double>> support(const ConstrainedZonotope& Z,
                                           const std::vector<Vector>& directions)
{
    SupportEvaluator eval(Z);
    std::vector<std::optional<double>> out;
    out.reserve(directions.size());
    for (const auto& u : directions)
        out.push_back(eval.value(u));
    return out;
}

std::vector<std::optional<double>> support(const HybridZonotope& H,
                                           const std::vector<Vector>& directions,
                                           const OracleOptions& options)
{
    for (const auto& u : directions)
        if (u.size() != H.dim())
            throw DimensionMismatch("support: direction length differs from set dimension");
    if (H.n_b() == 0)
        return support(H.as_constrained_zonotope(), directions);
    return options.exec == Exec::Serial
               ? kernels::serial::leaf_support(H, directions, options.max_binary)
               : kernels::parallel::leaf_support(H, directions, options.max_binary);
}

std::optional<double> support(const HybridZonotope& H, const Vector& u, const OracleOptions& options)
{
    return support(H, std::vector<Vector>{u}, options).front();
}

bool contains(const ConstrainedZonotope& Z, const Vector& p, double tol)
{
    if (p.size() != Z.dim())
        throw DimensionMismatch("contains: point length differs from set dimension");
    const Index n = Z.dim();
    const Index ng = Z.n_g();
    const Index nc = Z.n_c();

    // [G I -I; A 0 0] [xi; e+; e-] = [p - c; b], e+- in [0, tol]
    LinearProgram lp;
    lp.A_eq = Matrix::Zero(n + nc, ng + 2 * n);
    lp.A_eq.topLeftCorner(n, ng) = Z.G();
    lp.A_eq.block(0, ng, n, n) = identity(n);
    lp.A_eq.block(0, ng + n, n, n) = -identity(n);
    lp.A_eq.bottomLeftCorner(nc, ng) = Z.A();
    lp.b_eq = vcat(Vector(p - Z.c()), Z.b());
    lp.lower = Vector::Zero(ng + 2 * n);
    lp.upper = Vector::Constant(ng + 2 * n, tol);
    lp.lower.head(ng).setConstant(factor_lower(Z.form()));
    lp.upper.head(ng).setConstant(factor_upper(Z.form()));
    lp.objective = Vector::Zero(ng + 2 * n);
    BoundedSimplex simplex(lp);
    return simplex.feasible();
}

bool contains(const HybridZonotope& H, const Vector& p, double tol, const OracleOptions& options)
{
    return contains(H, std::vector<Vector>{p}, tol, options).front();
}

std::vector<bool> contains(const HybridZonotope& H, const std::vector<Vector>& points, double tol,
                           const OracleOptions& options)
{
    for (const auto& p : points)
        if (p.size() != H.dim())
            throw DimensionMismatch("contains: point length differs from set dimension");
    return options.exec == Exec::Serial
               ? kernels::serial::contains_points(H, points, tol, options.max_binary)
               : kernels::parallel::contains_points(H, points, tol, options.max_binary);
}

bool is_empty(const ConstrainedZonotope& Z)
{
    BoundedSimplex simplex(factor_lp(Z));
    return !simplex.feasible();
}

bool is_empty(const HybridZonotope& H, const OracleOptions& options)
{
    if (is_empty(convex_relaxation(H)))
        return true;
    if (H.n_b() == 0)
        return false;
    const auto feasible = options.exec == Exec::Serial
                              ? kernels::serial::leaf_feasibility(H, options.max_binary)
                              : kernels::parallel::leaf_feasibility(H, options.max_binary);
    return std::none_of(feasible.begin(), feasible.end(), [](bool f) { return f; });
}

std::vector<Leaf> feasible_leaves(const HybridZonotope& H, const OracleOptions& options)
{
    const auto feasible = options.exec == Exec::Serial
                              ? kernels::serial::leaf_feasibility(H, options.max_binary)
                              : kernels::parallel::leaf_feasibility(H, options.max_binary);
    std::vector<Leaf> out;
    for (std::uint64_t i = 0; i < feasible.size(); ++i)
        if (feasible[i]) {
            BinaryAssignment a = leaf_assignment(H, i);
            ConstrainedZonotope z = leaf(H, a);
            out.push_back({std::move(a), std::move(z)});
        }
    return out;
}

namespace {

double radical_inverse(std::uint64_t i, unsigned base)
{
    double inv = 1.0 / base;
    double f = inv;
    double r = 0.0;
    while (i > 0) {
        r += f * static_cast<double>(i % base);
        i /= base;
        f *= inv;
    }
    return r;
}

constexpr unsigned kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101};

}  // namespace

std::vector<Vector> sample_directions(Index n, std::size_t count, std::uint64_t seed)
{
    std::vector<Vector> dirs;
    if (n == 0)
        return dirs;
    for (Index i = 0; i < n; ++i) {
        Vector e = Vector::Zero(n);
        e(i) = 1.0;
        dirs.push_back(e);
        dirs.push_back(-e);
    }
    if (count <= dirs.size())
        return dirs;
    const std::size_t extra = count - dirs.size();

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    if (n == 1)
        return dirs;
    if (n == 2) {
        const double phase = unit(rng);
        for (std::size_t k = 0; k < extra; ++k) {
            const double t = 2.0 * std::numbers::pi * (static_cast<double>(k) + phase) /
                             static_cast<double>(extra);
            dirs.push_back(vector({std::cos(t), std::sin(t)}));
        }
        return dirs;
    }

    // Halton points with a seeded Cranley-Patterson shift, pushed through
    // Box-Muller and normalized
    const Index pairs = (n + 1) / 2;
    if (2 * pairs > static_cast<Index>(std::size(kPrimes)))
        throw DimensionMismatch("sample_directions: dimension too large");
    std::vector<double> shift(static_cast<std::size_t>(2 * pairs));
    for (auto& s : shift)
        s = unit(rng);
    for (std::size_t k = 0; k < extra; ++k) {
        Vector g(2 * pairs);
        for (Index p = 0; p < pairs; ++p) {
            double u1 = radical_inverse(k + 1, kPrimes[2 * p]) + shift[static_cast<std::size_t>(2 * p)];
            double u2 =
                radical_inverse(k + 1, kPrimes[2 * p + 1]) + shift[static_cast<std::size_t>(2 * p + 1)];
            u1 -= std::floor(u1);
            u2 -= std::floor(u2);
            u1 = std::max(u1, 1e-12);
            const double r = std::sqrt(-2.0 * std::log(u1));
            g(2 * p) = r * std::cos(2.0 * std::numbers::pi * u2);
            g(2 * p + 1) = r * std::sin(2.0 * std::numbers::pi * u2);
        }
        Vector u = g.head(n);
        const double norm = u.norm();
        if (norm < 1e-12) {
            u = Vector::Ones(n) / std::sqrt(static_cast<double>(n));
        } else {
            u /= norm;
        }
        dirs.push_back(u);
    }
    return dirs;
}

std::string to_string(SharpnessVerdict verdict)
{
    switch (verdict) {
    case SharpnessVerdict::Sharp:
        return "sharp";
    case SharpnessVerdict::NotSharp:
        return "not_sharp";
    case SharpnessVerdict::Inconclusive:
        break;
    }
    return "inconclusive";
}

SharpnessReport check_sharpness(const HybridZonotope& H, std::size_t n_dirs, double tol,
                                std::uint64_t seed, const OracleOptions& options)
{
    SharpnessReport report;
    report.tol = tol;
    report.directions = sample_directions(H.dim(), n_dirs, seed);
    report.relax_support = support(convex_relaxation(H), report.directions);

    if (static_cast<std::size_t>(H.n_b()) > options.max_binary) {
        report.hull_support.assign(report.directions.size(), std::nullopt);
        report.max_gap = std::numeric_limits<double>::quiet_NaN();
        report.verdict = SharpnessVerdict::Inconclusive;
        return report;
    }
    report.hull_support = support(H, report.directions, options);

    double max_gap = 0.0;
    for (std::size_t i = 0; i < report.directions.size(); ++i) {
        const auto& r = report.relax_support[i];
        const auto& h = report.hull_support[i];
        double gap = 0.0;
        if (r && h)
            gap = *r - *h;
        else if (r && !h)
            gap = std::numeric_limits<double>::infinity();
        max_gap = std::max(max_gap, gap);
    }
    report.max_gap = max_gap;
    report.verdict = max_gap <= tol ? SharpnessVerdict::Sharp : SharpnessVerdict::NotSharp;
    return report;
}

std::vector<Vector> angle_directions(std::size_t n_angles)
{
    std::vector<Vector> dirs;
    dirs.reserve(n_angles);
    for (std::size_t i = 0; i < n_angles; ++i) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n_angles);
        dirs.push_back(vector({std::cos(t), std::sin(t)}));
    }
    return dirs;
}

Polygon boundary_2d(const ConstrainedZonotope& Z, std::size_t n_angles)
{
    if (Z.dim() != 2)
        throw DimensionMismatch("boundary_2d: set must live in R^2");
    SupportEvaluator eval(Z);
    if (eval.empty())
        throw EmptySet("boundary_2d: set is empty");
    std::vector<Point2> points;
    points.reserve(n_angles);
    for (const auto& u : angle_directions(n_angles)) {
        const auto x = eval.argmax(u);
        points.push_back({(*x)(0), (*x)(1)});
    }
    return convex_hull(std::move(points));
}

double area_2d(const ConstrainedZonotope& Z, std::size_t n_angles)
{
    return polygon_area(boundary_2d(Z, n_angles));
}

Polygon hull_boundary_2d(const HybridZonotope& H, std::size_t n_angles, const OracleOptions& options)
{
    if (H.dim() != 2)
        throw DimensionMismatch("hull_boundary_2d: set must live in R^2");
    const auto dirs = angle_directions(n_angles);
    std::vector<Point2> points =
        options.exec == Exec::Serial
            ? kernels::serial::leaf_support_points(H, dirs, options.max_binary)
            : kernels::parallel::leaf_support_points(H, dirs, options.max_binary);
    if (points.empty())
        throw EmptySet("hull_boundary_2d: set is empty");
    return convex_hull(std::move(points));
}

}  // namespace hzono
