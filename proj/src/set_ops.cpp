#include "hzono/set_ops.hpp"

#include "hzono/errors.hpp"
#include "hzono/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hzono {

namespace {

void require_same_form(const HybridZonotope& a, const HybridZonotope& b, const char* op)
{
    if (a.form() != b.form())
        throw FormMismatch(std::string(op) + ": operands use different factor forms");
}

}  // namespace

HybridZonotope minkowski_sum(const HybridZonotope& Z1, const HybridZonotope& Z2)
{
    if (Z1.dim() != Z2.dim())
        throw DimensionMismatch("minkowski_sum: ambient dimensions differ");
    require_same_form(Z1, Z2, "minkowski_sum");
    return HybridZonotope(hcat(Z1.Gc(), Z2.Gc()), hcat(Z1.Gb(), Z2.Gb()), Z1.c() + Z2.c(),
                          blkdiag(Z1.Ac(), Z2.Ac()), blkdiag(Z1.Ab(), Z2.Ab()),
                          vcat(Z1.b(), Z2.b()), Z1.form());
}

HybridZonotope affine_map(const HybridZonotope& H, const Matrix& R, const Vector& s)
{
    if (R.cols() != H.dim())
        throw DimensionMismatch("affine_map: R has " + std::to_string(R.cols()) +
                                " columns, set dimension is " + std::to_string(H.dim()));
    if (s.size() != R.rows())
        throw DimensionMismatch("affine_map: offset length differs from R rows");
    return HybridZonotope(multiply(R, H.Gc()), multiply(R, H.Gb()), multiply(R, H.c()) + s,
                          H.Ac(), H.Ab(), H.b(), H.form());
}

HybridZonotope affine_map(const HybridZonotope& H, const Matrix& R)
{
    return affine_map(H, R, Vector::Zero(R.rows()));
}

HybridZonotope cartesian_product(const HybridZonotope& Z1, const HybridZonotope& Z2)
{
    require_same_form(Z1, Z2, "cartesian_product");
    return HybridZonotope(blkdiag(Z1.Gc(), Z2.Gc()), blkdiag(Z1.Gb(), Z2.Gb()),
                          vcat(Z1.c(), Z2.c()), blkdiag(Z1.Ac(), Z2.Ac()),
                          blkdiag(Z1.Ab(), Z2.Ab()), vcat(Z1.b(), Z2.b()), Z1.form());
}

HybridZonotope generalized_intersection(const HybridZonotope& X, const HybridZonotope& Z,
                                        const Matrix& R)
{
    if (R.cols() != X.dim() || R.rows() != Z.dim())
        throw DimensionMismatch("generalized_intersection: R must be n(Z) x n(X)");
    require_same_form(X, Z, "generalized_intersection");

    const Index n = X.dim();
    const Matrix Gc = hcat(X.Gc(), zeros(n, Z.n_g()));
    const Matrix Gb = hcat(X.Gb(), zeros(n, Z.n_b()));
    const Matrix Ac = vcat(blkdiag(X.Ac(), Z.Ac()), hcat(multiply(R, X.Gc()), -Z.Gc()));
    const Matrix Ab = vcat(blkdiag(X.Ab(), Z.Ab()), hcat(multiply(R, X.Gb()), -Z.Gb()));
    const Vector b = vcat(vcat(X.b(), Z.b()), Vector(Z.c() - multiply(R, X.c())));
    return HybridZonotope(Gc, Gb, X.c(), Ac, Ab, b, X.form());
}

HybridZonotope halfspace_intersection(const HybridZonotope& H, const Vector& a, double k)
{
    if (a.size() != H.dim())
        throw DimensionMismatch("halfspace_intersection: normal length differs from set dimension");
    const auto bound = support(convex_relaxation(H), a);
    if (bound && !std::isfinite(*bound))
        throw UnboundedDirection("halfspace_intersection: bounding LP is unbounded");
    // empty relaxation or M < k both leave {a^T x = k} outside H, so [k, k] is exact
    const double upper = bound ? std::max(*bound + kHalfspaceMargin, k) : k;

    HybridZonotope slab = interval(k, upper);
    if (H.form() != FactorForm::PM1)
        slab = convert_form(slab, H.form());
    Matrix R(1, a.size());
    R.row(0) = a.transpose();
    return generalized_intersection(H, slab, R);
}

HybridZonotope union_with_point(const HybridZonotope& Z, const Vector& x)
{
    if (Z.form() != FactorForm::ZO)
        throw FormMismatch("union_with_point: set must be in ZO form");
    if (x.size() != Z.dim())
        throw DimensionMismatch("union_with_point: point length differs from set dimension");

    const Index n = Z.dim();
    const Index ng = Z.n_g();
    const Index nb = Z.n_b();
    const Index nc = Z.n_c();
    const Index nf = ng + nb;

    const Matrix Gc = hcat(Z.Gc(), zeros(n, nf));
    Matrix Gb(n, nb + 1);
    Gb.leftCols(nb) = Z.Gb();
    Gb.col(nb) = Z.c() - x;

    // [Ac 0; [I; 0] I]
    Matrix Ac = zeros(nc + nf, ng + nf);
    Ac.topLeftCorner(nc, ng) = Z.Ac();
    Ac.block(nc, 0, ng, ng) = identity(ng);
    Ac.bottomRightCorner(nf, nf) = identity(nf);

    // [Ab -b; [0; I] -1]
    Matrix Ab = zeros(nc + nf, nb + 1);
    Ab.topLeftCorner(nc, nb) = Z.Ab();
    Ab.block(0, nb, nc, 1) = -Z.b();
    Ab.block(nc + ng, 0, nb, nb) = identity(nb);
    Ab.block(nc, nb, nf, 1) = -Vector::Ones(nf);

    return HybridZonotope(Gc, Gb, x, Ac, Ab, zeros(nc + nf), FactorForm::ZO);
}

HybridZonotope union_of(const std::vector<HybridZonotope>& sets)
{
    if (sets.empty())
        throw EmptyList("union: no sets given");
    const Index n = sets.front().dim();
    for (const auto& s : sets)
        if (s.dim() != n)
            throw DimensionMismatch("union: ambient dimensions differ");

    const HybridZonotope one = convert_form(point(vector({1.0})), FactorForm::ZO);
    const Vector origin = zeros(n + 1);

    HybridZonotope sum;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const HybridZonotope lifted =
            cartesian_product(convert_form(sets[i], FactorForm::ZO), one);
        HybridZonotope u = union_with_point(lifted, origin);
        sum = i == 0 ? std::move(u) : minkowski_sum(sum, u);
    }

    Matrix cut = zeros(1, n + 1);
    cut(0, n) = 1.0;
    const HybridZonotope sliced = generalized_intersection(sum, one, cut);
    return affine_map(sliced, hcat(identity(n), zeros(n, 1)));
}

ConstrainedZonotope convex_relaxation(const HybridZonotope& H)
{
    return ConstrainedZonotope(hcat(H.Gc(), H.Gb()), H.c(), hcat(H.Ac(), H.Ab()), H.b(),
                               H.form());
}

}  // namespace hzono
