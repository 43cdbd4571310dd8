#include "hzono/zonotope.hpp"

#include "hzono/errors.hpp"

#include <algorithm>
#include <sstream>

namespace hzono {

namespace {

// Column count of a generator/constraint block pair when either may be empty.
Index inferred_columns(const Matrix& G, Index n, const Matrix& A, Index nc)
{
    if (G.size() > 0)
        return G.cols();
    if (A.size() > 0)
        return A.cols();
    const Index from_g = G.rows() == n ? G.cols() : 0;
    const Index from_a = A.rows() == nc ? A.cols() : 0;
    return std::max(from_g, from_a);
}

}  // namespace

std::string to_string(FactorForm form)
{
    return form == FactorForm::PM1 ? "pm1" : "01";
}

double factor_lower(FactorForm form)
{
    return form == FactorForm::PM1 ? -1.0 : 0.0;
}

std::string to_string(const ComplexityTuple& t)
{
    std::ostringstream os;
    os << "(" << t.n_g << ", " << t.n_b << ", " << t.n_c << ")";
    return os.str();
}

ConstrainedZonotope::ConstrainedZonotope(Matrix G, Vector c, Matrix A, Vector b, FactorForm form)
    : G_(std::move(G)), c_(std::move(c)), A_(std::move(A)), b_(std::move(b)), form_(form)
{
    const Index ng = inferred_columns(G_, c_.size(), A_, b_.size());
    if (G_.size() == 0)
        G_.resize(c_.size(), ng);
    if (A_.size() == 0)
        A_.resize(b_.size(), ng);
    if (G_.rows() != c_.size())
        throw DimensionMismatch("ConstrainedZonotope: G and c row counts differ");
    if (A_.cols() != G_.cols())
        throw DimensionMismatch("ConstrainedZonotope: G and A column counts differ");
    if (A_.rows() != b_.size())
        throw DimensionMismatch("ConstrainedZonotope: A and b row counts differ");
}

ConstrainedZonotope::ConstrainedZonotope(Matrix G, Vector c, FactorForm form)
    : ConstrainedZonotope(G, std::move(c), Matrix(0, G.cols()), Vector(0), form)
{
}

HybridZonotope::HybridZonotope(Matrix Gc, Matrix Gb, Vector c, Matrix Ac, Matrix Ab, Vector b,
                               FactorForm form)
    : Gc_(std::move(Gc)), Gb_(std::move(Gb)), c_(std::move(c)), Ac_(std::move(Ac)),
      Ab_(std::move(Ab)), b_(std::move(b)), form_(form)
{
    const Index n = c_.size();
    const Index nc = b_.size();
    // empty blocks are allowed to arrive as 0x0
    const Index ng = inferred_columns(Gc_, n, Ac_, nc);
    const Index nb = inferred_columns(Gb_, n, Ab_, nc);
    if (Gc_.size() == 0)
        Gc_.resize(n, ng);
    if (Ac_.size() == 0)
        Ac_.resize(nc, ng);
    if (Gb_.size() == 0)
        Gb_.resize(n, nb);
    if (Ab_.size() == 0)
        Ab_.resize(nc, nb);

    if (Gc_.rows() != n || Gb_.rows() != n)
        throw DimensionMismatch("HybridZonotope: generator rows must match center length");
    if (Ac_.rows() != nc || Ab_.rows() != nc)
        throw DimensionMismatch("HybridZonotope: constraint rows must match b length");
    if (Ac_.cols() != Gc_.cols())
        throw DimensionMismatch("HybridZonotope: Gc and Ac column counts differ");
    if (Ab_.cols() != Gb_.cols())
        throw DimensionMismatch("HybridZonotope: Gb and Ab column counts differ");
}

HybridZonotope::HybridZonotope(const ConstrainedZonotope& cz)
    : HybridZonotope(cz.G(), Matrix(cz.dim(), 0), cz.c(), cz.A(), Matrix(cz.n_c(), 0), cz.b(),
                     cz.form())
{
}

ConstrainedZonotope HybridZonotope::as_constrained_zonotope() const
{
    if (n_b() != 0)
        throw DimensionMismatch("as_constrained_zonotope: set has binary factors");
    return ConstrainedZonotope(Gc_, c_, Ac_, b_, form_);
}

ComplexityTuple complexity(const HybridZonotope& H)
{
    return {static_cast<std::size_t>(H.n_g()), static_cast<std::size_t>(H.n_b()),
            static_cast<std::size_t>(H.n_c())};
}

ComplexityTuple complexity(const ConstrainedZonotope& Z)
{
    return {static_cast<std::size_t>(Z.n_g()), 0, static_cast<std::size_t>(Z.n_c())};
}

HybridZonotope convert_form(const HybridZonotope& H, FactorForm target)
{
    if (H.form() == target)
        return H;
    const Vector one_c = Vector::Ones(H.n_g());
    const Vector one_b = Vector::Ones(H.n_b());
    if (target == FactorForm::ZO) {
        // xi = 2 xi01 - 1
        Vector c = H.c() - H.Gc() * one_c - H.Gb() * one_b;
        Vector b = H.b() + H.Ac() * one_c + H.Ab() * one_b;
        return HybridZonotope(2.0 * H.Gc(), 2.0 * H.Gb(), c, 2.0 * H.Ac(), 2.0 * H.Ab(), b,
                              FactorForm::ZO);
    }
    // xi01 = (xi + 1) / 2
    Vector c = H.c() + 0.5 * (H.Gc() * one_c) + 0.5 * (H.Gb() * one_b);
    Vector b = H.b() - 0.5 * (H.Ac() * one_c) - 0.5 * (H.Ab() * one_b);
    return HybridZonotope(0.5 * H.Gc(), 0.5 * H.Gb(), c, 0.5 * H.Ac(), 0.5 * H.Ab(), b,
                          FactorForm::PM1);
}

ConstrainedZonotope convert_form(const ConstrainedZonotope& Z, FactorForm target)
{
    return convert_form(HybridZonotope(Z), target).as_constrained_zonotope();
}

std::uint64_t leaf_count(const HybridZonotope& H, std::size_t max_binary)
{
    const auto nb = static_cast<std::size_t>(H.n_b());
    if (nb > max_binary || nb >= 63)
        throw EnumerationCapExceeded("leaf enumeration: n_b = " + std::to_string(nb) +
                                     " exceeds cap of " + std::to_string(max_binary));
    return std::uint64_t{1} << nb;
}

BinaryAssignment leaf_assignment(const HybridZonotope& H, std::uint64_t index)
{
    const double lo = factor_lower(H.form());
    BinaryAssignment a;
    a.bits.resize(static_cast<std::size_t>(H.n_b()));
    for (std::size_t j = 0; j < a.bits.size(); ++j)
        a.bits[j] = ((index >> j) & 1U) ? 1.0 : lo;
    return a;
}

ConstrainedZonotope leaf(const HybridZonotope& H, const BinaryAssignment& assignment)
{
    if (static_cast<Index>(assignment.bits.size()) != H.n_b())
        throw DimensionMismatch("leaf: assignment length differs from n_b");
    const Vector xb = vector(assignment.bits);
    return ConstrainedZonotope(H.Gc(), H.c() + H.Gb() * xb, H.Ac(), H.b() - H.Ab() * xb,
                               H.form());
}

std::vector<Leaf> leaves(const HybridZonotope& H, std::size_t max_binary)
{
    const std::uint64_t count = leaf_count(H, max_binary);
    std::vector<Leaf> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        BinaryAssignment a = leaf_assignment(H, i);
        ConstrainedZonotope z = leaf(H, a);
        out.push_back({std::move(a), std::move(z)});
    }
    return out;
}

HybridZonotope point(const Vector& p)
{
    return HybridZonotope(Matrix(p.size(), 0), Matrix(p.size(), 0), p, Matrix(0, 0), Matrix(0, 0),
                          Vector(0));
}

HybridZonotope interval(double lo, double hi)
{
    return box(vector({lo}), vector({hi}));
}

HybridZonotope box(const Vector& lo, const Vector& hi)
{
    if (lo.size() != hi.size())
        throw DimensionMismatch("box: bound lengths differ");
    const Vector half = 0.5 * (hi - lo);
    return zonotope(half.asDiagonal().toDenseMatrix(), 0.5 * (hi + lo));
}

HybridZonotope zonotope(const Matrix& G, const Vector& c)
{
    return HybridZonotope(G, Matrix(c.size(), 0), c, Matrix(0, G.cols()), Matrix(0, 0), Vector(0));
}

}  // namespace hzono
