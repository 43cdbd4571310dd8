#ifndef HZONO_ZONOTOPE_HPP_
#define HZONO_ZONOTOPE_HPP_

#include "hzono/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hzono {

// Factor domain: PM1 is xi_c in [-1,1], xi_b in {-1,1}; ZO is xi_c in [0,1],
// xi_b in {0,1}.
enum class FactorForm { PM1, ZO };

std::string to_string(FactorForm form);

// Lower/upper bound of a continuous factor and the two binary values.
double factor_lower(FactorForm form);
constexpr double factor_upper(FactorForm) { return 1.0; }

struct ComplexityTuple {
    std::size_t n_g = 0;
    std::size_t n_b = 0;
    std::size_t n_c = 0;

    friend bool operator==(const ComplexityTuple&, const ComplexityTuple&) = default;
};

std::string to_string(const ComplexityTuple& t);

/// Convex polytope {G xi + c | A xi = b, xi in the factor box}.
///
/// n_g = 0 gives the singleton {c} (or the empty set if 0 = b fails) and
/// n_c = 0 gives a plain zonotope.
class ConstrainedZonotope {
public:
    ConstrainedZonotope() = default;
    ConstrainedZonotope(Matrix G, Vector c, Matrix A, Vector b, FactorForm form = FactorForm::PM1);

    // Zonotope with no constraints.
    ConstrainedZonotope(Matrix G, Vector c, FactorForm form = FactorForm::PM1);

    const Matrix& G() const { return G_; }
    const Vector& c() const { return c_; }
    const Matrix& A() const { return A_; }
    const Vector& b() const { return b_; }
    FactorForm form() const { return form_; }

    Index dim() const { return c_.size(); }
    Index n_g() const { return G_.cols(); }
    Index n_c() const { return A_.rows(); }

private:
    Matrix G_;
    Vector c_;
    Matrix A_;
    Vector b_;
    FactorForm form_ = FactorForm::PM1;
};

/// Hybrid zonotope <Gc, Gb, c, Ac, Ab, b>: the union over binary assignments
/// xi_b of the constrained zonotopes {Gc xi_c + Gb xi_b + c | Ac xi_c + Ab xi_b = b}.
class HybridZonotope {
public:
    HybridZonotope() = default;
    HybridZonotope(Matrix Gc, Matrix Gb, Vector c, Matrix Ac, Matrix Ab, Vector b,
                   FactorForm form = FactorForm::PM1);

    // Lossless: n_b = 0.
    explicit HybridZonotope(const ConstrainedZonotope& cz);

    const Matrix& Gc() const { return Gc_; }
    const Matrix& Gb() const { return Gb_; }
    const Vector& c() const { return c_; }
    const Matrix& Ac() const { return Ac_; }
    const Matrix& Ab() const { return Ab_; }
    const Vector& b() const { return b_; }
    FactorForm form() const { return form_; }

    Index dim() const { return c_.size(); }
    Index n_g() const { return Gc_.cols(); }
    Index n_b() const { return Gb_.cols(); }
    Index n_c() const { return Ac_.rows(); }

    bool is_constrained_zonotope() const { return n_b() == 0; }
    bool is_zonotope() const { return n_b() == 0 && n_c() == 0; }

    // Only valid when n_b = 0.
    ConstrainedZonotope as_constrained_zonotope() const;

private:
    Matrix Gc_;
    Matrix Gb_;
    Vector c_;
    Matrix Ac_;
    Matrix Ab_;
    Vector b_;
    FactorForm form_ = FactorForm::PM1;
};

// Values of the binary factors for one leaf, in the domain of the set's form.
struct BinaryAssignment {
    std::vector<double> bits;
};

struct Leaf {
    BinaryAssignment assignment;
    ConstrainedZonotope set;
};

// Default bound on n_b for anything that enumerates 2^n_b leaves.
inline constexpr std::size_t kDefaultMaxBinaryFactors = 20;

ComplexityTuple complexity(const HybridZonotope& H);
ComplexityTuple complexity(const ConstrainedZonotope& Z);

// Affine substitution xi_pm1 = 2 xi_01 - 1 in whichever direction is needed.
HybridZonotope convert_form(const HybridZonotope& H, FactorForm target);
ConstrainedZonotope convert_form(const ConstrainedZonotope& Z, FactorForm target);

// Binary assignment of leaf number `index`: bit j of index drives factor j.
BinaryAssignment leaf_assignment(const HybridZonotope& H, std::uint64_t index);

// Fix the binary factors and fold them into the center and right-hand side.
ConstrainedZonotope leaf(const HybridZonotope& H, const BinaryAssignment& assignment);

// All 2^n_b leaves, binary counting order with the first factor as the least
// significant bit. Throws EnumerationCapExceeded when n_b > max_binary.
std::vector<Leaf> leaves(const HybridZonotope& H,
                         std::size_t max_binary = kDefaultMaxBinaryFactors);

std::uint64_t leaf_count(const HybridZonotope& H,
                         std::size_t max_binary = kDefaultMaxBinaryFactors);

// Convenience constructors, all in PM1 form.
HybridZonotope point(const Vector& p);
HybridZonotope interval(double lo, double hi);
HybridZonotope box(const Vector& lo, const Vector& hi);
HybridZonotope zonotope(const Matrix& G, const Vector& c);

}  // namespace hzono

#endif  // HZONO_ZONOTOPE_HPP_
