#ifndef LOOPALG_GRADED_HPP
#define LOOPALG_GRADED_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loopalg/scalar.hpp"

namespace loopalg {

enum class GenKind { Polynomial, Exterior };

struct GeneratorSpec {
    std::string name;
    long degree = 0;
    GenKind kind = GenKind::Polynomial;
};

/// Free graded-commutative algebra on a fixed, ordered generator list.
/// The generator order is canonical: it defines monomial normal order and
/// the Koszul signs.
class GradedAlgebra {
public:
    GradedAlgebra(RingTag ring, std::vector<GeneratorSpec> gens);

    RingTag ring() const { return ring_; }
    const std::vector<GeneratorSpec>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    const GeneratorSpec& gen(std::size_t i) const { return gens_[i]; }
    std::optional<std::size_t> index_of(const std::string& name) const;
    bool gen_is_odd(std::size_t i) const { return gens_[i].degree % 2 != 0; }

private:
    RingTag ring_;
    std::vector<GeneratorSpec> gens_;
};

/// Exponent vector aligned with the algebra's generator list.
struct Monomial {
    std::vector<std::uint32_t> exp;

    Monomial() = default;
    explicit Monomial(std::size_t n) : exp(n, 0) {}

    bool is_unit() const;
    std::uint32_t word_length() const;
    bool divides(const Monomial& m) const;

    auto operator<=>(const Monomial& o) const = default;
};

Monomial unit_monomial(const GradedAlgebra& A);
Monomial generator_monomial(const GradedAlgebra& A, std::size_t i, std::uint32_t e = 1);
long degree_of(const GradedAlgebra& A, const Monomial& m);
/// m / d; requires d.divides(m).
Monomial quotient_monomial(const Monomial& m, const Monomial& d);

/// Sign incurred by interleaving the factors of m2 past those of m1 into
/// canonical order.  Always +1 over GF(2).
Scalar koszul_sign(const GradedAlgebra& A, const Monomial& m1, const Monomial& m2);

/// Sparse element: monomial -> nonzero coefficient.
struct Element {
    std::map<Monomial, Scalar> terms;

    bool is_zero() const { return terms.empty(); }
};

Element zero_element();
Element unit_element(const GradedAlgebra& A);
Element make_element(const GradedAlgebra& A, const Monomial& m, const Scalar& c);
Element gen_element(const GradedAlgebra& A, std::size_t i, std::uint32_t e = 1);

void add_term(const GradedAlgebra& A, Element& e, const Monomial& m, const Scalar& c);
Element add(const GradedAlgebra& A, const Element& a, const Element& b);
Element sub(const GradedAlgebra& A, const Element& a, const Element& b);
Element scale(const GradedAlgebra& A, const Scalar& c, const Element& e);

/// Product in the free graded-commutative algebra.  A factor that drives an
/// exterior generator's exponent to 2 or more contributes zero.
Element mul_free(const GradedAlgebra& A, const Element& a, const Element& b);
Element mul_monomials(const GradedAlgebra& A, const Monomial& m1, const Scalar& c1,
                      const Monomial& m2, const Scalar& c2);

bool is_homogeneous(const GradedAlgebra& A, const Element& e);
/// Degree of a homogeneous element; nullopt for zero ("any") and throws on
/// mixed-degree input.
std::optional<long> degree_of(const GradedAlgebra& A, const Element& e);
/// Split into homogeneous components, keyed by degree.
std::map<long, Element> homogeneous_parts(const GradedAlgebra& A, const Element& e);

std::string display(const GradedAlgebra& A, const Monomial& m);
std::string display(const GradedAlgebra& A, const Element& e);

}  // namespace loopalg

#endif
