#ifndef LOOPALG_HOPF_HPP
#define LOOPALG_HOPF_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "loopalg/quotient.hpp"

namespace loopalg {

struct DerivationPathUnavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sparse element of A (x) A: (left slot, right slot) -> coefficient,
/// both slots in normal form.
struct TensorSquareElement {
    std::map<std::pair<Monomial, Monomial>, Scalar> terms;

    bool is_zero() const { return terms.empty(); }
};

void add_term(const GradedAlgebra& A, TensorSquareElement& t, const Monomial& l,
              const Monomial& r, const Scalar& c);
TensorSquareElement tensor_add(const GradedAlgebra& A, const TensorSquareElement& a,
                               const TensorSquareElement& b);
TensorSquareElement tensor_sub(const GradedAlgebra& A, const TensorSquareElement& a,
                               const TensorSquareElement& b);
/// Product in A (x) A with the Koszul sign (a(x)x)(a'(x)x') = (-1)^{|x||a'|} aa'(x)xx'.
TensorSquareElement tensor_mul(const PresentedAlgebra& A, const TensorSquareElement& a,
                               const TensorSquareElement& b);
std::string display(const GradedAlgebra& A, const TensorSquareElement& t);

/// Coproduct and counit data on the generators of a presented algebra.
struct HopfStructure {
    const PresentedAlgebra* owner = nullptr;
    std::vector<TensorSquareElement> coproduct_on_generators;  // indexed by generator
    std::vector<Scalar> counit_on_generators;
};

Scalar counit(const HopfStructure& H, const Element& e);
/// Multiplicative extension of the generator coproducts; D(1) = 1 (x) 1.
TensorSquareElement coproduct(const HopfStructure& H, const Element& e);

/// Chosen primitives p_1,...,p_n of the base homology, with degrees and an
/// optional torsion order (RP^3's rho is 2-torsion).
struct PrimitiveBasis {
    struct Primitive {
        std::string name;
        long degree = 0;
        std::optional<std::uint64_t> torsion;
    };
    std::vector<Primitive> items;

    std::optional<std::size_t> index_of(const std::string& name) const;
};

/// Coordinate vector over a PrimitiveBasis.
using PrimVector = std::map<std::size_t, Scalar>;

void add_coord(PrimVector& v, std::size_t i, const Scalar& c);
PrimVector prim_scale(const Scalar& c, const PrimVector& v);
/// Reduce torsion coordinates into [0, order) (Z coefficients only).
PrimVector prim_reduce(const PrimitiveBasis& P, const PrimVector& v);
bool prim_equal(const PrimitiveBasis& P, const PrimVector& a, const PrimVector& b);
std::string display(const PrimitiveBasis& P, const PrimVector& v);

/// Homology suspension on the loop-side algebra, stored through its primitive
/// coordinates; raises degree by 1.
struct SuspensionMap {
    const PresentedAlgebra* owner = nullptr;
    const PrimitiveBasis* primitives = nullptr;
    std::vector<PrimVector> values_on_generators;
};

/// sigma(g1^e1...gk^ek) = sum_j ej sigma(gj) prod_{l!=j} eps(gl)^el, linearly
/// extended; sigma(1) = 0.
PrimVector suspend(const Element& e, const SuspensionMap& S, const HopfStructure& H);

/// Degree-graded operator satisfying the Leibniz rule, given by its values on
/// generators.
struct Derivation {
    const PresentedAlgebra* owner = nullptr;
    long degree = 0;
    std::vector<Element> values_on_generators;
};

Element apply_derivation(const Derivation& d, const Element& e);

/// partial_i(a) = sum <p^i, sigma(a_(1))> a_(2); requires field coefficients
/// or Z with torsion-free primitives.
Element partial_from_definition(std::size_t prim_index, const Element& a, const HopfStructure& H,
                                const SuspensionMap& S);

struct WellDefinednessReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Checks that D, eps and sigma respect every rewrite rule of the owner.
WellDefinednessReport check_welldefined(const HopfStructure& H, const SuspensionMap& S);

}  // namespace loopalg

#endif
