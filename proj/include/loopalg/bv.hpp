#ifndef LOOPALG_BV_HPP
#define LOOPALG_BV_HPP

#include <memory>
#include <tuple>

#include "loopalg/hopf.hpp"

namespace loopalg {

/// The split loop-homology model: loop-side Hopf algebra with suspension,
/// base intersection ring with primitive actions, and the group dimension.
struct LoopModel {
    std::string name;
    std::unique_ptr<PresentedAlgebra> omega;
    std::unique_ptr<PresentedAlgebra> base;
    std::unique_ptr<PrimitiveBasis> primitives;
    HopfStructure hopf;             // on omega
    SuspensionMap suspension;       // omega -> primitives
    unsigned dim_group = 0;
    std::vector<Derivation> primitive_actions;       // on base, indexed by primitive
    std::vector<Derivation> closed_form_partials;    // on omega; empty if not carried
    std::vector<std::size_t> partial_primitive;      // primitive index per closed-form partial
};

/// Element of omega (x) base: (loop monomial, base monomial) -> coefficient.
struct LoopElement {
    std::map<std::pair<Monomial, Monomial>, Scalar> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const LoopElement& o) const { return terms == o.terms; }
};

void loop_add_term(const LoopModel& M, LoopElement& e, const Monomial& mo, const Monomial& mb,
                   const Scalar& c);
LoopElement loop_unit(const LoopModel& M);
LoopElement loop_make(const LoopModel& M, const Monomial& mo, const Monomial& mb, const Scalar& c);
/// Tensor of two already-reduced elements of the factor algebras.
LoopElement loop_tensor(const LoopModel& M, const Element& omega_part, const Element& base_part);
LoopElement loop_add(const LoopModel& M, const LoopElement& a, const LoopElement& b);
LoopElement loop_sub(const LoopModel& M, const LoopElement& a, const LoopElement& b);
LoopElement loop_scale(const LoopModel& M, const Scalar& c, const LoopElement& e);
long loop_degree(const LoopModel& M, const Monomial& mo, const Monomial& mb);
bool loop_is_homogeneous(const LoopModel& M, const LoopElement& e);
std::optional<long> loop_degree(const LoopModel& M, const LoopElement& e);
std::string display(const LoopModel& M, const LoopElement& e);

/// (a(x)x)(a'(x)x') = (-1)^{|x||a'|} aa' (x) xx'; the sign is provably +1
/// for even loop sides but computed generically.
LoopElement loop_product(const LoopModel& M, const LoopElement& a, const LoopElement& b);

/// Memo cache for the BV operator on one model.
class BVContext {
public:
    explicit BVContext(const LoopModel& M) : model_(&M) {}
    const LoopModel& model() const { return *model_; }

    /// Delta(a (x) -) for a loop monomial: list of (a_(1), primitive, coeff).
    const std::vector<std::tuple<Monomial, std::size_t, Scalar>>& omega_delta(const Monomial& a);
    const Element& action_on(std::size_t prim, const Monomial& base_mono);

private:
    const LoopModel* model_;
    std::map<Monomial, std::vector<std::tuple<Monomial, std::size_t, Scalar>>> omega_delta_;
    std::map<std::pair<std::size_t, Monomial>, Element> action_;
};

/// Delta(a (x) x) = sum a_(1) (x) sigma(a_(2)) x  (coproduct + suspension +
/// primitive action path).
LoopElement bv_delta(BVContext& ctx, const LoopElement& e);
LoopElement bv_delta(const LoopModel& M, const LoopElement& e);

enum class PartialSource { Definition, ClosedForm };

/// Delta = sum_i partial_i (x) delta_i; requires field coefficients or
/// torsion-free Z primitives.
LoopElement bv_delta_derivation_form(const LoopModel& M, const LoopElement& e,
                                     PartialSource source = PartialSource::Definition);

struct CheckReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// All pairs (loop monomial of word length <= len, base basis monomial).
std::vector<std::pair<Monomial, Monomial>> loop_basis_word_length(const LoopModel& M,
                                                                  std::uint32_t len);
/// Every base normal-form monomial (the base ring is finite-dimensional).
std::vector<Monomial> base_basis(const LoopModel& M);

CheckReport check_delta_squared(const LoopModel& M, std::uint32_t word_length_bound,
                                long degree_lo, long degree_hi);
/// Seven-term BV identity on a homogeneous triple.
bool check_seven_term(const LoopModel& M, const LoopElement& a, const LoopElement& b,
                      const LoopElement& c);

/// {a,b} = (-1)^{|a|} (Delta(ab) - (Delta a)b - (-1)^{|a|} a (Delta b)).
LoopElement bracket(const LoopModel& M, const LoopElement& a, const LoopElement& b);

struct DeltaHomology {
    std::size_t dim = 0;       // dimension of the homogeneous piece
    std::size_t kernel = 0;    // dim ker Delta on it
    std::size_t image = 0;     // dim im Delta from it
};

std::vector<std::pair<Monomial, Monomial>> loop_basis_in_degree(const LoopModel& M, long d);
std::size_t loop_dimension(const LoopModel& M, long d);
/// Exact ranks of Delta per degree inside [lo, hi]; field coefficients only.
std::map<long, DeltaHomology> delta_homology_dimensions(const LoopModel& M, long lo, long hi);

}  // namespace loopalg

#endif
