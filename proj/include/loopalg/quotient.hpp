#ifndef LOOPALG_QUOTIENT_HPP
#define LOOPALG_QUOTIENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "loopalg/graded.hpp"

namespace loopalg {

struct PresentationDiverges : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsupportedRing : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InfiniteBasis : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Oriented homogeneous relation: any monomial divisible by lhs is replaced
/// using rhs.  In the catalog lhs is a pure power of one generator, except
/// for one squarefree product rule on the RP^3 base.
struct RewriteRule {
    Monomial lhs;
    Element rhs;
};

/// Over Z only: coefficients of monomials containing `pattern` are reduced
/// into [0, modulus).
struct TorsionRule {
    std::uint64_t modulus = 2;
    std::size_t pattern = 0;  // generator index
};

enum class Validation { Strict, Lax };

/// Quotient of the free graded-commutative algebra by an oriented,
/// terminating rewrite system plus coefficient torsion.
class PresentedAlgebra {
public:
    PresentedAlgebra(GradedAlgebra algebra, std::vector<RewriteRule> rewrites,
                     std::vector<TorsionRule> torsions = {},
                     Validation validation = Validation::Strict);

    const GradedAlgebra& algebra() const { return algebra_; }
    RingTag ring() const { return algebra_.ring(); }
    const std::vector<RewriteRule>& rewrites() const { return rewrites_; }
    const std::vector<TorsionRule>& torsions() const { return torsions_; }

    /// Exponent cap implied by a pure-power rule on generator i, if any:
    /// rule g^k -> rhs caps normal-form exponents at k-1.
    std::optional<std::uint32_t> power_cap(std::size_t i) const;

    /// True when every degree-0 generator carries an exponent-bounding rule,
    /// so per-degree bases are finite.
    bool per_degree_finite() const { return per_degree_finite_; }

    static constexpr std::uint64_t kDefaultStepGuard = 1'000'000;

private:
    GradedAlgebra algebra_;
    std::vector<RewriteRule> rewrites_;
    std::vector<TorsionRule> torsions_;
    bool per_degree_finite_ = true;

    void validate(Validation validation);
};

/// Apply the algebra's torsion rules to one coefficient.
Scalar reduce_torsion(const PresentedAlgebra& A, const Monomial& m, Scalar c);

Element normal_form(const PresentedAlgebra& A, const Element& e,
                    std::uint64_t step_guard = PresentedAlgebra::kDefaultStepGuard);
/// Quotient product: normal form of the free product of normal forms.
Element mul(const PresentedAlgebra& A, const Element& a, const Element& b);

/// All normal-form monomials of degree d, in canonical order.
std::vector<Monomial> basis_in_degree(const PresentedAlgebra& A, long d);
std::size_t hilbert_dimension(const PresentedAlgebra& A, long d);

/// All normal-form monomials of word length <= len (any degree).
std::vector<Monomial> basis_up_to_word_length(const PresentedAlgebra& A, std::uint32_t len);

/// Independent linear-algebra dimension: (free monomials of degree d) modulo
/// the span of all monomial multiples of the relation polynomials, by exact
/// row reduction.  Never calls normal_form.  Fields only.
std::size_t oracle_dimension(const PresentedAlgebra& A, long d);

/// Exact Gaussian-elimination rank over a field (destroys rows).
std::size_t matrix_rank(std::vector<std::vector<Scalar>>& rows);

struct ConfluenceMismatch {
    std::size_t rule_a = 0, rule_b = 0;
    Monomial overlap;
    Element nf_a, nf_b;
};

struct ConfluenceReport {
    std::vector<ConfluenceMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// Reduce every two-rule overlap both ways inside the degree window and
/// compare the resulting normal forms.
ConfluenceReport check_local_confluence(const PresentedAlgebra& A, long degree_lo, long degree_hi);

}  // namespace loopalg

#endif
