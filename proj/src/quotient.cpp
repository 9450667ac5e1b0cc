#include "loopalg/quotient.hpp"

#include <algorithm>
#include <climits>
#include <functional>

namespace loopalg {

namespace {

bool is_pure_power(const Monomial& m, std::size_t& gen_out) {
    std::size_t nz = 0, idx = 0;
    for (std::size_t i = 0; i < m.exp.size(); ++i)
        if (m.exp[i] > 0) {
            ++nz;
            idx = i;
        }
    gen_out = idx;
    return nz == 1;
}

}  // namespace

PresentedAlgebra::PresentedAlgebra(GradedAlgebra algebra, std::vector<RewriteRule> rewrites,
                                   std::vector<TorsionRule> torsions, Validation validation)
    : algebra_(std::move(algebra)), rewrites_(std::move(rewrites)), torsions_(std::move(torsions)) {
    validate(validation);
}

void PresentedAlgebra::validate(Validation validation) {
    const GradedAlgebra& A = algebra_;
    for (const auto& r : rewrites_) {
        if (r.lhs.exp.size() != A.size())
            throw ValidationError("rewrite lhs has wrong arity");
        if (r.lhs.is_unit()) throw ValidationError("rewrite lhs must be a nontrivial monomial");
        long dl = degree_of(A, r.lhs);
        for (const auto& [m, c] : r.rhs.terms) {
            if (c.tag() != A.ring()) throw ValidationError("rewrite rhs coefficient ring mismatch");
            if (degree_of(A, m) != dl)
                throw ValidationError("inhomogeneous rewrite rule on " + display(A, r.lhs));
        }
    }
    for (const auto& t : torsions_) {
        if (A.ring() != RingTag::Integers)
            throw ValidationError("torsion rules are only meaningful over Z");
        if (t.modulus < 2) throw ValidationError("torsion modulus must be >= 2");
        if (t.pattern >= A.size()) throw ValidationError("torsion pattern out of range");
    }

    if (validation == Validation::Strict) {
        std::vector<bool> power_rule_gen(A.size(), false);
        for (const auto& r : rewrites_) {
            std::size_t g;
            if (is_pure_power(r.lhs, g)) {
                if (power_rule_gen[g])
                    throw ValidationError("two rules lead on powers of " + A.gen(g).name);
                power_rule_gen[g] = true;
            }
        }
        for (std::size_t i = 0; i < rewrites_.size(); ++i)
            for (std::size_t j = 0; j < rewrites_.size(); ++j)
                if (i != j && rewrites_[i].lhs.divides(rewrites_[j].lhs))
                    throw ValidationError("rewrite lhs divides another rule's lhs");
    }

    // Finiteness of per-degree bases: every degree-0 generator must be
    // exponent-bounded by a pure-power rule.  The circle model's x, xinv pair
    // escapes this (their powers are only jointly reduced), so the flag is
    // tracked rather than hard-failing.
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (A.gen(i).degree != 0) continue;
        if (A.gen(i).kind == GenKind::Exterior) continue;
        if (!power_cap(i)) per_degree_finite_ = false;
    }
}

std::optional<std::uint32_t> PresentedAlgebra::power_cap(std::size_t i) const {
    for (const auto& r : rewrites_) {
        std::size_t g;
        if (is_pure_power(r.lhs, g) && g == i) return r.lhs.exp[i] - 1;
    }
    return std::nullopt;
}

Scalar reduce_torsion(const PresentedAlgebra& A, const Monomial& m, Scalar c) {
    for (const auto& t : A.torsions()) {
        if (m.exp[t.pattern] == 0) continue;
        BigInt v = c.as_integer() % t.modulus;
        if (v < 0) v += t.modulus;
        c = Scalar::integer(v);
    }
    return c;
}

namespace {

// m = sign * (m/lhs) * lhs in the free algebra; returns sign * (m/lhs) * rhs.
Element rewrite_monomial(const PresentedAlgebra& A, const RewriteRule& rule, const Monomial& m,
                         const Scalar& c) {
    const GradedAlgebra& G = A.algebra();
    Monomial q = quotient_monomial(m, rule.lhs);
    Scalar sign = koszul_sign(G, q, rule.lhs);
    Element qe = make_element(G, q, sign * c);
    return mul_free(G, qe, rule.rhs);
}

}  // namespace

Element normal_form(const PresentedAlgebra& A, const Element& e, std::uint64_t step_guard) {
    const GradedAlgebra& G = A.algebra();
    Element cur = e;
    std::uint64_t steps = 0;
    for (;;) {
        const RewriteRule* rule = nullptr;
        const Monomial* target = nullptr;
        for (const auto& [m, c] : cur.terms) {
            for (const auto& r : A.rewrites())
                if (r.lhs.divides(m)) {
                    rule = &r;
                    target = &m;
                    break;
                }
            if (rule) break;
        }
        if (!rule) break;
        if (++steps > step_guard)
            throw PresentationDiverges("rewrite step guard exceeded; presentation diverges");
        Monomial m = *target;
        Scalar c = cur.terms.at(m);
        cur.terms.erase(m);
        Element repl = rewrite_monomial(A, *rule, m, c);
        for (const auto& [rm, rc] : repl.terms) add_term(G, cur, rm, rc);
    }
    if (A.torsions().empty()) return cur;
    Element out;
    for (const auto& [m, c] : cur.terms) add_term(G, out, m, reduce_torsion(A, m, c));
    return out;
}

Element mul(const PresentedAlgebra& A, const Element& a, const Element& b) {
    return normal_form(A, mul_free(A.algebra(), a, b));
}

namespace {

constexpr long kUnboundedDegree = LONG_MAX / 4;

// Exponent caps for enumeration: exterior generators cap at 1; a cap of
// nullopt means unbounded.
using Caps = std::vector<std::optional<std::uint32_t>>;

Caps base_caps(const GradedAlgebra& A) {
    Caps caps(A.size());
    for (std::size_t i = 0; i < A.size(); ++i)
        if (A.gen(i).kind == GenKind::Exterior) caps[i] = 1;
    return caps;
}

// Reachable degree interval using generators i..n-1 under the caps.
void rest_ranges(const GradedAlgebra& A, const Caps& caps, std::vector<long>& lo,
                 std::vector<long>& hi) {
    std::size_t n = A.size();
    lo.assign(n + 1, 0);
    hi.assign(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) {
        long d = A.gen(i).degree;
        long mn = 0, mx = 0;
        if (caps[i]) {
            long span = d * static_cast<long>(*caps[i]);
            mn = std::min(0L, span);
            mx = std::max(0L, span);
        } else {
            if (d < 0) mn = -kUnboundedDegree;
            if (d > 0) mx = kUnboundedDegree;
        }
        lo[i] = (lo[i + 1] <= -kUnboundedDegree || mn <= -kUnboundedDegree) ? -kUnboundedDegree
                                                                           : lo[i + 1] + mn;
        hi[i] = (hi[i + 1] >= kUnboundedDegree || mx >= kUnboundedDegree) ? kUnboundedDegree
                                                                         : hi[i + 1] + mx;
    }
}

// All monomials of degree d with the given exponent caps.  Throws
// InfiniteBasis when a degree-0 generator is uncapped.
std::vector<Monomial> enumerate_degree(const GradedAlgebra& A, long d, const Caps& caps) {
    for (std::size_t i = 0; i < A.size(); ++i)
        if (!caps[i] && A.gen(i).degree == 0)
            throw InfiniteBasis("degree-0 generator " + A.gen(i).name +
                                " has no exponent bound; per-degree basis is infinite");
    std::vector<long> lo, hi;
    rest_ranges(A, caps, lo, hi);
    std::vector<Monomial> out;
    Monomial m(A.size());
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long rd) {
        if (i == A.size()) {
            if (rd == 0) out.push_back(m);
            return;
        }
        long dg = A.gen(i).degree;
        for (std::uint32_t e = 0;; ++e) {
            if (caps[i] && e > *caps[i]) break;
            long rest = rd - dg * static_cast<long>(e);
            bool feasible = rest >= lo[i + 1] && rest <= hi[i + 1];
            if (feasible) {
                m.exp[i] = e;
                rec(i + 1, rest);
            }
            if (!caps[i]) {
                // Unbounded: stop once the remaining degree has moved past the
                // reachable window in the generator's sign direction.
                if (dg > 0 && rd - dg * static_cast<long>(e + 1) < lo[i + 1]) break;
                if (dg < 0 && rd - dg * static_cast<long>(e + 1) > hi[i + 1]) break;
                if (dg == 0) break;  // unreachable: guarded above
            }
        }
        m.exp[i] = 0;
    };
    rec(0, d);
    std::sort(out.begin(), out.end());
    return out;
}

bool reducible(const PresentedAlgebra& A, const Monomial& m) {
    for (const auto& r : A.rewrites())
        if (r.lhs.divides(m)) return true;
    return false;
}

}  // namespace

std::vector<Monomial> basis_in_degree(const PresentedAlgebra& A, long d) {
    const GradedAlgebra& G = A.algebra();
    Caps caps = base_caps(G);
    for (std::size_t i = 0; i < G.size(); ++i)
        if (auto c = A.power_cap(i)) caps[i] = caps[i] ? std::min(*caps[i], *c) : *c;
    std::vector<Monomial> all = enumerate_degree(G, d, caps);
    std::vector<Monomial> out;
    for (auto& m : all)
        if (!reducible(A, m)) out.push_back(std::move(m));
    return out;
}

std::size_t hilbert_dimension(const PresentedAlgebra& A, long d) {
    return basis_in_degree(A, d).size();
}

std::vector<Monomial> basis_up_to_word_length(const PresentedAlgebra& A, std::uint32_t len) {
    const GradedAlgebra& G = A.algebra();
    Caps caps = base_caps(G);
    for (std::size_t i = 0; i < G.size(); ++i)
        if (auto c = A.power_cap(i)) caps[i] = caps[i] ? std::min(*caps[i], *c) : *c;
    std::vector<Monomial> out;
    Monomial m(G.size());
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t budget) {
        if (i == G.size()) {
            if (!reducible(A, m)) out.push_back(m);
            return;
        }
        std::uint32_t emax = caps[i] ? std::min(*caps[i], budget) : budget;
        for (std::uint32_t e = 0; e <= emax; ++e) {
            m.exp[i] = e;
            rec(i + 1, budget - e);
        }
        m.exp[i] = 0;
    };
    rec(0, len);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t matrix_rank(std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        Scalar inv = rows[rank][col].inv();
        for (std::size_t c = col; c < cols; ++c) rows[rank][c] = rows[rank][c] * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            Scalar f = rows[r][col];
            for (std::size_t c = col; c < cols; ++c)
                rows[r][c] = rows[r][c] - f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

std::size_t oracle_dimension(const PresentedAlgebra& A, long d) {
    const GradedAlgebra& G = A.algebra();
    if (G.ring() == RingTag::Integers)
        throw UnsupportedRing("oracle_dimension requires field coefficients");

    // Free-algebra basis in degree d.  Degree-0 generators are truncated at
    // (rule bound + 2); the extra headroom keeps every reduction available, so
    // the truncated quotient dimension equals the true one.
    Caps caps = base_caps(G);
    std::vector<std::uint32_t> zero_cap(G.size(), 0);
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (G.gen(i).degree != 0 || caps[i]) continue;
        auto pc = A.power_cap(i);
        if (!pc)
            throw InfiniteBasis("degree-0 generator " + G.gen(i).name + " unbounded");
        caps[i] = *pc + 2;
        zero_cap[i] = *pc + 2;
    }
    std::vector<Monomial> basis = enumerate_degree(G, d, caps);
    if (basis.empty()) return 0;
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

    std::vector<std::vector<Scalar>> rows;
    const Scalar zero = Scalar::zero(G.ring());
    for (const auto& rule : A.rewrites()) {
        Element rel = sub(G, make_element(G, rule.lhs, Scalar::one(G.ring())), rule.rhs);
        long dr = degree_of(G, rule.lhs);
        // Multiplier caps keep every monomial of mult*rel inside the basis.
        Caps mcaps = base_caps(G);
        bool ok = true;
        for (std::size_t i = 0; i < G.size(); ++i) {
            if (G.gen(i).degree != 0 || mcaps[i]) continue;
            std::uint32_t used = 0;
            for (const auto& [m, c] : rel.terms) used = std::max(used, m.exp[i]);
            used = std::max(used, rule.lhs.exp[i]);
            if (zero_cap[i] < used) {
                ok = false;
                break;
            }
            mcaps[i] = zero_cap[i] - used;
        }
        if (!ok) continue;
        for (const auto& mult : enumerate_degree(G, d - dr, mcaps)) {
            Element prod = mul_free(G, make_element(G, mult, Scalar::one(G.ring())), rel);
            if (prod.is_zero()) continue;
            std::vector<Scalar> row(basis.size(), zero);
            for (const auto& [m, c] : prod.terms) row[index.at(m)] = c;
            rows.push_back(std::move(row));
        }
    }
    return basis.size() - matrix_rank(rows);
}

ConfluenceReport check_local_confluence(const PresentedAlgebra& A, long degree_lo, long degree_hi) {
    const GradedAlgebra& G = A.algebra();
    ConfluenceReport report;
    const auto& rules = A.rewrites();
    for (std::size_t i = 0; i < rules.size(); ++i) {
        for (std::size_t j = i + 1; j < rules.size(); ++j) {
            Monomial lcm(G.size());
            bool valid = true;
            for (std::size_t k = 0; k < G.size(); ++k) {
                lcm.exp[k] = std::max(rules[i].lhs.exp[k], rules[j].lhs.exp[k]);
                if (G.gen(k).kind == GenKind::Exterior && lcm.exp[k] > 1) valid = false;
            }
            if (!valid) continue;
            long d = degree_of(G, lcm);
            if (d < degree_lo || d > degree_hi) continue;
            Scalar one = Scalar::one(G.ring());
            Element via_i = normal_form(A, rewrite_monomial(A, rules[i], lcm, one));
            Element via_j = normal_form(A, rewrite_monomial(A, rules[j], lcm, one));
            if (!(sub(G, via_i, via_j).is_zero()))
                report.mismatches.push_back({i, j, lcm, via_i, via_j});
        }
    }
    return report;
}

}  // namespace loopalg
