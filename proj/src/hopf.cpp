#include "loopalg/hopf.hpp"

#include <sstream>

namespace loopalg {

void add_term(const GradedAlgebra& A, TensorSquareElement& t, const Monomial& l,
              const Monomial& r, const Scalar& c) {
    if (c.tag() != A.ring()) throw RingMismatch("tensor coefficient ring mismatch");
    if (c.is_zero()) return;
    auto key = std::make_pair(l, r);
    auto it = t.terms.find(key);
    if (it == t.terms.end()) {
        t.terms.emplace(key, c);
    } else {
        Scalar s = it->second + c;
        if (s.is_zero())
            t.terms.erase(it);
        else
            it->second = s;
    }
}

TensorSquareElement tensor_add(const GradedAlgebra& A, const TensorSquareElement& a,
                               const TensorSquareElement& b) {
    TensorSquareElement r = a;
    for (const auto& [k, c] : b.terms) add_term(A, r, k.first, k.second, c);
    return r;
}

TensorSquareElement tensor_sub(const GradedAlgebra& A, const TensorSquareElement& a,
                               const TensorSquareElement& b) {
    TensorSquareElement r = a;
    for (const auto& [k, c] : b.terms) add_term(A, r, k.first, k.second, -c);
    return r;
}

TensorSquareElement tensor_mul(const PresentedAlgebra& A, const TensorSquareElement& a,
                               const TensorSquareElement& b) {
    const GradedAlgebra& G = A.algebra();
    TensorSquareElement out;
    for (const auto& [ka, ca] : a.terms) {
        for (const auto& [kb, cb] : b.terms) {
            Scalar c = ca * cb;
            if (G.ring() != RingTag::GF2) {
                long s = degree_of(G, ka.second) * degree_of(G, kb.first);
                if (s % 2 != 0) c = -c;
            }
            Element left = mul(A, make_element(G, ka.first, Scalar::one(G.ring())),
                               make_element(G, kb.first, Scalar::one(G.ring())));
            Element right = mul(A, make_element(G, ka.second, Scalar::one(G.ring())),
                                make_element(G, kb.second, Scalar::one(G.ring())));
            for (const auto& [ml, cl] : left.terms)
                for (const auto& [mr, cr] : right.terms)
                    add_term(G, out, ml, mr, c * cl * cr);
        }
    }
    return out;
}

std::string display(const GradedAlgebra& A, const TensorSquareElement& t) {
    if (t.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t.terms) {
        if (!first) os << " + ";
        first = false;
        if (!c.is_one()) os << c.str() << "*";
        os << display(A, k.first) << " (x) " << display(A, k.second);
    }
    return os.str();
}

Scalar counit(const HopfStructure& H, const Element& e) {
    const GradedAlgebra& G = H.owner->algebra();
    Scalar total = Scalar::zero(G.ring());
    for (const auto& [m, c] : e.terms) {
        Scalar v = c;
        for (std::size_t i = 0; i < G.size() && !v.is_zero(); ++i)
            for (std::uint32_t k = 0; k < m.exp[i]; ++k) v = v * H.counit_on_generators[i];
        total = total + v;
    }
    return total;
}

TensorSquareElement coproduct(const HopfStructure& H, const Element& e) {
    const PresentedAlgebra& A = *H.owner;
    const GradedAlgebra& G = A.algebra();
    TensorSquareElement out;
    for (const auto& [m, c] : e.terms) {
        TensorSquareElement t;
        add_term(G, t, unit_monomial(G), unit_monomial(G), c);
        for (std::size_t i = 0; i < G.size(); ++i)
            for (std::uint32_t k = 0; k < m.exp[i]; ++k)
                t = tensor_mul(A, t, H.coproduct_on_generators[i]);
        out = tensor_add(G, out, t);
    }
    return out;
}

std::optional<std::size_t> PrimitiveBasis::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < items.size(); ++i)
        if (items[i].name == name) return i;
    return std::nullopt;
}

void add_coord(PrimVector& v, std::size_t i, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = v.find(i);
    if (it == v.end()) {
        v.emplace(i, c);
    } else {
        Scalar s = it->second + c;
        if (s.is_zero())
            v.erase(it);
        else
            it->second = s;
    }
}

PrimVector prim_scale(const Scalar& c, const PrimVector& v) {
    PrimVector out;
    for (const auto& [i, x] : v) add_coord(out, i, c * x);
    return out;
}

PrimVector prim_reduce(const PrimitiveBasis& P, const PrimVector& v) {
    PrimVector out;
    for (const auto& [i, x] : v) {
        Scalar c = x;
        if (P.items[i].torsion && c.tag() == RingTag::Integers) {
            BigInt r = c.as_integer() % *P.items[i].torsion;
            if (r < 0) r += *P.items[i].torsion;
            c = Scalar::integer(r);
        }
        add_coord(out, i, c);
    }
    return out;
}

bool prim_equal(const PrimitiveBasis& P, const PrimVector& a, const PrimVector& b) {
    return prim_reduce(P, a) == prim_reduce(P, b);
}

std::string display(const PrimitiveBasis& P, const PrimVector& v) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : v) {
        if (!first) os << " + ";
        first = false;
        if (!c.is_one()) os << c.str() << "*";
        os << P.items[i].name;
    }
    return os.str();
}

PrimVector suspend(const Element& e, const SuspensionMap& S, const HopfStructure& H) {
    const GradedAlgebra& G = S.owner->algebra();
    PrimVector out;
    for (const auto& [m, c] : e.terms) {
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (m.exp[j] == 0) continue;
            // e_j * sigma(g_j) * prod_{l != j} eps(g_l)^{e_l}
            Scalar factor = c * Scalar::from_int(G.ring(), m.exp[j]);
            for (std::size_t l = 0; l < G.size() && !factor.is_zero(); ++l) {
                std::uint32_t reps = (l == j) ? m.exp[l] - 1 : m.exp[l];
                for (std::uint32_t k = 0; k < reps; ++k)
                    factor = factor * H.counit_on_generators[l];
            }
            if (factor.is_zero()) continue;
            for (const auto& [p, x] : S.values_on_generators[j]) add_coord(out, p, factor * x);
        }
    }
    return prim_reduce(*S.primitives, out);
}

namespace {

Element apply_derivation_monomial(const Derivation& d, const Monomial& m) {
    const PresentedAlgebra& A = *d.owner;
    const GradedAlgebra& G = A.algebra();
    std::size_t i = 0;
    while (i < G.size() && m.exp[i] == 0) ++i;
    if (i == G.size()) return zero_element();  // d(1) = 0

    // m = g_i * rest; d(g h) = d(g) h + (-1)^{|d||g|} g d(h)
    Monomial rest = m;
    rest.exp[i] -= 1;
    Element rest_e = make_element(G, rest, Scalar::one(G.ring()));
    Element first = mul(A, d.values_on_generators[i], rest_e);
    Element second = mul(A, gen_element(G, i), apply_derivation_monomial(d, rest));
    if (G.ring() != RingTag::GF2 && (d.degree % 2 != 0) && (G.gen(i).degree % 2 != 0))
        second = scale(G, -Scalar::one(G.ring()), second);
    return add(G, first, second);
}

}  // namespace

Element apply_derivation(const Derivation& d, const Element& e) {
    const GradedAlgebra& G = d.owner->algebra();
    Element out;
    for (const auto& [m, c] : e.terms)
        out = add(G, out, scale(G, c, apply_derivation_monomial(d, m)));
    return normal_form(*d.owner, out);
}

Element partial_from_definition(std::size_t prim_index, const Element& a, const HopfStructure& H,
                                const SuspensionMap& S) {
    const PresentedAlgebra& A = *H.owner;
    const GradedAlgebra& G = A.algebra();
    if (G.ring() == RingTag::Integers)
        for (const auto& p : S.primitives->items)
            if (p.torsion)
                throw DerivationPathUnavailable(
                    "coproduct/suspension derivation path requires field coefficients or "
                    "torsion-free base homology");
    Element out;
    for (const auto& [k, c] : coproduct(H, a).terms) {
        PrimVector s = suspend(make_element(G, k.first, Scalar::one(G.ring())), S, H);
        auto it = s.find(prim_index);
        if (it == s.end()) continue;
        add_term(G, out, k.second, c * it->second);
    }
    return normal_form(A, out);
}

WellDefinednessReport check_welldefined(const HopfStructure& H, const SuspensionMap& S) {
    const PresentedAlgebra& A = *H.owner;
    const GradedAlgebra& G = A.algebra();
    WellDefinednessReport report;
    for (const auto& rule : A.rewrites()) {
        Element lhs = make_element(G, rule.lhs, Scalar::one(G.ring()));
        Element rhs = normal_form(A, rule.rhs);
        TensorSquareElement dl = coproduct(H, lhs);
        TensorSquareElement dr = coproduct(H, rhs);
        if (!tensor_sub(G, dl, dr).is_zero())
            report.failures.push_back("coproduct does not respect rule " + display(G, rule.lhs) +
                                      " -> " + display(G, rule.rhs));
        PrimVector sl = suspend(lhs, S, H);
        PrimVector sr = suspend(rhs, S, H);
        if (!prim_equal(*S.primitives, sl, sr))
            report.failures.push_back("suspension does not respect rule " + display(G, rule.lhs) +
                                      " -> " + display(G, rule.rhs) + ": " +
                                      display(*S.primitives, sl) + " vs " +
                                      display(*S.primitives, sr));
        Scalar el = counit(H, lhs), er = counit(H, rhs);
        if (el != er)
            report.failures.push_back("counit does not respect rule " + display(G, rule.lhs) +
                                      " -> " + display(G, rule.rhs));
    }
    return report;
}

}  // namespace loopalg
