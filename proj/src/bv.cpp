#include "loopalg/bv.hpp"

#include <algorithm>
#include <sstream>

namespace loopalg {

namespace {

Scalar sign_pow(RingTag ring, long k) {
    Scalar one = Scalar::one(ring);
    if (ring == RingTag::GF2 || k % 2 == 0) return one;
    return -one;
}

}  // namespace

void loop_add_term(const LoopModel& M, LoopElement& e, const Monomial& mo, const Monomial& mb,
                   const Scalar& c) {
    Scalar v = reduce_torsion(*M.omega, mo, c);
    v = reduce_torsion(*M.base, mb, v);
    if (v.is_zero()) return;
    auto key = std::make_pair(mo, mb);
    auto it = e.terms.find(key);
    if (it == e.terms.end()) {
        e.terms.emplace(key, v);
        return;
    }
    Scalar s = it->second + v;
    s = reduce_torsion(*M.omega, mo, s);
    s = reduce_torsion(*M.base, mb, s);
    if (s.is_zero())
        e.terms.erase(it);
    else
        it->second = s;
}

LoopElement loop_unit(const LoopModel& M) {
    LoopElement e;
    loop_add_term(M, e, unit_monomial(M.omega->algebra()), unit_monomial(M.base->algebra()),
                  Scalar::one(M.omega->ring()));
    return e;
}

LoopElement loop_make(const LoopModel& M, const Monomial& mo, const Monomial& mb,
                      const Scalar& c) {
    LoopElement e;
    loop_add_term(M, e, mo, mb, c);
    return e;
}

LoopElement loop_tensor(const LoopModel& M, const Element& omega_part, const Element& base_part) {
    LoopElement e;
    for (const auto& [mo, co] : omega_part.terms)
        for (const auto& [mb, cb] : base_part.terms) loop_add_term(M, e, mo, mb, co * cb);
    return e;
}

LoopElement loop_add(const LoopModel& M, const LoopElement& a, const LoopElement& b) {
    LoopElement r = a;
    for (const auto& [k, c] : b.terms) loop_add_term(M, r, k.first, k.second, c);
    return r;
}

LoopElement loop_sub(const LoopModel& M, const LoopElement& a, const LoopElement& b) {
    LoopElement r = a;
    for (const auto& [k, c] : b.terms) loop_add_term(M, r, k.first, k.second, -c);
    return r;
}

LoopElement loop_scale(const LoopModel& M, const Scalar& c, const LoopElement& e) {
    LoopElement r;
    for (const auto& [k, x] : e.terms) loop_add_term(M, r, k.first, k.second, c * x);
    return r;
}

long loop_degree(const LoopModel& M, const Monomial& mo, const Monomial& mb) {
    return degree_of(M.omega->algebra(), mo) + degree_of(M.base->algebra(), mb);
}

bool loop_is_homogeneous(const LoopModel& M, const LoopElement& e) {
    bool seen = false;
    long d = 0;
    for (const auto& [k, c] : e.terms) {
        long dk = loop_degree(M, k.first, k.second);
        if (seen && dk != d) return false;
        d = dk;
        seen = true;
    }
    return true;
}

std::optional<long> loop_degree(const LoopModel& M, const LoopElement& e) {
    if (e.terms.empty()) return std::nullopt;
    std::optional<long> d;
    for (const auto& [k, c] : e.terms) {
        long dk = loop_degree(M, k.first, k.second);
        if (d && *d != dk) throw std::invalid_argument("element is not homogeneous");
        d = dk;
    }
    return d;
}

std::string display(const LoopModel& M, const LoopElement& e) {
    if (e.terms.empty()) return "0";
    std::vector<std::pair<std::pair<Monomial, Monomial>, Scalar>> items(e.terms.begin(),
                                                                        e.terms.end());
    std::stable_sort(items.begin(), items.end(), [&](const auto& a, const auto& b) {
        return loop_degree(M, a.first.first, a.first.second) <
               loop_degree(M, b.first.first, b.first.second);
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : items) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        std::string mag = neg ? cs.substr(1) : cs;
        if (mag != "1") os << mag << "*";
        os << display(M.omega->algebra(), k.first) << " (x) "
           << display(M.base->algebra(), k.second);
    }
    return os.str();
}

LoopElement loop_product(const LoopModel& M, const LoopElement& a, const LoopElement& b) {
    const GradedAlgebra& GO = M.omega->algebra();
    const GradedAlgebra& GB = M.base->algebra();
    RingTag ring = GO.ring();
    LoopElement out;
    for (const auto& [ka, ca] : a.terms) {
        for (const auto& [kb, cb] : b.terms) {
            Scalar c = ca * cb * sign_pow(ring, degree_of(GB, ka.second) * degree_of(GO, kb.first));
            Element op = mul(*M.omega, make_element(GO, ka.first, Scalar::one(ring)),
                             make_element(GO, kb.first, Scalar::one(ring)));
            Element bp = mul(*M.base, make_element(GB, ka.second, Scalar::one(ring)),
                             make_element(GB, kb.second, Scalar::one(ring)));
            for (const auto& [mo, co] : op.terms)
                for (const auto& [mb, cbs] : bp.terms)
                    loop_add_term(M, out, mo, mb, c * co * cbs);
        }
    }
    return out;
}

const std::vector<std::tuple<Monomial, std::size_t, Scalar>>& BVContext::omega_delta(
    const Monomial& a) {
    auto it = omega_delta_.find(a);
    if (it != omega_delta_.end()) return it->second;
    const LoopModel& M = *model_;
    const GradedAlgebra& G = M.omega->algebra();
    std::vector<std::tuple<Monomial, std::size_t, Scalar>> out;
    Element ea = make_element(G, a, Scalar::one(G.ring()));
    for (const auto& [k, c] : coproduct(M.hopf, ea).terms) {
        PrimVector s = suspend(make_element(G, k.second, Scalar::one(G.ring())), M.suspension,
                               M.hopf);
        for (const auto& [p, x] : s) out.emplace_back(k.first, p, c * x);
    }
    return omega_delta_.emplace(a, std::move(out)).first->second;
}

const Element& BVContext::action_on(std::size_t prim, const Monomial& base_mono) {
    auto key = std::make_pair(prim, base_mono);
    auto it = action_.find(key);
    if (it != action_.end()) return it->second;
    const LoopModel& M = *model_;
    const GradedAlgebra& GB = M.base->algebra();
    Element r = apply_derivation(M.primitive_actions[prim],
                                 make_element(GB, base_mono, Scalar::one(GB.ring())));
    return action_.emplace(std::move(key), std::move(r)).first->second;
}

LoopElement bv_delta(BVContext& ctx, const LoopElement& e) {
    const LoopModel& M = ctx.model();
    LoopElement out;
    for (const auto& [k, c] : e.terms) {
        for (const auto& [a1, prim, s] : ctx.omega_delta(k.first)) {
            const Element& act = ctx.action_on(prim, k.second);
            for (const auto& [mb, cb] : act.terms) loop_add_term(M, out, a1, mb, c * s * cb);
        }
    }
    return out;
}

LoopElement bv_delta(const LoopModel& M, const LoopElement& e) {
    BVContext ctx(M);
    return bv_delta(ctx, e);
}

LoopElement bv_delta_derivation_form(const LoopModel& M, const LoopElement& e,
                                     PartialSource source) {
    const GradedAlgebra& GO = M.omega->algebra();
    const GradedAlgebra& GB = M.base->algebra();
    RingTag ring = GO.ring();
    if (source == PartialSource::ClosedForm && M.closed_form_partials.empty())
        throw DerivationPathUnavailable("model carries no closed-form loop-side derivations");
    LoopElement out;
    for (const auto& [k, c] : e.terms) {
        Element ea = make_element(GO, k.first, Scalar::one(ring));
        Element eb = make_element(GB, k.second, Scalar::one(ring));
        long da = degree_of(GO, k.first);
        std::size_t count = (source == PartialSource::Definition) ? M.primitive_actions.size()
                                                                  : M.closed_form_partials.size();
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t prim = (source == PartialSource::Definition) ? i : M.partial_primitive[i];
            Element pa = (source == PartialSource::Definition)
                             ? partial_from_definition(prim, ea, M.hopf, M.suspension)
                             : apply_derivation(M.closed_form_partials[i], ea);
            if (pa.is_zero()) continue;
            Element db = apply_derivation(M.primitive_actions[prim], eb);
            if (db.is_zero()) continue;
            // (partial_i (x) delta_i)(a (x) x) = (-1)^{|delta_i| |a|} partial_i(a) (x) delta_i(x)
            Scalar sgn = sign_pow(ring, M.primitive_actions[prim].degree * da);
            for (const auto& [mo, co] : pa.terms)
                for (const auto& [mb, cb] : db.terms)
                    loop_add_term(M, out, mo, mb, c * sgn * co * cb);
        }
    }
    return out;
}

std::vector<Monomial> base_basis(const LoopModel& M) {
    const PresentedAlgebra& B = *M.base;
    const GradedAlgebra& G = B.algebra();
    std::uint32_t total = 0;
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (G.gen(i).kind == GenKind::Exterior) {
            total += 1;
            continue;
        }
        auto cap = B.power_cap(i);
        if (!cap)
            throw InfiniteBasis("base generator " + G.gen(i).name +
                                " has no exponent bound; base ring is infinite-dimensional");
        total += *cap;
    }
    return basis_up_to_word_length(B, total);
}

std::vector<std::pair<Monomial, Monomial>> loop_basis_word_length(const LoopModel& M,
                                                                  std::uint32_t len) {
    std::vector<Monomial> loops = basis_up_to_word_length(*M.omega, len);
    std::vector<Monomial> bases = base_basis(M);
    std::vector<std::pair<Monomial, Monomial>> out;
    out.reserve(loops.size() * bases.size());
    for (const auto& mo : loops)
        for (const auto& mb : bases) out.emplace_back(mo, mb);
    return out;
}

CheckReport check_delta_squared(const LoopModel& M, std::uint32_t word_length_bound,
                                long degree_lo, long degree_hi) {
    BVContext ctx(M);
    CheckReport report;
    Scalar one = Scalar::one(M.omega->ring());
    for (const auto& [mo, mb] : loop_basis_word_length(M, word_length_bound)) {
        long d = loop_degree(M, mo, mb);
        if (d < degree_lo || d > degree_hi) continue;
        LoopElement e = loop_make(M, mo, mb, one);
        LoopElement dd = bv_delta(ctx, bv_delta(ctx, e));
        if (!dd.is_zero())
            report.failures.push_back("Delta^2 != 0 on " + display(M, e) + ": got " +
                                      display(M, dd));
    }
    return report;
}

bool check_seven_term(const LoopModel& M, const LoopElement& a, const LoopElement& b,
                      const LoopElement& c) {
    RingTag ring = M.omega->ring();
    long da = loop_degree(M, a).value_or(0);
    long db = loop_degree(M, b).value_or(0);
    BVContext ctx(M);
    LoopElement ab = loop_product(M, a, b);
    LoopElement bc = loop_product(M, b, c);
    LoopElement ac = loop_product(M, a, c);
    LoopElement abc = loop_product(M, ab, c);

    LoopElement lhs = bv_delta(ctx, abc);
    LoopElement rhs = loop_product(M, bv_delta(ctx, ab), c);
    rhs = loop_add(M, rhs,
                   loop_scale(M, sign_pow(ring, da), loop_product(M, a, bv_delta(ctx, bc))));
    rhs = loop_add(M, rhs,
                   loop_scale(M, sign_pow(ring, (da - 1) * db),
                              loop_product(M, b, bv_delta(ctx, ac))));
    rhs = loop_sub(M, rhs, loop_product(M, loop_product(M, bv_delta(ctx, a), b), c));
    rhs = loop_sub(M, rhs,
                   loop_scale(M, sign_pow(ring, da),
                              loop_product(M, loop_product(M, a, bv_delta(ctx, b)), c)));
    rhs = loop_sub(M, rhs,
                   loop_scale(M, sign_pow(ring, da + db), loop_product(M, ab, bv_delta(ctx, c))));
    return loop_sub(M, lhs, rhs).is_zero();
}

LoopElement bracket(const LoopModel& M, const LoopElement& a, const LoopElement& b) {
    RingTag ring = M.omega->ring();
    long da = loop_degree(M, a).value_or(0);
    BVContext ctx(M);
    LoopElement r = bv_delta(ctx, loop_product(M, a, b));
    r = loop_sub(M, r, loop_product(M, bv_delta(ctx, a), b));
    r = loop_sub(M, r, loop_scale(M, sign_pow(ring, da), loop_product(M, a, bv_delta(ctx, b))));
    return loop_scale(M, sign_pow(ring, da), r);
}

std::vector<std::pair<Monomial, Monomial>> loop_basis_in_degree(const LoopModel& M, long d) {
    const GradedAlgebra& GB = M.base->algebra();
    std::vector<std::pair<Monomial, Monomial>> out;
    for (const auto& mb : base_basis(M)) {
        long db = degree_of(GB, mb);
        for (const auto& mo : basis_in_degree(*M.omega, d - db)) out.emplace_back(mo, mb);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t loop_dimension(const LoopModel& M, long d) {
    return loop_basis_in_degree(M, d).size();
}

std::map<long, DeltaHomology> delta_homology_dimensions(const LoopModel& M, long lo, long hi) {
    RingTag ring = M.omega->ring();
    if (ring == RingTag::Integers)
        throw UnsupportedRing("Delta homology ranks need field coefficients");
    BVContext ctx(M);
    std::map<long, DeltaHomology> out;
    std::map<long, std::vector<std::pair<Monomial, Monomial>>> bases;
    for (long d = lo; d <= hi + 1; ++d) bases[d] = loop_basis_in_degree(M, d);
    Scalar one = Scalar::one(ring);
    for (long d = lo; d <= hi; ++d) {
        const auto& dom = bases[d];
        const auto& img = bases[d + 1];
        std::map<std::pair<Monomial, Monomial>, std::size_t> col;
        for (std::size_t j = 0; j < img.size(); ++j) col[img[j]] = j;
        std::vector<std::vector<Scalar>> rows;
        rows.reserve(dom.size());
        for (const auto& k : dom) {
            LoopElement de = bv_delta(ctx, loop_make(M, k.first, k.second, one));
            std::vector<Scalar> row(img.size(), Scalar::zero(ring));
            for (const auto& [tk, c] : de.terms) {
                auto it = col.find(tk);
                if (it == col.end())
                    throw std::logic_error("Delta image leaves the enumerated basis");
                row[it->second] = c;
            }
            rows.push_back(std::move(row));
        }
        std::size_t rank = matrix_rank(rows);
        out[d] = DeltaHomology{dom.size(), dom.size() - rank, rank};
    }
    return out;
}

}  // namespace loopalg
