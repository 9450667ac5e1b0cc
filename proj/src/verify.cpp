#include "loopalg/verify.hpp"

#include <chrono>
#include <tuple>

namespace loopalg {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

}  // namespace

Scalar random_scalar(RingTag ring, std::mt19937_64& rng) {
    switch (ring) {
        case RingTag::GF2: return Scalar::gf2(1);
        case RingTag::Integers: {
            long v = static_cast<long>(pick(rng, 8)) - 4;
            if (v == 0) v = 1;
            return Scalar::from_int(ring, v);
        }
        case RingTag::Rationals: {
            long n = static_cast<long>(pick(rng, 8)) - 4;
            if (n == 0) n = 1;
            long d = 1 + static_cast<long>(pick(rng, 3));
            return Scalar::rational(BigRat(BigInt(n), BigInt(d)));
        }
    }
    throw std::logic_error("bad ring tag");
}

Element random_element(const PresentedAlgebra& A, std::mt19937_64& rng,
                       std::uint32_t word_length, unsigned max_terms) {
    const GradedAlgebra& G = A.algebra();
    std::vector<Monomial> basis = basis_up_to_word_length(A, word_length);
    Element e;
    unsigned k = 1 + static_cast<unsigned>(pick(rng, max_terms));
    for (unsigned t = 0; t < k; ++t)
        add_term(G, e, basis[pick(rng, basis.size())], random_scalar(G.ring(), rng));
    return normal_form(A, e);
}

LoopElement random_homogeneous_loop(const LoopModel& M, std::mt19937_64& rng,
                                    std::uint32_t word_length, unsigned max_terms) {
    std::map<long, std::vector<std::pair<Monomial, Monomial>>> buckets;
    for (const auto& p : loop_basis_word_length(M, word_length))
        buckets[loop_degree(M, p.first, p.second)].push_back(p);
    std::vector<long> degrees;
    for (const auto& [d, v] : buckets) degrees.push_back(d);
    const auto& bucket = buckets[degrees[pick(rng, degrees.size())]];
    LoopElement e;
    unsigned k = 1 + static_cast<unsigned>(pick(rng, max_terms));
    for (unsigned t = 0; t < k; ++t) {
        const auto& [mo, mb] = bucket[pick(rng, bucket.size())];
        loop_add_term(M, e, mo, mb, random_scalar(M.omega->ring(), rng));
    }
    return e;
}

namespace {

SuiteResult suite_delta_squared(const LoopModel& M, const VerifyOptions& opt) {
    auto t0 = Clock::now();
    CheckReport r = check_delta_squared(M, opt.word_length, opt.degree_lo, opt.degree_hi);
    return {"delta_squared", r.failures, ms_since(t0)};
}

SuiteResult suite_seven_term(const LoopModel& M, const VerifyOptions& opt) {
    auto t0 = Clock::now();
    std::mt19937_64 rng(opt.seed);
    SuiteResult out{"seven_term", {}, 0};
    for (unsigned i = 0; i < opt.random_triples; ++i) {
        LoopElement a = random_homogeneous_loop(M, rng, opt.word_length, 2);
        LoopElement b = random_homogeneous_loop(M, rng, opt.word_length, 2);
        LoopElement c = random_homogeneous_loop(M, rng, opt.word_length, 2);
        if (!check_seven_term(M, a, b, c))
            out.failures.push_back("seven-term identity fails on (" + display(M, a) + ", " +
                                   display(M, b) + ", " + display(M, c) + ")");
    }
    out.elapsed_ms = ms_since(t0);
    return out;
}

SuiteResult suite_path_agreement(const LoopModel& M, const VerifyOptions& opt) {
    auto t0 = Clock::now();
    SuiteResult out{"path_agreement", {}, 0};
    BVContext ctx(M);
    Scalar one = Scalar::one(M.omega->ring());
    try {
        for (const auto& [mo, mb] : loop_basis_word_length(M, opt.word_length)) {
            long d = loop_degree(M, mo, mb);
            if (d < opt.degree_lo || d > opt.degree_hi) continue;
            LoopElement e = loop_make(M, mo, mb, one);
            LoopElement d1 = bv_delta(ctx, e);
            LoopElement d2 = bv_delta_derivation_form(M, e);
            if (!loop_sub(M, d1, d2).is_zero())
                out.failures.push_back("paths disagree on " + display(M, e) + ": " +
                                       display(M, d1) + " vs " + display(M, d2));
            if (!M.closed_form_partials.empty()) {
                LoopElement d3 = bv_delta_derivation_form(M, e, PartialSource::ClosedForm);
                if (!loop_sub(M, d1, d3).is_zero())
                    out.failures.push_back("closed-form derivation path disagrees on " +
                                           display(M, e));
            }
        }
    } catch (const DerivationPathUnavailable&) {
        // Torsion on the base side: Delta has no derivation-sum form here.
    }
    out.elapsed_ms = ms_since(t0);
    return out;
}

SuiteResult suite_welldefined(const LoopModel& M) {
    auto t0 = Clock::now();
    WellDefinednessReport r = check_welldefined(M.hopf, M.suspension);
    return {"well_defined", r.failures, ms_since(t0)};
}

SuiteResult suite_hilbert_oracle(const LoopModel& M, const VerifyOptions& opt) {
    auto t0 = Clock::now();
    SuiteResult out{"hilbert_oracle", {}, 0};
    if (M.omega->ring() != RingTag::Integers) {
        for (long d = opt.degree_lo; d <= opt.degree_hi; ++d) {
            for (const PresentedAlgebra* A : {M.omega.get(), M.base.get()}) {
                std::size_t h = hilbert_dimension(*A, d);
                std::size_t o = oracle_dimension(*A, d);
                if (h != o)
                    out.failures.push_back("dimension mismatch in degree " + std::to_string(d) +
                                           ": normal-form count " + std::to_string(h) +
                                           " vs row-reduction " + std::to_string(o));
            }
        }
    }
    out.elapsed_ms = ms_since(t0);
    return out;
}

using TripleTensor = std::map<std::tuple<Monomial, Monomial, Monomial>, Scalar>;

void triple_add(TripleTensor& t, const Monomial& a, const Monomial& b, const Monomial& c,
                const Scalar& s) {
    if (s.is_zero()) return;
    auto key = std::make_tuple(a, b, c);
    auto it = t.find(key);
    if (it == t.end()) {
        t.emplace(key, s);
        return;
    }
    Scalar v = it->second + s;
    if (v.is_zero())
        t.erase(it);
    else
        it->second = v;
}

SuiteResult suite_properties(const LoopModel& M, const VerifyOptions& opt) {
    auto t0 = Clock::now();
    SuiteResult out{"properties", {}, 0};
    const PresentedAlgebra& O = *M.omega;
    const GradedAlgebra& GO = O.algebra();
    const GradedAlgebra& GB = M.base->algebra();
    RingTag ring = GO.ring();
    std::mt19937_64 rng(opt.seed + 1);
    std::vector<Monomial> bbasis = base_basis(M);
    auto sign_of = [&](long k) {
        return (ring != RingTag::GF2 && k % 2 != 0) ? -Scalar::one(ring) : Scalar::one(ring);
    };

    for (unsigned i = 0; i < opt.property_cases && out.failures.size() < 10; ++i) {
        // Graded commutativity of the loop product.
        LoopElement a = random_homogeneous_loop(M, rng, opt.word_length, 2);
        LoopElement b = random_homogeneous_loop(M, rng, opt.word_length, 2);
        long da = loop_degree(M, a).value_or(0), db = loop_degree(M, b).value_or(0);
        LoopElement ab = loop_product(M, a, b);
        LoopElement ba = loop_scale(M, sign_of(da * db), loop_product(M, b, a));
        if (!loop_sub(M, ab, ba).is_zero())
            out.failures.push_back("graded commutativity fails on (" + display(M, a) + ", " +
                                   display(M, b) + ")");

        // Associativity.
        LoopElement c = random_homogeneous_loop(M, rng, opt.word_length, 2);
        if (!loop_sub(M, loop_product(M, ab, c), loop_product(M, a, loop_product(M, b, c)))
                 .is_zero())
            out.failures.push_back("associativity fails on (" + display(M, a) + ", " +
                                   display(M, b) + ", " + display(M, c) + ")");

        // Leibniz rule for the base actions on basis monomials.  With base
        // torsion the actions are module actions, not derivations (the same
        // obstruction that rules out the derivation-sum form of Delta), so
        // the check moves to the loop-side derivations below.
        if (M.base->torsions().empty()) {
            std::size_t p = pick(rng, M.primitive_actions.size());
            const Derivation& der = M.primitive_actions[p];
            Monomial x = bbasis[pick(rng, bbasis.size())];
            Monomial y = bbasis[pick(rng, bbasis.size())];
            Element ex = make_element(GB, x, Scalar::one(ring));
            Element ey = make_element(GB, y, Scalar::one(ring));
            Element lhs = apply_derivation(der, mul(*M.base, ex, ey));
            Element rhs = add(
                GB, mul(*M.base, apply_derivation(der, ex), ey),
                scale(GB, sign_of(der.degree * degree_of(GB, x)),
                      mul(*M.base, ex, apply_derivation(der, ey))));
            if (!sub(GB, lhs, normal_form(*M.base, rhs)).is_zero())
                out.failures.push_back("Leibniz rule fails for " + M.primitives->items[p].name +
                                       " on (" + display(GB, x) + ", " + display(GB, y) + ")");
        }

        // Leibniz rule for the loop-side derivations.
        if (!M.closed_form_partials.empty()) {
            std::size_t p = pick(rng, M.closed_form_partials.size());
            const Derivation& der = M.closed_form_partials[p];
            Element ex = random_element(O, rng, 2, 2);
            Element ey = random_element(O, rng, 2, 2);
            Element lhs = apply_derivation(der, mul(O, ex, ey));
            Element rhs = add(GO, mul(O, apply_derivation(der, ex), ey),
                              mul(O, ex, apply_derivation(der, ey)));
            // Loop side is even, so the Koszul factor in the second summand
            // is +1.
            if (!sub(GO, lhs, normal_form(O, rhs)).is_zero())
                out.failures.push_back("Leibniz rule fails for loop-side derivation " +
                                       std::to_string(p) + " on (" + display(GO, ex) + ", " +
                                       display(GO, ey) + ")");
        }

        // Coassociativity, cocommutativity, counit on a random loop-side
        // element.
        Element e = random_element(O, rng, opt.word_length, 2);
        TensorSquareElement de = coproduct(M.hopf, e);
        TripleTensor left, right;
        for (const auto& [k, cc] : de.terms) {
            for (const auto& [kl, cl] :
                 coproduct(M.hopf, make_element(GO, k.first, Scalar::one(ring))).terms)
                triple_add(left, kl.first, kl.second, k.second, cc * cl);
            for (const auto& [kr, cr] :
                 coproduct(M.hopf, make_element(GO, k.second, Scalar::one(ring))).terms)
                triple_add(right, k.first, kr.first, kr.second, cc * cr);
        }
        if (left != right)
            out.failures.push_back("coassociativity fails on " + display(GO, e));

        TensorSquareElement flipped;
        for (const auto& [k, cc] : de.terms)
            add_term(GO, flipped, k.second, k.first,
                     cc * sign_of(degree_of(GO, k.first) * degree_of(GO, k.second)));
        if (!tensor_sub(GO, de, flipped).is_zero())
            out.failures.push_back("cocommutativity fails on " + display(GO, e));

        Element keep_left, keep_right;
        for (const auto& [k, cc] : de.terms) {
            add_term(GO, keep_right, k.second,
                     cc * counit(M.hopf, make_element(GO, k.first, Scalar::one(ring))));
            add_term(GO, keep_left, k.first,
                     cc * counit(M.hopf, make_element(GO, k.second, Scalar::one(ring))));
        }
        if (!sub(GO, keep_left, e).is_zero() || !sub(GO, keep_right, e).is_zero())
            out.failures.push_back("counit axiom fails on " + display(GO, e));
    }
    out.elapsed_ms = ms_since(t0);
    return out;
}

}  // namespace

std::vector<SuiteResult> run_verification(const LoopModel& M, const VerifyOptions& opt) {
    std::vector<SuiteResult> out;
    out.push_back(suite_delta_squared(M, opt));
    out.push_back(suite_seven_term(M, opt));
    out.push_back(suite_path_agreement(M, opt));
    out.push_back(suite_welldefined(M));
    out.push_back(suite_hilbert_oracle(M, opt));
    out.push_back(suite_properties(M, opt));
    return out;
}

bool all_ok(const std::vector<SuiteResult>& results) {
    for (const auto& r : results)
        if (!r.ok()) return false;
    return true;
}

}  // namespace loopalg
