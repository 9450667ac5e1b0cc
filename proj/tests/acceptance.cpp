// Acceptance gate: each criterion runs as its own process (argv[1] = 1..9)
// and prints exactly one [PASS]/[FAIL] line.  All comparisons are exact.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include "loopalg/catalog.hpp"
#include "loopalg/verify.hpp"

using namespace loopalg;

namespace {

struct Outcome {
    std::string title;
    std::vector<std::string> failures;
    long long budget_ms = 0;  // 0 = no runtime bound
    long long elapsed_ms = 0;
};

LoopElement power_tensor(const LoopModel& M, std::initializer_list<std::pair<int, int>> omega_exp,
                         int base_gen, long coeff) {
    const GradedAlgebra& GO = M.omega->algebra();
    const GradedAlgebra& GB = M.base->algebra();
    Monomial mo = unit_monomial(GO);
    for (auto [g, e] : omega_exp) mo.exp[std::size_t(g)] += std::uint32_t(e);
    Monomial mb = base_gen < 0 ? unit_monomial(GB) : generator_monomial(GB, base_gen);
    LoopElement out;
    loop_add_term(M, out, mo, mb, Scalar::from_int(GO.ring(), coeff));
    return out;
}

void expect_delta(const LoopModel& M, BVContext& ctx, const LoopElement& input,
                  const LoopElement& expected, std::vector<std::string>& failures) {
    LoopElement got = bv_delta(ctx, input);
    if (!loop_sub(M, got, expected).is_zero())
        failures.push_back(M.name + ": Delta(" + display(M, input) + ") = " + display(M, got) +
                           ", expected " + display(M, expected));
}

// Criterion 1: closed-form Delta tables for the three geometric models.
Outcome criterion1() {
    Outcome out{"golden Delta tables (circle, 3-sphere, projective 3-space)", {}, 5000};

    LoopModel S1 = build({ModelFamily::Circle_Z, 0});
    BVContext c1(S1);
    for (int i = -8; i <= 8; ++i) {
        // x^i as x^i or xinv^{-i}.
        auto xi = [&](int base, long c) {
            return i >= 0 ? power_tensor(S1, {{0, i}}, base, c)
                          : power_tensor(S1, {{1, -i}}, base, c);
        };
        expect_delta(S1, c1, xi(0, 1), xi(-1, i), out.failures);  // Delta(x^i (x) a) = i x^i (x) 1
        expect_delta(S1, c1, xi(-1, 1), LoopElement{}, out.failures);
    }

    LoopModel S3 = build({ModelFamily::S3_Z, 0});
    BVContext c3(S3);
    for (int i = 0; i <= 8; ++i) {
        LoopElement expected =
            i == 0 ? LoopElement{} : power_tensor(S3, {{0, i - 1}}, -1, i);
        expect_delta(S3, c3, power_tensor(S3, {{0, i}}, 0, 1), expected, out.failures);
        expect_delta(S3, c3, power_tensor(S3, {{0, i}}, -1, 1), LoopElement{}, out.failures);
    }

    LoopModel P = build({ModelFamily::RP3_Z, 0});
    BVContext cp(P);
    for (int i = 0; i <= 8; ++i)
        for (int j = 0; j <= 1; ++j) {
            // Delta(u^i v^j (x) a) = 2i u^{i-1} v^j (x) 1 + j u^i v^j (x) b.
            LoopElement expected;
            if (i > 0)
                expected = power_tensor(P, {{0, i - 1}, {1, j}}, -1, 2 * i);
            if (j == 1)
                expected = loop_add(P, expected, power_tensor(P, {{0, i}, {1, j}}, 1, 1));
            expect_delta(P, cp, power_tensor(P, {{0, i}, {1, j}}, 0, 1), expected, out.failures);
            expect_delta(P, cp, power_tensor(P, {{0, i}, {1, j}}, -1, 1), LoopElement{},
                         out.failures);
            expect_delta(P, cp, power_tensor(P, {{0, i}, {1, j}}, 1, 1), LoopElement{},
                         out.failures);
        }
    return out;
}

// Criterion 2: Delta^2 = 0 on all basis tensors of loop-side word length <= 3.
Outcome criterion2() {
    Outcome out{"Delta squared vanishes on all 15 models", {}, 180000};
    for (const auto& id : standard_catalog(3)) {
        LoopModel M = build(id);
        CheckReport r = check_delta_squared(M, 3, -1000000, 1000000);
        for (const auto& f : r.failures) out.failures.push_back(to_string(id) + ": " + f);
    }
    return out;
}

// Basis tensors whose per-generator exponents stay <= cap.
std::vector<LoopElement> capped_basis(const LoopModel& M, std::uint32_t cap) {
    std::vector<LoopElement> basis;
    Scalar one = Scalar::one(M.omega->ring());
    std::size_t ngen = M.omega->algebra().size();
    for (const auto& [mo, mb] : loop_basis_word_length(M, cap * std::uint32_t(ngen))) {
        bool small = true;
        for (std::uint32_t e : mo.exp) small = small && e <= cap;
        if (small) basis.push_back(loop_make(M, mo, mb, one));
    }
    return basis;
}

// Criterion 3: the seven-term BV identity.
Outcome criterion3() {
    Outcome out{"seven-term identity (exhaustive small models, 200 random triples per SO model)",
                {}, 180000};
    for (auto fam : {ModelFamily::Circle_Z, ModelFamily::S3_Z, ModelFamily::RP3_Z}) {
        LoopModel M = build({fam, 0});
        auto basis = capped_basis(M, 3);
        for (const auto& a : basis)
            for (const auto& b : basis)
                for (const auto& c : basis)
                    if (!check_seven_term(M, a, b, c)) {
                        out.failures.push_back(M.name + ": fails on (" + display(M, a) + ", " +
                                               display(M, b) + ", " + display(M, c) + ")");
                        if (out.failures.size() > 5) return out;
                    }
    }
    for (const auto& id : standard_catalog(3)) {
        if (id.family == ModelFamily::Circle_Z || id.family == ModelFamily::S3_Z ||
            id.family == ModelFamily::RP3_Z)
            continue;
        LoopModel M = build(id);
        std::mt19937_64 rng(42);
        for (unsigned t = 0; t < 200; ++t) {
            LoopElement a = random_homogeneous_loop(M, rng, 2, 3);
            LoopElement b = random_homogeneous_loop(M, rng, 2, 3);
            LoopElement c = random_homogeneous_loop(M, rng, 2, 3);
            if (!check_seven_term(M, a, b, c)) {
                out.failures.push_back(to_string(id) + ": fails on (" + display(M, a) + ", " +
                                       display(M, b) + ", " + display(M, c) + ")");
                if (out.failures.size() > 5) return out;
            }
        }
    }
    return out;
}

// Criterion 4: coproduct route and derivation-sum route agree term by term.
Outcome criterion4() {
    Outcome out{"both Delta routes agree on field models and the torsion-free Z models", {}};
    std::vector<ModelId> ids{{ModelFamily::Circle_Z, 0}, {ModelFamily::S3_Z, 0}};
    for (const auto& id : standard_catalog(3))
        if (id.family != ModelFamily::Circle_Z && id.family != ModelFamily::S3_Z &&
            id.family != ModelFamily::RP3_Z)
            ids.push_back(id);
    for (const auto& id : ids) {
        LoopModel M = build(id);
        BVContext ctx(M);
        // The small models re-test their exhaustive capped bases; the SO
        // models re-test word-length-<=3 basis tensors plus the same kind of
        // random homogeneous elements the seven-term samples draw from.
        std::vector<LoopElement> inputs;
        if (id.family == ModelFamily::Circle_Z || id.family == ModelFamily::S3_Z) {
            inputs = capped_basis(M, 3);
        } else {
            Scalar one = Scalar::one(M.omega->ring());
            for (const auto& [mo, mb] : loop_basis_word_length(M, 3))
                inputs.push_back(loop_make(M, mo, mb, one));
            std::mt19937_64 rng(42);
            for (unsigned t = 0; t < 200; ++t)
                inputs.push_back(random_homogeneous_loop(M, rng, 2, 3));
        }
        for (const auto& e : inputs) {
            LoopElement lhs = bv_delta(ctx, e);
            LoopElement rhs = bv_delta_derivation_form(M, e);
            if (!loop_sub(M, lhs, rhs).is_zero()) {
                out.failures.push_back(to_string(id) + ": routes disagree on " + display(M, e) +
                                       ": " + display(M, lhs) + " vs " + display(M, rhs));
                if (out.failures.size() > 5) return out;
            }
        }
    }
    return out;
}

// Criterion 5: the pairing definition of partial_i reproduces the closed
// forms on generators and on word-length-<=3 monomials.
Outcome criterion5() {
    Outcome out{"pairing-defined loop derivations match their closed forms", {}};
    for (const auto& id : standard_catalog(3)) {
        if (id.family == ModelFamily::Circle_Z || id.family == ModelFamily::S3_Z ||
            id.family == ModelFamily::RP3_Z)
            continue;
        LoopModel M = build(id);
        const GradedAlgebra& G = M.omega->algebra();
        std::vector<Element> probes;
        for (std::size_t g = 0; g < G.size(); ++g) probes.push_back(gen_element(G, g));
        for (const auto& m : basis_up_to_word_length(*M.omega, 3))
            probes.push_back(make_element(G, m, Scalar::one(G.ring())));
        for (std::size_t i = 0; i < M.closed_form_partials.size(); ++i)
            for (const auto& e : probes) {
                Element from_pairing =
                    partial_from_definition(M.partial_primitive[i], e, M.hopf, M.suspension);
                Element closed = apply_derivation(M.closed_form_partials[i], e);
                if (!sub(G, from_pairing, closed).is_zero()) {
                    out.failures.push_back(to_string(id) + ": partial_" + std::to_string(i) +
                                           " on " + display(G, e) + ": " +
                                           display(G, from_pairing) + " vs " +
                                           display(G, closed));
                    if (out.failures.size() > 5) return out;
                }
            }
    }
    return out;
}

// Coefficients of 2 / prod_k (1 - t^{2k}), k = 1..half, up to degree hi.
std::vector<std::size_t> even_product_series(unsigned half, long hi) {
    std::vector<std::size_t> c(std::size_t(hi) + 1, 0);
    c[0] = 2;
    for (unsigned k = 1; k <= half; ++k)
        for (long d = 2 * long(k); d <= hi; ++d) c[d] += c[d - 2 * k];
    return c;
}

// Criterion 6: rewriting dimensions against the row-reduction oracle, plus
// the stated loop-side series for SO(4) and SO(6) mod 2.
Outcome criterion6() {
    Outcome out{"Hilbert dimensions: oracle agreement and the stated SO(4)/SO(6) mod-2 series",
                {}, 120000};
    for (const auto& id : standard_catalog(3)) {
        if (id.family == ModelFamily::Circle_Z || id.family == ModelFamily::S3_Z ||
            id.family == ModelFamily::RP3_Z)
            continue;
        LoopModel M = build(id);
        for (const PresentedAlgebra* A : {M.omega.get(), M.base.get()})
            for (long d = -20; d <= 20; ++d) {
                std::size_t h = hilbert_dimension(*A, d);
                std::size_t o = oracle_dimension(*A, d);
                if (h != o)
                    out.failures.push_back(to_string(id) + " degree " + std::to_string(d) +
                                           ": normal-form count " + std::to_string(h) +
                                           ", oracle rank " + std::to_string(o));
            }
    }
    for (unsigned m : {1u, 2u}) {
        LoopModel M = build({ModelFamily::SO_even_F2, m});
        auto series = even_product_series(m + 1, 20);
        for (long d = 0; d <= 20; ++d) {
            std::size_t got = hilbert_dimension(*M.omega, d);
            if (got != series[d])
                out.failures.push_back("SO_even_F2(" + std::to_string(m) + ") loop-side degree " +
                                       std::to_string(d) + ": dimension " + std::to_string(got) +
                                       ", stated series coefficient " + std::to_string(series[d]));
        }
    }
    return out;
}

// Criterion 7: structure maps respect every rewrite rule, torsion included.
Outcome criterion7() {
    Outcome out{"coproduct and suspension are well defined on every model", {}};
    std::vector<ModelId> ids = standard_catalog(3);
    ids.push_back({ModelFamily::RP3_Q, 0});
    for (const auto& id : ids) {
        LoopModel M = build(id);
        WellDefinednessReport r = check_welldefined(M.hopf, M.suspension);
        for (const auto& f : r.failures) out.failures.push_back(to_string(id) + ": " + f);
    }
    return out;
}

// Criterion 8: SO(3) and RP3 with rational coefficients give the same
// dimensions and the same Delta homology ranks.
Outcome criterion8() {
    Outcome out{"SO(3) and rational projective 3-space agree degreewise", {}};
    LoopModel A = build({ModelFamily::SO_odd_Q, 1});
    LoopModel B = build({ModelFamily::RP3_Q, 0});
    for (long d = -3; d <= 12; ++d) {
        std::size_t da = loop_dimension(A, d), db = loop_dimension(B, d);
        if (da != db)
            out.failures.push_back("degree " + std::to_string(d) + ": dimensions " +
                                   std::to_string(da) + " vs " + std::to_string(db));
    }
    auto ha = delta_homology_dimensions(A, -3, 12);
    auto hb = delta_homology_dimensions(B, -3, 12);
    for (long d = -3; d <= 12; ++d) {
        const DeltaHomology &a = ha.at(d), &b = hb.at(d);
        if (a.kernel != b.kernel || a.image != b.image)
            out.failures.push_back("degree " + std::to_string(d) + ": Delta ranks (ker " +
                                   std::to_string(a.kernel) + ", im " + std::to_string(a.image) +
                                   ") vs (ker " + std::to_string(b.kernel) + ", im " +
                                   std::to_string(b.image) + ")");
    }
    return out;
}

// Criterion 9: structural property suites, 500 seeded cases per model.
Outcome criterion9() {
    Outcome out{"structural property suites, 500 seeded cases per model", {}};
    VerifyOptions opt;
    opt.property_cases = 500;
    for (const auto& id : standard_catalog(3)) {
        LoopModel M = build(id);
        for (const auto& suite : run_verification(M, opt)) {
            if (suite.check != "properties") continue;
            for (const auto& f : suite.failures)
                out.failures.push_back(to_string(id) + ": " + f);
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <criterion 1..9>\n";
        return 2;
    }
    int n = std::atoi(argv[1]);
    Outcome (*runners[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                              criterion6, criterion7, criterion8, criterion9};
    if (n < 1 || n > 9) {
        std::cerr << "usage: acceptance <criterion 1..9>\n";
        return 2;
    }
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = runners[n - 1]();
    } catch (const std::exception& e) {
        out.failures.push_back(std::string("exception: ") + e.what());
    }
    out.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    if (out.budget_ms > 0 && out.elapsed_ms > out.budget_ms)
        out.failures.push_back("runtime " + std::to_string(out.elapsed_ms) + " ms exceeds " +
                               std::to_string(out.budget_ms) + " ms budget");

    std::ostringstream line;
    line << (out.failures.empty() ? "[PASS]" : "[FAIL]") << " criterion " << n << ": "
         << out.title << " (" << out.elapsed_ms << " ms)";
    std::cout << line.str() << "\n";
    for (const auto& f : out.failures) std::cout << "    " << f << "\n";
    return out.failures.empty() ? 0 : 1;
}
