#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loopalg/serialize.hpp"

using namespace loopalg;

TEST_CASE("scalars round-trip with tagged ring") {
    for (const Scalar& c : {Scalar::integer(BigInt("-123456789012345678901234567890")),
                            Scalar::rational(BigRat(-7, 12)), Scalar::gf2(1),
                            Scalar::integer(0)}) {
        json j = scalar_to_json(c);
        CHECK(scalar_from_json(j) == c);
    }
    CHECK(scalar_to_json(Scalar::gf2(1)) == json{{"F2", 1}});
    CHECK_THROWS(scalar_from_json(json{{"R", 1}}));
}

TEST_CASE("monomials and elements round-trip by generator name") {
    LoopModel M = model_from_json(model_to_json(build(parse_model_id("RP3_Z"))));
    const GradedAlgebra& G = M.omega->algebra();
    Monomial m = generator_monomial(G, 0, 3);
    m.exp[1] = 1;  // u^3 v
    json jm = monomial_to_json(G, m);
    CHECK(jm == json{{"u", 3}, {"v", 1}});
    CHECK(monomial_from_json(G, jm) == m);
    CHECK(monomial_from_json(G, json::object()) == unit_monomial(G));
    CHECK_THROWS(monomial_from_json(G, json{{"w", 1}}));

    Element e;
    add_term(G, e, m, Scalar::integer(-4));
    add_term(G, e, unit_monomial(G), Scalar::integer(7));
    Element back = element_from_json(G, element_to_json(G, e));
    CHECK(back.terms == e.terms);
    CHECK(element_from_json(G, json::array()).is_zero());
}

TEST_CASE("algebra presentations round-trip including torsion rules") {
    LoopModel M = build(parse_model_id("RP3_Z"));
    json j = algebra_to_json(*M.base);
    PresentedAlgebra B = algebra_from_json(j);
    CHECK(B.algebra().ring() == RingTag::Integers);
    REQUIRE(B.algebra().size() == 2);
    CHECK(B.algebra().gen(1).degree == -2);
    REQUIRE(B.torsions().size() == 1);
    CHECK(B.torsions()[0].modulus == 2);
    CHECK(algebra_to_json(B) == j);
}

TEST_CASE("whole models serialize bit-exactly") {
    for (const char* name : {"Circle_Z", "S3_Z", "RP3_Z", "SO_odd_Q(2)", "SO_even_F2(2)"}) {
        LoopModel M = build(parse_model_id(name));
        json j = model_to_json(M);
        LoopModel N = model_from_json(j);
        CHECK(model_to_json(N) == j);
        CHECK(N.name == M.name);
        CHECK(N.dim_group == M.dim_group);
        // The deserialized model computes, not just stores.
        BVContext ca(M), cb(N);
        for (const auto& [mo, mb] : loop_basis_word_length(M, 2)) {
            LoopElement e = loop_make(M, mo, mb, Scalar::one(M.omega->ring()));
            CHECK(display(M, bv_delta(ca, e)) == display(N, bv_delta(cb, e)));
        }
    }
}

TEST_CASE("loop elements round-trip") {
    LoopModel M = build(parse_model_id("SO_odd_F2(2)"));
    const GradedAlgebra& GO = M.omega->algebra();
    const GradedAlgebra& GB = M.base->algebra();
    LoopElement e;
    loop_add_term(M, e, generator_monomial(GO, 1), generator_monomial(GB, 0), Scalar::gf2(1));
    loop_add_term(M, e, unit_monomial(GO), unit_monomial(GB), Scalar::gf2(1));
    json j = loop_element_to_json(M, e);
    CHECK(loop_element_from_json(M, j) == e);
    CHECK(loop_element_to_json(M, loop_element_from_json(M, j)) == j);
}
