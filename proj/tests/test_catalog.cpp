#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loopalg/catalog.hpp"

using namespace loopalg;

TEST_CASE("model names round-trip and bad names are rejected") {
    for (const auto& id : standard_catalog(3)) CHECK(parse_model_id(to_string(id)) == id);
    CHECK(parse_model_id("RP3_Q") == ModelId{ModelFamily::RP3_Q, 0});
    CHECK_THROWS_AS(parse_model_id("SU_3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_model_id("SO_odd_Q(0)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_model_id("SO_odd_Q(7)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_model_id("SO_odd_Q(x)"), std::invalid_argument);
    CHECK(parse_model_id("SO_odd_Q(7)", 8).m == 7);
}

TEST_CASE("the standard catalog holds fifteen models") {
    auto ids = standard_catalog(3);
    CHECK(ids.size() == 15);
}

TEST_CASE("rank-one rational model carries the expected presentation") {
    LoopModel M = build({ModelFamily::SO_odd_Q, 1});
    const GradedAlgebra& GO = M.omega->algebra();
    REQUIRE(GO.size() == 2);
    CHECK(GO.gen(0).name == "alpha0");
    CHECK(GO.gen(1).name == "alpha1");
    CHECK(GO.gen(1).degree == 2);
    REQUIRE(M.omega->rewrites().size() == 1);  // alpha0^2 -> 1 only
    CHECK(M.omega->rewrites()[0].rhs.terms.size() == 1);
    const GradedAlgebra& GB = M.base->algebra();
    REQUIRE(GB.size() == 1);
    CHECK(GB.gen(0).name == "beta3");
    CHECK(GB.gen(0).degree == -3);
    REQUIRE(M.primitives->items.size() == 1);
    CHECK(M.primitives->items[0].name == "a3");
    CHECK(M.dim_group == 3);
}

TEST_CASE("rank-one mod-two model truncates its base at the fourth power") {
    LoopModel M = build({ModelFamily::SO_odd_F2, 1});
    const GradedAlgebra& GO = M.omega->algebra();
    REQUIRE(GO.size() == 2);  // a0, b0
    CHECK(GO.gen(1).name == "b0");
    CHECK(GO.gen(1).degree == 2);
    const PresentedAlgebra& B = *M.base;
    REQUIRE(B.rewrites().size() == 1);
    // r_1 is the least power of two with 1 * r_1 >= 3, so c1^4 -> 0 and the
    // base realises the four-dimensional mod-2 homology of the group.
    CHECK(B.rewrites()[0].lhs.exp[0] == 4);
    std::size_t total = 0;
    for (long d = -3; d <= 0; ++d) total += hilbert_dimension(B, d);
    CHECK(total == 4);
}

TEST_CASE("mod-two relation table splits at half the rank") {
    LoopModel M = build({ModelFamily::SO_odd_F2, 3});
    const GradedAlgebra& GO = M.omega->algebra();
    const auto& rules = M.omega->rewrites();
    REQUIRE(rules.size() == 3);  // a0^2, a1^2, a2^2
    CHECK(rules[1].rhs.is_zero());  // 2*1 <= m-1 = 2
    // a2^2 -> b1 a0 + b0 a1.
    CHECK(display(GO, rules[2].rhs) == "a1*b0 + a0*b1");
}

TEST_CASE("torsion data of the projective space model") {
    LoopModel M = build({ModelFamily::RP3_Z, 0});
    REQUIRE(M.base->torsions().size() == 1);
    CHECK(M.base->torsions()[0].modulus == 2);
    CHECK(M.base->algebra().gen(M.base->torsions()[0].pattern).name == "b");
    REQUIRE(M.primitives->items.size() == 2);
    CHECK(M.primitives->items[0].torsion == std::uint64_t{2});
    // rho a = b, [RP3] a = 1.
    const GradedAlgebra& GB = M.base->algebra();
    CHECK(display(GB, M.primitive_actions[0].values_on_generators[0]) == "b");
    CHECK(display(GB, M.primitive_actions[1].values_on_generators[0]) == "1");
}

TEST_CASE("every catalog model passes its golden Delta table") {
    std::vector<ModelId> ids = standard_catalog(3);
    ids.push_back({ModelFamily::RP3_Q, 0});
    for (const auto& id : ids) {
        LoopModel M = build(id);
        BVContext ctx(M);
        for (const auto& [input, expected] : golden_delta_table(id, M)) {
            LoopElement got = bv_delta(ctx, input);
            CHECK_MESSAGE(loop_sub(M, got, expected).is_zero(),
                          to_string(id), ": Delta(", display(M, input), ") = ", display(M, got),
                          ", expected ", display(M, expected));
        }
    }
}

TEST_CASE("group dimensions follow the Lie series") {
    CHECK(build({ModelFamily::SO_odd_Q, 2}).dim_group == 10);    // SO(5)
    CHECK(build({ModelFamily::SO_even_Q, 2}).dim_group == 15);   // SO(6)
    CHECK(build({ModelFamily::SO_odd_F2, 3}).dim_group == 21);   // SO(7)
    CHECK(build({ModelFamily::SO_even_F2, 3}).dim_group == 28);  // SO(8)
}

TEST_CASE("build enforces the rank window") {
    CHECK_THROWS_AS(build({ModelFamily::SO_odd_Q, 0}), std::invalid_argument);
    CHECK_THROWS_AS(build({ModelFamily::SO_even_F2, 7}), std::invalid_argument);
    CHECK(build({ModelFamily::SO_even_F2, 7}, 8).dim_group == 120);  // SO(16)
}
