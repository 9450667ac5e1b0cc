#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "loopalg/catalog.hpp"
#include "loopalg/parse.hpp"

using namespace loopalg;

namespace {

const LoopModel& rp3() {
    static LoopModel M = build({ModelFamily::RP3_Z, 0});
    return M;
}

std::string rt(const LoopModel& M, const std::string& text) {
    return display(M, parse_loop_element(M, text));
}

}  // namespace

TEST_CASE("tensor expressions parse into reduced loop elements") {
    const LoopModel& M = rp3();
    CHECK(rt(M, "u (x) a") == "u (x) a");
    CHECK(rt(M, "u^2 (x) a") == "u^2 (x) a");
    CHECK(rt(M, "u (x) b + u*v (x) a") == "u*v (x) a + u (x) b");
    CHECK(rt(M, "v^2 (x) 1") == "1 (x) 1");
    CHECK(rt(M, "2*u (x) b") == "0");    // b is 2-torsion
    CHECK(rt(M, "-3*u (x) b") == "u (x) b");
    CHECK(rt(M, "u (x) a*b") == "0");    // ab -> 0 in the base
    CHECK(rt(M, "u (x) a - u (x) a") == "0");
    LoopElement dist = parse_loop_element(M, "(u + v) (x) a");
    CHECK(loop_sub(M, dist, parse_loop_element(M, "u (x) a + v (x) a")).is_zero());
    LoopElement sq = parse_loop_element(M, "(u + v)^2 (x) 1");
    CHECK(loop_sub(M, sq, parse_loop_element(M, "u^2 (x) 1 + 2*u*v (x) 1 + 1 (x) 1")).is_zero());
}

TEST_CASE("tensor-free terms resolve by generator lookup") {
    const LoopModel& M = rp3();
    CHECK(rt(M, "u^3") == "u^3 (x) 1");
    CHECK(rt(M, "a") == "1 (x) a");
    CHECK(rt(M, "2") == "2*1 (x) 1");
    CHECK(rt(M, "u + a") == "1 (x) a + u (x) 1");
}

TEST_CASE("loop relations apply during parsing") {
    LoopModel M = build({ModelFamily::SO_odd_Q, 2});
    CHECK(rt(M, "alpha1^2 (x) 1") == "2*alpha0*alpha2 (x) 1");
    CHECK(rt(M, "alpha0^2 (x) beta3") == "1 (x) beta3");
    CHECK(rt(M, "1/2*alpha1 (x) 1") == "1/2*alpha1 (x) 1");
}

TEST_CASE("negative exponents are inverse-generator sugar") {
    LoopModel M = build({ModelFamily::Circle_Z, 0});
    CHECK(rt(M, "x^-2 (x) a") == "xinv^2 (x) a");
    CHECK(rt(M, "x^-1*x (x) 1") == "1 (x) 1");
    // No generator named "ainv".
    CHECK_THROWS_AS(parse_loop_element(M, "a^-1 (x) 1"), ParseError);
}

TEST_CASE("errors carry the offending position") {
    const LoopModel& M = rp3();
    auto pos = [&](const std::string& text) {
        try {
            parse_loop_element(M, text);
        } catch (const ParseError& e) {
            return e.position;
        }
        return std::size_t(-1);
    };
    CHECK(pos("u (x) w") == 6);       // unknown generator
    CHECK(pos("u + ") == 4);          // dangling operator
    CHECK(pos("u^") == 2);            // missing exponent
    CHECK(pos("(u (x) a") == 3);      // tensor separator inside parens
    CHECK(pos("u (x) a (x) b") == 8); // second tensor separator
    CHECK(pos("") == 0);
}

TEST_CASE("single-algebra parsing shares the grammar") {
    const LoopModel& M = rp3();
    Element e = parse_element(*M.base, "a + 3*b");
    CHECK(display(M.base->algebra(), e) == "a + b");  // 3b reduces mod 2
    CHECK_THROWS_AS(parse_element(*M.base, "u"), ParseError);
    CHECK_THROWS_AS(parse_element(*M.base, "a (x) b"), ParseError);
}

TEST_CASE("parse inverts display on random elements") {
    const LoopModel& M = rp3();
    std::mt19937_64 rng(20260823);
    auto wl2 = loop_basis_word_length(M, 2);
    for (int trial = 0; trial < 50; ++trial) {
        LoopElement e;
        std::uniform_int_distribution<std::size_t> pick(0, wl2.size() - 1);
        std::uniform_int_distribution<long> coeff(-5, 5);
        for (int t = 0; t < 4; ++t) {
            const auto& [mo, mb] = wl2[pick(rng)];
            loop_add_term(M, e, mo, mb, Scalar::integer(coeff(rng)));
        }
        LoopElement back = parse_loop_element(M, display(M, e));
        CHECK(loop_sub(M, e, back).is_zero());
    }
}
