#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mlv/leveln_algebra.hpp"
#include "mlv/textio.hpp"

using namespace mlv;

namespace {
NCPoly U(const std::string& s, int N) { return parse_poly(s, Alphabet::LevelN, N); }
NCPoly Z(const std::string& s, int N) { return parse_poly(s, Alphabet::Mlv, N); }
} // namespace

TEST_CASE("level-N stuffle carries the N-weighted diagonal") {
    // Equal twists: collision term N * Y(k+l, a).
    CHECK(stuffle_N(U("Y(2,1)", 2), U("Y(3,1)", 2)) ==
          U("Y(2,1)Y(3,1) + Y(3,1)Y(2,1) + 2*Y(5,1)", 2));
    // Distinct twists: no collision term.
    CHECK(stuffle_N(U("Y(2,1)", 2), U("Y(3,2)", 2)) ==
          U("Y(2,1)Y(3,2) + Y(3,2)Y(2,1)", 2));
    CHECK(stuffle_N(U("Y(2,3)", 3), U("Y(2,3)", 3)) ==
          U("2*Y(2,3)Y(2,3) + 3*Y(4,3)", 3));
}

TEST_CASE("level-N shuffle is the letterwise interleaving") {
    // Y(1,1) = x_1 and Y(1,2) = x_2 as single letters.
    CHECK(shuffle_N(U("Y(1,1)", 2), U("Y(1,2)", 2)) ==
          U("Y(1,1)Y(1,2) + Y(1,2)Y(1,1)", 2));
    // x_0 x_1 sh x_1: three interleavings, two of them equal.
    NCPoly r = shuffle_N(U("Y(2,1)", 2), U("Y(1,1)", 2));
    CHECK(r == U("2*Y(2,1)Y(1,1) + Y(1,1)Y(2,1)", 2));
}

TEST_CASE("reducer rewriting map J and its inverse") {
    // J sends twist a_i to r(a_i - a_{i+1}) with a_{n+1} = 0.
    // Y(2,1)Y(1,2) at N=2: a_1 -> r(1-2) = 1, a_2 -> r(2) = 2.
    CHECK(map_J(U("Y(2,1)Y(1,2)", 2)) == U("Y(2,1)Y(1,2)", 2));
    // Y(2,2)Y(1,1): a_1 -> r(1) = 1, a_2 -> r(1) = 1.
    CHECK(map_J(U("Y(2,2)Y(1,1)", 2)) == U("Y(2,1)Y(1,1)", 2));
    // J^-1 uses suffix sums: a_i -> r(sum_{j >= i} a_j).
    CHECK(map_J_inv(U("Y(2,1)Y(1,1)", 2)) == U("Y(2,2)Y(1,1)", 2));
    for (const char* s : {"Y(2,1)Y(1,2)Y(1,3)", "Y(1,3)Y(1,3)", "Y(4,2)"}) {
        NCPoly p = U(s, 3);
        CHECK(map_J(map_J_inv(p)) == p);
        CHECK(map_J_inv(map_J(p)) == p);
    }
}

TEST_CASE("level-N double shuffle element stays admissible") {
    NCPoly e = fds_N_element(U("Y(2,1)", 2), U("Y(2,2)", 2));
    CHECK(e.all_in_a0());
    CHECK_FALSE(e.is_zero());
    CHECK_THROWS_AS(fds_N_element(U("Y(1,1)", 2), U("Y(2,2)", 2)), DomainError);
}

TEST_CASE("root-of-unity expansion of a depth-1 congruence sum") {
    // N=2, Y(2,1): parts are omega^{-e*1} L(2; e) for e in {0,1}:
    // exponent -e reduces to e at level 2.
    OmegaPoly op = expand_to_mlv(parse_word("Y(2,1)", Alphabet::LevelN, 2));
    CHECK(op.level == 2);
    CHECK(op.parts.at(0) == Z("z(2,0)", 2));
    CHECK(op.parts.at(1) == Z("z(2,1)", 2));

    // Twist class 2 (== 0 mod 2): exponent -2e == 0, both terms in part 0.
    OmegaPoly op2 = expand_to_mlv(parse_word("Y(2,2)", Alphabet::LevelN, 2));
    CHECK(op2.parts.at(0) == Z("z(2,0) + z(2,1)", 2));

    // Depth 2 at N=2: four terms distributed by parity of e1*a1 + e2*a2.
    OmegaPoly op3 = expand_to_mlv(parse_word("Y(2,1)Y(1,1)", Alphabet::LevelN, 2));
    CHECK(op3.parts.at(0) == Z("z(2,0)z(1,0) + z(2,1)z(1,1)", 2));
    CHECK(op3.parts.at(1) == Z("z(2,0)z(1,1) + z(2,1)z(1,0)", 2));
}

TEST_CASE("expansion counts N^depth terms") {
    OmegaPoly op = expand_to_mlv(parse_word("Y(2,3)Y(1,1)Y(1,2)", Alphabet::LevelN, 3));
    std::size_t total = 0;
    for (const auto& [e, p] : op.parts) total += p.term_count();
    CHECK(total == 27);
}
