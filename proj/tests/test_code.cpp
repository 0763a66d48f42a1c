#include <catch2/catch_amalgamated.hpp>

#include <memory>
#include <random>

#include <goppa/code.hpp>

using goppa::BitVec;
using goppa::Code;
using goppa::Elem;
using goppa::Field;
using goppa::LocationSet;
using goppa::Poly;

namespace {

std::shared_ptr<const Field> make_field(int l) {
    return std::make_shared<const Field>(l);
}

// Membership of a row in the parity row space is the same as orthogonality
// to every generator row; used as an independent oracle below.
bool orthogonal_to_code(const Code& c, const BitVec& row) {
    goppa::BitMatrix gen = goppa::generator_matrix(c);
    for (std::size_t r = 0; r < gen.rows(); ++r) {
        BitVec g = gen.row(r);
        int parity = 0;
        for (std::size_t i = 0; i < g.size(); ++i)
            parity ^= (g.get(i) && row.get(i)) ? 1 : 0;
        if (parity) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("location set for x^3 + 1 over GF(16)") {
    auto F = make_field(2);
    Poly g1{1, 0, 0, 1};
    LocationSet L = goppa::location_set(*F, g1);
    REQUIRE(L.size() == 13);          // excludes the three cube roots of 1
    CHECK(L.elems.front() == F->alpha());  // 1 itself is a root, so alpha first
    CHECK(L.elems.back() == 0);
    CHECK_FALSE(L.contains(1));
    CHECK_FALSE(L.contains(F->exp(5)));
    CHECK_FALSE(L.contains(F->exp(10)));
    CHECK(L.has_zero());
    LocationSet Ls = L.without_zero();
    CHECK(Ls.size() == 12);
    CHECK_FALSE(Ls.has_zero());
    CHECK_THROWS_AS(Ls.without_zero(), std::invalid_argument);
    CHECK_THROWS_AS(goppa::location_set(*F, Poly{}), std::invalid_argument);
}

TEST_CASE("goppa code over GF(16), degree 3") {
    auto F = make_field(2);
    Poly g1{1, 0, 0, 1};
    Code c(F, g1, goppa::location_set(*F, g1));
    CHECK(c.n() == 13);
    CHECK(c.h_bin().rows() == 12);    // m * deg = 4 * 3
    CHECK(c.h_rank() == 11);
    CHECK(c.k() == 2);
    CHECK(c.design_distance() == 7);
    CHECK(c.zero_position() == 12);

    // H[0][last] = 1 / G(0) = 1
    CHECK(c.h_field()[0][12] == 1);
    // binary expansion round-trip
    for (std::size_t i = 0; i < c.h_field().size(); ++i)
        for (std::size_t j = 0; j < c.n(); ++j) {
            Elem rebuilt = 0;
            for (int b = 0; b < F->m(); ++b)
                if (c.h_bin().get(4 * i + b, j)) rebuilt |= Elem(1) << b;
            CHECK(rebuilt == c.h_field()[i][j]);
        }
    // k is at least n - m*deg
    CHECK(c.k() >= c.n() - 12);
}

TEST_CASE("syndrome residue agrees with the binary parity matrix") {
    auto F = make_field(2);
    Poly g1{1, 0, 0, 1};
    Code c(F, g1, goppa::location_set(*F, g1));
    goppa::BitMatrix gen = goppa::generator_matrix(c);
    REQUIRE(gen.rows() == 2);
    for (std::size_t r = 0; r < gen.rows(); ++r) {
        CHECK(c.syndrome_is_zero(gen.row(r)));
        CHECK(goppa::mul_vec_is_zero(c.h_bin(), gen.row(r)));
    }
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        BitVec w(c.n());
        for (std::size_t i = 0; i < c.n(); ++i) w.set(i, rng() & 1);
        CHECK(c.syndrome_is_zero(w) == goppa::mul_vec_is_zero(c.h_bin(), w));
    }
    BitVec wrong(5);
    CHECK_THROWS_AS(c.syndrome_is_zero(wrong), std::invalid_argument);
}

TEST_CASE("restricting the location set matches shortening") {
    auto F = make_field(2);
    Poly g1{1, 0, 0, 1};
    LocationSet L = goppa::location_set(*F, g1);
    Code full(F, g1, L);
    Code restricted(F, g1, L.without_zero());
    CHECK(restricted.n() == 12);
    CHECK(restricted.k() == 1);

    goppa::LinearCode sh = goppa::shorten(full, 12);
    CHECK(sh.n == 12);
    CHECK(sh.k() == 1);
    CHECK(goppa::row_space_equal(sh.gen, goppa::generator_matrix(restricted)));
}

TEST_CASE("shortening twice commutes") {
    auto F = make_field(2);
    Poly g1{1, 0, 0, 1};
    Code c(F, g1, goppa::location_set(*F, g1));
    auto a = goppa::shorten(goppa::shorten(c, 3), 6);
    // after deleting position 3, original position 7 shifts down to 6
    auto b = goppa::shorten(goppa::shorten(c, 7), 3);
    REQUIRE(a.n == b.n);
    CHECK(goppa::row_space_equal(a.gen, b.gen));
    CHECK_THROWS_AS(goppa::shorten(c, 13), std::out_of_range);
}

TEST_CASE("redundant parity rows") {
    auto F = make_field(2);
    Poly g1{1, 0, 0, 1};
    LocationSet L = goppa::location_set(*F, g1);
    Code full(F, g1, L);
    Code star(F, g1, L.without_zero());

    CHECK(goppa::verify_redundant_row(star, goppa::RedundantRow::inverse_weighted));
    CHECK(goppa::verify_redundant_row(full, goppa::RedundantRow::all_ones));
    CHECK(goppa::verify_redundant_row(star, goppa::RedundantRow::all_ones));
    CHECK_THROWS_AS(
        goppa::verify_redundant_row(full, goppa::RedundantRow::inverse_weighted),
        std::domain_error);

    // cross-check against the duality oracle, including a code where the
    // all-ones row is *not* redundant (G = x over nonzero locations)
    Code xcode(F, Poly{0, 1}, goppa::location_set(*F, Poly{0, 1}));
    for (const Code* c : {&full, &star, &xcode}) {
        BitVec ones(c->n());
        for (std::size_t j = 0; j < c->n(); ++j)
            if (c->locations().elems[j] != 0) ones.set(j, true);
        CHECK(goppa::verify_redundant_row(*c, goppa::RedundantRow::all_ones) ==
              orthogonal_to_code(*c, ones));
    }
}

TEST_CASE("construction errors") {
    auto F = make_field(2);
    Poly g1{1, 0, 0, 1};
    LocationSet bad;
    bad.elems = {1, 2};  // 1 is a root of x^3 + 1
    CHECK_THROWS_AS(Code(F, g1, bad), std::invalid_argument);
    LocationSet dup;
    dup.elems = {2, 3, 2};
    CHECK_THROWS_AS(Code(F, g1, dup), std::invalid_argument);
    LocationSet empty;
    CHECK_THROWS_AS(Code(F, g1, empty), std::invalid_argument);
    CHECK_THROWS_AS(Code(F, Poly{7}, goppa::location_set(*F, Poly{7})),
                    std::invalid_argument);
}

TEST_CASE("degree-4 family sizes over GF(64)") {
    auto F = make_field(3);
    Poly g1{1, 0, 0, 0, 0, 0, 0, 1};  // x^7 + 1
    Code c(F, g1, goppa::location_set(*F, g1));
    CHECK(c.n() == 57);
    CHECK(c.k() == 17);
    CHECK(c.design_distance() == 15);
}
