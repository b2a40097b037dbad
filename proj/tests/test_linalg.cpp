#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "atlas/cyclotomic.hpp"
#include "atlas/matrix.hpp"
#include "atlas/rational.hpp"

using namespace atlas;

TEST_CASE("rational helpers") {
    CHECK(sign_of(Rational(-3, 7)) == -1);
    CHECK(sign_of(Rational(0)) == 0);
    CHECK(is_integer(Rational(6, 3)));
    CHECK(!is_integer(Rational(1, 2)));
    CHECK(denominator_lcm({Rational(1, 4), Rational(5, 6), Rational(2)}) == 12);
}

TEST_CASE("cyclotomic arithmetic and signs") {
    RealCyclotomic c = RealCyclotomic::cos_turn(Rational(1, 12));  // cos(pi/6)
    RealCyclotomic d = c + c;
    CHECK(sign_of(d * d - RealCyclotomic(Rational(3))) == 0);
    CHECK(sign_of(d - RealCyclotomic(Rational(1))) == 1);
    CHECK(sign_of(RealCyclotomic::cos_turn(Rational(1, 2)) + RealCyclotomic(1)) == 0);
    RealCyclotomic r2 = RealCyclotomic::sqrt2();
    RealCyclotomic r3 = RealCyclotomic::sqrt3();
    CHECK(sign_of(r2 * r2 - RealCyclotomic(Rational(2))) == 0);
    CHECK(sign_of(r3 * r3 - RealCyclotomic(Rational(3))) == 0);
    CHECK(sign_of(r3 - r2) == 1);
    RealCyclotomic inv = r2.inverse();
    CHECK(sign_of(inv * r2 - RealCyclotomic(Rational(1))) == 0);
}

TEST_CASE("echelon, rank, kernel, inverse") {
    Mat<Rational> m = {{Rational(1), Rational(2), Rational(3)},
                       {Rational(2), Rational(4), Rational(6)},
                       {Rational(0), Rational(1), Rational(1)}};
    CHECK(matrix_rank(m) == 2);
    Mat<Rational> k = kernel_basis(m, 3);
    REQUIRE(k.size() == 1);
    for (const auto& row : m) {
        Rational acc(0);
        for (size_t j = 0; j < 3; ++j) acc += row[j] * k[0][j];
        CHECK(acc == 0);
    }

    Mat<Rational> a = {{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
    Mat<Rational> inv = inverse_matrix(a);
    Mat<Rational> prod = mat_mul(a, inv);
    CHECK(prod == identity_matrix<Rational>(2));
    Vec<Rational> x = solve_square(a, {Rational(3), Rational(2)});
    CHECK(x == Vec<Rational>{Rational(1), Rational(1)});
}

TEST_CASE("smith normal form") {
    Mat<Integer> a = {{Integer(2), Integer(4), Integer(4)},
                      {Integer(-6), Integer(6), Integer(12)},
                      {Integer(10), Integer(4), Integer(16)}};
    SmithForm s = smith_normal_form(a);
    Mat<Integer> lhs = mat_mul(mat_mul(s.u, a), s.v);
    CHECK(lhs == s.d);
    CHECK(s.d[0][0] == 2);
    CHECK(s.d[1][1] == 2);
    CHECK(s.d[2][2] == 156);
    for (size_t i = 0; i + 1 < s.d.size(); ++i)
        if (s.d[i + 1][i + 1] != 0) CHECK(s.d[i + 1][i + 1] % s.d[i][i] == 0);
}
