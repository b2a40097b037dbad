#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "atlas/root_system.hpp"
#include "atlas/weyl.hpp"

using namespace atlas;

namespace {

std::vector<std::pair<Rational, int>> planes(const RotationSpectrum& s) {
    return s.planes;
}

}  // namespace

TEST_CASE("reflections and products") {
    RootDatum g2 = build_root_system("G2");

    // class representative: reflection in the long root (3,2)
    WeylElement a1 = from_carter(g2, {{{3, 2}}, {}});
    CHECK(element_order(a1.matrix) == 2);
    LengthFixed lf = length_and_fixed(g2, a1.matrix, g2.positive_roots);
    CHECK(lf.length == 5);
    CHECK(lf.fixed_roots.size() == 2);  // +-(1,0)
    RotationSpectrum rs = rotation_spectrum(a1.matrix);
    CHECK(rs.fixed_dim == 1);
    CHECK(rs.minus_one_dim == 1);
    CHECK(rs.planes.empty());

    // Coxeter element
    WeylElement cox = from_carter(g2, {{{1, 0}}, {{0, 1}}});
    CHECK(element_order(cox.matrix) == 6);
    LengthFixed lc = length_and_fixed(g2, cox.matrix, g2.positive_roots);
    CHECK(lc.length == 2);
    CHECK(lc.fixed_roots.empty());
    RotationSpectrum rc = rotation_spectrum(cox.matrix);
    CHECK(rc.fixed_dim == 0);
    CHECK(rc.minus_one_dim == 0);
    CHECK(planes(rc) ==
          std::vector<std::pair<Rational, int>>{{Rational(1, 6), 1}});

    // the pair (3,1), (0,1) generates a rotation of order 3
    WeylElement g2a1 = from_carter(g2, {{{3, 1}}, {{0, 1}}});
    CHECK(element_order(g2a1.matrix) == 3);
    CHECK(planes(rotation_spectrum(g2a1.matrix)) ==
          std::vector<std::pair<Rational, int>>{{Rational(1, 3), 1}});

    // identity
    WeylElement id = from_carter(g2, {{}, {}});
    CHECK(element_order(id.matrix) == 1);
    CHECK(length_and_fixed(g2, id.matrix, g2.positive_roots).length == 0);
    CHECK(length_and_fixed(g2, id.matrix, g2.positive_roots).fixed_roots.size() == 12);

    // invalid inputs
    RootDatum a2 = build_root_system("A", 2);
    CHECK_THROWS_AS(from_carter(a2, {{{1, 0}, {0, 1}}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(from_carter(a2, {{{1, 0}}, {{1, 0}}}), std::invalid_argument);
    CHECK_THROWS_AS(from_carter(a2, {{{2, 0}}, {}}), std::invalid_argument);
}

TEST_CASE("classical representatives in type A") {
    RootDatum a3 = build_root_system("A", 3);

    CarterPair four = classical_representative(a3, {{4}, {}});
    CHECK(four.first_set.size() == 2);
    CHECK(four.second_set.size() == 1);
    WeylElement w4 = from_carter(a3, four);
    CHECK(element_order(w4.matrix) == 4);
    CHECK(signed_cycle_type(a3, w4.matrix) == std::vector<int>{4});
    RotationSpectrum r4 = rotation_spectrum(w4.matrix);
    CHECK(r4.fixed_dim == 0);
    CHECK(r4.minus_one_dim == 1);
    CHECK(planes(r4) == std::vector<std::pair<Rational, int>>{{Rational(1, 4), 1}});

    CarterPair two_two = classical_representative(a3, {{2, 2}, {}});
    WeylElement w22 = from_carter(a3, two_two);
    CHECK(signed_cycle_type(a3, w22.matrix) == std::vector<int>{2, 2});
    RotationSpectrum r22 = rotation_spectrum(w22.matrix);
    CHECK(r22.fixed_dim == 1);
    CHECK(r22.minus_one_dim == 2);

    CarterPair two = classical_representative(a3, {{2, 1, 1}, {}});
    WeylElement w2 = from_carter(a3, two);
    CHECK(signed_cycle_type(a3, w2.matrix) == std::vector<int>{2, 1, 1});
    CHECK(rotation_spectrum(w2.matrix).fixed_dim == 2);

    CHECK_THROWS_AS(classical_representative(a3, {{3}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(classical_representative(a3, {{4}, {1}}), std::invalid_argument);
}

TEST_CASE("classical representatives in types B and C") {
    RootDatum b3 = build_root_system("B", 3);

    CarterPair neg3 = classical_representative(b3, {{6}, {}});
    WeylElement w = from_carter(b3, neg3);
    CHECK(element_order(w.matrix) == 6);
    CHECK(signed_cycle_type(b3, w.matrix) == std::vector<int>{-3});
    RotationSpectrum rs = rotation_spectrum(w.matrix);
    CHECK(rs.fixed_dim == 0);
    CHECK(rs.minus_one_dim == 1);
    CHECK(planes(rs) == std::vector<std::pair<Rational, int>>{{Rational(1, 6), 1}});

    CarterPair mixed = classical_representative(b3, {{2}, {2, 2}});
    WeylElement wm = from_carter(b3, mixed);
    CHECK(signed_cycle_type(b3, wm.matrix) == std::vector<int>{2, -1});
    CHECK(element_order(wm.matrix) == 2);
    RotationSpectrum rm = rotation_spectrum(wm.matrix);
    CHECK(rm.fixed_dim == 1);
    CHECK(rm.minus_one_dim == 2);

    RootDatum c2 = build_root_system("C", 2);
    CarterPair pos2 = classical_representative(c2, {{}, {2, 2}});
    CHECK(pos2.first_set.size() == 1);
    CHECK(pos2.second_set.empty());
    WeylElement wp = from_carter(c2, pos2);
    CHECK(signed_cycle_type(c2, wp.matrix) == std::vector<int>{2});
    LengthFixed lf = length_and_fixed(c2, wp.matrix, c2.positive_roots);
    CHECK(lf.length == 1);
    CHECK(lf.fixed_roots.size() == 2);

    CHECK_THROWS_AS(classical_representative(b3, {{3}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(classical_representative(b3, {{}, {2, 1}}), std::invalid_argument);
}

TEST_CASE("classical representatives in type D") {
    RootDatum d4 = build_root_system("D", 4);

    CarterPair pair11 = classical_representative(d4, {{2, 2}, {2, 2}});
    WeylElement w = from_carter(d4, pair11);
    CHECK(signed_cycle_type(d4, w.matrix) == std::vector<int>{2, -1, -1});
    CHECK(element_order(w.matrix) == 2);

    CarterPair pair21 = classical_representative(d4, {{4, 2}, {1, 1}});
    WeylElement w21 = from_carter(d4, pair21);
    CHECK(signed_cycle_type(d4, w21.matrix) == std::vector<int>{-2, 1, -1});
    CHECK(element_order(w21.matrix) == 4);
    RotationSpectrum r21 = rotation_spectrum(w21.matrix);
    CHECK(r21.fixed_dim == 1);
    CHECK(r21.minus_one_dim == 1);
    CHECK(planes(r21) == std::vector<std::pair<Rational, int>>{{Rational(1, 4), 1}});

    CarterPair pos3 = classical_representative(d4, {{}, {3, 3, 1, 1}});
    WeylElement w3 = from_carter(d4, pos3);
    CHECK(signed_cycle_type(d4, w3.matrix) == std::vector<int>{3, 1});
    CHECK(rotation_spectrum(w3.matrix).fixed_dim == 2);

    CHECK_THROWS_AS(classical_representative(d4, {{2}, {2, 2}}),
                    std::invalid_argument);
}
