#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "atlas/assoc_positive.hpp"
#include "atlas/root_system.hpp"
#include "atlas/weyl.hpp"

using namespace atlas;

namespace {

CarterPair pair_of(const RootDatum& datum, const std::vector<int>& s1,
                   const std::vector<int>& s2) {
    CarterPair p;
    for (int k : s1) p.first_set.push_back(datum.positive_root(k));
    for (int k : s2) p.second_set.push_back(datum.positive_root(k));
    return p;
}

// Invariants every associated positive system satisfies.
void check_structure(const RootDatum& datum, const AssociatedSystem& sys) {
    const int l = datum.rank;
    REQUIRE(static_cast<int>(sys.positive_roots.size()) == datum.num_positive());

    std::set<RootCoords> pos(sys.positive_roots.begin(), sys.positive_roots.end());
    REQUIRE(pos.size() == sys.positive_roots.size());

    // one root per +- pair
    for (const RootCoords& a : sys.positive_roots) {
        RootCoords neg = a;
        for (int& c : neg) c = -c;
        CHECK(!pos.count(neg));
        CHECK(datum.is_root(a));
    }

    // closed under addition
    for (const RootCoords& a : sys.positive_roots)
        for (const RootCoords& b : sys.positive_roots) {
            RootCoords sum(l, 0);
            for (int t = 0; t < l; ++t) sum[t] = a[t] + b[t];
            if (datum.is_root(sum)) CHECK(pos.count(sum));
        }

    // the reflection roots of the class representative are positive
    for (const auto* set : {&sys.adjusted.first_set, &sys.adjusted.second_set})
        for (const RootCoords& g : *set) CHECK(pos.count(g));

    // strata: disjoint cover, stable under the element as +- pairs
    size_t covered = 0;
    for (const auto& stratum : sys.strata) {
        covered += stratum.size();
        std::set<RootCoords> in_stratum;
        for (const RootCoords& a : stratum) {
            in_stratum.insert(a);
            RootCoords neg = a;
            for (int& c : neg) c = -c;
            in_stratum.insert(neg);
        }
        for (const RootCoords& a : stratum)
            CHECK(in_stratum.count(apply_matrix(sys.spectral.element.matrix, a)));
    }
    CHECK(covered == sys.positive_roots.size());

    // simple roots generate the positive system with nonnegative coordinates
    REQUIRE(static_cast<int>(sys.simple_roots.size()) == l);
    Mat<Rational> basis(l, Vec<Rational>(l, Rational(0)));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) basis[i][j] = Rational(sys.simple_roots[j][i]);
    for (const RootCoords& a : sys.positive_roots) {
        Vec<Rational> rhs(l, Rational(0));
        for (int i = 0; i < l; ++i) rhs[i] = Rational(a[i]);
        Vec<Rational> x = solve_square(basis, rhs);
        for (int i = 0; i < l; ++i) {
            CHECK(is_integer(x[i]));
            CHECK(sign_of(x[i]) >= 0);
        }
    }

    // dim h0 plus the reflection-root count is the rank
    const int refl = static_cast<int>(sys.adjusted.first_set.size() +
                                      sys.adjusted.second_set.size());
    CHECK(sys.dim_h0() + refl == l);
}

}  // namespace

TEST_CASE("associated systems match the reference values in rank 2") {
    RootDatum g2 = build_root_system("G2");

    struct Row {
        std::vector<int> s1, s2;
        int dim_h0, n_fixed;
        std::string fixed;
        int length;
    };
    const std::vector<Row> rows = {
        {{6}, {}, 1, 2, "A1", 5},       // reflection in the long highest root
        {{4}, {}, 1, 2, "A1", 5},       // reflection in a short root
        {{6}, {1}, 0, 0, "", 6},        // product of two orthogonal reflections
        {{5}, {2}, 0, 0, "", 4},        // rotation of order 3
        {{1}, {2}, 0, 0, "", 2},        // rotation of order 6
    };
    for (const Row& r : rows) {
        CAPTURE(r.s1);
        CAPTURE(r.s2);
        AssociatedSystem sys = build_positive_system(g2, pair_of(g2, r.s1, r.s2));
        CHECK(sys.dim_h0() == r.dim_h0);
        CHECK(sys.n_fixed() == r.n_fixed);
        CHECK(sys.fixed_class.label == r.fixed);
        CHECK(sys.length == r.length);
    }
}

TEST_CASE("associated systems match the reference values in F4") {
    RootDatum f4 = build_root_system("F4");

    struct Row {
        std::vector<int> s1, s2;
        int dim_h0, n_fixed;
        std::string fixed;
        int length;
    };
    const std::vector<Row> rows = {
        {{24}, {}, 3, 18, "C3", 15},
        {{21}, {}, 3, 18, "B3", 15},
        {{24}, {16}, 2, 8, "B2", 20},
        {{16, 24}, {2, 9}, 0, 0, "", 24},
        {{23}, {1}, 2, 6, "A2", 14},
        {{16}, {8}, 2, 8, "B2", 10},
        {{1, 14}, {16}, 1, 2, "A1", 13},
        {{16, 2}, {5, 11}, 0, 0, "", 12},
        {{16, 9, 2}, {1}, 0, 0, "", 10},
        {{9, 2}, {1, 4}, 0, 0, "", 6},
        {{1, 3}, {2, 4}, 0, 0, "", 4},
    };
    for (const Row& r : rows) {
        CAPTURE(r.s1);
        CAPTURE(r.s2);
        AssociatedSystem sys = build_positive_system(f4, pair_of(f4, r.s1, r.s2));
        CHECK(sys.dim_h0() == r.dim_h0);
        CHECK(sys.n_fixed() == r.n_fixed);
        CHECK(sys.fixed_class.label == r.fixed);
        CHECK(sys.length == r.length);
    }
}

TEST_CASE("structure of associated systems") {
    RootDatum g2 = build_root_system("G2");
    for (const auto& [s1, s2] :
         std::vector<std::pair<std::vector<int>, std::vector<int>>>{
             {{6}, {}}, {{4}, {}}, {{6}, {1}}, {{5}, {2}}, {{1}, {2}}, {{}, {}}}) {
        AssociatedSystem sys = build_positive_system(g2, pair_of(g2, s1, s2));
        check_structure(g2, sys);
    }

    RootDatum f4 = build_root_system("F4");
    for (const auto& [s1, s2] :
         std::vector<std::pair<std::vector<int>, std::vector<int>>>{
             {{16}, {8}}, {{1, 14}, {16}}, {{1, 3}, {2, 4}}, {{16, 24}, {2, 9}}}) {
        AssociatedSystem sys = build_positive_system(f4, pair_of(f4, s1, s2));
        check_structure(f4, sys);
    }
}

TEST_CASE("identity class") {
    RootDatum f4 = build_root_system("F4");
    AssociatedSystem sys = build_positive_system(f4, {{}, {}});
    CHECK(sys.length == 0);
    CHECK(sys.dim_h0() == 4);
    CHECK(sys.n_fixed() == 48);
    CHECK(sys.positive_roots == f4.positive_roots);
    std::vector<RootCoords> simples;
    for (int i = 0; i < 4; ++i) {
        RootCoords c(4, 0);
        c[i] = 1;
        simples.push_back(c);
    }
    CHECK(sys.simple_roots == simples);
    CHECK(sys.fixed_class.label == "F4");
    CHECK(sys.fixed_simple_indices == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("deterministic output") {
    RootDatum f4 = build_root_system("F4");
    CarterPair p = pair_of(f4, {16, 2}, {5, 11});
    AssociatedSystem a = build_positive_system(f4, p);
    AssociatedSystem b = build_positive_system(f4, p);
    CHECK(a.positive_roots == b.positive_roots);
    CHECK(a.simple_roots == b.simple_roots);
    CHECK(a.adjusted.first_set == b.adjusted.first_set);
    CHECK(a.adjusted.second_set == b.adjusted.second_set);
    CHECK(a.length == b.length);
    CHECK(a.strata == b.strata);
}
