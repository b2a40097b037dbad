#pragma once

#include <string>
#include <vector>

#include "atlas/matrix.hpp"
#include "atlas/rational.hpp"
#include "atlas/root_system.hpp"

namespace atlas {

// Two sets of positive roots, pairwise orthogonal within each set, whose
// union is linearly independent; encodes s = s1 s2 as a product of two
// involutions.
struct CarterPair {
    std::vector<RootCoords> first_set;
    std::vector<RootCoords> second_set;

    int total() const {
        return static_cast<int>(first_set.size() + second_set.size());
    }
};

// A Weyl group element acting on the simple-root coordinate space, together
// with the two involutions of its defining decomposition.
struct WeylElement {
    Mat<Integer> matrix;
    Mat<Integer> part1;  // s1
    Mat<Integer> part2;  // s2
};

// Matrix of the reflection in gamma: columns are images of the simple roots.
Mat<Integer> reflection_matrix(const RootDatum& datum, const RootCoords& gamma);

// Validates the pair invariants and returns s = s1 s2.
WeylElement from_carter(const RootDatum& datum, const CarterPair& pair);

RootCoords apply_matrix(const Mat<Integer>& m, const RootCoords& c);
std::vector<Rational> apply_matrix(const Mat<Integer>& m, const std::vector<Rational>& v);

int element_order(const Mat<Integer>& m);

struct LengthFixed {
    int length = 0;                       // |{a in P : w(a) in -P}|
    std::vector<RootCoords> fixed_roots;  // all roots with w(a) = a, both signs
};

LengthFixed length_and_fixed(const RootDatum& datum, const Mat<Integer>& w,
                             const std::vector<RootCoords>& positive_set);

struct RotationSpectrum {
    int fixed_dim = 0;
    int minus_one_dim = 0;
    // (turn, multiplicity), turn in (0, 1/2), ascending; the element rotates
    // each such plane by the angle 2*pi*turn.
    std::vector<std::pair<Rational, int>> planes;
};

RotationSpectrum rotation_spectrum(const Mat<Integer>& w);

// Conjugacy class data for classical Weyl groups. For type A, lambda is a
// partition of rank+1 (cycle lengths) and mu is empty. For types B/C/D,
// lambda holds the even parts (each 2k for a negative k-cycle) and mu holds
// the remaining parts, which come in equal pairs (each pair (m, m) for a
// positive m-cycle); lambda plus mu partitions 2*rank. Type D requires an
// even number of lambda parts.
struct ClassicalClassSpec {
    std::vector<int> lambda;
    std::vector<int> mu;
};

// Builds a Carter pair realizing the class: blocks on consecutive coordinate
// ranges, ordered by non-increasing part size with negative blocks first on
// ties. The result is validated against signed_cycle_type.
CarterPair classical_representative(const RootDatum& datum,
                                    const ClassicalClassSpec& spec);

// Cycle structure of w on the epsilon basis: +k per positive k-cycle, -k per
// negative k-cycle, sorted by decreasing absolute value, positives first on
// ties. Type A elements yield all-positive entries.
std::vector<int> signed_cycle_type(const RootDatum& datum, const Mat<Integer>& w);

}  // namespace atlas
