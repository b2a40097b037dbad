#pragma once

#include <string>
#include <vector>

#include "atlas/matrix.hpp"
#include "atlas/root_system.hpp"
#include "atlas/weyl.hpp"

namespace atlas {

// One rotation plane of the element, spanned by a pair (a, b) with a built
// from the first reflection set and b from the second. Coordinates are in
// the simple-root basis over the real cyclotomic field.
struct PlaneData {
    Rational turn;          // t in (0, 1/2); rotation angle is 2*pi*t
    RealCyclotomic lambda;  // cos(pi t); planes are ordered by ascending lambda
    Vec<RealCyclotomic> u;  // eigenvector over the reflection-root index space
    Vec<RealCyclotomic> a;  // component built from the first set
    Vec<RealCyclotomic> b;  // component built from the second set
};

// One line of the minus-one eigenspace. Lines from the first kernel
// (reflections of the first set act by -1, the second set fixes) come
// before lines from the second kernel.
struct LineData {
    int set = 1;        // 1 or 2: which reflection set spans the line
    Vec<Rational> v;    // direction vector in the simple-root basis
};

// Exact splitting of the reflection representation into the fixed space,
// minus-one lines, and rotation planes of a Weyl element given as a product
// of two involutions. Subspace indices used for strata: 0 is the fixed
// space, then lines in order, then planes by ascending lambda.
struct SpectralDecomposition {
    WeylElement element;
    CarterPair pair;            // reflection roots, first set then second
    Mat<Rational> h0_basis;     // rows span the fixed space (possibly empty)
    std::vector<LineData> lines;
    std::vector<PlaneData> planes;

    int subspace_count() const {
        return 1 + static_cast<int>(lines.size() + planes.size());
    }
};

SpectralDecomposition spectral_decomposition(const RootDatum& datum,
                                             const CarterPair& pair);

// The positive system associated to a conjugacy class representative,
// together with the data the slice invariants are read from.
struct AssociatedSystem {
    SpectralDecomposition spectral;

    std::vector<RootCoords> positive_roots;  // one root per +- pair
    std::vector<RootCoords> simple_roots;    // ordered to match the standard
                                             // Cartan matrix entry for entry
    CarterPair adjusted;   // reflection roots flipped to positive ones
    int length = 0;        // inversions of the element in the new system

    // strata[k] holds the new-positive root of every +- pair whose highest
    // subspace with nonzero orthogonal projection is subspace k.
    std::vector<std::vector<RootCoords>> strata;

    std::vector<RootCoords> fixed_positive;  // fixed roots, new-positive reps
    std::vector<RootCoords> fixed_simples;   // simple system of the fixed part
    std::vector<int> fixed_simple_indices;   // 1-based positions in simple_roots
    SubsystemClass fixed_class;

    int dim_h0() const { return static_cast<int>(spectral.h0_basis.size()); }
    int n_fixed() const { return 2 * static_cast<int>(fixed_positive.size()); }
};

AssociatedSystem build_positive_system(const RootDatum& datum,
                                       const CarterPair& pair);

}  // namespace atlas
