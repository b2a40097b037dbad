#pragma once

#include <map>
#include <string>
#include <vector>

#include "atlas/matrix.hpp"
#include "atlas/rational.hpp"

namespace atlas {

// Coordinates of a root in the simple-root basis. Entries are small signed
// integers; a root has either all coordinates >= 0 or all <= 0.
using RootCoords = std::vector<int>;

struct RootDatum {
    std::string type_label;  // "A","B","C","D" or "E6","E7","E8","F4","G2"
    int rank = 0;
    Mat<Integer> cartan;                // a[i][j] = 2(a_i,a_j)/(a_i,a_i)
    std::vector<Integer> symmetrizers;  // coprime positive d_i
    Mat<Integer> form;                  // b[i][j] = d_i a[i][j], symmetric
    std::vector<RootCoords> positive_roots;  // ordered; 1-based index = pos+1

    int num_positive() const { return static_cast<int>(positive_roots.size()); }

    // 1-based index of a positive root, negated for a negative root, 0 if
    // the coordinate vector is not a root.
    int signed_index(const RootCoords& c) const;
    bool is_root(const RootCoords& c) const { return signed_index(c) != 0; }
    const RootCoords& positive_root(int index1) const;  // 1-based

    long long pairing_ll(const RootCoords& a, const RootCoords& b) const;
    Rational pairing(const RootCoords& a, const RootCoords& b) const;
    // 2(a,b)/(b,b); always an integer for roots a, b.
    long long coroot_pairing_ll(const RootCoords& a, const RootCoords& b) const;
    // s_alpha(beta) = beta - <beta, alpha^v> alpha
    RootCoords reflect(const RootCoords& beta, const RootCoords& alpha) const;

  private:
    std::map<RootCoords, int> index_map_;
    friend RootDatum build_root_system(const std::string&, int);
};

// Constructs the full datum for the given type. Classical labels "A","B",
// "C","D" require the rank argument; exceptional labels fix their own rank
// (the rank argument must match it or be 0).
RootDatum build_root_system(const std::string& type_label, int rank = 0);

// Compares the generated positive-root ordering with a bundled data file
// ("index: c1 c2 ... cl" per line). Returns false on any mismatch.
bool matches_root_file(const RootDatum& datum, const std::string& path);

struct SubsystemClass {
    std::string label;  // canonical, e.g. "A1+D4", "2A1", "" for empty input
    std::vector<std::vector<int>> components;  // partition of input positions
};

// Classifies the root subsystem generated by a simple system inside the
// ambient datum. The input roots must be pairwise non-opposite with all
// mutual coroot pairings <= 0. Rank-1 labels depend on the ambient type:
// a short root in type B is "B1" and a long root in type C is "C1".
SubsystemClass classify_subsystem(const RootDatum& datum,
                                  const std::vector<RootCoords>& simple_set);

// Classical coordinate realizations (types A/B/C/D only).
// A_l lives in the sum-zero sublattice of Z^(l+1); B/C/D_l live in Z^l.
int epsilon_dim(const RootDatum& datum);
std::vector<Rational> to_epsilon(const RootDatum& datum, const RootCoords& c);
// Inverse of to_epsilon; asserts the vector lies in the root lattice.
RootCoords from_epsilon(const RootDatum& datum, const std::vector<Rational>& e);

}  // namespace atlas
