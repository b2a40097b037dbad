#include "atlas/assoc_positive.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdlib>
#include <functional>
#include <set>
#include <utility>

namespace atlas {
namespace {

using RC = RealCyclotomic;
using Pair2 = std::array<RC, 2>;  // coefficients over a plane basis (a, b)

RC sqrt_of(long long k) {
    switch (k) {
        case 1: return RC(1);
        case 2: return RC::sqrt2();
        case 3: return RC::sqrt3();
        case 4: return RC(2);
        case 6: return RC::sqrt2() * RC::sqrt3();
        case 9: return RC(3);
        default: assert(false && "unexpected radicand"); return RC(0);
    }
}

// (x, y) under the invariant form, for exact coordinate vectors in the
// simple-root basis.
template <class T>
T form_pair(const RootDatum& datum, const Vec<T>& x, const Vec<T>& y) {
    const int l = datum.rank;
    T acc(0);
    for (int i = 0; i < l; ++i) {
        if (scalar_is_zero(x[i])) continue;
        T row(0);
        for (int j = 0; j < l; ++j) {
            if (datum.form[i][j] == 0 || scalar_is_zero(y[j])) continue;
            row += T(Rational(datum.form[i][j])) * y[j];
        }
        acc += x[i] * row;
    }
    return acc;
}

// (alpha, y) for a root given by integer coordinates.
template <class T>
T form_root(const RootDatum& datum, const RootCoords& a, const Vec<T>& y) {
    const int l = datum.rank;
    T acc(0);
    for (int j = 0; j < l; ++j) {
        if (scalar_is_zero(y[j])) continue;
        long long t = 0;
        for (int i = 0; i < l; ++i)
            if (a[i] != 0) t += a[i] * datum.form[i][j].get_si();
        if (t != 0) acc += T(Rational(static_cast<long>(t))) * y[j];
    }
    return acc;
}

RC cross2(const Pair2& x, const Pair2& y) { return x[0] * y[1] - x[1] * y[0]; }

void negate_coords(RootCoords& g) {
    for (int& c : g) c = -c;
}

}  // namespace

SpectralDecomposition spectral_decomposition(const RootDatum& datum,
                                             const CarterPair& pair) {
    SpectralDecomposition out;
    out.pair = pair;
    out.element = from_carter(datum, pair);
    const int l = datum.rank;
    const Mat<Integer>& w = out.element.matrix;
    const int n1 = static_cast<int>(pair.first_set.size());
    const int total = pair.total();

    {
        Mat<Rational> m(l, Vec<Rational>(l, Rational(0)));
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j)
                m[i][j] = Rational(w[i][j]) - Rational(i == j ? 1 : 0);
        out.h0_basis = kernel_basis(m, l);
    }
    // the reflection roots span a complement of the fixed space
    assert(static_cast<int>(out.h0_basis.size()) == l - total);

    RotationSpectrum spec = rotation_spectrum(w);
    assert(spec.fixed_dim == static_cast<int>(out.h0_basis.size()));

    // Minus-one lines: vectors negated by the element and by one of the two
    // involutions (the other involution then fixes them). Each such space
    // splits into form-orthogonal lines.
    auto carve_lines = [&](const Mat<Integer>& part, int which,
                           const std::vector<RootCoords>& anchors) {
        Mat<Rational> st(2 * l, Vec<Rational>(l, Rational(0)));
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                Rational d(i == j ? 1 : 0);
                st[i][j] = Rational(w[i][j]) + d;
                st[l + i][j] = Rational(part[i][j]) + d;
            }
        Mat<Rational> ker = kernel_basis(st, l);
        for (size_t k = 0; k < ker.size(); ++k) {
            for (size_t j = 0; j < k; ++j) {
                Rational num = form_pair(datum, ker[k], ker[j]);
                if (num == 0) continue;
                Rational f = num / form_pair(datum, ker[j], ker[j]);
                for (int t = 0; t < l; ++t) ker[k][t] -= f * ker[j][t];
            }
            // the line lies in the span of the matching reflection set, so
            // some root of that set pairs nonzero; anchor the sign there
            int s = 0;
            for (const RootCoords& g : anchors) {
                s = sign_of(form_root(datum, g, ker[k]));
                if (s != 0) break;
            }
            assert(s != 0);
            if (s < 0)
                for (int t = 0; t < l; ++t) ker[k][t] = -ker[k][t];
            out.lines.push_back({which, ker[k]});
        }
    };
    carve_lines(out.element.part1, 1, pair.first_set);
    carve_lines(out.element.part2, 2, pair.second_set);
    assert(static_cast<int>(out.lines.size()) == spec.minus_one_dim);

    if (!spec.planes.empty()) {
        std::vector<RootCoords> gam = pair.first_set;
        gam.insert(gam.end(), pair.second_set.begin(), pair.second_set.end());

        // Gram matrix of the unit reflection roots f_i = gamma_i / |gamma_i|
        Vec<RC> invnorm(total, RC(0));
        for (int i = 0; i < total; ++i)
            invnorm[i] = sqrt_of(datum.pairing_ll(gam[i], gam[i])).inverse();
        Mat<RC> m(total, Vec<RC>(total, RC(0)));
        for (int i = 0; i < total; ++i)
            for (int j = 0; j < total; ++j) {
                long long p = datum.pairing_ll(gam[i], gam[j]);
                if (p != 0)
                    m[i][j] = RC(Rational(static_cast<long>(p))) * invnorm[i] *
                              invnorm[j];
            }

        // dual basis of the f_i inside their span, in simple-root coordinates
        Mat<RC> minv = inverse_matrix(m);
        Mat<RC> fhat(total, Vec<RC>(l, RC(0)));
        for (int i = 0; i < total; ++i)
            for (int j = 0; j < total; ++j) {
                if (minv[i][j].is_zero()) continue;
                RC c = minv[i][j] * invnorm[j];
                for (int t = 0; t < l; ++t)
                    if (gam[j][t] != 0)
                        fhat[i][t] += c * RC(Rational(gam[j][t]));
            }

        for (const auto& [turn, mult] : spec.planes) {
            // a rotation by angle 2*pi*t pairs with the Gram eigenvalue
            // 1 - cos(pi t)
            RC lambda = RC::cos_turn(turn / 2);
            Mat<RC> shifted = m;
            for (int d = 0; d < total; ++d) shifted[d][d] -= RC(1) - lambda;
            Mat<RC> ker = kernel_basis(shifted, total);
            assert(static_cast<int>(ker.size()) == mult);

            std::sort(ker.begin(), ker.end(),
                      [](const Vec<RC>& x, const Vec<RC>& y) {
                          for (size_t i = 0; i < x.size(); ++i) {
                              int s = sign_of(x[i] - y[i]);
                              if (s != 0) return s < 0;
                          }
                          return false;
                      });
            // Coefficient-space orthogonalization; for a common eigenvalue
            // this makes the resulting planes orthogonal under the form.
            for (size_t k = 0; k < ker.size(); ++k)
                for (size_t j = 0; j < k; ++j) {
                    RC num(0);
                    for (int t = 0; t < total; ++t) num += ker[k][t] * ker[j][t];
                    if (num.is_zero()) continue;
                    RC den(0);
                    for (int t = 0; t < total; ++t) den += ker[j][t] * ker[j][t];
                    RC f = num * den.inverse();
                    for (int t = 0; t < total; ++t) ker[k][t] -= f * ker[j][t];
                }

            for (auto& u : ker) {
                PlaneData pd;
                pd.turn = turn;
                pd.lambda = lambda;
                pd.a.assign(l, RC(0));
                pd.b.assign(l, RC(0));
                for (int i = 0; i < total; ++i) {
                    if (u[i].is_zero()) continue;
                    Vec<RC>& dst = i < n1 ? pd.a : pd.b;
                    for (int t = 0; t < l; ++t)
                        if (!fhat[i][t].is_zero()) dst[t] += u[i] * fhat[i][t];
                }
                pd.u = std::move(u);
                bool azero = true, bzero = true;
                for (int t = 0; t < l; ++t) {
                    azero = azero && pd.a[t].is_zero();
                    bzero = bzero && pd.b[t].is_zero();
                }
                assert(!azero && !bzero);
                out.planes.push_back(std::move(pd));
            }
        }
        std::stable_sort(out.planes.begin(), out.planes.end(),
                         [](const PlaneData& x, const PlaneData& y) {
                             return x.turn > y.turn;  // ascending cos(pi t)
                         });
    }

    assert(l == spec.fixed_dim + static_cast<int>(out.lines.size()) +
                    2 * static_cast<int>(out.planes.size()));
    return out;
}

AssociatedSystem build_positive_system(const RootDatum& datum,
                                       const CarterPair& pair) {
    AssociatedSystem sys;
    sys.spectral = spectral_decomposition(datum, pair);
    const SpectralDecomposition& sp = sys.spectral;
    const int l = datum.rank;
    const int npos = datum.num_positive();
    const int nlines = static_cast<int>(sp.lines.size());
    const int nplanes = static_cast<int>(sp.planes.size());
    const int n1 = static_cast<int>(pair.first_set.size());
    const int total = pair.total();

    // Stratum of a +- pair: the highest subspace with nonzero orthogonal
    // projection, planes (by ascending eigenvalue) above lines above the
    // fixed space.
    std::vector<int> stratum(npos + 1, -1);  // by standard 1-based index
    struct PlaneRoot {
        int index;
        RC p, q;  // pairings of the standard-positive root with (a, b)
    };
    std::vector<std::vector<PlaneRoot>> touching(nplanes);

    for (int k = 1; k <= npos; ++k) {
        const RootCoords& alpha = datum.positive_root(k);
        for (int pl = nplanes - 1; pl >= 0; --pl) {
            RC p = form_root(datum, alpha, sp.planes[pl].a);
            RC q = form_root(datum, alpha, sp.planes[pl].b);
            if (p.is_zero() && q.is_zero()) continue;
            touching[pl].push_back({k, std::move(p), std::move(q)});
            if (stratum[k] < 0) stratum[k] = 1 + nlines + pl;
        }
        if (stratum[k] < 0)
            for (int li = nlines - 1; li >= 0; --li)
                if (form_root(datum, alpha, sp.lines[li].v) != 0) {
                    stratum[k] = 1 + li;
                    break;
                }
        if (stratum[k] < 0) {
            stratum[k] = 0;
            assert(apply_matrix(sp.element.matrix, alpha) == alpha);
        }
    }

    sys.adjusted = pair;
    auto pair_index = [&](const RootCoords& g) {
        int idx = datum.signed_index(g);
        assert(idx != 0);
        return std::abs(idx);
    };

    // signs of the new system: +1 keeps the standard-positive representative
    std::vector<int> sign_new(npos + 1, 0);
    for (int k = 1; k <= npos; ++k) {
        if (stratum[k] == 0) {
            sign_new[k] = 1;
        } else if (stratum[k] <= nlines) {
            sign_new[k] = sign_of(
                form_root(datum, datum.positive_root(k), sp.lines[stratum[k] - 1].v));
            assert(sign_new[k] != 0);
        }
    }

    // reflection roots sitting in a line stratum flip toward the line vector
    auto flip_line_roots = [&](std::vector<RootCoords>& set, int which) {
        for (RootCoords& g : set) {
            int st = stratum[pair_index(g)];
            assert(st != 0);
            if (st > nlines) continue;
            assert(sp.lines[st - 1].set == which);
            int s = sign_of(form_root(datum, g, sp.lines[st - 1].v));
            assert(s != 0);
            if (s < 0) negate_coords(g);
        }
    };
    flip_line_roots(sys.adjusted.first_set, 1);
    flip_line_roots(sys.adjusted.second_set, 2);

    // Plane strata: an open cone between two rays built from the reflection
    // sets selects the positive half of each projecting pair.
    for (int pl = 0; pl < nplanes; ++pl) {
        const PlaneData& pd = sp.planes[pl];
        const int sidx = 1 + nlines + pl;

        RC gaa = form_pair(datum, pd.a, pd.a);
        RC gab = form_pair(datum, pd.a, pd.b);
        RC gbb = form_pair(datum, pd.b, pd.b);
        auto form2 = [&](const Pair2& x, const Pair2& y) {
            return x[0] * y[0] * gaa + (x[0] * y[1] + x[1] * y[0]) * gab +
                   x[1] * y[1] * gbb;
        };

        // first-set roots whose stratum is this plane; they all project to
        // one line, with the side given by the sign of their u coordinate
        std::vector<int> in1, in2;
        for (int i = 0; i < n1; ++i)
            if (stratum[pair_index(pair.first_set[i])] == sidx) in1.push_back(i);
        for (int j = n1; j < total; ++j)
            if (stratum[pair_index(pair.second_set[j - n1])] == sidx)
                in2.push_back(j);

        auto first_supported = [&](int lo, int hi) {
            for (int i = lo; i < hi; ++i)
                if (!pd.u[i].is_zero()) return i;
            assert(false && "eigenvector has no support in the set");
            return lo;
        };
        int i0 = in1.empty() ? first_supported(0, n1) : in1[0];
        int j0 = in2.empty() ? first_supported(n1, total) : in2[0];
        int s0 = sign_of(pd.u[i0]);
        int t0 = sign_of(pd.u[j0]);
        assert(s0 != 0 && t0 != 0);

        // projections of set roots in (a, b) coefficients, up to a positive
        // factor: the Gram inverse applied to (u_i, 0) or (0, u_j)
        Pair2 v1 = {pd.u[i0] * gbb, -(pd.u[i0] * gab)};
        Pair2 v2 = {-(pd.u[j0] * gab), pd.u[j0] * gaa};

        // open the cone to at least a right angle
        if (sign_of(form2(v1, v2)) > 0) {
            v2 = {-v2[0], -v2[1]};
            t0 = -t0;
        }
        for (int i : in1) {
            int si = sign_of(pd.u[i]);
            assert(si != 0);
            if (si != s0) negate_coords(sys.adjusted.first_set[i]);
        }
        for (int j : in2) {
            int sj = sign_of(pd.u[j]);
            assert(sj != 0);
            if (sj != t0) negate_coords(sys.adjusted.second_set[j - n1]);
        }

        Pair2 w1, w2;
        {
            RC c11 = form2(v1, v1), c12 = form2(v1, v2), c22 = form2(v2, v2);
            w1 = {c11 * v2[0] - c12 * v1[0], c11 * v2[1] - c12 * v1[1]};
            w2 = {c22 * v1[0] - c12 * v2[0], c22 * v1[1] - c12 * v2[1]};
        }
        int sigma = sign_of(cross2(w1, w2));
        assert(sigma != 0);

        // ray of the zero line of a projecting pair, when it cuts the cone
        bool have_ray = false;
        Pair2 best;
        for (const PlaneRoot& r : touching[pl]) {
            Pair2 d = {r.q, -r.p};
            for (int rep = 0; rep < 2; ++rep) {
                if (rep) d = {-d[0], -d[1]};
                if (sign_of(form2(d, v1)) <= 0 || sign_of(form2(d, v2)) <= 0)
                    continue;
                if (!have_ray || sigma * sign_of(cross2(d, best)) > 0) {
                    best = d;
                    have_ray = true;
                }
            }
        }
        // a generic point of the cone: past the first edge, before every
        // cutting ray
        Pair2 x = have_ray ? Pair2{w1[0] + best[0], w1[1] + best[1]}
                           : Pair2{w1[0] + w2[0], w1[1] + w2[1]};

        for (const PlaneRoot& r : touching[pl]) {
            if (stratum[r.index] != sidx) continue;
            int s = sign_of(x[0] * r.p + x[1] * r.q);
            assert(s != 0);
            sign_new[r.index] = s;
        }
    }

    sys.positive_roots.reserve(npos);
    sys.strata.assign(sp.subspace_count(), {});
    for (int k = 1; k <= npos; ++k) {
        assert(sign_new[k] != 0);
        RootCoords a = datum.positive_root(k);
        if (sign_new[k] < 0) negate_coords(a);
        sys.positive_roots.push_back(a);
        sys.strata[stratum[k]].push_back(a);
    }

    // every adjusted reflection root is positive in the new system
    for (const auto* set : {&sys.adjusted.first_set, &sys.adjusted.second_set})
        for (const RootCoords& g : *set) {
            int idx = datum.signed_index(g);
            assert((idx > 0) == (sign_new[std::abs(idx)] > 0));
            (void)idx;
        }

    LengthFixed lf =
        length_and_fixed(datum, sp.element.matrix, sys.positive_roots);
    sys.length = lf.length;
    sys.fixed_positive = sys.strata[0];
    assert(2 * sys.fixed_positive.size() == lf.fixed_roots.size());

    // simple roots: exactly those whose reflection permutes the rest of the
    // positive system
    std::set<RootCoords> posset(sys.positive_roots.begin(),
                                sys.positive_roots.end());
    std::vector<RootCoords> found;
    for (const RootCoords& alpha : sys.positive_roots) {
        bool ok = true;
        for (const RootCoords& beta : sys.positive_roots) {
            if (beta == alpha) continue;
            if (!posset.count(datum.reflect(beta, alpha))) {
                ok = false;
                break;
            }
        }
        if (ok) found.push_back(alpha);
    }
    assert(static_cast<int>(found.size()) == l);

    // order them so the Cartan matrix and the root norms match the standard
    // datum entry for entry, taking the lexicographically first assignment
    std::vector<int> assign(l, -1);
    std::vector<bool> used(l, false);
    std::function<bool(int)> place = [&](int i) -> bool {
        if (i == l) return true;
        for (int c = 0; c < l; ++c) {
            if (used[c]) continue;
            if (datum.pairing_ll(found[c], found[c]) !=
                2 * datum.symmetrizers[i].get_si())
                continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                int cj = assign[j];
                ok = datum.cartan[i][j] == static_cast<long>(
                         datum.coroot_pairing_ll(found[cj], found[c])) &&
                     datum.cartan[j][i] == static_cast<long>(
                         datum.coroot_pairing_ll(found[c], found[cj]));
            }
            if (!ok) continue;
            assign[i] = c;
            used[c] = true;
            if (place(i + 1)) return true;
            used[c] = false;
            assign[i] = -1;
        }
        return false;
    };
    bool placed = place(0);
    assert(placed);
    (void)placed;
    for (int i = 0; i < l; ++i) sys.simple_roots.push_back(found[assign[i]]);

    // simple system of the fixed subsystem: its indecomposable elements;
    // the construction puts them among the simple roots of the new system
    std::set<RootCoords> fixedset(sys.fixed_positive.begin(),
                                  sys.fixed_positive.end());
    for (const RootCoords& alpha : sys.fixed_positive) {
        bool decomposable = false;
        for (const RootCoords& beta : sys.fixed_positive) {
            if (beta == alpha) continue;
            RootCoords rest(l, 0);
            for (int t = 0; t < l; ++t) rest[t] = alpha[t] - beta[t];
            if (fixedset.count(rest)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) sys.fixed_simples.push_back(alpha);
    }
    sys.fixed_class = classify_subsystem(datum, sys.fixed_simples);
    std::set<RootCoords> fss(sys.fixed_simples.begin(), sys.fixed_simples.end());
    for (int i = 0; i < l; ++i)
        if (fss.count(sys.simple_roots[i]))
            sys.fixed_simple_indices.push_back(i + 1);
    assert(sys.fixed_simple_indices.size() == sys.fixed_simples.size());

    return sys;
}

}  // namespace atlas
