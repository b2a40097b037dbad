#include "atlas/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

#include "atlas/cyclotomic.hpp"

namespace atlas {

Mat<Integer> reflection_matrix(const RootDatum& datum, const RootCoords& gamma) {
    const int l = datum.rank;
    Mat<Integer> m = identity_matrix<Integer>(l);
    for (int j = 0; j < l; ++j) {
        RootCoords ej(l, 0);
        ej[j] = 1;
        long long c = datum.coroot_pairing_ll(ej, gamma);
        for (int i = 0; i < l; ++i) m[i][j] -= Integer(static_cast<long>(c)) * gamma[i];
    }
    return m;
}

WeylElement from_carter(const RootDatum& datum, const CarterPair& pair) {
    auto check_set = [&](const std::vector<RootCoords>& set) {
        for (size_t i = 0; i < set.size(); ++i) {
            if (!datum.is_root(set[i]))
                throw std::invalid_argument("from_carter: not a root");
            for (size_t j = i + 1; j < set.size(); ++j)
                if (datum.pairing_ll(set[i], set[j]) != 0)
                    throw std::invalid_argument("from_carter: set not orthogonal");
        }
    };
    check_set(pair.first_set);
    check_set(pair.second_set);

    std::vector<RootCoords> all = pair.first_set;
    all.insert(all.end(), pair.second_set.begin(), pair.second_set.end());
    if (!all.empty()) {
        Mat<Rational> m(all.size(), std::vector<Rational>(datum.rank, Rational(0)));
        for (size_t i = 0; i < all.size(); ++i)
            for (int j = 0; j < datum.rank; ++j) m[i][j] = Rational(all[i][j]);
        if (matrix_rank(m) != static_cast<int>(all.size()))
            throw std::invalid_argument("from_carter: roots not independent");
    }

    WeylElement w;
    w.part1 = identity_matrix<Integer>(datum.rank);
    w.part2 = identity_matrix<Integer>(datum.rank);
    for (const RootCoords& g : pair.first_set) w.part1 = mat_mul(w.part1, reflection_matrix(datum, g));
    for (const RootCoords& g : pair.second_set) w.part2 = mat_mul(w.part2, reflection_matrix(datum, g));
    w.matrix = mat_mul(w.part1, w.part2);
    return w;
}

RootCoords apply_matrix(const Mat<Integer>& m, const RootCoords& c) {
    const int l = static_cast<int>(m.size());
    RootCoords out(l, 0);
    for (int i = 0; i < l; ++i) {
        long long acc = 0;
        for (int j = 0; j < l; ++j)
            if (c[j] != 0) acc += m[i][j].get_si() * static_cast<long long>(c[j]);
        out[i] = static_cast<int>(acc);
    }
    return out;
}

std::vector<Rational> apply_matrix(const Mat<Integer>& m, const std::vector<Rational>& v) {
    const int l = static_cast<int>(m.size());
    std::vector<Rational> out(l, Rational(0));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            if (v[j] != 0) out[i] += Rational(m[i][j]) * v[j];
    return out;
}

int element_order(const Mat<Integer>& m) {
    const Mat<Integer> id = identity_matrix<Integer>(static_cast<int>(m.size()));
    Mat<Integer> p = m;
    for (int k = 1; k <= 1000; ++k) {
        if (p == id) return k;
        p = mat_mul(p, m);
    }
    assert(false && "element order out of range");
    return 0;
}

LengthFixed length_and_fixed(const RootDatum& datum, const Mat<Integer>& w,
                             const std::vector<RootCoords>& positive_set) {
    std::set<RootCoords> pos(positive_set.begin(), positive_set.end());
    assert(static_cast<int>(pos.size()) == datum.num_positive());
    LengthFixed out;
    for (const RootCoords& a : positive_set) {
        RootCoords img = apply_matrix(w, a);
        RootCoords neg = img;
        for (int& c : neg) c = -c;
        assert(pos.count(img) || pos.count(neg));
        if (pos.count(neg)) ++out.length;
    }
    for (int k = 1; k <= datum.num_positive(); ++k) {
        RootCoords a = datum.positive_root(k);
        if (apply_matrix(w, a) == a) {
            out.fixed_roots.push_back(a);
            for (int& c : a) c = -c;
            out.fixed_roots.push_back(a);
        }
    }
    return out;
}

namespace {

int kernel_dimension(const Mat<Integer>& m) {
    const int l = static_cast<int>(m.size());
    Mat<Rational> q(l, std::vector<Rational>(l, Rational(0)));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) q[i][j] = Rational(m[i][j]);
    return l - matrix_rank(q);
}

Mat<Integer> evaluate_poly(const std::vector<Integer>& coeffs, const Mat<Integer>& m) {
    const int l = static_cast<int>(m.size());
    Mat<Integer> acc(l, std::vector<Integer>(l, Integer(0)));
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = mat_mul(acc, m);
        for (int i = 0; i < l; ++i) acc[i][i] += *it;
    }
    return acc;
}

long long euler_phi(long long n) {
    long long result = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace

RotationSpectrum rotation_spectrum(const Mat<Integer>& w) {
    const int l = static_cast<int>(w.size());
    const int order = element_order(w);
    RotationSpectrum out;
    int covered = 0;
    for (int d = 1; d <= order; ++d) {
        if (order % d != 0) continue;
        Mat<Integer> pd = evaluate_poly(cyclotomic_polynomial(d), w);
        int kd = kernel_dimension(pd);
        if (kd == 0) continue;
        if (d == 1) {
            out.fixed_dim = kd;
        } else if (d == 2) {
            out.minus_one_dim = kd;
        } else {
            long long phi = euler_phi(d);
            assert(kd % phi == 0);
            int mult = static_cast<int>(kd / phi);
            for (int j = 1; 2 * j < d; ++j)
                if (std::gcd(static_cast<long long>(j), static_cast<long long>(d)) == 1)
                    out.planes.emplace_back(Rational(j, d), mult);
        }
        covered += kd;
    }
    assert(covered == l);
    std::sort(out.planes.begin(), out.planes.end());
    int plane_total = 0;
    for (const auto& p : out.planes) plane_total += 2 * p.second;
    assert(out.fixed_dim + out.minus_one_dim + plane_total == l);
    return out;
}

namespace {

// One block of a classical representative in local epsilon coordinates.
struct Block {
    int sort_value = 0;   // the partition value deciding the block order
    int negative = 0;     // 1 for negative blocks (first on ties)
    int width = 0;        // coordinates consumed
    // roots as (local epsilon index pairs, kind): built later via emit()
    std::vector<int> cycle_signature;  // expected signed cycles of the block
    int kind = 0;                      // 0 positive cycle, 1 negative B/C, 2 D pair
    int v = 0, w = 0;                  // D pair data
};

void add_eps_root(std::vector<std::vector<Rational>>& dst, int n, int i, int ci, int j,
                  int cj) {
    std::vector<Rational> e(n, Rational(0));
    e[i] = Rational(ci);
    if (j >= 0) e[j] = Rational(cj);
    dst.push_back(e);
}

}  // namespace

CarterPair classical_representative(const RootDatum& datum,
                                    const ClassicalClassSpec& spec) {
    const std::string& t = datum.type_label;
    const int n = epsilon_dim(datum);
    std::vector<Block> blocks;
    std::vector<int> expected_cycles;

    if (t == "A") {
        if (!spec.mu.empty()) throw std::invalid_argument("type A class has no mu");
        int total = 0;
        for (int part : spec.lambda) {
            if (part < 1) throw std::invalid_argument("bad partition part");
            total += part;
            Block b;
            b.sort_value = part;
            b.width = part;
            b.kind = 0;
            blocks.push_back(b);
        }
        if (total != n) throw std::invalid_argument("partition size mismatch");
    } else if (t == "B" || t == "C" || t == "D") {
        int total = 0;
        for (int part : spec.lambda) {
            if (part < 2 || part % 2 != 0) throw std::invalid_argument("bad lambda part");
            total += part;
        }
        std::vector<int> mu = spec.mu;
        std::sort(mu.rbegin(), mu.rend());
        if (mu.size() % 2 != 0) throw std::invalid_argument("mu parts must pair up");
        for (size_t i = 0; i < mu.size(); i += 2) {
            if (mu[i] != mu[i + 1] || mu[i] < 1)
                throw std::invalid_argument("mu parts must pair up");
            total += 2 * mu[i];
            Block b;
            b.sort_value = mu[i];
            b.width = mu[i];
            b.kind = 0;
            blocks.push_back(b);
        }
        if (total != 2 * n) throw std::invalid_argument("partition size mismatch");
        std::vector<int> lambda = spec.lambda;
        std::sort(lambda.rbegin(), lambda.rend());
        if (t == "D") {
            if (lambda.size() % 2 != 0)
                throw std::invalid_argument("type D needs an even number of lambda parts");
            for (size_t i = 0; i < lambda.size(); i += 2) {
                Block b;
                b.sort_value = lambda[i];
                b.negative = 1;
                b.v = lambda[i] / 2;
                b.w = lambda[i + 1] / 2;
                b.width = b.v + b.w;
                b.kind = 2;
                blocks.push_back(b);
            }
        } else {
            for (int part : lambda) {
                Block b;
                b.sort_value = part;
                b.negative = 1;
                b.v = part / 2;
                b.width = b.v;
                b.kind = 1;
                blocks.push_back(b);
            }
        }
    } else {
        throw std::invalid_argument("classical_representative: classical types only");
    }

    std::stable_sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
        if (a.sort_value != b.sort_value) return a.sort_value > b.sort_value;
        return a.negative > b.negative;
    });

    // Emit roots block by block on consecutive coordinate ranges.
    std::vector<std::vector<Rational>> set1, set2;
    int offset = 0;
    for (const Block& b : blocks) {
        auto side = [&](int parity) -> std::vector<std::vector<Rational>>& {
            return parity % 2 == 0 ? set1 : set2;
        };
        if (b.kind == 0) {
            // positive m-cycle: chain of m-1 roots, alternating sets
            for (int i = 0; i + 1 < b.width; ++i)
                add_eps_root(side(i), n, offset + i, 1, offset + i + 1, -1);
            expected_cycles.push_back(b.width);
        } else if (b.kind == 1) {
            // negative v-cycle in B/C: chain plus the short/long end root
            for (int i = 0; i + 1 < b.v; ++i)
                add_eps_root(side(i), n, offset + i, 1, offset + i + 1, -1);
            add_eps_root(side(b.v - 1), n, offset + b.v - 1, t == "C" ? 2 : 1, -1, 0);
            expected_cycles.push_back(-b.v);
        } else {
            // D pair (v >= w): two chains joined through e_v -+ e_{v+w}
            for (int i = 0; i + 1 < b.v; ++i)
                add_eps_root(side(i), n, offset + i, 1, offset + i + 1, -1);
            add_eps_root(side(b.v - 1), n, offset + b.v - 1, 1, offset + b.v + b.w - 1, -1);
            add_eps_root(side(b.v - 1), n, offset + b.v - 1, 1, offset + b.v + b.w - 1, 1);
            for (int j = 1; j + 1 <= b.w; ++j)
                add_eps_root(side(b.v + b.w - j - 1), n, offset + b.v + j - 1, 1,
                             offset + b.v + j, -1);
            expected_cycles.push_back(-b.v);
            expected_cycles.push_back(-b.w);
        }
        offset += b.width;
    }
    assert(offset == n);

    CarterPair pair;
    for (const auto& e : set1) pair.first_set.push_back(from_epsilon(datum, e));
    for (const auto& e : set2) pair.second_set.push_back(from_epsilon(datum, e));

    // Validate: the element's signed cycles must reproduce the class data.
    WeylElement w = from_carter(datum, pair);
    std::vector<int> cycles = signed_cycle_type(datum, w.matrix);
    std::sort(expected_cycles.begin(), expected_cycles.end(), [](int a, int b) {
        if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
        return a > b;
    });
    assert(cycles == expected_cycles);
    return pair;
}

std::vector<int> signed_cycle_type(const RootDatum& datum, const Mat<Integer>& w) {
    const std::string& t = datum.type_label;
    const int l = datum.rank;
    const int n = epsilon_dim(datum);

    if (t == "A") {
        // Reconstruct the permutation from images of e_1 - e_k.
        std::vector<int> sigma(n + 1, 0);  // 1-based
        RootCoords acc(l, 0);
        for (int k = 2; k <= n; ++k) {
            acc[k - 2] += 1;  // alpha_{k-1} added: acc = e_1 - e_k
            std::vector<Rational> img = to_epsilon(datum, apply_matrix(w, acc));
            int plus = -1, minus = -1;
            for (int i = 0; i < n; ++i) {
                if (img[i] == 1) plus = i;
                if (img[i] == -1) minus = i;
            }
            assert(plus >= 0 && minus >= 0);
            sigma[1] = plus + 1;
            sigma[k] = minus + 1;
        }
        std::vector<bool> seen(n + 1, false);
        std::vector<int> cycles;
        for (int i = 1; i <= n; ++i) {
            if (seen[i]) continue;
            int len = 0, j = i;
            while (!seen[j]) {
                seen[j] = true;
                j = sigma[j];
                ++len;
            }
            cycles.push_back(len);
        }
        std::sort(cycles.rbegin(), cycles.rend());
        return cycles;
    }

    // B/C/D: conjugate to the epsilon basis; entries must be a signed
    // permutation matrix.
    Mat<Rational> rt(n, std::vector<Rational>(l, Rational(0)));
    {
        RootCoords e(l, 0);
        for (int i = 0; i < l; ++i) {
            e.assign(l, 0);
            e[i] = 1;
            std::vector<Rational> col = to_epsilon(datum, e);
            for (int j = 0; j < n; ++j) rt[j][i] = col[j];
        }
    }
    Mat<Rational> rt_inv = inverse_matrix(rt);
    Mat<Rational> wq(l, std::vector<Rational>(l, Rational(0)));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) wq[i][j] = Rational(w[i][j]);
    Mat<Rational> te = mat_mul(mat_mul(rt, wq), rt_inv);

    std::vector<int> image(n, 0), sign(n, 0);
    for (int j = 0; j < n; ++j) {
        int found = -1, s = 0;
        for (int i = 0; i < n; ++i) {
            if (te[i][j] == 0) continue;
            assert(found == -1 && (te[i][j] == 1 || te[i][j] == -1));
            found = i;
            s = te[i][j] == 1 ? 1 : -1;
        }
        assert(found != -1);
        image[j] = found;
        sign[j] = s;
    }
    std::vector<bool> seen(n, false);
    std::vector<int> cycles;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i, total_sign = 1;
        while (!seen[j]) {
            seen[j] = true;
            total_sign *= sign[j];
            j = image[j];
            ++len;
        }
        cycles.push_back(total_sign * len);
    }
    std::sort(cycles.begin(), cycles.end(), [](int a, int b) {
        if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
        return a > b;
    });
    return cycles;
}

}  // namespace atlas
