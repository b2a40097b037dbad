#include "atlas/root_system.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace atlas {

namespace {

struct CartanSeed {
    Mat<Integer> cartan;
    std::vector<Integer> symmetrizers;
};

Mat<Integer> zero_matrix(int n) {
    return Mat<Integer>(n, std::vector<Integer>(n, Integer(0)));
}

void put_edge(Mat<Integer>& a, int i, int j, int aij, int aji) {
    a[i][j] = Integer(aij);
    a[j][i] = Integer(aji);
}

CartanSeed cartan_seed(const std::string& label, int rank) {
    CartanSeed seed;
    seed.cartan = zero_matrix(rank);
    for (int i = 0; i < rank; ++i) seed.cartan[i][i] = Integer(2);
    seed.symmetrizers.assign(rank, Integer(1));
    auto chain = [&](int from, int to) {
        for (int i = from; i + 1 <= to; ++i) put_edge(seed.cartan, i, i + 1, -1, -1);
    };
    if (label == "A") {
        if (rank < 1) throw std::invalid_argument("type A needs rank >= 1");
        chain(0, rank - 1);
    } else if (label == "B") {
        if (rank < 1) throw std::invalid_argument("type B needs rank >= 1");
        chain(0, rank - 1);
        if (rank >= 2) put_edge(seed.cartan, rank - 2, rank - 1, -1, -2);
        for (int i = 0; i + 1 < rank; ++i) seed.symmetrizers[i] = Integer(2);
        // rank 1: the single root is short, norm 2, d = 1
    } else if (label == "C") {
        if (rank < 1) throw std::invalid_argument("type C needs rank >= 1");
        chain(0, rank - 1);
        if (rank >= 2) put_edge(seed.cartan, rank - 2, rank - 1, -2, -1);
        seed.symmetrizers[rank - 1] = Integer(2);
        // rank 1: the single root is long, norm 4, d = 2
    } else if (label == "D") {
        if (rank < 2) throw std::invalid_argument("type D needs rank >= 2");
        chain(0, rank - 2);
        if (rank >= 3) put_edge(seed.cartan, rank - 3, rank - 1, -1, -1);
    } else if (label == "E6" || label == "E7" || label == "E8") {
        int r = label[1] - '0';
        if (rank != 0 && rank != r) throw std::invalid_argument("rank mismatch for " + label);
        seed.cartan = zero_matrix(r);
        for (int i = 0; i < r; ++i) seed.cartan[i][i] = Integer(2);
        seed.symmetrizers.assign(r, Integer(1));
        // chain 1-3-4-5-6(-7(-8)) with node 2 attached to node 4
        put_edge(seed.cartan, 0, 2, -1, -1);
        for (int i = 2; i + 1 < r; ++i) put_edge(seed.cartan, i, i + 1, -1, -1);
        put_edge(seed.cartan, 1, 3, -1, -1);
    } else if (label == "F4") {
        if (rank != 0 && rank != 4) throw std::invalid_argument("rank mismatch for F4");
        seed.cartan = zero_matrix(4);
        for (int i = 0; i < 4; ++i) seed.cartan[i][i] = Integer(2);
        put_edge(seed.cartan, 0, 1, -1, -1);
        put_edge(seed.cartan, 1, 2, -1, -2);
        put_edge(seed.cartan, 2, 3, -1, -1);
        seed.symmetrizers = {Integer(2), Integer(2), Integer(1), Integer(1)};
    } else if (label == "G2") {
        if (rank != 0 && rank != 2) throw std::invalid_argument("rank mismatch for G2");
        seed.cartan = zero_matrix(2);
        seed.cartan[0][0] = seed.cartan[1][1] = Integer(2);
        put_edge(seed.cartan, 0, 1, -3, -1);
        seed.symmetrizers = {Integer(1), Integer(3)};
    } else {
        throw std::invalid_argument("unknown type label: " + label);
    }
    return seed;
}

}  // namespace

int RootDatum::signed_index(const RootCoords& c) const {
    auto it = index_map_.find(c);
    return it == index_map_.end() ? 0 : it->second;
}

const RootCoords& RootDatum::positive_root(int index1) const {
    assert(index1 >= 1 && index1 <= num_positive());
    return positive_roots[index1 - 1];
}

long long RootDatum::pairing_ll(const RootCoords& a, const RootCoords& b) const {
    assert(static_cast<int>(a.size()) == rank && static_cast<int>(b.size()) == rank);
    long long acc = 0;
    for (int i = 0; i < rank; ++i) {
        if (a[i] == 0) continue;
        long long row = 0;
        for (int j = 0; j < rank; ++j)
            if (b[j] != 0) row += form[i][j].get_si() * static_cast<long long>(b[j]);
        acc += static_cast<long long>(a[i]) * row;
    }
    return acc;
}

Rational RootDatum::pairing(const RootCoords& a, const RootCoords& b) const {
    return Rational(static_cast<long>(pairing_ll(a, b)));
}

long long RootDatum::coroot_pairing_ll(const RootCoords& a, const RootCoords& b) const {
    long long num = 2 * pairing_ll(a, b);
    long long den = pairing_ll(b, b);
    assert(den > 0 && num % den == 0);
    return num / den;
}

RootCoords RootDatum::reflect(const RootCoords& beta, const RootCoords& alpha) const {
    long long c = coroot_pairing_ll(beta, alpha);
    RootCoords out = beta;
    for (int i = 0; i < rank; ++i) out[i] -= static_cast<int>(c) * alpha[i];
    return out;
}

RootDatum build_root_system(const std::string& type_label, int rank) {
    CartanSeed seed = cartan_seed(type_label, rank);
    RootDatum datum;
    datum.type_label = type_label;
    datum.rank = static_cast<int>(seed.symmetrizers.size());
    datum.cartan = seed.cartan;
    datum.symmetrizers = seed.symmetrizers;
    datum.form = zero_matrix(datum.rank);
    for (int i = 0; i < datum.rank; ++i)
        for (int j = 0; j < datum.rank; ++j)
            datum.form[i][j] = seed.symmetrizers[i] * seed.cartan[i][j];
    for (int i = 0; i < datum.rank; ++i)
        for (int j = 0; j < datum.rank; ++j) assert(datum.form[i][j] == datum.form[j][i]);

    // Closure of the simple roots under simple reflections.
    std::set<RootCoords> all;
    std::vector<RootCoords> queue;
    for (int i = 0; i < datum.rank; ++i) {
        RootCoords a(datum.rank, 0);
        a[i] = 1;
        all.insert(a);
        queue.push_back(a);
    }
    std::vector<RootCoords> simples = queue;
    while (!queue.empty()) {
        RootCoords r = queue.back();
        queue.pop_back();
        for (int i = 0; i < datum.rank; ++i) {
            // s_i(r) = r - a[i][j]-combination; reflect() needs only the form.
            RootCoords img = datum.reflect(r, simples[i]);
            if (all.insert(img).second) queue.push_back(img);
        }
    }

    for (const RootCoords& r : all) {
        bool nonneg = std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; });
        bool nonpos = std::all_of(r.begin(), r.end(), [](int c) { return c <= 0; });
        assert(nonneg || nonpos);
        if (nonneg) datum.positive_roots.push_back(r);
    }
    assert(all.size() == 2 * datum.positive_roots.size());

    // Height ascending, then lexicographically descending on coordinates.
    std::sort(datum.positive_roots.begin(), datum.positive_roots.end(),
              [](const RootCoords& a, const RootCoords& b) {
                  int ha = std::accumulate(a.begin(), a.end(), 0);
                  int hb = std::accumulate(b.begin(), b.end(), 0);
                  if (ha != hb) return ha < hb;
                  return a > b;
              });

    for (int k = 0; k < datum.num_positive(); ++k) {
        datum.index_map_[datum.positive_roots[k]] = k + 1;
        RootCoords neg = datum.positive_roots[k];
        for (int& c : neg) c = -c;
        datum.index_map_[neg] = -(k + 1);
    }
    return datum;
}

bool matches_root_file(const RootDatum& datum, const std::string& path) {
    std::ifstream in(path);
    if (!in) return false;
    std::string line;
    int seen = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int index = 0;
        char colon = 0;
        if (!(ls >> index >> colon) || colon != ':') return false;
        RootCoords c(datum.rank, 0);
        for (int i = 0; i < datum.rank; ++i)
            if (!(ls >> c[i])) return false;
        if (index < 1 || index > datum.num_positive()) return false;
        if (datum.positive_root(index) != c) return false;
        ++seen;
    }
    return seen == datum.num_positive();
}

namespace {

struct ComponentInfo {
    std::vector<int> members;  // positions into the input simple_set
};

std::string label_component(const RootDatum& datum,
                            const std::vector<RootCoords>& roots,
                            const std::vector<int>& members) {
    const int r = static_cast<int>(members.size());
    char ambient = datum.type_label[0];
    if (r == 1) {
        long long norm = datum.pairing_ll(roots[members[0]], roots[members[0]]);
        if (ambient == 'B' && norm == 2) return "B1";
        if (ambient == 'C' && norm == 4) return "C1";
        return "A1";
    }
    // Edge multiplicities m = a_ij a_ji between distinct component members.
    int max_mult = 0;
    std::vector<int> degree(r, 0);
    std::vector<std::vector<int>> adj(r);
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            long long m = datum.coroot_pairing_ll(roots[members[i]], roots[members[j]]) *
                          datum.coroot_pairing_ll(roots[members[j]], roots[members[i]]);
            if (m > 0) {
                max_mult = std::max<int>(max_mult, static_cast<int>(m));
                ++degree[i];
                ++degree[j];
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    }
    auto is_path = [&]() {
        int ends = 0;
        for (int d : degree) {
            if (d > 2) return false;
            if (d == 1) ++ends;
        }
        return ends == 2;
    };
    if (max_mult == 3) {
        if (r != 2) throw std::invalid_argument("invalid simple system");
        return "G2";
    }
    if (max_mult == 1) {
        if (is_path()) return "A" + std::to_string(r);
        // One trivalent node; classify by sorted arm lengths.
        int center = -1;
        for (int i = 0; i < r; ++i) {
            if (degree[i] == 3) {
                if (center != -1) throw std::invalid_argument("invalid simple system");
                center = i;
            } else if (degree[i] > 3) {
                throw std::invalid_argument("invalid simple system");
            }
        }
        if (center == -1) throw std::invalid_argument("invalid simple system");
        std::vector<int> arms;
        for (int start : adj[center]) {
            int len = 1, prev = center, cur = start;
            while (degree[cur] == 2) {
                int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = next;
                ++len;
            }
            if (degree[cur] != 1) throw std::invalid_argument("invalid simple system");
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(r);
        if (arms[0] == 1 && arms[1] == 2 && r >= 6 && r <= 8) return "E" + std::to_string(r);
        throw std::invalid_argument("invalid simple system");
    }
    // A double bond somewhere.
    if (!is_path()) throw std::invalid_argument("invalid simple system");
    if (r == 2) return ambient == 'C' ? "C2" : "B2";
    long long min_norm = 0, max_norm = 0;
    int n_short = 0, n_long = 0;
    for (int i : members) {
        long long norm = datum.pairing_ll(roots[i], roots[i]);
        if (min_norm == 0 || norm < min_norm) min_norm = norm;
        if (norm > max_norm) max_norm = norm;
    }
    for (int i : members) {
        long long norm = datum.pairing_ll(roots[i], roots[i]);
        (norm == min_norm ? n_short : n_long) += 1;
    }
    if (r == 4 && n_short == 2 && n_long == 2) return "F4";
    if (n_long == 1) return "C" + std::to_string(r);
    if (n_short == 1) return "B" + std::to_string(r);
    throw std::invalid_argument("invalid simple system");
}

}  // namespace

SubsystemClass classify_subsystem(const RootDatum& datum,
                                  const std::vector<RootCoords>& simple_set) {
    const int n = static_cast<int>(simple_set.size());
    for (int i = 0; i < n; ++i) {
        if (!datum.is_root(simple_set[i]))
            throw std::invalid_argument("classify_subsystem: not a root");
        for (int j = i + 1; j < n; ++j) {
            RootCoords opp = simple_set[j];
            for (int& c : opp) c = -c;
            if (simple_set[i] == opp)
                throw std::invalid_argument("classify_subsystem: opposite roots");
            if (datum.coroot_pairing_ll(simple_set[i], simple_set[j]) > 0)
                throw std::invalid_argument("classify_subsystem: positive pairing");
        }
    }
    // Connected components of the non-orthogonality graph.
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> components;
    for (int i = 0; i < n; ++i) {
        if (comp[i] != -1) continue;
        std::vector<int> stack{i};
        comp[i] = static_cast<int>(components.size());
        std::vector<int> members;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int u = 0; u < n; ++u)
                if (comp[u] == -1 && datum.pairing_ll(simple_set[v], simple_set[u]) != 0) {
                    comp[u] = comp[i];
                    stack.push_back(u);
                }
        }
        std::sort(members.begin(), members.end());
        components.push_back(members);
    }

    std::vector<std::string> labels;
    for (const auto& members : components)
        labels.push_back(label_component(datum, simple_set, members));

    auto key = [](const std::string& s) {
        return std::make_pair(s[0], std::stoi(s.substr(1)));
    };
    std::vector<int> order(labels.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return key(labels[a]) < key(labels[b]); });

    SubsystemClass out;
    for (int idx : order) out.components.push_back(components[idx]);
    std::string result;
    for (size_t i = 0; i < order.size();) {
        size_t j = i;
        while (j < order.size() && labels[order[j]] == labels[order[i]]) ++j;
        if (!result.empty()) result += "+";
        if (j - i > 1) result += std::to_string(j - i);
        result += labels[order[i]];
        i = j;
    }
    out.label = result;
    return out;
}

int epsilon_dim(const RootDatum& datum) {
    if (datum.type_label == "A") return datum.rank + 1;
    if (datum.type_label == "B" || datum.type_label == "C" || datum.type_label == "D")
        return datum.rank;
    throw std::invalid_argument("epsilon realization: classical types only");
}

namespace {

// epsilon-coordinates of the simple roots, rows = simple roots.
std::vector<std::vector<int>> epsilon_rows(const RootDatum& datum) {
    const int l = datum.rank;
    const int n = epsilon_dim(datum);
    std::vector<std::vector<int>> rows(l, std::vector<int>(n, 0));
    if (datum.type_label == "A") {
        for (int i = 0; i < l; ++i) {
            rows[i][i] = 1;
            rows[i][i + 1] = -1;
        }
        return rows;
    }
    for (int i = 0; i + 1 < l; ++i) {
        rows[i][i] = 1;
        rows[i][i + 1] = -1;
    }
    if (datum.type_label == "B") {
        rows[l - 1][l - 1] = 1;
    } else if (datum.type_label == "C") {
        rows[l - 1][l - 1] = 2;
    } else {  // D: the chain already set rows[0..l-2]; the fork root is e_{l-1}+e_l
        rows[l - 1][l - 2] = 1;
        rows[l - 1][l - 1] = 1;
    }
    return rows;
}

}  // namespace

std::vector<Rational> to_epsilon(const RootDatum& datum, const RootCoords& c) {
    auto rows = epsilon_rows(datum);
    const int n = epsilon_dim(datum);
    std::vector<Rational> e(n, Rational(0));
    for (int i = 0; i < datum.rank; ++i)
        for (int j = 0; j < n; ++j)
            if (rows[i][j] != 0) e[j] += Rational(c[i]) * Rational(rows[i][j]);
    return e;
}

RootCoords from_epsilon(const RootDatum& datum, const std::vector<Rational>& e) {
    auto rows = epsilon_rows(datum);
    const int l = datum.rank;
    const int n = epsilon_dim(datum);
    assert(static_cast<int>(e.size()) == n);
    // Solve sum_i c_i rows[i] = e by least-structure elimination over Q.
    Mat<Rational> m(n, std::vector<Rational>(l + 1, Rational(0)));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < l; ++i) m[j][i] = Rational(rows[i][j]);
        m[j][l] = e[j];
    }
    echelonize(m);
    RootCoords c(l, 0);
    for (int row = 0; row < n; ++row) {
        int pivot = -1;
        for (int col = 0; col < l; ++col)
            if (m[row][col] != 0) {
                pivot = col;
                break;
            }
        if (pivot == -1) {
            assert(m[row][l] == 0);  // consistent system
            continue;
        }
        Rational val = m[row][l];
        assert(is_integer(val));
        c[pivot] = static_cast<int>(val.get_num().get_si());
    }
    // Verify round trip.
    assert(to_epsilon(datum, c) == e);
    return c;
}

}  // namespace atlas
