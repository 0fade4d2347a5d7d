#include "mapforge/map.hpp"
#include "mapforge/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace mapforge {

Perm alpha_perm(int m) {
    Perm p(4 * m);
    for (int q = 0; q < 4 * m; ++q) p[q] = q_alpha(q);
    return p;
}

Perm beta_perm(int m) {
    Perm p(4 * m);
    for (int q = 0; q < 4 * m; ++q) p[q] = q_beta(q);
    return p;
}

Perm alphabeta_perm(int m) {
    Perm p(4 * m);
    for (int q = 0; q < 4 * m; ++q) p[q] = q_alphabeta(q);
    return p;
}

namespace {

// cycle id per cell
std::vector<int> cycle_ids(const Perm& p) {
    std::vector<int> id(p.size(), -1);
    int next = 0;
    for (std::size_t start = 0; start < p.size(); ++start) {
        if (id[start] != -1) continue;
        int x = int(start);
        while (id[x] == -1) {
            id[x] = next;
            x = p[x];
        }
        ++next;
    }
    return id;
}

} // namespace

std::vector<std::string> validate(const CombMap& M) {
    std::vector<std::string> violations;
    if (M.m < 1) {
        violations.push_back("map needs at least one edge");
        return violations;
    }
    if (int(M.P.size()) != 4 * M.m || !is_perm(M.P)) {
        violations.push_back("P is not a permutation of the 4m quadricells");
        return violations;
    }
    const int n = 4 * M.m;
    // conjugating P by alpha must invert it
    bool ci = true;
    for (int q = 0; q < n && ci; ++q)
        if (M.P[q_alpha(M.P[q_alpha(q)])] != q) ci = false;
    if (!ci) violations.push_back("conjugating P by alpha does not invert P");
    // basic: no cell shares a P-cycle with its alpha partner
    auto ids = cycle_ids(M.P);
    bool basic = true;
    for (int q = 0; q < n && basic; ++q)
        if (ids[q] == ids[q_alpha(q)]) basic = false;
    if (!basic) violations.push_back("P is not basic: a cell meets its alpha-partner's cycle");
    // transitivity of <alpha, beta, P>
    Perm a = alpha_perm(M.m), b = beta_perm(M.m);
    if (orbit_count(n, {&a, &b, &M.P}) != 1)
        violations.push_back("the group generated by alpha, beta and P is not transitive");
    return violations;
}

bool is_valid(const CombMap& M) { return validate(M).empty(); }

void require_valid(const CombMap& M) {
    auto v = validate(M);
    if (!v.empty()) {
        std::string msg = "invalid map:";
        for (const auto& s : v) msg += " " + s + ";";
        throw input_error(msg);
    }
}

std::vector<std::vector<int>> vertex_orbits(const CombMap& M) {
    require_valid(M);
    auto cycles = cycles_of(M.P);
    auto ids = cycle_ids(M.P);
    std::vector<std::vector<int>> orbits;
    std::vector<char> taken(cycles.size(), 0);
    for (std::size_t c = 0; c < cycles.size(); ++c) {
        if (taken[c]) continue;
        int partner = ids[q_alpha(cycles[c][0])];
        taken[c] = taken[partner] = 1;
        std::vector<int> cells = cycles[c];
        if (partner != int(c))
            cells.insert(cells.end(), cycles[partner].begin(), cycles[partner].end());
        std::sort(cells.begin(), cells.end());
        orbits.push_back(std::move(cells));
    }
    return orbits;
}

namespace {

Perm face_rotation(const CombMap& M) {
    Perm f(M.P.size());
    for (int q = 0; q < int(M.P.size()); ++q) f[q] = M.P[q_alphabeta(q)];
    return f;
}

} // namespace

std::vector<std::vector<int>> face_orbits(const CombMap& M) {
    require_valid(M);
    Perm f = face_rotation(M);
    auto cycles = cycles_of(f);
    auto ids = cycle_ids(f);
    std::vector<std::vector<int>> orbits;
    std::vector<char> taken(cycles.size(), 0);
    for (std::size_t c = 0; c < cycles.size(); ++c) {
        if (taken[c]) continue;
        int partner = ids[q_beta(cycles[c][0])];
        taken[c] = taken[partner] = 1;
        std::vector<int> cells = cycles[c];
        if (partner != int(c))
            cells.insert(cells.end(), cycles[partner].begin(), cycles[partner].end());
        std::sort(cells.begin(), cells.end());
        orbits.push_back(std::move(cells));
    }
    return orbits;
}

std::vector<std::vector<int>> face_boundary_cycles(const CombMap& M) {
    require_valid(M);
    Perm f = face_rotation(M);
    auto cycles = cycles_of(f);
    auto ids = cycle_ids(f);
    std::vector<std::vector<int>> chosen;
    for (std::size_t c = 0; c < cycles.size(); ++c) {
        int partner = ids[q_beta(cycles[c][0])];
        if (partner == int(c))
            throw input_error("face boundary pairs with itself");
        if (cycles[c][0] < cycles[partner][0]) chosen.push_back(cycles[c]);
    }
    return chosen;
}

std::vector<int> cell_vertex_ids(const CombMap& M) {
    std::vector<int> vid(M.P.size(), -1);
    auto orbits = vertex_orbits(M);
    for (std::size_t i = 0; i < orbits.size(); ++i)
        for (int c : orbits[i]) vid[c] = int(i);
    return vid;
}

MapInvariants invariants(const CombMap& M) {
    require_valid(M);
    MapInvariants inv;
    inv.e = M.m;
    inv.v = (long long)cycles_of(M.P).size() / 2;
    Perm f = face_rotation(M);
    auto fcycles = cycles_of(f);
    inv.f = (long long)fcycles.size() / 2;
    auto ids = cycle_ids(f);
    std::vector<char> taken(fcycles.size(), 0);
    for (std::size_t c = 0; c < fcycles.size(); ++c) {
        if (taken[c]) continue;
        taken[c] = taken[ids[q_beta(fcycles[c][0])]] = 1;
        inv.face_lengths.push_back(int(fcycles[c].size()));
    }
    std::sort(inv.face_lengths.begin(), inv.face_lengths.end());
    inv.chi = inv.v - inv.e + inv.f;
    Perm ab = alphabeta_perm(M.m);
    inv.orientable = (orbit_count(4 * M.m, {&ab, &M.P}) == 2);
    if (inv.orientable) {
        if ((2 - inv.chi) % 2 != 0)
            throw input_error("orientable map with odd Euler defect");
        inv.genus = (2 - inv.chi) / 2;
    } else {
        inv.genus = 2 - inv.chi;
    }
    return inv;
}

long long euler_characteristic(const CombMap& M) { return invariants(M).chi; }

bool is_orientable(const CombMap& M) {
    require_valid(M);
    Perm ab = alphabeta_perm(M.m);
    return orbit_count(4 * M.m, {&ab, &M.P}) == 2;
}

CombMap dual(const CombMap& M) {
    require_valid(M);
    auto sigma = [](int q) { return (q & ~3) | ((q & 1) << 1) | ((q >> 1) & 1); };
    CombMap D;
    D.m = M.m;
    D.P.resize(4 * M.m);
    for (int x = 0; x < 4 * M.m; ++x)
        D.P[x] = sigma(M.P[q_alphabeta(sigma(x))]);
    return D;
}

namespace {

// Propagate the unique alpha/beta/P-equivariant extension of cell0 -> root.
// Returns the bijection, or empty if the propagation hits a contradiction.
std::optional<Perm> propagate(const CombMap& M1, const CombMap& M2, int root) {
    const int n = 4 * M1.m;
    Perm theta(n, -1);
    std::vector<char> hit(n, 0);
    std::deque<int> queue;
    auto assign = [&](int x, int y) {
        if (theta[x] != -1) return theta[x] == y;
        if (hit[y]) return false;
        theta[x] = y;
        hit[y] = 1;
        queue.push_back(x);
        return true;
    };
    if (!assign(0, root)) return std::nullopt;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        int y = theta[x];
        if (!assign(q_alpha(x), q_alpha(y))) return std::nullopt;
        if (!assign(q_beta(x), q_beta(y))) return std::nullopt;
        if (!assign(M1.P[x], M2.P[y])) return std::nullopt;
    }
    // transitivity of <alpha,beta,P> guarantees full coverage
    for (int x = 0; x < n; ++x)
        if (theta[x] == -1) return std::nullopt;
    return theta;
}

} // namespace

std::optional<Perm> isomorphism(const CombMap& M1, const CombMap& M2) {
    require_valid(M1);
    require_valid(M2);
    if (M1.m != M2.m) return std::nullopt;
    for (int root = 0; root < 4 * M2.m; ++root)
        if (auto theta = propagate(M1, M2, root)) return theta;
    return std::nullopt;
}

bool isomorphic(const CombMap& M1, const CombMap& M2) {
    return isomorphism(M1, M2).has_value();
}

std::vector<Perm> automorphism_group(const CombMap& M) {
    require_valid(M);
    std::vector<Perm> auts;
    for (int root = 0; root < 4 * M.m; ++root)
        if (auto theta = propagate(M, M, root)) auts.push_back(std::move(*theta));
    return auts;
}

BigInt rooted_count(const CombMap& M) {
    auto auts = automorphism_group(M);
    return exact_div(BigInt(4) * M.m, BigInt(auts.size()));
}

std::vector<int> canon_code(const CombMap& M) {
    require_valid(M);
    const int n = 4 * M.m;
    std::vector<int> best;
    std::vector<int> label(n), order(n);
    for (int root = 0; root < n; ++root) {
        std::fill(label.begin(), label.end(), -1);
        label[root] = 0;
        order[0] = root;
        int next = 1;
        for (int i = 0; i < next; ++i) {
            int x = order[i];
            for (int y : {q_alpha(x), q_beta(x), M.P[x]}) {
                if (label[y] == -1) {
                    label[y] = next;
                    order[next++] = y;
                }
            }
        }
        std::vector<int> code;
        code.reserve(3 * n);
        for (int i = 0; i < n; ++i) {
            int x = order[i];
            code.push_back(label[q_alpha(x)]);
            code.push_back(label[q_beta(x)]);
            code.push_back(label[M.P[x]]);
        }
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

std::string canon_key(const CombMap& M) {
    auto code = canon_code(M);
    std::string key;
    key.reserve(code.size() * sizeof(int));
    key.append(reinterpret_cast<const char*>(code.data()), code.size() * sizeof(int));
    return key;
}

std::vector<char> orientation_class(const CombMap& M) {
    require_valid(M);
    if (!is_orientable(M)) throw input_error("orientation_class needs an orientable map");
    const int n = 4 * M.m;
    std::vector<char> cls(n, 1);
    Perm Pinv = perm_inv(M.P);
    std::deque<int> queue{0};
    cls[0] = 0;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : {q_alphabeta(x), M.P[x], Pinv[x]}) {
            if (cls[y] == 1) {
                cls[y] = 0;
                queue.push_back(y);
            }
        }
    }
    // flip so the convention is cls[0] == 0, other orbit == 1; BFS from 0
    // only reaches orbit 0, the rest stayed 1
    return cls;
}

bool preserves_orientation(const CombMap& M, const Perm& aut) {
    if (!is_orientable(M)) return true;
    auto cls = orientation_class(M);
    return cls[aut[0]] == cls[0];
}

std::vector<Perm> orientation_preserving_auts(const CombMap& M) {
    auto auts = automorphism_group(M);
    if (!is_orientable(M)) return auts;
    auto cls = orientation_class(M);
    std::vector<Perm> out;
    for (auto& a : auts)
        if (cls[a[0]] == cls[0]) out.push_back(std::move(a));
    return out;
}

MultiGraph underlying_graph(const CombMap& M) {
    auto orbits = vertex_orbits(M);
    std::vector<int> vid(4 * M.m, -1);
    for (std::size_t i = 0; i < orbits.size(); ++i)
        for (int q : orbits[i]) vid[q] = int(i);
    MultiGraph g;
    g.nv = int(orbits.size());
    for (int e = 0; e < M.m; ++e)
        g.edges.emplace_back(vid[4 * e], vid[4 * e + 1]);
    return g;
}

Perm extend_semiarc_action(int m, const Perm& semiarc) {
    if (int(semiarc.size()) != 2 * m || !is_perm(semiarc))
        throw input_error("semi-arc action has the wrong degree");
    for (int d = 0; d < 2 * m; ++d)
        if (semiarc[d ^ 1] != (semiarc[d] ^ 1))
            throw input_error("semi-arc action does not pair edge mates");
    Perm z(4 * m);
    for (int e = 0; e < m; ++e) {
        for (int b = 0; b < 2; ++b) {
            int t = semiarc[2 * e + b];
            int f = t >> 1, b2 = t & 1;
            for (int a = 0; a < 2; ++a)
                z[4 * e + 2 * a + b] = 4 * f + 2 * a + b2;
        }
    }
    return z;
}

std::optional<Perm> extend_graph_aut(const CombMap& M, const Perm& semiarc) {
    require_valid(M);
    if (int(semiarc.size()) != 2 * M.m || !is_perm(semiarc))
        throw input_error("semi-arc action has the wrong degree");
    for (int d = 0; d < 2 * M.m; ++d)
        if (semiarc[d ^ 1] != (semiarc[d] ^ 1))
            throw input_error("semi-arc action does not pair edge mates");
    // cell 0 lies over dart 0; its image must lie over semiarc[0], which
    // leaves two candidate cells (the free alpha bit / per-edge twist)
    int t = semiarc[0];
    int f = t >> 1, b2 = t & 1;
    for (int a = 0; a < 2; ++a) {
        int root = 4 * f + 2 * a + b2;
        auto theta = propagate(M, M, root);
        if (!theta) continue;
        bool over = true;
        for (int q = 0; q < 4 * M.m && over; ++q)
            if (q_dart((*theta)[q]) != semiarc[q_dart(q)]) over = false;
        if (over) return theta;
    }
    return std::nullopt;
}

CombMap fig12_map() {
    CombMap M;
    M.m = 6;
    M.P = {4, 22, 10, 12, 8, 21, 2, 19, 0, 18, 6, 15,
           20, 9, 1, 16, 11, 5, 13, 23, 3, 17, 14, 7};
    return M;
}

CombMap one_vertex_regular(int k) {
    if (k < 3 || k % 2 == 0)
        throw input_error("one_vertex_regular needs an odd k >= 3");
    CombMap M;
    M.m = k;
    M.P.assign(4 * k, -1);
    std::vector<int> c1, c2;
    for (int i = 0; i < k; ++i) c1.push_back(4 * i);
    for (int i = 0; i < k; ++i) c1.push_back(4 * i + 3);
    for (int i = 0; i < k; ++i) c2.push_back(4 * (k - 1 - i) + 1);
    for (int i = 0; i < k; ++i) c2.push_back(4 * (k - 1 - i) + 2);
    for (const auto& c : {c1, c2})
        for (std::size_t i = 0; i < c.size(); ++i)
            M.P[c[i]] = c[(i + 1) % c.size()];
    return M;
}

} // namespace mapforge
