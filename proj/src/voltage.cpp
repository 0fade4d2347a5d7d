#include "mapforge/voltage.hpp"
#include "mapforge/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mapforge {

FinGroupTable FinGroupTable::cyclic(int N) {
    if (N < 1) throw input_error("cyclic group order must be positive");
    FinGroupTable G;
    G.n = N;
    G.id = 0;
    G.mul.assign(N, std::vector<int>(N));
    G.inv.resize(N);
    for (int a = 0; a < N; ++a) {
        G.inv[a] = (N - a) % N;
        for (int b = 0; b < N; ++b) G.mul[a][b] = (a + b) % N;
    }
    return G;
}

FinGroupTable FinGroupTable::from_table(std::vector<std::vector<int>> table) {
    FinGroupTable G;
    G.n = (int)table.size();
    if (G.n == 0) throw input_error("empty multiplication table");
    for (const auto& row : table) {
        if ((int)row.size() != G.n) throw input_error("multiplication table is not square");
        for (int x : row)
            if (x < 0 || x >= G.n) throw input_error("table entry out of range");
    }
    G.mul = std::move(table);
    G.id = -1;
    for (int e = 0; e < G.n; ++e) {
        bool ok = true;
        for (int x = 0; x < G.n && ok; ++x)
            ok = G.mul[e][x] == x && G.mul[x][e] == x;
        if (ok) {
            G.id = e;
            break;
        }
    }
    if (G.id < 0) throw input_error("table has no identity element");
    G.inv.assign(G.n, -1);
    for (int a = 0; a < G.n; ++a) {
        for (int b = 0; b < G.n; ++b)
            if (G.mul[a][b] == G.id && G.mul[b][a] == G.id) {
                G.inv[a] = b;
                break;
            }
        if (G.inv[a] < 0) throw input_error("element without inverse");
    }
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b)
            for (int c = 0; c < G.n; ++c)
                if (G.mul[G.mul[a][b]][c] != G.mul[a][G.mul[b][c]])
                    throw input_error("multiplication table is not associative");
    return G;
}

FinGroupTable FinGroupTable::from_permutations(const std::vector<Perm>& elements,
                                               std::vector<Perm>* ordered) {
    if (elements.empty()) throw input_error("empty permutation list");
    std::size_t deg = elements[0].size();
    std::vector<Perm> elems = elements;
    Perm identity = perm_identity((int)deg);
    // identity first, the rest in lexicographic order for a stable table
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    auto it = std::find(elems.begin(), elems.end(), identity);
    if (it == elems.end()) throw input_error("permutation set lacks the identity");
    std::rotate(elems.begin(), it, it + 1);
    std::map<Perm, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = (int)i;
    FinGroupTable G;
    G.n = (int)elems.size();
    G.id = 0;
    G.mul.assign(G.n, std::vector<int>(G.n));
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b) {
            auto f = index.find(perm_mul(elems[a], elems[b]));
            if (f == index.end())
                throw input_error("permutation set is not closed under composition");
            G.mul[a][b] = f->second;
        }
    G.inv.assign(G.n, -1);
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b)
            if (G.mul[a][b] == 0 && G.mul[b][a] == 0) {
                G.inv[a] = b;
                break;
            }
    for (int a = 0; a < G.n; ++a)
        if (G.inv[a] < 0) throw input_error("permutation set is not a group");
    if (ordered) *ordered = elems;
    return G;
}

int FinGroupTable::order_of(int g) const {
    if (g < 0 || g >= n) throw input_error("group element out of range");
    int k = 1, x = g;
    while (x != id) {
        x = mul[x][g];
        ++k;
    }
    return k;
}

namespace {

void check_voltage_shape(const CombMap& M, const FinGroupTable& G,
                         const VoltageAssignment& theta) {
    if (theta.size() != M.P.size())
        throw input_error("voltage assignment must cover every quadricell");
    for (int t : theta)
        if (t < 0 || t >= G.n) throw input_error("voltage element out of range");
    for (int q = 0; q < (int)theta.size(); ++q) {
        if (theta[q_alpha(q)] != theta[q])
            throw input_error("voltage must be constant on alpha-pairs");
        if (theta[q_beta(q)] != G.inv[theta[q]])
            throw input_error("voltage must invert along beta");
    }
}

int face_product(const CombMap& M, const FinGroupTable& G,
                 const VoltageAssignment& theta, int start) {
    int g = G.id, x = start;
    do {
        g = G.mul[g][theta[x]];
        x = M.P[q_alphabeta(x)];
    } while (x != start);
    return g;
}

} // namespace

bool voltage_generates(const CombMap& M, const FinGroupTable& G,
                       const VoltageAssignment& theta) {
    // subgroup generated by the face voltages, taken from every starting
    // cell so conjugates are included
    std::set<int> gen{G.id};
    std::vector<int> frontier{G.id};
    std::vector<int> products;
    for (const auto& cyc : face_boundary_cycles(M))
        for (int start : cyc) {
            products.push_back(face_product(M, G, theta, start));
            products.push_back(G.inv[products.back()]);
        }
    while (!frontier.empty()) {
        int a = frontier.back();
        frontier.pop_back();
        for (int p : products) {
            int b = G.mul[a][p];
            if (gen.insert(b).second) frontier.push_back(b);
        }
    }
    return (int)gen.size() == G.n;
}

void validate_voltage(const CombMap& M, const FinGroupTable& G,
                      const VoltageAssignment& theta, bool require_generation) {
    require_valid(M);
    check_voltage_shape(M, G, theta);
    if (require_generation && !voltage_generates(M, G, theta))
        throw input_error("face voltages do not generate the group");
}

int face_voltage_order(const CombMap& M, const FinGroupTable& G,
                       const VoltageAssignment& theta, int cell) {
    if (cell < 0 || cell >= (int)M.P.size()) throw input_error("cell out of range");
    return G.order_of(face_product(M, G, theta, cell));
}

std::vector<int> face_voltage_orders(const CombMap& M, const FinGroupTable& G,
                                     const VoltageAssignment& theta) {
    std::vector<int> out;
    for (const auto& cyc : face_boundary_cycles(M))
        out.push_back(G.order_of(face_product(M, G, theta, cyc[0])));
    return out;
}

LiftResult lift(const CombMap& M, const FinGroupTable& G,
                const VoltageAssignment& theta, bool require_generation) {
    validate_voltage(M, G, theta, require_generation);
    int n = (int)M.P.size(), ng = G.n;
    int total = n * ng;
    // raw fibre coordinates: cell (q, g) at q*ng + g
    auto raw_alpha = [&](int c) { return q_alpha(c / ng) * ng + c % ng; };
    auto raw_beta = [&](int c) {
        int q = c / ng, g = c % ng;
        return q_beta(q) * ng + G.mul[g][theta[q]];
    };
    std::vector<int> rawP(total);
    for (int q = 0; q < n; ++q)
        for (int g = 0; g < ng; ++g) rawP[q * ng + g] = M.P[q] * ng + g;

    // re-encode into the standard edge-block layout, blocks in min-cell order
    LiftResult out;
    out.cell_index.assign(total, -1);
    int e = 0;
    for (int c = 0; c < total; ++c) {
        if (out.cell_index[c] >= 0) continue;
        out.cell_index[c] = 4 * e;
        out.cell_index[raw_beta(c)] = 4 * e + 1;
        out.cell_index[raw_alpha(c)] = 4 * e + 2;
        out.cell_index[raw_alpha(raw_beta(c))] = 4 * e + 3;
        ++e;
    }
    out.map.m = e;
    out.map.P.assign(total, -1);
    for (int c = 0; c < total; ++c)
        out.map.P[out.cell_index[c]] = out.cell_index[rawP[c]];
    require_valid(out.map);

    // deck transformations: left multiplication on the fibre coordinate
    out.deck.resize(ng);
    for (int h = 0; h < ng; ++h) {
        Perm d(total);
        for (int q = 0; q < n; ++q)
            for (int g = 0; g < ng; ++g)
                d[out.cell_index[q * ng + g]] = out.cell_index[q * ng + G.mul[h][g]];
        out.deck[h] = std::move(d);
    }
    return out;
}

long long lifted_euler_predict(const CombMap& M, const FinGroupTable& G,
                               const VoltageAssignment& theta) {
    validate_voltage(M, G, theta, false);
    BigRat chi(euler_characteristic(M));
    BigRat correction = 0;
    for (int m : face_voltage_orders(M, G, theta))
        correction += BigRat(1, m) - 1;
    BigRat total = BigRat(G.n) * (chi + correction);
    if (!is_integer(total))
        throw input_error("lifted Euler characteristic came out fractional");
    return (long long)to_integer(total);
}

long long fixed_vertices(const CombMap& M, const Perm& aut) {
    auto vid = cell_vertex_ids(M);
    auto orbits = vertex_orbits(M);
    long long count = 0;
    for (std::size_t v = 0; v < orbits.size(); ++v)
        if (vid[aut[orbits[v][0]]] == (int)v) ++count;
    return count;
}

long long fixed_faces(const CombMap& M, const Perm& aut) {
    auto orbits = face_orbits(M);
    std::vector<int> fid(M.P.size(), -1);
    for (std::size_t i = 0; i < orbits.size(); ++i)
        for (int c : orbits[i]) fid[c] = (int)i;
    long long count = 0;
    for (std::size_t f = 0; f < orbits.size(); ++f)
        if (fid[aut[orbits[f][0]]] == (int)f) ++count;
    return count;
}

bool is_automorphism_of(const CombMap& M, const Perm& p) {
    if (p.size() != M.P.size() || !is_perm(p)) return false;
    for (int q = 0; q < (int)M.P.size(); ++q) {
        if (p[q_alpha(q)] != q_alpha(p[q])) return false;
        if (p[q_beta(q)] != q_beta(p[q])) return false;
        if (p[M.P[q]] != M.P[p[q]]) return false;
    }
    return true;
}

QuotientResult quotient_map(const CombMap& M, const std::vector<Perm>& subgroup) {
    require_valid(M);
    if (subgroup.empty()) throw input_error("empty automorphism list");
    for (const auto& p : subgroup)
        if (!is_automorphism_of(M, p))
            throw input_error("listed permutation is not an automorphism of the map");
    std::vector<Perm> elems;
    FinGroupTable G = FinGroupTable::from_permutations(subgroup, &elems);

    int n = (int)M.P.size();
    // cell orbits, identified by their minimal member
    std::vector<int> orbit_min(n, -1);
    for (int c = 0; c < n; ++c) {
        if (orbit_min[c] >= 0) continue;
        std::vector<int> members;
        for (const auto& g : elems) members.push_back(g[c]);
        int mn = *std::min_element(members.begin(), members.end());
        for (int x : members) orbit_min[x] = mn;
    }

    QuotientResult out;
    out.group = G;
    // block assignment over orbit representatives in increasing order
    std::map<int, int> label;  // orbit min -> standard cell
    int e = 0;
    for (int c = 0; c < n; ++c) {
        int o = orbit_min[c];
        if (label.count(o)) continue;
        int ob = orbit_min[q_beta(c)], oa = orbit_min[q_alpha(c)],
            oab = orbit_min[q_alphabeta(c)];
        std::set<int> distinct{o, ob, oa, oab};
        if (distinct.size() != 4)
            throw input_error("quotient degenerates: an edge folds onto itself");
        label[o] = 4 * e;
        label[ob] = 4 * e + 1;
        label[oa] = 4 * e + 2;
        label[oab] = 4 * e + 3;
        ++e;
    }
    out.orbit_of.resize(n);
    for (int c = 0; c < n; ++c) out.orbit_of[c] = label[orbit_min[c]];
    out.map.m = e;
    out.map.P.assign(4 * e, -1);
    for (int c = 0; c < n; ++c) out.map.P[out.orbit_of[c]] = out.orbit_of[M.P[c]];
    {
        auto errs = validate(out.map);
        if (!errs.empty())
            throw input_error("quotient is not a map: " + errs.front());
    }

    // voltage reconstruction needs the action free on vertices
    bool free_on_vertices = true;
    for (std::size_t i = 1; i < elems.size() && free_on_vertices; ++i)
        if (fixed_vertices(M, elems[i]) != 0) free_on_vertices = false;
    if (!free_on_vertices) return out;

    // gamma(x): the unique group element carrying the representative vertex
    // of x's orbit to the vertex of x; representatives are the cells where
    // gamma is the identity
    auto vid = cell_vertex_ids(M);
    auto orbits = vertex_orbits(M);
    std::vector<int> gamma(n, -1);
    std::vector<char> vertex_seen(orbits.size(), 0);
    for (std::size_t v = 0; v < orbits.size(); ++v) {
        if (vertex_seen[v]) continue;
        for (int gi = 0; gi < G.n; ++gi) {
            int w = vid[elems[gi][orbits[v][0]]];
            vertex_seen[w] = 1;
            for (int c : orbits[v]) gamma[elems[gi][c]] = gi;
        }
    }
    VoltageAssignment theta(4 * e, G.id);
    for (int c = 0; c < n; ++c) {
        if (gamma[c] != G.id) continue;  // representative cells only
        theta[out.orbit_of[c]] = gamma[q_beta(c)];
    }
    out.theta = std::move(theta);
    return out;
}

BigRat non_euclid_area(const CombMap& M) {
    return BigRat(-2) * BigRat(euler_characteristic(M));
}

BigRat area_voltage(const CombMap& M, const FinGroupTable& G,
                    const VoltageAssignment& theta) {
    validate_voltage(M, G, theta, false);
    BigRat s = BigRat(-1) * BigRat(euler_characteristic(M));
    for (int m : face_voltage_orders(M, G, theta)) s += BigRat(1, m) - 1;
    return BigRat(2) * s;
}

TriangleAreaReport triangle_area_check(const CombMap& M) {
    auto inv = invariants(M);
    for (long long len : inv.face_lengths)
        if (len != 3) throw input_error("area model applies to triangulations only");
    auto vid = cell_vertex_ids(M);
    auto orbits = vertex_orbits(M);
    std::vector<long long> valency(orbits.size());
    for (std::size_t v = 0; v < orbits.size(); ++v)
        valency[v] = (long long)orbits[v].size() / 2;  // cells = 2 per incidence

    TriangleAreaReport report;
    report.total = 0;
    for (const auto& cyc : face_boundary_cycles(M)) {
        BigRat defect(-1);
        for (int c : cyc) defect += BigRat(2, valency[vid[c]]);
        report.defects.push_back(defect);
        report.total += defect;
    }
    report.matches_euler = report.total == BigRat(2) * BigRat(inv.chi);
    return report;
}

} // namespace mapforge
