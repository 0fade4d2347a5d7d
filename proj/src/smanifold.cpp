#include "mapforge/smanifold.hpp"
#include "mapforge/embed.hpp"
#include "mapforge/errors.hpp"
#include "mapforge/graph.hpp"
#include "mapforge/voltage.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace mapforge {

std::string to_string(SClass c) {
    switch (c) {
        case SClass::D1: return "D1";
        case SClass::D2: return "D2";
        case SClass::D3: return "D3";
        case SClass::D4: return "D4";
        case SClass::D5: return "D5";
        case SClass::D6: return "D6";
        case SClass::D7: return "D7";
        default: return "not-s-manifold";
    }
}

bool is_triangular(const CombMap& M) {
    auto inv = invariants(M);
    return std::all_of(inv.face_lengths.begin(), inv.face_lengths.end(),
                       [](long long l) { return l == 3; });
}

SClass classify(const CombMap& M) {
    if (!is_triangular(M)) throw input_error("classification needs a triangular map");
    std::set<long long> vals;
    for (const auto& orbit : vertex_orbits(M)) {
        long long valency = (long long)orbit.size() / 2;
        if (valency < 5 || valency > 7) return SClass::NotSManifold;
        vals.insert(valency);
    }
    bool v5 = vals.count(5), v6 = vals.count(6), v7 = vals.count(7);
    if (v5 && v6 && v7) return SClass::D7;
    if (v5 && v6) return SClass::D4;
    if (v5 && v7) return SClass::D5;
    if (v6 && v7) return SClass::D6;
    if (v5) return SClass::D1;
    if (v6) return SClass::D2;
    return SClass::D3;
}

CombMap generate_O20() {
    // icosahedron: poles 0 and 11, upper ring 1-5, lower ring 6-10;
    // neighbour lists in rotation order around each vertex
    static const std::vector<std::pair<int, int>> edges = {
        {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {1, 6},
        {1, 10}, {2, 3}, {2, 6}, {2, 7}, {3, 4}, {3, 7}, {3, 8}, {4, 5},
        {4, 8}, {4, 9}, {5, 9}, {5, 10}, {6, 7}, {6, 10}, {7, 8}, {8, 9},
        {9, 10}, {11, 6}, {11, 7}, {11, 8}, {11, 9}, {11, 10}};
    static const int rot[12][5] = {
        {5, 1, 2, 3, 4},  {2, 0, 5, 10, 6}, {3, 0, 1, 6, 7},  {4, 0, 2, 7, 8},
        {5, 0, 3, 8, 9},  {1, 0, 4, 9, 10}, {2, 1, 10, 11, 7}, {3, 2, 6, 11, 8},
        {4, 3, 7, 11, 9}, {5, 4, 8, 11, 10}, {1, 5, 9, 11, 6}, {6, 10, 9, 8, 7}};
    MultiGraph g;
    g.nv = 12;
    g.edges = edges;
    auto dart_of = [&](int v, int w) {
        for (int e = 0; e < g.ne(); ++e) {
            if (g.edges[e].first == v && g.edges[e].second == w) return dart_id(e, 0);
            if (g.edges[e].second == v && g.edges[e].first == w) return dart_id(e, 1);
        }
        throw input_error("icosahedron table is inconsistent");
    };
    RotationSystem rs;
    rs.lambda.assign(g.ne(), 0);
    rs.rot.resize(g.nv);
    for (int v = 0; v < g.nv; ++v)
        for (int w : rot[v]) rs.rot[v].push_back(dart_of(v, w));
    return map_from_rotation(g, rs);
}

Perm antipodal_involution(const CombMap& O20) {
    auto vid = cell_vertex_ids(O20);
    auto vorb = vertex_orbits(O20);
    for (const auto& a : automorphism_group(O20)) {
        if (perm_order(a) != 2) continue;
        bool fixes = false;
        for (const auto& orbit : vorb)
            if (vid[a[orbit[0]]] == vid[orbit[0]]) {
                fixes = true;
                break;
            }
        if (fixes) continue;
        for (int e = 0; e < O20.m && !fixes; ++e) fixes = a[4 * e] / 4 == e;
        if (!fixes) return a;
    }
    throw input_error("no fixed-free involution found");
}

namespace {

// backtracking search over triangle-side gluings; vertices are tracked as
// corner classes in a union-find that deliberately skips path compression so
// unions stay O(1)-reversible
struct CensusSearch {
    int max_faces;
    std::vector<int> allowed;
    int vmax;
    std::map<std::string, CombMap> found;

    // corner (t, c) = 3t + c
    std::vector<int> parent, size, open_slots;
    // side (t, s) = 3t + s; -1 = open
    std::vector<int> glue_to, glue_flip;
    int nt = 0;

    explicit CensusSearch(int max_faces_, std::vector<int> allowed_)
        : max_faces(max_faces_), allowed(std::move(allowed_)) {
        vmax = *std::max_element(allowed.begin(), allowed.end());
        parent.assign(3 * max_faces, 0);
        size.assign(3 * max_faces, 0);
        open_slots.assign(3 * max_faces, 0);
        glue_to.assign(3 * max_faces, -1);
        glue_flip.assign(3 * max_faces, 0);
    }

    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }

    void new_triangle() {
        for (int c = 0; c < 3; ++c) {
            int i = 3 * nt + c;
            parent[i] = i;
            size[i] = 1;
            open_slots[i] = 2;
        }
        ++nt;
    }

    void undo_triangle() { --nt; }

    // union record: (absorbing root, absorbed root or -1)
    std::pair<int, int> unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return {ra, -1};
        if (size[ra] < size[rb]) std::swap(ra, rb);
        parent[rb] = ra;
        size[ra] += size[rb];
        open_slots[ra] += open_slots[rb];
        return {ra, rb};
    }

    void undo_unite(std::pair<int, int> rec) {
        auto [ra, rb] = rec;
        if (rb < 0) return;
        parent[rb] = rb;
        size[ra] -= size[rb];
        open_slots[ra] -= open_slots[rb];
    }

    // which corners the gluing of A onto B identifies
    std::array<std::pair<int, int>, 2> corner_merges(int A, int B, int flip) const {
        int t = A / 3, s = A % 3, t2 = B / 3, s2 = B % 3;
        if (flip == 1)
            return {{{3 * t + s, 3 * t2 + (s2 + 1) % 3},
                     {3 * t + (s + 1) % 3, 3 * t2 + s2}}};
        return {{{3 * t + s, 3 * t2 + s2},
                 {3 * t + (s + 1) % 3, 3 * t2 + (s2 + 1) % 3}}};
    }

    struct UndoRec {
        bool is_union;
        int slot_root;
        std::pair<int, int> union_rec;
    };

    bool try_glue(int A, int B, int flip, std::vector<UndoRec>& recs) {
        recs.clear();
        bool ok = true;
        for (int side : {A, B}) {
            int t = side / 3, s = side % 3;
            for (int c : {s, (s + 1) % 3}) {
                int r = find(3 * t + c);
                open_slots[r] -= 1;
                recs.push_back({false, r, {}});
            }
        }
        auto merges = corner_merges(A, B, flip);
        for (auto [a, b] : merges) {
            auto rec = unite(a, b);
            recs.push_back({true, 0, rec});
            if (size[find(a)] > vmax) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::set<int> seen;
            for (auto [a, b] : merges) {
                int r = find(a);
                if (!seen.insert(r).second) continue;
                if (open_slots[r] == 0 &&
                    std::find(allowed.begin(), allowed.end(), size[r]) == allowed.end()) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            glue_to[A] = B;
            glue_to[B] = A;
            glue_flip[A] = glue_flip[B] = flip;
            return true;
        }
        rollback(recs);
        return false;
    }

    void rollback(const std::vector<UndoRec>& recs) {
        for (auto it = recs.rbegin(); it != recs.rend(); ++it) {
            if (it->is_union)
                undo_unite(it->union_rec);
            else
                open_slots[it->slot_root] += 1;
        }
    }

    void undo_glue(int A, int B, const std::vector<UndoRec>& recs) {
        glue_to[A] = glue_to[B] = -1;
        rollback(recs);
    }

    void complete() {
        std::vector<std::array<int, 3>> pairs;  // (A, B, flip), A < B
        for (int side = 0; side < 3 * nt; ++side)
            if (glue_to[side] > side) pairs.push_back({side, glue_to[side], glue_flip[side]});
        std::sort(pairs.begin(), pairs.end());
        CombMap M = assemble(pairs);
        auto errs = validate(M);
        if (!errs.empty()) throw input_error("census assembly failed: " + errs.front());
        std::string key = canon_key(M);
        found.emplace(std::move(key), std::move(M));
    }

    static CombMap assemble(const std::vector<std::array<int, 3>>& pairs) {
        // cells are directed sides (side, d); d = 0 follows the face rotation
        std::map<std::pair<int, int>, int> cells;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            auto [A, B, flip] = pairs[k];
            cells[{A, 0}] = int(4 * k);
            cells[{A, 1}] = int(4 * k + 1);
            cells[{B, flip}] = int(4 * k + 2);
            cells[{B, 1 ^ flip}] = int(4 * k + 3);
        }
        int n = int(4 * pairs.size());
        std::vector<int> f(n);
        for (const auto& [sd, i] : cells) {
            auto [side, d] = sd;
            int t = side / 3, s = side % 3;
            int next_side = d == 0 ? 3 * t + (s + 1) % 3 : 3 * t + (s + 2) % 3;
            f[i] = cells.at({next_side, d});
        }
        CombMap M;
        M.m = int(pairs.size());
        M.P.resize(n);
        for (int i = 0; i < n; ++i) M.P[i] = f[i ^ 3];
        return M;
    }

    void dfs() {
        std::vector<int> open;
        for (int side = 0; side < 3 * nt; ++side)
            if (glue_to[side] < 0) open.push_back(side);
        if (open.empty()) {
            complete();
            return;
        }
        int A = open.front();
        std::vector<UndoRec> recs;
        if (nt < max_faces) {
            new_triangle();
            int B = 3 * (nt - 1);
            if (try_glue(A, B, 1, recs)) {
                dfs();
                undo_glue(A, B, recs);
            }
            undo_triangle();
        }
        for (int B : open) {
            if (B == A) continue;
            for (int flip : {0, 1}) {
                if (try_glue(A, B, flip, recs)) {
                    dfs();
                    undo_glue(A, B, recs);
                }
            }
        }
    }

    void run() {
        new_triangle();
        dfs();
    }
};

} // namespace

std::vector<CensusEntry> smanifold_census(int max_faces, const std::vector<int>& allowed) {
    if (max_faces < 1 || max_faces > 24)
        throw input_error("census cap is 1..24 faces");
    if (allowed.empty()) throw input_error("allowed valency set is empty");
    for (int v : allowed)
        if (v < 1) throw input_error("valencies must be positive");
    CensusSearch search(max_faces, allowed);
    search.run();
    std::vector<CensusEntry> out;
    for (auto& [key, M] : search.found) {
        CensusEntry entry;
        entry.inv = invariants(M);
        entry.cls = classify(M);
        entry.map = std::move(M);
        out.push_back(std::move(entry));
    }
    std::stable_sort(out.begin(), out.end(), [](const CensusEntry& a, const CensusEntry& b) {
        return a.inv.f < b.inv.f;
    });
    return out;
}

CombMap midpoint_subdivision(const CombMap& M) {
    if (!is_triangular(M)) throw input_error("subdivision needs a triangular map");
    auto boundary = face_boundary_cycles(M);
    int nt = (int)boundary.size();

    // recover the side gluing: incidences of each edge in the chosen cycles
    std::map<int, std::vector<std::pair<int, int>>> edge_inc;  // edge -> (side, cell)
    for (int t = 0; t < nt; ++t)
        for (int s = 0; s < 3; ++s) {
            int x = boundary[t][s];
            edge_inc[x >> 2].push_back({3 * t + s, x});
        }

    // small triangles: corner triangle (t, c) = 4t + c, centre = 4t + 3;
    // corner triangle side 0 = first half of original side c, side 1 faces
    // the centre, side 2 = second half of original side c-1
    std::vector<std::array<int, 3>> pairs;
    auto corner_side = [&](int t, int c, int s) { return 3 * (4 * t + c) + s; };
    auto centre_side = [&](int t, int s) { return 3 * (4 * t + 3) + s; };
    for (int t = 0; t < nt; ++t)
        for (int s = 0; s < 3; ++s)
            pairs.push_back({centre_side(t, s), corner_side(t, (s + 1) % 3, 1), 1});
    for (const auto& [e, inc] : edge_inc) {
        if (inc.size() != 2)
            throw input_error("edge does not meet exactly two triangle sides");
        auto [sideA, xA] = inc[0];
        auto [sideB, xB] = inc[1];
        int flip;
        if (xB == q_alphabeta(xA))
            flip = 1;
        else if (xB == q_alpha(xA))
            flip = 0;
        else
            throw input_error("triangle side pairing is inconsistent");
        int t1 = sideA / 3, s1 = sideA % 3, t2 = sideB / 3, s2 = sideB % 3;
        if (flip == 1) {
            pairs.push_back({corner_side(t1, s1, 0), corner_side(t2, (s2 + 1) % 3, 2), 1});
            pairs.push_back({corner_side(t1, (s1 + 1) % 3, 2), corner_side(t2, s2, 0), 1});
        } else {
            pairs.push_back({corner_side(t1, s1, 0), corner_side(t2, s2, 0), 0});
            pairs.push_back({corner_side(t1, (s1 + 1) % 3, 2), corner_side(t2, (s2 + 1) % 3, 2), 0});
        }
    }
    for (auto& p : pairs)
        if (p[0] > p[1]) std::swap(p[0], p[1]);
    std::sort(pairs.begin(), pairs.end());
    CombMap out = CensusSearch::assemble(pairs);
    require_valid(out);
    return out;
}

GapReport valency_gap_check(const CombMap& M) {
    if (classify(M) == SClass::NotSManifold)
        throw input_error("valency-gap check applies to closed s-manifolds");
    GapReport report;
    for (const auto& orbit : vertex_orbits(M)) {
        long long valency = (long long)orbit.size() / 2;
        if (valency == 5) ++report.v5;
        if (valency == 6) ++report.v6;
        if (valency == 7) ++report.v7;
    }
    report.chi = euler_characteristic(M);
    report.constrained = report.chi != 0;
    if (report.chi <= -1)
        report.pass = report.v7 >= report.v5 + 2;
    else if (report.chi >= 1)
        report.pass = report.v7 <= report.v5 - 2;
    else
        report.pass = true;
    return report;
}

CombMap generate_P10() {
    CombMap O20 = generate_O20();
    Perm a = antipodal_involution(O20);
    std::vector<Perm> subgroup{perm_identity((int)a.size()), a};
    return quotient_map(O20, subgroup).map;
}

} // namespace mapforge
