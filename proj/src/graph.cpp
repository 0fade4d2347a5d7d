#include "mapforge/graph.hpp"
#include "mapforge/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace mapforge {

void validate_graph(const MultiGraph& g) {
    if (g.nv < 1) throw input_error("graph needs at least one vertex");
    for (const auto& [u, v] : g.edges)
        if (u < 0 || u >= g.nv || v < 0 || v >= g.nv)
            throw input_error("edge endpoint out of range");
    // connectivity
    std::vector<int> parent(g.nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
        return x;
    };
    int comps = g.nv;
    for (const auto& [u, v] : g.edges) {
        int a = find(u), b = find(v);
        if (a != b) { parent[a] = b; --comps; }
    }
    if (comps != 1) throw input_error("graph is not connected");
}

int degree(const MultiGraph& g, int v) {
    int d = 0;
    for (const auto& [a, b] : g.edges) {
        if (a == v) ++d;
        if (b == v) ++d;
    }
    return d;
}

std::vector<int> valency_sequence(const MultiGraph& g) {
    std::vector<int> seq(g.nv, 0);
    for (const auto& [a, b] : g.edges) {
        ++seq[a];
        ++seq[b];
    }
    std::sort(seq.begin(), seq.end());
    return seq;
}

int betti(const MultiGraph& g) {
    validate_graph(g);
    return g.ne() - g.nv + 1;
}

std::vector<std::pair<int, int>> darts_at(const MultiGraph& g, int v) {
    std::vector<std::pair<int, int>> out;
    for (int e = 0; e < g.ne(); ++e) {
        if (g.edges[e].first == v) out.emplace_back(e, 0);
        if (g.edges[e].second == v) out.emplace_back(e, 1);
    }
    return out;
}

std::vector<char> spanning_tree(const MultiGraph& g) {
    std::vector<char> tree(g.ne(), 0);
    std::vector<char> seen(g.nv, 0);
    std::vector<std::vector<std::pair<int, int>>> adj(g.nv);  // (neighbor, edge)
    for (int e = 0; e < g.ne(); ++e) {
        const auto& [u, v] = g.edges[e];
        if (u != v) {
            adj[u].emplace_back(v, e);
            adj[v].emplace_back(u, e);
        }
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (const auto& [w, e] : adj[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                tree[e] = 1;
                stack.push_back(w);
            }
        }
    }
    return tree;
}

MultiGraph complete_graph(int n) {
    if (n < 1) throw input_error("complete_graph needs n >= 1");
    MultiGraph g;
    g.nv = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
    return g;
}

MultiGraph bouquet(int n) {
    if (n < 1) throw input_error("bouquet needs n >= 1");
    MultiGraph g;
    g.nv = 1;
    for (int i = 0; i < n; ++i) g.edges.emplace_back(0, 0);
    return g;
}

MultiGraph dipole(int n) {
    if (n < 1) throw input_error("dipole needs n >= 1");
    MultiGraph g;
    g.nv = 2;
    for (int i = 0; i < n; ++i) g.edges.emplace_back(0, 1);
    return g;
}

MultiGraph dipole_with_loops(int n, int k, int l) {
    MultiGraph g = dipole(n);
    for (int i = 0; i < k; ++i) g.edges.emplace_back(0, 0);
    for (int i = 0; i < l; ++i) g.edges.emplace_back(1, 1);
    return g;
}

MultiGraph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw input_error("complete_bipartite needs m,n >= 1");
    MultiGraph g;
    g.nv = m + n;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) g.edges.emplace_back(u, m + v);
    return g;
}

MultiGraph graph_from_name(const std::string& name) {
    auto all_digits = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(),
                                         [](unsigned char c) { return std::isdigit(c); });
    };
    if (name.size() >= 2 && name[0] == 'K') {
        std::string rest = name.substr(1);
        auto comma = rest.find(',');
        if (comma == std::string::npos) {
            if (all_digits(rest)) return complete_graph(std::stoi(rest));
        } else {
            std::string a = rest.substr(0, comma), b = rest.substr(comma + 1);
            if (all_digits(a) && all_digits(b))
                return complete_bipartite(std::stoi(a), std::stoi(b));
        }
    }
    if (name.size() >= 2 && name[0] == 'B' && all_digits(name.substr(1)))
        return bouquet(std::stoi(name.substr(1)));
    if (name.size() >= 3 && name.rfind("Dp", 0) == 0 && all_digits(name.substr(2)))
        return dipole(std::stoi(name.substr(2)));
    throw input_error("unknown graph name: " + name +
                      " (expected K<n>, K<m>,<n>, B<n>, Dp<n>)");
}

std::vector<GraphAut> graph_aut_group(const MultiGraph& g, int vertex_cap) {
    validate_graph(g);
    if (g.nv > vertex_cap)
        throw input_error("graph_aut_group: vertex count exceeds cap of " +
                          std::to_string(vertex_cap));

    // group edges into parallel classes by normalized endpoints
    std::map<std::pair<int, int>, std::vector<int>> classes;
    for (int e = 0; e < g.ne(); ++e) {
        auto [u, v] = g.edges[e];
        classes[{std::min(u, v), std::max(u, v)}].push_back(e);
    }

    std::vector<GraphAut> out;
    Perm sigma = perm_identity(g.nv);
    std::vector<int> deg(g.nv);
    for (int v = 0; v < g.nv; ++v) deg[v] = degree(g, v);
    do {
        bool ok = true;
        for (int v = 0; v < g.nv && ok; ++v)
            if (deg[v] != deg[sigma[v]]) ok = false;
        if (!ok) continue;
        // every parallel class must land on a class of equal size
        std::vector<std::pair<const std::vector<int>*, const std::vector<int>*>> pairs;
        for (const auto& [key, members] : classes) {
            auto [u, v] = key;
            auto it = classes.find({std::min(sigma[u], sigma[v]),
                                    std::max(sigma[u], sigma[v])});
            if (it == classes.end() || it->second.size() != members.size()) {
                ok = false;
                break;
            }
            pairs.emplace_back(&members, &it->second);
        }
        if (!ok) continue;
        // cartesian product of per-class bijections
        std::vector<std::vector<int>> choice(pairs.size());
        auto rec = [&](auto&& self, std::size_t i, Perm& emap) -> void {
            if (i == pairs.size()) {
                out.push_back({sigma, emap});
                return;
            }
            const auto& src = *pairs[i].first;
            std::vector<int> tgt = *pairs[i].second;
            std::sort(tgt.begin(), tgt.end());
            do {
                for (std::size_t j = 0; j < src.size(); ++j) emap[src[j]] = tgt[j];
                self(self, i + 1, emap);
            } while (std::next_permutation(tgt.begin(), tgt.end()));
        };
        Perm emap(g.ne());
        rec(rec, 0, emap);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

std::vector<Perm> semiarc_auts_induced(const MultiGraph& g, int vertex_cap) {
    for (int e = 0; e < g.ne(); ++e)
        if (g.is_loop(e))
            throw input_error("induced semi-arc action is only defined for loopless graphs");
    std::vector<Perm> out;
    for (const auto& [vmap, emap] : graph_aut_group(g, vertex_cap)) {
        Perm p(2 * g.ne());
        for (int e = 0; e < g.ne(); ++e) {
            for (int end = 0; end < 2; ++end) {
                int root = g.dart_root(dart_id(e, end));
                int f = emap[e];
                int end2 = (g.edges[f].first == vmap[root]) ? 0 : 1;
                p[dart_id(e, end)] = dart_id(f, end2);
            }
        }
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Perm> semiarc_aut_group_brute(const MultiGraph& g, int dart_cap) {
    validate_graph(g);
    const int nd = 2 * g.ne();
    if (nd > dart_cap)
        throw input_error("semiarc_aut_group_brute: semi-arc count exceeds cap of " +
                          std::to_string(dart_cap));
    std::vector<int> deg(g.nv);
    for (int v = 0; v < g.nv; ++v) deg[v] = degree(g, v);

    std::vector<int> img(nd, -1), vimg(g.nv, -1);
    std::vector<char> used(nd, 0), vtaken(g.nv, 0);
    std::vector<Perm> out;

    auto rec = [&](auto&& self, int d) -> void {
        if (d == nd) {
            out.emplace_back(img.begin(), img.end());
            return;
        }
        int mate = d ^ 1;
        int u = g.dart_root(d);
        for (int t = 0; t < nd; ++t) {
            if (used[t]) continue;
            int w = g.dart_root(t);
            // incidence with the root vertex must be preserved consistently
            bool fresh_vertex = (vimg[u] == -1);
            if (fresh_vertex) {
                if (vtaken[w] || deg[u] != deg[w]) continue;
            } else if (vimg[u] != w) {
                continue;
            }
            // the two semi-arcs of an edge must stay paired
            if (img[mate] != -1) {
                if (img[mate] != (t ^ 1)) continue;
            } else if (used[t ^ 1]) {
                continue;  // mate's forced image is already taken
            }
            img[d] = t;
            used[t] = 1;
            if (fresh_vertex) { vimg[u] = w; vtaken[w] = 1; }
            self(self, d + 1);
            img[d] = -1;
            used[t] = 0;
            if (fresh_vertex) { vimg[u] = -1; vtaken[w] = 0; }
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Perm> semiarc_aut_group(const MultiGraph& g) {
    validate_graph(g);
    bool has_loop = false;
    for (int e = 0; e < g.ne(); ++e)
        if (g.is_loop(e)) { has_loop = true; break; }
    if (!has_loop) return semiarc_auts_induced(g);
    if (g.nv == 1) {
        // bouquet: per-loop end swaps plus loop permutations, the
        // hyperoctahedral group in its dart action
        bool all_loops = true;
        for (int e = 0; e < g.ne(); ++e) all_loops &= g.is_loop(e);
        if (all_loops) return hyperoctahedral_elements(g.ne());
    }
    return semiarc_aut_group_brute(g);
}

} // namespace mapforge
