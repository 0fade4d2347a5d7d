#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mapforge/perm.hpp"

namespace mapforge {

// Connected multigraph; loops and parallel edges allowed.
// Semi-arc (dart) id: 2*edge + end, where end 0 roots at edges[e].first and
// end 1 at edges[e].second.  A loop contributes both semi-arcs at its vertex.
struct MultiGraph {
    int nv = 0;
    std::vector<std::pair<int, int>> edges;

    int ne() const { return int(edges.size()); }
    bool is_loop(int e) const { return edges[e].first == edges[e].second; }
    int dart_root(int dart) const {
        const auto& [u, v] = edges[dart / 2];
        return (dart % 2) ? v : u;
    }
};

inline int dart_id(int e, int end) { return 2 * e + end; }

// Throws input_error unless connected with in-range endpoints.
void validate_graph(const MultiGraph& g);

int degree(const MultiGraph& g, int v);

// Per-vertex valencies sorted ascending; loops count twice.
std::vector<int> valency_sequence(const MultiGraph& g);

// Cycle rank epsilon - nu + 1 of a connected graph.
int betti(const MultiGraph& g);

// Semi-arcs (edge, end) incident to v, in edge-index order.
std::vector<std::pair<int, int>> darts_at(const MultiGraph& g, int v);

// Lowest-index DFS spanning tree; returns per-edge flags.  The tree is the
// canonical gauge used by rotation-system normalization, so its construction
// is fixed: adjacency sorted by (neighbor, edge), stack-based DFS from 0.
std::vector<char> spanning_tree(const MultiGraph& g);

// Named families.
MultiGraph complete_graph(int n);
MultiGraph bouquet(int n);        // one vertex, n loops
MultiGraph dipole(int n);         // two vertices, n parallel edges
MultiGraph dipole_with_loops(int n, int k, int l);  // dipole plus k/l loops at the ends
MultiGraph complete_bipartite(int m, int n);

// Accepts "K4", "B3", "Dp3", "K2,3" or a path to a JSON graph file.
// (File loading lives in json_io; this parses the names only and throws
// input_error for anything else.)
MultiGraph graph_from_name(const std::string& name);

// A graph automorphism: a vertex permutation plus a compatible edge
// permutation (multi-edges make the edge images an explicit choice).
struct GraphAut {
    Perm vmap;
    Perm emap;
};

// Brute-force automorphism group; throws input_error beyond the caps (nv <= 8
// by default) unless the graph matches a special family (K_n).
std::vector<GraphAut> graph_aut_group(const MultiGraph& g, int vertex_cap = 8);

// Semi-arc automorphism group acting on the 2*ne semi-arcs.
// Loopless graphs use the action induced by graph_aut_group (which equals the
// brute-force group; a property test verifies that).  Bouquets use the
// hyperoctahedral construction.  Other graphs with loops are brute-forced
// with a cap of 2*ne <= 24.
std::vector<Perm> semiarc_aut_group(const MultiGraph& g);

// The two ingredients separately, for cross-checks.
std::vector<Perm> semiarc_aut_group_brute(const MultiGraph& g, int dart_cap = 24);
std::vector<Perm> semiarc_auts_induced(const MultiGraph& g, int vertex_cap = 8);

} // namespace mapforge
