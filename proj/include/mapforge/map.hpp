#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mapforge/graph.hpp"
#include "mapforge/numbers.hpp"
#include "mapforge/perm.hpp"

namespace mapforge {

// Quadricell encoding: edge e owns cells {4e, 4e+1, 4e+2, 4e+3}; writing a
// cell as 4e + 2a + b, the involution alpha flips bit a and beta flips bit b.
// Both are implicit; a map stores only its basic permutation P.
inline int q_alpha(int q) { return q ^ 2; }
inline int q_beta(int q) { return q ^ 1; }
inline int q_alphabeta(int q) { return q ^ 3; }

// Cells project onto semi-arcs: cell 4e + 2a + b lies over dart 2e + b.
inline int q_dart(int q) { return ((q >> 2) << 1) | (q & 1); }

struct CombMap {
    int m = 0;  // edge count
    Perm P;     // permutation of the 4m quadricells

    int cells() const { return 4 * m; }
    bool operator==(const CombMap&) const = default;
};

Perm alpha_perm(int m);
Perm beta_perm(int m);
Perm alphabeta_perm(int m);

// Axioms checked, in order: P permutes the cells; conjugation by alpha
// inverts P; P is basic (no cell shares a P-cycle with its alpha partner);
// <alpha, beta, P> is transitive.  Returns human-readable violations,
// empty iff valid.
std::vector<std::string> validate(const CombMap& M);

bool is_valid(const CombMap& M);
void require_valid(const CombMap& M);

struct MapInvariants {
    long long v = 0, e = 0, f = 0;
    long long chi = 0;
    bool orientable = false;
    long long genus = 0;               // orientable genus, or crosscap count
    std::vector<int> face_lengths;     // one entry per face, ascending
};

MapInvariants invariants(const CombMap& M);

// Vertices: P-cycles grouped with their alpha-conjugates; one cell list per
// vertex, each closed under P and alpha.
std::vector<std::vector<int>> vertex_orbits(const CombMap& M);

// Faces: cycles of the face rotation q -> P(alphabeta(q)), grouped with their
// beta-conjugates; one cell list per face.
std::vector<std::vector<int>> face_orbits(const CombMap& M);

// One boundary cycle per face: of each beta-conjugate pair of rotation
// cycles, the one starting at the smaller cell, in rotation order. Throws if
// some face pairs with itself (a one-sided boundary has no clean side pick).
std::vector<std::vector<int>> face_boundary_cycles(const CombMap& M);

// index into vertex_orbits(M) for every quadricell
std::vector<int> cell_vertex_ids(const CombMap& M);

long long euler_characteristic(const CombMap& M);
bool is_orientable(const CombMap& M);

// Swap the roles of alpha and beta and re-encode into the standard layout
// (conjugation by the bit swap 4e+2a+b -> 4e+2b+a).
CombMap dual(const CombMap& M);

// A bijection commuting with alpha and beta carrying P1 to P2, if any.
// Transitivity makes the extension of a single root image unique, so the
// search tries each image of cell 0 and propagates.
std::optional<Perm> isomorphism(const CombMap& M1, const CombMap& M2);

bool isomorphic(const CombMap& M1, const CombMap& M2);

std::vector<Perm> automorphism_group(const CombMap& M);

// 4 * edge_count / |Aut M|  (always divides exactly).
BigInt rooted_count(const CombMap& M);

// Canonical form: minimal BFS relabeling code over all roots; equal codes
// iff isomorphic.  The serialized variant is suitable as a hash key.
std::vector<int> canon_code(const CombMap& M);
std::string canon_key(const CombMap& M);

// Orientation machinery.  On an orientable map the group <alphabeta, P> has
// two cell orbits; orientation_class marks each cell 0/1 by orbit.
std::vector<char> orientation_class(const CombMap& M);
bool preserves_orientation(const CombMap& M, const Perm& aut);
std::vector<Perm> orientation_preserving_auts(const CombMap& M);

// Underlying graph: one vertex per vertex orbit, edge e joining the orbits
// of cells 4e and 4e+1.
MultiGraph underlying_graph(const CombMap& M);

// Lift a semi-arc permutation to the quadricells by copying the a-bit:
// 4e+2a+b -> 4f+2a+b' where the dart map sends 2e+b to 2f+b'.  Commutes with
// alpha and beta; throws input_error if the dart map does not pair mates.
Perm extend_semiarc_action(int m, const Perm& semiarc);

// An automorphism of M lying over the given semi-arc permutation, if one
// exists.  The bit-copy lift need not be one even when some lift is: the
// right per-edge twists are found by propagating each of the two candidate
// images of cell 0.
std::optional<Perm> extend_graph_aut(const CombMap& M, const Perm& semiarc);

// Fixtures.
// The 4-vertex, 6-edge torus map used throughout as a calibration fixture
// (one face of length 4, one of length 8).
CombMap fig12_map();

// One-vertex k-valent map (k odd) with a single vertex, k edges and 2 faces;
// for k = 2g+1 it is orientable of genus g and its orientation-preserving
// automorphism group is cyclic of order 2k = 4g+2, which meets the largest
// possible cyclic symmetry for that genus.
CombMap one_vertex_regular(int k);

} // namespace mapforge
