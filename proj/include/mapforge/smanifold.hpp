#pragma once

#include "mapforge/map.hpp"

#include <string>
#include <vector>

namespace mapforge {

// Classes of closed triangular maps by the set of vertex valencies present,
// which must lie inside {5, 6, 7}: D1 = {5} (elliptic), D2 = {6} (euclid),
// D3 = {7} (hyperbolic), D4 = {5,6}, D5 = {5,7}, D6 = {6,7}, D7 = {5,6,7}.
enum class SClass { D1, D2, D3, D4, D5, D6, D7, NotSManifold };

std::string to_string(SClass c);

bool is_triangular(const CombMap& M);

// valency-set classification; throws on non-triangular input
SClass classify(const CombMap& M);

// icosahedral map: 12 vertices, 30 edges, 20 triangles, sphere, 5-regular
CombMap generate_O20();
// its antipodal quotient: 6 vertices, 15 edges, 10 triangles, projective plane
CombMap generate_P10();
// the unique order-2 automorphism of O20 fixing no vertex, edge or face
Perm antipodal_involution(const CombMap& O20);

// split every triangle into four through the edge midpoints: the new
// midpoint vertices have valency 6, old vertices keep theirs; nu' = nu+eps,
// eps' = 2 eps + 3 phi, phi' = 4 phi, same surface
CombMap midpoint_subdivision(const CombMap& M);

struct GapReport {
    long long v5 = 0, v6 = 0, v7 = 0;
    long long chi = 0;
    bool constrained = false;  // chi = 0 imposes nothing
    bool pass = false;
};

// valency-gap inequality: chi <= -1 forces v7 >= v5 + 2, chi >= 1 forces
// v7 <= v5 - 2
GapReport valency_gap_check(const CombMap& M);

struct CensusEntry {
    CombMap map;
    MapInvariants inv;
    SClass cls;
};

// all closed triangular maps with valencies in `allowed` and at most
// max_faces triangles, one per isomorphism class, sorted by (faces,
// canonical form); exhaustive side-gluing search with canonical dedup
std::vector<CensusEntry> smanifold_census(int max_faces,
                                          const std::vector<int>& allowed = {5, 6, 7});

} // namespace mapforge
