#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mapforge/graph.hpp"
#include "mapforge/map.hpp"

namespace mapforge {

enum class EmbClass { Orientable, NonOrientable, LocallyOrientable };
enum class Relation { Isomorphism, Equivalence };

EmbClass emb_class_from_string(const std::string& s);    // "O" | "N" | "L"
Relation relation_from_string(const std::string& s);     // "iso" | "equiv"
std::string to_string(EmbClass c);
std::string to_string(Relation r);

// A rotation system: per-vertex cyclic order of incident semi-arcs plus an
// edge type function lambda.  Cyclic orders are stored anchored at their
// minimal dart, so equal systems compare equal componentwise.
struct RotationSystem {
    std::vector<std::vector<int>> rot;  // darts (2e+end) around each vertex
    std::vector<std::uint8_t> lambda;   // one bit per edge

    bool operator==(const RotationSystem&) const = default;
};

struct EnumLimits {
    long long budget = 20'000'000;  // enumerated systems / fixed-point evaluations
    int workers = 1;
};

// Which lambda bits vary during enumeration.  The orientable class fixes
// lambda = 0; the locally orientable class frees it off the canonical
// spanning tree (every embedding has exactly one such normal form); Raw
// frees every bit and exists for the equivalence-trace machinery.
enum class LambdaMode { Zero, NonTree, Raw };

BigInt count_systems(const MultiGraph& g, LambdaMode mode);

// Embedding counts by class: orientable prod(rho(v)-1)!, locally orientable
// 2^beta * prod, non-orientable (2^beta - 1) * prod.
BigInt count_embeddings(const MultiGraph& g, EmbClass cls);

// Visit systems in a fixed order (see system_at); class NonOrientable streams
// the non-tree-normalized systems whose map is non-orientable.
void for_each_system(const MultiGraph& g, LambdaMode mode, const EnumLimits& limits,
                     const std::function<void(long long, const RotationSystem&)>& fn);

std::vector<RotationSystem> enumerate_rotation_systems(const MultiGraph& g, EmbClass cls,
                                                       const EnumLimits& limits = {});

// The system at a given index of the enumeration order (mixed-radix decode).
RotationSystem system_at(const MultiGraph& g, LambdaMode mode, long long index);

void validate_rotation(const MultiGraph& g, const RotationSystem& rs);

CombMap map_from_rotation(const MultiGraph& g, const RotationSystem& rs);

// --- the symmetry action on systems -----------------------------------------

// Relabel by a semi-arc automorphism; the result is re-anchored.
RotationSystem apply_relabel(const MultiGraph& g, const Perm& semiarc,
                             const RotationSystem& rs);

// Reverse the rotation at one vertex and toggle lambda on its non-loop edges
// (the local gauge move; loops are untouched).
RotationSystem apply_flip(const MultiGraph& g, int v, const RotationSystem& rs);

// Reverse every rotation, lambda unchanged; equals flipping all vertices.
RotationSystem mirror_system(const MultiGraph& g, const RotationSystem& rs);

std::string system_key(const RotationSystem& rs);

// --- counting ----------------------------------------------------------------

// Unrooted map count (Isomorphism) or embedding count (Equivalence) for the
// class, via fixed-point averaging over the symmetry group:
//   O/iso:  semi-arc auts x mirror on orientable systems
//   O/equiv: semi-arc auts alone
//   L/iso:  semi-arc auts extended by per-vertex gauge flips on raw systems
//   L/equiv: relabel-orbit trace over raw systems restricted to the
//            tree-normalized set (a plain group average does not exist here;
//            the restricted average is generally non-integral, see
//            equivalence_average_locally)
//   N:      subtraction L - O componentwise
BigInt burnside_count(const MultiGraph& g, EmbClass cls, Relation rel,
                      const EnumLimits& limits = {});

// Independent oracle: explicit orbit representatives, sorted by canonical
// form.  |orbit_partition| == burnside_count for every class and relation.
std::vector<CombMap> orbit_partition(const MultiGraph& g, EmbClass cls, Relation rel,
                                     const EnumLimits& limits = {});

// Per-system tallies by genus (orientable genus as +g, crosscaps as -q).
std::map<long long, BigInt> genus_distribution(const MultiGraph& g, EmbClass cls,
                                               const EnumLimits& limits = {});

// The literal restricted group average over tree-normalized systems: counts
// relabel-fixed normalized systems and divides by the group order.  Kept as
// evidence that this straightforward average is non-integral (e.g. 17/2 on
// K4), which is why L/equiv uses the orbit trace instead.
BigRat equivalence_average_locally(const MultiGraph& g, const EnumLimits& limits = {});

} // namespace mapforge
