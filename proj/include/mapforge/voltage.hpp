#pragma once

#include "mapforge/map.hpp"
#include "mapforge/numbers.hpp"

#include <optional>
#include <vector>

namespace mapforge {

// Finite group as a multiplication table over element indices 0..n-1.
struct FinGroupTable {
    int n = 0;
    std::vector<std::vector<int>> mul;
    std::vector<int> inv;
    int id = 0;

    static FinGroupTable cyclic(int N);
    // validates closure, associativity, identity, inverses
    static FinGroupTable from_table(std::vector<std::vector<int>> table);
    // the abstract group generated by explicit permutations (element 0 = identity)
    static FinGroupTable from_permutations(const std::vector<Perm>& elements,
                                           std::vector<Perm>* ordered = nullptr);

    int order_of(int g) const;
};

// One group element index per quadricell, constant on alpha-pairs and
// inverted by beta: theta(alpha x) = theta(x), theta(beta x) = theta(x)^-1.
using VoltageAssignment = std::vector<int>;

// structural validity of (M, theta); when require_generation is set, the face
// voltages at each vertex must generate the whole group
void validate_voltage(const CombMap& M, const FinGroupTable& G,
                      const VoltageAssignment& theta, bool require_generation = true);
bool voltage_generates(const CombMap& M, const FinGroupTable& G,
                       const VoltageAssignment& theta);

// order of the product of theta along the face cycle through `cell`
int face_voltage_order(const CombMap& M, const FinGroupTable& G,
                       const VoltageAssignment& theta, int cell);
// one order per face, indexed like face_orbits(M)
std::vector<int> face_voltage_orders(const CombMap& M, const FinGroupTable& G,
                                     const VoltageAssignment& theta);

struct LiftResult {
    CombMap map;                   // lifted map in standard quadricell layout
    std::vector<int> cell_index;   // (base cell q, element g) at q*|G|+g -> lifted cell
    std::vector<Perm> deck;        // deck transformation per group element
};

// covering map with fibre G: P lifts identically on fibres, beta twists by
// theta; the result is re-encoded to the standard edge-block layout
LiftResult lift(const CombMap& M, const FinGroupTable& G,
                const VoltageAssignment& theta, bool require_generation = true);

// exact Euler characteristic of the lift from the base map alone:
// |G| * (chi(M) + sum over face orders m of (1/m - 1))
long long lifted_euler_predict(const CombMap& M, const FinGroupTable& G,
                               const VoltageAssignment& theta);

struct QuotientResult {
    CombMap map;                 // quotient in standard layout
    std::vector<int> orbit_of;   // base cell -> quotient cell
    FinGroupTable group;         // abstract group of the given automorphisms
    // reconstruction data, present when the group is fixed-free on vertices
    std::optional<VoltageAssignment> theta;
};

// quotient of M by a subgroup of Aut(M) given as explicit automorphisms
// (closure is checked); voltages are reconstructed when the action is
// fixed-free on vertices, in which case lift(quotient, theta) ~ M
QuotientResult quotient_map(const CombMap& M, const std::vector<Perm>& subgroup);

// whether p commutes with alpha and beta and conjugates P to itself
bool is_automorphism_of(const CombMap& M, const Perm& p);

// counts of vertices / faces fixed setwise by one automorphism
long long fixed_vertices(const CombMap& M, const Perm& aut);
long long fixed_faces(const CombMap& M, const Perm& aut);

// area bookkeeping, in exact multiples of pi
BigRat non_euclid_area(const CombMap& M);                       // -2 chi
BigRat area_voltage(const CombMap& M, const FinGroupTable& G,
                    const VoltageAssignment& theta);            // 2(-chi + sum(1/m - 1))

struct TriangleAreaReport {
    std::vector<BigRat> defects;   // per triangle: corner-angle sum minus pi
    BigRat total;                  // equals 2 chi when the model is consistent
    bool matches_euler;
};

// uniform-angle model: each corner of each triangle gets angle 2 pi / valency;
// verifies that the total angle defect equals 2 pi chi
TriangleAreaReport triangle_area_check(const CombMap& M);

} // namespace mapforge
