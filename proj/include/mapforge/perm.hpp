#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mapforge/numbers.hpp"

namespace mapforge {

// A permutation of {0..n-1} stored as its image array.
using Perm = std::vector<int>;

Perm perm_identity(int n);

// Composition applies the right factor first: (p*q)(x) = p(q(x)).
// This convention is global and pinned by fixture tests.
Perm perm_mul(const Perm& p, const Perm& q);

Perm perm_inv(const Perm& p);

bool is_perm(const Perm& p);

// Disjoint cycles, each starting at its minimal element, sorted by that
// element.  Fixed points are included as singleton cycles.
std::vector<std::vector<int>> cycles_of(const Perm& p);

// Cycle lengths sorted ascending (fixed points included).
std::vector<int> cycle_type(const Perm& p);

long long perm_order(const Perm& p);

// Closure of a generating set under composition, as an explicit element set.
// Everything in scope has order <= ~10^4; beyond `cap` an input_error is thrown.
std::vector<Perm> generate_group(int degree, const std::vector<Perm>& generators,
                                 std::size_t cap = 50000);

// Number of orbits of {0..n-1} under a set of permutations (union-find).
int orbit_count(int n, const std::vector<const Perm*>& generators);

// |conjugacy class of S_n with the given cycle type| = n! / prod(l^m_l * m_l!).
BigInt conjugacy_class_size_Sn(int n, const std::vector<int>& type);

// All partitions of n, each sorted ascending.
std::vector<std::vector<int>> partitions(int n);

// --- the hyperoctahedral group S_n[S_2] -------------------------------------
//
// Elements act on 2n "darts" {0..2n-1} grouped into pairs {2i, 2i+1}: a base
// permutation sigma of the pairs plus an independent swap bit per pair.
// Conjugacy classes are indexed by a pair of partitions: cycle lengths of
// sigma whose sign (product of swap bits along the cycle) is +, and those
// whose sign is -.

struct SignedClass {
    std::vector<int> plus;    // positive cycle lengths, ascending
    std::vector<int> minus;   // negative cycle lengths, ascending
    BigInt size;              // number of group elements in the class
    // Induced cycle type on the 2n darts: a positive l-cycle of pairs splits
    // into two l-cycles of darts; a negative l-cycle fuses into one 2l-cycle.
    std::vector<std::pair<int, int>> dart_type;  // (length, multiplicity), ascending
    int parts() const { return int(plus.size() + minus.size()); }
};

std::vector<SignedClass> signed_classes_hyperoctahedral(int n);

// Explicit element list of S_n[S_2] as dart permutations (2^n * n! of them).
std::vector<Perm> hyperoctahedral_elements(int n);

// --- cycle index -------------------------------------------------------------

// A cycle index: sum of rational-coefficient monomials in variables s_k.
// Monomials are stored as sorted (k, exponent) lists.
struct CycleIndex {
    std::map<std::vector<std::pair<int, int>>, BigRat> terms;

    BigRat coefficient_sum() const;
    // Coefficient of the pure monomial s_k^m (zero if absent).  All the
    // extractions used downstream are saturated, i.e. the monomial s_k^m
    // already accounts for every point, so no other variable can appear.
    BigRat pure_coefficient(int k, int m) const;
    // Substitute s_k := x for all k and return the total (used by checks).
    BigRat evaluate_all(const BigRat& x) const;
    std::string str() const;
};

// Cycle index of S_n[S_2] in its dart action.
CycleIndex cycle_index_SnS2(int n);

} // namespace mapforge
