#pragma once

#include "mapforge/graph.hpp"
#include "mapforge/map.hpp"
#include "mapforge/numbers.hpp"
#include "mapforge/poly.hpp"

#include <utility>

namespace mapforge {

// ---- complete graphs -----------------------------------------------------
// The published count for K_n has two readings of the exponent on the
// k | (n-1) terms: the theorem statement uses (n-1)(n-2)/2k for odd k and
// (n-1)(n-3)/2k for even k, the proof's algebra gives (n-1)(n-4)/2k for all
// k. Both are implemented; the statement variant is the one that matches the
// brute-force K5 oracle (1080 locally orientable classes).
enum class KnVariant { Statement, Proof };

struct KnCounts {
    BigRat n_orientable, n_locally, n_nonorientable;
};

// exact formula evaluation; n = 4 is the special case (3, 11, 8); n < 4
// throws. A fractional power of two anywhere in the evaluation (possible in
// the Proof variant) throws input_error.
KnCounts kn_closed_forms(int n, KnVariant variant = KnVariant::Statement);

// ---- bouquets ------------------------------------------------------------
struct BouquetCounts {
    BigInt n_orientable, n_locally, n_nonorientable;
};

// corrected closed forms: Burnside over the hyperoctahedral group times the
// mirror, with per-conjugacy-class fixed-system counts in closed form; these
// match the exhaustive censuses for every n that fits in memory
BouquetCounts bouquet_counts(int n);

// the one-vertex-map counting formulas exactly as published; they disagree
// with the censuses (and with integrality) for most n, which is the point of
// keeping them: callers compare against bouquet_counts
BigRat bouquet_orientable_printed(int n);
BigRat bouquet_nonorientable_printed(int n);

// R[B_n]: rooted genus polynomial of the bouquet via the orbit-scaling route
LaurentPoly bouquet_rooted_polys(int n, const EnumLimits& limits = {});

// ---- asymmetric graphs ---------------------------------------------------
struct AsymmetricCounts {
    BigInt n_orientable, n_nonorientable, n_locally;
    BigInt eta_orientable, eta_nonorientable, eta_locally;
};

// closed forms for graphs with trivial semi-arc automorphism group:
// eta^O = prod (rho(v)-1)!, eta^L = 2^beta * eta^O, eta^N = difference,
// and each unrooted count is half its eta. Throws if the graph has symmetry.
AsymmetricCounts asymmetric_counts(const MultiGraph& g);

// ---- automorphism bounds -------------------------------------------------
// (orientation-preserving bound, full-group bound): 84(g-1)/168(g-1) for
// orientable genus g >= 2, 42(g'-2)/84(g'-2) for non-orientable g' >= 3
std::pair<BigInt, BigInt> hurwitz_bounds(long long genus, bool orientable);

// published cap on the order of a single automorphism: 2g+1 orientable
// (g >= 2), g'+1 non-orientable (g' >= 3). The census holds a counterexample
// to the non-orientable cap; the function still returns the published value.
BigInt max_automorphism_order(long long genus, bool orientable);

// one-vertex regular map with k loops (k odd >= 3): phi = 2, chi = 3-k,
// orientable genus (k-1)/2; its orientation-preserving group is cyclic of
// order 2k = 4g+2, witnessing the lower bound in the Hurwitz range
CombMap regular_one_vertex_map(int k);

// minimum achievable genus over fixed-free lifts by a group of order N
// (smallest prime p1): orientable and non-orientable formulas. Meaningful
// for prime N; composite N can drive the formula below any actual genus.
std::pair<long long, long long> min_genus_fixed_free(const CombMap& M, long long N);

// |Aut| cap for a closed triangular map with n faces: 6n, tightened to
// min(6n, -21 chi) when chi < 0
BigInt smanifold_aut_bound(const CombMap& M);

} // namespace mapforge
