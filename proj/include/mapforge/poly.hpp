#pragma once

#include "mapforge/embed.hpp"
#include "mapforge/numbers.hpp"

#include <map>
#include <string>

namespace mapforge {

// Laurent polynomial with exact integer coefficients. Genus-distribution
// polynomials put orientable genus i at exponent +i (sphere contributes to
// the constant term) and crosscap number i at exponent -i, so the two kinds
// of surface never collide on an exponent.
using LaurentPoly = std::map<int, BigInt>;

LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b);
// scales exactly; throws input_error if any scaled coefficient is non-integral
LaurentPoly laurent_scale(const LaurentPoly& p, const BigRat& c);
BigInt laurent_eval_at_one(const LaurentPoly& p);
// paper-style display, ascending exponent: "4/x^2+5/x+2+x"
std::string laurent_str(const LaurentPoly& p);

struct GenusPolys {
    LaurentPoly orientable;      // g[.]: key = genus, >= 0
    LaurentPoly nonorientable;   // g~[.]: key = crosscap number, >= 1
    LaurentPoly total;           // G[.] on signed exponents
};

// exhaustive genus distribution over the tree-normalized systems
GenusPolys genus_poly(const MultiGraph& g, const EnumLimits& limits = {});

// R[.] = (2 eps / |semi-arc aut group|) * G[.], exact by the rooted-map
// orbit-counting identity; throws if a coefficient fails to divide
GenusPolys rooted_poly(const MultiGraph& g, const EnumLimits& limits = {});

// independent rooted count: sum of 4eps/|Aut M| over isomorphism classes,
// keyed by signed genus; the identity test pits this against rooted_poly
LaurentPoly rooted_poly_independent(const MultiGraph& g, EmbClass cls,
                                    const EnumLimits& limits = {});

// one-vertex (bouquet) orientable genus distribution g_m(n) by the
// Gross-Furst recursion; explicit small-n boundary values
BigInt bouquet_genus_recursion(long long m, long long n);
// rooted counterpart r_m(n)
BigInt bouquet_rooted_recursion(long long m, long long n);

} // namespace mapforge
