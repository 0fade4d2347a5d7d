#include "mapforge/forms.hpp"
#include "mapforge/errors.hpp"
#include "mapforge/perm.hpp"

#include <algorithm>

namespace mapforge {

namespace {

std::vector<int> divisors(int m) {
    std::vector<int> out;
    for (int k = 1; k <= m; ++k)
        if (m % k == 0) out.push_back(k);
    return out;
}

// 2^e for rational e; the formulas only ever produce integer exponents when
// they are consistent, so a fractional exponent is a hard error
BigRat pow2_rational(const BigRat& e) {
    if (!is_integer(e))
        throw input_error("non-integer exponent 2^(" + to_string(e) + ")");
    BigInt n = to_integer(e);
    if (n >= 0) return BigRat(pow_big(2, (long long)n));
    return BigRat(1) / BigRat(pow_big(2, (long long)(-n)));
}

} // namespace

KnCounts kn_closed_forms(int n, KnVariant variant) {
    if (n < 4) throw input_error("complete-map formulas need n >= 4");
    if (n == 4) return {BigRat(3), BigRat(11), BigRat(8)};

    auto alpha = [&](int k) {
        return k % 2 == 1 ? BigRat(BigInt(n) * (n - 3), BigInt(2) * k)
                          : BigRat(BigInt(n) * (n - 2), BigInt(2) * k);
    };
    auto beta = [&](int k) {
        if (variant == KnVariant::Statement)
            return k % 2 == 1 ? BigRat(BigInt(n - 1) * (n - 2), BigInt(2) * k)
                              : BigRat(BigInt(n - 1) * (n - 3), BigInt(2) * k);
        return BigRat(BigInt(n - 1) * (n - 4), BigInt(2) * k);
    };

    BigRat nO = 0, nL = 0;
    for (int k : divisors(n)) {
        int m = n / k;
        BigRat t = BigRat(pow_big(factorial(n - 2), m),
                          pow_big(k, m) * factorial(m));
        // the even-k divisor sum appears twice in the published expression
        BigRat w(k % 2 == 0 ? 2 : 1, 2);
        nO += w * t;
        nL += w * pow2_rational(alpha(k)) * t;
    }
    for (int k : divisors(n - 1)) {
        if (k == 1) continue;
        BigRat t = BigRat(BigInt(euler_phi(k)) * pow_big(factorial(n - 2), (n - 1) / k),
                          BigInt(n - 1));
        nO += t;
        nL += pow2_rational(beta(k)) * t;
    }
    return {nO, nL, nL - nO};
}

BouquetCounts bouquet_counts(int n) {
    if (n < 1) throw input_error("bouquet counts need n >= 1");
    BigInt group2 = BigInt(2) * pow_big(2, n) * factorial(n);
    BigInt sumO = 0, sumL = 0;
    std::vector<std::pair<int, int>> all_two{{2, n}};
    std::vector<std::pair<int, int>> two_fixed{{1, 2}, {2, n - 1}};
    if (n == 1) two_fixed = {{1, 2}};
    for (const auto& cls : signed_classes_hyperoctahedral(n)) {
        // rotations fixed by the pure relabel: only uniform dart type [k^m]
        BigInt phiO = 0;
        if (cls.dart_type.size() == 1) {
            auto [k, m] = cls.dart_type[0];
            phiO = BigInt(euler_phi(k)) * pow_big(k, m - 1) * factorial(m - 1);
        }
        // rotations fixed by mirror-composed relabels: two dart types only
        BigInt phiOm = 0;
        if (cls.dart_type == all_two)
            phiOm = factorial(n) * pow_big(2, n - 1);
        else if (cls.dart_type == two_fixed)
            phiOm = pow_big(2, n - 1) * factorial(n - 1);
        BigInt contrib = cls.size * (phiO + phiOm);
        sumO += contrib;
        // free twist bits survive iff constant on each loop cycle
        sumL += contrib * pow_big(2, cls.parts());
    }
    BigInt nO = exact_div(sumO, group2), nL = exact_div(sumL, group2);
    return {nO, nL, nL - nO};
}

BigRat bouquet_orientable_printed(int n) {
    if (n < 1) throw input_error("bouquet counts need n >= 1");
    CycleIndex Z = cycle_index_SnS2(n);
    BigRat total = 0;
    for (int k : divisors(2 * n)) {
        int m = 2 * n / k;
        BigRat ck = Z.pure_coefficient(k, m);
        if (k == 2 * n)
            total += BigRat(euler_phi(k)) * ck;
        else
            total += BigRat(pow_big(k, m - 1) * factorial(m - 1)) * ck;
    }
    return total;
}

BigRat bouquet_nonorientable_printed(int n) {
    if (n < 1) throw input_error("bouquet counts need n >= 1");
    CycleIndex Z = cycle_index_SnS2(n);
    BigRat total = BigRat(factorial(2 * n - 1), factorial(n));
    for (int k : divisors(2 * n)) {
        if (k < 3 || k == 2 * n) continue;
        int m = 2 * n / k;
        BigRat ck = Z.pure_coefficient(k, m);
        total += BigRat(pow_big(2 * k, m - 1) * factorial(m - 1)) *
                 (BigRat(factorial(m)) * ck);
    }
    BigRat correction = 0;
    for (int s = 1; n - 2 * s >= 0; ++s)
        correction += BigRat(factorial(n), factorial(n - 2 * s) * factorial(s));
    BigRat c2 = Z.pure_coefficient(2, n);
    correction += BigRat(pow_big(4, n) * factorial(n - 1)) *
                  (BigRat(factorial(n)) * c2 - BigRat(n / 2));
    total += correction / BigRat(pow_big(2, n) * factorial(n));
    return total;
}

LaurentPoly bouquet_rooted_polys(int n, const EnumLimits& limits) {
    return rooted_poly(bouquet(n), limits).total;
}

AsymmetricCounts asymmetric_counts(const MultiGraph& g) {
    if (semiarc_aut_group(g).size() != 1)
        throw input_error("graph has non-trivial semi-arc symmetry");
    BigInt prod = 1;
    for (int v = 0; v < g.nv; ++v) {
        int d = degree(g, v);
        if (d > 0) prod *= factorial(d - 1);
    }
    BigInt two_beta = pow_big(2, betti(g));
    AsymmetricCounts out;
    out.eta_orientable = prod;
    out.eta_locally = two_beta * prod;
    out.eta_nonorientable = (two_beta - 1) * prod;
    out.n_orientable = exact_div(out.eta_orientable, BigInt(2));
    out.n_locally = exact_div(out.eta_locally, BigInt(2));
    out.n_nonorientable = exact_div(out.eta_nonorientable, BigInt(2));
    return out;
}

std::pair<BigInt, BigInt> hurwitz_bounds(long long genus, bool orientable) {
    if (orientable) {
        if (genus < 2) throw input_error("orientable bound needs genus >= 2");
        return {BigInt(84) * (genus - 1), BigInt(168) * (genus - 1)};
    }
    if (genus < 3) throw input_error("non-orientable bound needs genus >= 3");
    return {BigInt(42) * (genus - 2), BigInt(84) * (genus - 2)};
}

BigInt max_automorphism_order(long long genus, bool orientable) {
    if (orientable) {
        if (genus < 2) throw input_error("orientable cap needs genus >= 2");
        return BigInt(2) * genus + 1;
    }
    if (genus < 3) throw input_error("non-orientable cap needs genus >= 3");
    return BigInt(genus) + 1;
}

CombMap regular_one_vertex_map(int k) {
    if (k < 3 || k % 2 == 0) throw input_error("regular one-vertex map needs odd k >= 3");
    return one_vertex_regular(k);
}

std::pair<long long, long long> min_genus_fixed_free(const CombMap& M, long long N) {
    if (N < 2) throw input_error("group order must be at least 2");
    auto errs = validate(M);
    if (!errs.empty()) throw input_error("invalid map: " + errs.front());
    long long p1 = 2;
    while (N % p1 != 0) ++p1;
    auto inv = invariants(M);
    long long half_faces = inv.f / 2;
    BigRat frac(p1 - 1, p1);
    BigRat g_min = BigRat(1) + BigRat(N) * (BigRat(inv.genus - 1) + frac * half_faces);
    BigRat gp_min = BigRat(2) + BigRat(N) * (BigRat(inv.genus - 2) + BigRat(2) * frac * half_faces);
    if (!is_integer(g_min) || !is_integer(gp_min))
        throw input_error("fixed-free genus formula returned a non-integer");
    return {(long long)to_integer(g_min), (long long)to_integer(gp_min)};
}

BigInt smanifold_aut_bound(const CombMap& M) {
    auto inv = invariants(M);
    for (long long len : inv.face_lengths)
        if (len != 3) throw input_error("automorphism cap applies to triangular maps only");
    BigInt bound = BigInt(6) * inv.f;
    if (inv.chi < 0) bound = std::min(bound, BigInt(-21) * inv.chi);
    return bound;
}

} // namespace mapforge
