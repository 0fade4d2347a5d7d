#include "mapforge/poly.hpp"
#include "mapforge/errors.hpp"
#include "mapforge/graph.hpp"

#include <map>
#include <utility>

namespace mapforge {

LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (const auto& [e, c] : b) {
        out[e] += c;
        if (out[e] == 0) out.erase(e);
    }
    return out;
}

LaurentPoly laurent_scale(const LaurentPoly& p, const BigRat& c) {
    LaurentPoly out;
    for (const auto& [e, coef] : p) {
        BigRat scaled = BigRat(coef) * c;
        if (!is_integer(scaled))
            throw input_error("non-integer coefficient at exponent " + std::to_string(e) +
                              ": " + to_string(scaled));
        BigInt v = to_integer(scaled);
        if (v != 0) out[e] = v;
    }
    return out;
}

BigInt laurent_eval_at_one(const LaurentPoly& p) {
    BigInt s = 0;
    for (const auto& [e, c] : p) s += c;
    return s;
}

std::string laurent_str(const LaurentPoly& p) {
    if (p.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : p) {
        if (!out.empty()) out += "+";
        std::string coef = to_string(c);
        if (e == 0) {
            out += coef;
        } else if (e < 0) {
            out += coef + "/x";
            if (e < -1) out += "^" + std::to_string(-e);
        } else {
            if (coef != "1") out += coef;
            out += "x";
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

GenusPolys genus_poly(const MultiGraph& g, const EnumLimits& limits) {
    GenusPolys out;
    auto dist = genus_distribution(g, EmbClass::LocallyOrientable, limits);
    for (const auto& [key, count] : dist) {
        if (count == 0) continue;
        out.total[(int)key] = count;
        if (key >= 0)
            out.orientable[(int)key] = count;
        else
            out.nonorientable[(int)-key] = count;
    }
    return out;
}

GenusPolys rooted_poly(const MultiGraph& g, const EnumLimits& limits) {
    GenusPolys G = genus_poly(g, limits);
    BigRat scale = BigRat(2 * (long long)g.ne()) /
                   BigRat((long long)semiarc_aut_group(g).size());
    GenusPolys out;
    out.orientable = laurent_scale(G.orientable, scale);
    out.nonorientable = laurent_scale(G.nonorientable, scale);
    out.total = laurent_scale(G.total, scale);
    return out;
}

LaurentPoly rooted_poly_independent(const MultiGraph& g, EmbClass cls,
                                    const EnumLimits& limits) {
    LaurentPoly out;
    for (const auto& M : orbit_partition(g, cls, Relation::Isomorphism, limits)) {
        auto inv = invariants(M);
        int key = inv.orientable ? (int)inv.genus : -(int)inv.genus;
        out[key] += rooted_count(M);
    }
    return out;
}

namespace {

BigInt genus_rec(long long m, long long n, std::map<std::pair<long long, long long>, BigInt>& memo);

BigInt genus_boundary(long long m, long long n, bool& handled) {
    handled = true;
    if (m < 0 || n < 0) return 0;
    if (n == 0 || n == 1) return m == 0 ? 1 : 0;
    if (n == 2) {
        if (m == 0) return 4;
        if (m == 1) return 2;
        return 0;
    }
    handled = false;
    return 0;
}

BigInt genus_rec(long long m, long long n, std::map<std::pair<long long, long long>, BigInt>& memo) {
    bool handled;
    BigInt base = genus_boundary(m, n, handled);
    if (handled) return base;
    auto it = memo.find({m, n});
    if (it != memo.end()) return it->second;
    BigInt rhs = BigInt(4) * (2 * n - 1) * (2 * n - 3) * (n - 1) * (n - 1) * (n - 2) *
                     genus_rec(m - 1, n - 2, memo) +
                 BigInt(4) * (2 * n - 1) * (n - 1) * genus_rec(m, n - 1, memo);
    BigInt val = exact_div(rhs, BigInt(n + 1));
    memo.emplace(std::make_pair(m, n), val);
    return val;
}

BigInt rooted_rec(long long m, long long n, std::map<std::pair<long long, long long>, BigInt>& memo) {
    if (m < 0 || n < 0) return 0;
    if (n == 0 || n == 1) return m == 0 ? 1 : 0;
    if (n == 2) {
        if (m == 0) return 2;
        if (m == 1) return 1;
        return 0;
    }
    auto it = memo.find({m, n});
    if (it != memo.end()) return it->second;
    BigInt rhs = BigInt(2 * n - 1) * (2 * n - 3) * (n - 1) * (n - 1) * (n - 2) *
                     rooted_rec(m - 1, n - 2, memo) +
                 BigInt(2) * (2 * n - 1) * (n - 1) * (n - 2) * rooted_rec(m, n - 1, memo);
    BigInt val = exact_div(rhs, BigInt(n - 1) * (n + 1) * (n - 2));
    memo.emplace(std::make_pair(m, n), val);
    return val;
}

} // namespace

BigInt bouquet_genus_recursion(long long m, long long n) {
    std::map<std::pair<long long, long long>, BigInt> memo;
    return genus_rec(m, n, memo);
}

BigInt bouquet_rooted_recursion(long long m, long long n) {
    std::map<std::pair<long long, long long>, BigInt> memo;
    return rooted_rec(m, n, memo);
}

} // namespace mapforge
