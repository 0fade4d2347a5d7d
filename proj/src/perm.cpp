#include "mapforge/perm.hpp"
#include "mapforge/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace mapforge {

Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_mul(const Perm& p, const Perm& q) {
    if (p.size() != q.size()) throw input_error("perm_mul: degree mismatch");
    Perm r(p.size());
    for (std::size_t x = 0; x < q.size(); ++x) r[x] = p[q[x]];
    return r;
}

Perm perm_inv(const Perm& p) {
    Perm r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = int(x);
    return r;
}

bool is_perm(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || std::size_t(v) >= p.size() || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

std::vector<std::vector<int>> cycles_of(const Perm& p) {
    std::vector<std::vector<int>> cycles;
    std::vector<char> seen(p.size(), 0);
    for (std::size_t start = 0; start < p.size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> cyc;
        int x = int(start);
        while (!seen[x]) {
            seen[x] = 1;
            cyc.push_back(x);
            x = p[x];
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

std::vector<int> cycle_type(const Perm& p) {
    std::vector<int> type;
    for (const auto& c : cycles_of(p)) type.push_back(int(c.size()));
    std::sort(type.begin(), type.end());
    return type;
}

long long perm_order(const Perm& p) {
    long long ord = 1;
    for (const auto& c : cycles_of(p)) ord = std::lcm(ord, (long long)c.size());
    return ord;
}

std::vector<Perm> generate_group(int degree, const std::vector<Perm>& generators,
                                 std::size_t cap) {
    std::set<Perm> closure;
    closure.insert(perm_identity(degree));
    std::vector<Perm> frontier(closure.begin(), closure.end());
    for (const auto& g : generators) {
        if (int(g.size()) != degree || !is_perm(g))
            throw input_error("generate_group: generator is not a permutation of the degree");
    }
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& e : frontier) {
            for (const auto& g : generators) {
                Perm h = perm_mul(g, e);
                if (closure.insert(h).second) {
                    next.push_back(std::move(h));
                    if (closure.size() > cap)
                        throw input_error("generate_group: closure exceeds cap of " +
                                          std::to_string(cap));
                }
            }
        }
        frontier = std::move(next);
    }
    return std::vector<Perm>(closure.begin(), closure.end());
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a); b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

} // namespace

int orbit_count(int n, const std::vector<const Perm*>& generators) {
    UnionFind uf(n);
    int orbits = n;
    for (const Perm* g : generators)
        for (int x = 0; x < n; ++x)
            if (uf.unite(x, (*g)[x])) --orbits;
    return orbits;
}

BigInt conjugacy_class_size_Sn(int n, const std::vector<int>& type) {
    long long total = std::accumulate(type.begin(), type.end(), 0LL);
    if (total != n) throw input_error("cycle type does not partition n");
    BigInt centralizer = 1;
    std::map<int, int> mult;
    for (int l : type) ++mult[l];
    for (auto [l, m] : mult) centralizer *= pow_big(l, m) * factorial(m);
    return exact_div(factorial(n), centralizer);
}

std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // parts non-decreasing, each >= previous
    auto rec = [&](auto&& self, int remaining, int minimum) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = minimum; part <= remaining; ++part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, 1);
    return out;
}

std::vector<SignedClass> signed_classes_hyperoctahedral(int n) {
    BigInt group_order = pow_big(2, n) * factorial(n);
    std::vector<SignedClass> classes;
    for (int a = 0; a <= n; ++a) {
        for (const auto& lp : partitions(a)) {
            for (const auto& lm : partitions(n - a)) {
                SignedClass c;
                c.plus = lp;
                c.minus = lm;
                // centralizer order: per sign block, prod (2l)^m_l * m_l!
                BigInt centralizer = 1;
                for (const auto* block : {&lp, &lm}) {
                    std::map<int, int> mult;
                    for (int l : *block) ++mult[l];
                    for (auto [l, m] : mult)
                        centralizer *= pow_big(2LL * l, m) * factorial(m);
                }
                c.size = exact_div(group_order, centralizer);
                std::map<int, int> darts;
                for (int l : lp) darts[l] += 2;
                for (int l : lm) darts[2 * l] += 1;
                c.dart_type.assign(darts.begin(), darts.end());
                classes.push_back(std::move(c));
            }
        }
    }
    return classes;
}

std::vector<Perm> hyperoctahedral_elements(int n) {
    std::vector<Perm> out;
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        for (int bits = 0; bits < (1 << n); ++bits) {
            Perm p(2 * n);
            for (int i = 0; i < n; ++i) {
                int swap = (bits >> i) & 1;
                p[2 * i] = 2 * sigma[i] + swap;
                p[2 * i + 1] = 2 * sigma[i] + (1 - swap);
            }
            out.push_back(std::move(p));
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

BigRat CycleIndex::coefficient_sum() const {
    BigRat s = 0;
    for (const auto& [mono, coeff] : terms) s += coeff;
    return s;
}

BigRat CycleIndex::pure_coefficient(int k, int m) const {
    std::vector<std::pair<int, int>> mono{{k, m}};
    auto it = terms.find(mono);
    return it == terms.end() ? BigRat(0) : it->second;
}

BigRat CycleIndex::evaluate_all(const BigRat& x) const {
    BigRat total = 0;
    for (const auto& [mono, coeff] : terms) {
        BigRat factor = coeff;
        for (auto [k, e] : mono) {
            (void)k;
            for (int i = 0; i < e; ++i) factor *= x;
        }
        total += factor;
    }
    return total;
}

std::string CycleIndex::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(coeff) << ")";
        for (auto [k, e] : mono) {
            os << "*s" << k;
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

CycleIndex cycle_index_SnS2(int n) {
    CycleIndex z;
    BigInt group_order = pow_big(2, n) * factorial(n);
    for (const auto& c : signed_classes_hyperoctahedral(n)) {
        z.terms[c.dart_type] += BigRat(c.size) / BigRat(group_order);
    }
    return z;
}

} // namespace mapforge
