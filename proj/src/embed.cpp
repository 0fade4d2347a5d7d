#include "mapforge/embed.hpp"
#include "mapforge/errors.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <numeric>
#include <thread>
#include <unordered_map>

namespace mapforge {

EmbClass emb_class_from_string(const std::string& s) {
    if (s == "O") return EmbClass::Orientable;
    if (s == "N") return EmbClass::NonOrientable;
    if (s == "L") return EmbClass::LocallyOrientable;
    throw input_error("unknown embedding class '" + s + "' (expected O, N or L)");
}

Relation relation_from_string(const std::string& s) {
    if (s == "iso") return Relation::Isomorphism;
    if (s == "equiv") return Relation::Equivalence;
    throw input_error("unknown relation '" + s + "' (expected iso or equiv)");
}

std::string to_string(EmbClass c) {
    switch (c) {
        case EmbClass::Orientable: return "O";
        case EmbClass::NonOrientable: return "N";
        default: return "L";
    }
}

std::string to_string(Relation r) {
    return r == Relation::Isomorphism ? "iso" : "equiv";
}

namespace {

// Enumeration context: per-vertex rotation tables plus the lambda-variable
// edge list for the mode.
struct Ctx {
    const MultiGraph* g = nullptr;
    std::vector<std::vector<int>> base;             // darts_at(v), ascending
    std::vector<std::vector<std::vector<int>>> orders;  // all anchored rotations per vertex
    std::vector<int> free_edges;                    // lambda varies on these
    long long total = 0;                            // number of systems

    int nv() const { return g->nv; }
    int ne() const { return g->ne(); }
};

constexpr long long kOrderCap = 500000;  // per-vertex rotation table cap

Ctx make_ctx(const MultiGraph& g, LambdaMode mode) {
    validate_graph(g);
    if (g.ne() < 1) throw input_error("enumeration needs at least one edge");
    Ctx ctx;
    ctx.g = &g;
    ctx.base.resize(g.nv);
    ctx.orders.resize(g.nv);
    long long total = 1;
    for (int v = 0; v < g.nv; ++v) {
        for (auto [e, end] : darts_at(g, v)) ctx.base[v].push_back(dart_id(e, end));
        auto& tbl = ctx.orders[v];
        if (ctx.base[v].empty()) {
            tbl.push_back({});
        } else {
            std::vector<int> rest(ctx.base[v].begin() + 1, ctx.base[v].end());
            std::sort(rest.begin(), rest.end());
            do {
                std::vector<int> rot{ctx.base[v][0]};
                rot.insert(rot.end(), rest.begin(), rest.end());
                tbl.push_back(std::move(rot));
                if ((long long)tbl.size() > kOrderCap)
                    throw budget_error((long long)tbl.size(), kOrderCap);
            } while (std::next_permutation(rest.begin(), rest.end()));
        }
        if (total > (LLONG_MAX / (long long)tbl.size()))
            throw budget_error(LLONG_MAX, LLONG_MAX);
        total *= (long long)tbl.size();
    }
    auto tree = spanning_tree(g);
    for (int e = 0; e < g.ne(); ++e) {
        bool free_bit = (mode == LambdaMode::Raw) ||
                        (mode == LambdaMode::NonTree && !tree[e]);
        if (free_bit) ctx.free_edges.push_back(e);
    }
    if ((int)ctx.free_edges.size() >= 62) throw budget_error(LLONG_MAX, LLONG_MAX);
    for (std::size_t i = 0; i < ctx.free_edges.size(); ++i) {
        if (total > LLONG_MAX / 2) throw budget_error(LLONG_MAX, LLONG_MAX);
        total *= 2;
    }
    ctx.total = total;
    return ctx;
}

RotationSystem decode(const Ctx& ctx, long long index) {
    RotationSystem rs;
    rs.lambda.assign(ctx.ne(), 0);
    long long lam_part = 0;
    if (!ctx.free_edges.empty()) {
        long long span = 1LL << ctx.free_edges.size();
        lam_part = index % span;
        index /= span;
    }
    for (std::size_t j = 0; j < ctx.free_edges.size(); ++j)
        rs.lambda[ctx.free_edges[j]] = (lam_part >> j) & 1;
    rs.rot.resize(ctx.nv());
    for (int v = ctx.nv() - 1; v >= 0; --v) {
        long long cnt = (long long)ctx.orders[v].size();
        rs.rot[v] = ctx.orders[v][index % cnt];
        index /= cnt;
    }
    return rs;
}

void anchor(std::vector<int>& rot) {
    if (rot.empty()) return;
    auto it = std::min_element(rot.begin(), rot.end());
    std::rotate(rot.begin(), it, rot.end());
}

void check_budget(const BigInt& needed, long long budget) {
    if (needed > budget) {
        long long clipped = needed > BigInt(LLONG_MAX)
                                ? LLONG_MAX
                                : (long long)needed;
        throw budget_error(clipped, budget);
    }
}

// partition [0, n) into w contiguous chunks and run fn on each in a thread
template <typename Fn>
void parallel_ranges(long long n, int workers, Fn fn) {
    workers = (int)std::max<long long>(1, std::min<long long>(workers, n == 0 ? 1 : n));
    if (workers == 1) {
        fn(0, 0LL, n);
        return;
    }
    std::vector<std::thread> threads;
    long long chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        long long lo = w * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back(fn, w, lo, hi);
    }
    for (auto& t : threads) t.join();
}

} // namespace

BigInt count_systems(const MultiGraph& g, LambdaMode mode) {
    validate_graph(g);
    BigInt total = 1;
    for (int v = 0; v < g.nv; ++v) {
        int d = degree(g, v);
        if (d > 0) total *= factorial(d - 1);
    }
    auto tree = spanning_tree(g);
    for (int e = 0; e < g.ne(); ++e) {
        bool free_bit = (mode == LambdaMode::Raw) ||
                        (mode == LambdaMode::NonTree && !tree[e]);
        if (free_bit) total *= 2;
    }
    return total;
}

BigInt count_embeddings(const MultiGraph& g, EmbClass cls) {
    BigInt orient = count_systems(g, LambdaMode::Zero);
    switch (cls) {
        case EmbClass::Orientable:
            return orient;
        case EmbClass::LocallyOrientable:
            return pow_big(2, betti(g)) * orient;
        default:
            return (pow_big(2, betti(g)) - 1) * orient;
    }
}

RotationSystem system_at(const MultiGraph& g, LambdaMode mode, long long index) {
    Ctx ctx = make_ctx(g, mode);
    if (index < 0 || index >= ctx.total)
        throw input_error("system index out of range");
    return decode(ctx, index);
}

void validate_rotation(const MultiGraph& g, const RotationSystem& rs) {
    validate_graph(g);
    if ((int)rs.rot.size() != g.nv || (int)rs.lambda.size() != g.ne())
        throw input_error("rotation system has the wrong shape");
    for (auto b : rs.lambda)
        if (b > 1) throw input_error("lambda entries must be 0 or 1");
    for (int v = 0; v < g.nv; ++v) {
        auto expect = darts_at(g, v);
        std::vector<int> want;
        for (auto [e, end] : expect) want.push_back(dart_id(e, end));
        std::vector<int> got = rs.rot[v];
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        if (want != got)
            throw input_error("rotation at vertex " + std::to_string(v) +
                              " does not cover its semi-arcs");
    }
}

CombMap map_from_rotation(const MultiGraph& g, const RotationSystem& rs) {
    validate_rotation(g, rs);
    CombMap M;
    M.m = g.ne();
    M.P.assign(4 * M.m, -1);
    auto rep = [&](int dart) {
        int e = dart >> 1, end = dart & 1;
        if (end == 0) return 4 * e;
        return rs.lambda[e] == 0 ? 4 * e + 3 : 4 * e + 1;
    };
    for (int v = 0; v < g.nv; ++v) {
        const auto& rot = rs.rot[v];
        if (rot.empty()) continue;
        std::size_t n = rot.size();
        for (std::size_t i = 0; i < n; ++i) {
            int a = rep(rot[i]), b = rep(rot[(i + 1) % n]);
            M.P[a] = b;
            M.P[q_alpha(b)] = q_alpha(a);
        }
    }
    return M;
}

void for_each_system(const MultiGraph& g, LambdaMode mode, const EnumLimits& limits,
                     const std::function<void(long long, const RotationSystem&)>& fn) {
    Ctx ctx = make_ctx(g, mode);
    check_budget(ctx.total, limits.budget);
    for (long long i = 0; i < ctx.total; ++i) fn(i, decode(ctx, i));
}

std::vector<RotationSystem> enumerate_rotation_systems(const MultiGraph& g, EmbClass cls,
                                                       const EnumLimits& limits) {
    LambdaMode mode = (cls == EmbClass::Orientable) ? LambdaMode::Zero : LambdaMode::NonTree;
    std::vector<RotationSystem> out;
    for_each_system(g, mode, limits, [&](long long, const RotationSystem& rs) {
        if (cls == EmbClass::NonOrientable && is_orientable(map_from_rotation(g, rs)))
            return;
        out.push_back(rs);
    });
    return out;
}

RotationSystem apply_relabel(const MultiGraph& g, const Perm& semiarc,
                             const RotationSystem& rs) {
    RotationSystem out;
    out.rot.resize(g.nv);
    out.lambda.assign(g.ne(), 0);
    for (int v = 0; v < g.nv; ++v) {
        if (rs.rot[v].empty()) continue;
        std::vector<int> mapped;
        mapped.reserve(rs.rot[v].size());
        for (int d : rs.rot[v]) mapped.push_back(semiarc[d]);
        int target = g.dart_root(mapped[0]);
        anchor(mapped);
        out.rot[target] = std::move(mapped);
    }
    // lambda transports along the edge image, symmetric in the ends
    for (int e = 0; e < g.ne(); ++e)
        out.lambda[semiarc[2 * e] >> 1] = rs.lambda[e];
    return out;
}

RotationSystem apply_flip(const MultiGraph& g, int v, const RotationSystem& rs) {
    RotationSystem out = rs;
    auto& rot = out.rot[v];
    if (rot.size() > 1) std::reverse(rot.begin() + 1, rot.end());
    for (int d : rs.rot[v]) {
        int e = d >> 1;
        if (!g.is_loop(e)) out.lambda[e] ^= 1;
    }
    return out;
}

RotationSystem mirror_system(const MultiGraph& g, const RotationSystem& rs) {
    RotationSystem out = rs;
    for (int v = 0; v < g.nv; ++v) {
        auto& rot = out.rot[v];
        if (rot.size() > 1) std::reverse(rot.begin() + 1, rot.end());
    }
    return out;
}

std::string system_key(const RotationSystem& rs) {
    std::string key;
    for (const auto& rot : rs.rot) {
        for (int d : rot) {
            key.push_back(char(d & 0xff));
            key.push_back(char((d >> 8) & 0xff));
        }
        key.push_back('\xff');
        key.push_back('\xff');
    }
    for (auto b : rs.lambda) key.push_back(char('0' + b));
    return key;
}

namespace {

// Fixed points of {flip_S o relabel_g} over the systems of a mode.
// flip_sets entries are vertex bitmasks; the gauge move at each set vertex is
// applied after the relabel.
long long count_fixed_points(const MultiGraph& g, LambdaMode mode,
                             const std::vector<Perm>& auts,
                             const std::vector<std::uint64_t>& flip_sets,
                             const EnumLimits& limits) {
    Ctx ctx = make_ctx(g, mode);
    BigInt work = BigInt(ctx.total) * (long long)auts.size() * (long long)flip_sets.size();
    check_budget(work, limits.budget);

    std::vector<long long> partial(std::max(1, limits.workers), 0);
    parallel_ranges(ctx.total, limits.workers, [&](int w, long long lo, long long hi) {
        long long local = 0;
        for (long long i = lo; i < hi; ++i) {
            RotationSystem rs = decode(ctx, i);
            for (const auto& aut : auts) {
                RotationSystem relabeled = apply_relabel(g, aut, rs);
                for (std::uint64_t mask : flip_sets) {
                    RotationSystem t = relabeled;
                    for (int v = 0; v < g.nv; ++v)
                        if ((mask >> v) & 1) t = apply_flip(g, v, t);
                    if (t == rs) ++local;
                }
            }
        }
        partial[w] += local;
    });
    return std::accumulate(partial.begin(), partial.end(), 0LL);
}

std::vector<std::uint64_t> all_flip_sets(int nv) {
    if (nv >= 20) throw input_error("gauge flip enumeration capped at 20 vertices");
    std::vector<std::uint64_t> sets(1ULL << nv);
    std::iota(sets.begin(), sets.end(), 0);
    return sets;
}

// Relabel orbits over the raw systems; returns (orbit root per system index).
// Only the relabel generators act: this is the equivalence relation on
// embeddings, gauge kept fixed.
std::vector<long long> relabel_orbits_raw(const MultiGraph& g, const std::vector<Perm>& auts,
                                          const EnumLimits& limits, Ctx& ctx_out) {
    ctx_out = make_ctx(g, LambdaMode::Raw);
    BigInt work = BigInt(ctx_out.total) * (long long)auts.size();
    check_budget(work, limits.budget);
    std::unordered_map<std::string, long long> index_of;
    index_of.reserve(ctx_out.total * 2);
    for (long long i = 0; i < ctx_out.total; ++i)
        index_of.emplace(system_key(decode(ctx_out, i)), i);

    std::vector<long long> parent(ctx_out.total);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<long long(long long)> find = [&](long long x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (long long i = 0; i < ctx_out.total; ++i) {
        RotationSystem rs = decode(ctx_out, i);
        for (const auto& aut : auts) {
            auto img = apply_relabel(g, aut, rs);
            auto it = index_of.find(system_key(img));
            if (it == index_of.end())
                throw input_error("relabel image left the raw system set");
            long long a = find(i), b = find(it->second);
            if (a != b) parent[a] = b;
        }
    }
    for (long long i = 0; i < ctx_out.total; ++i) parent[i] = find(i);
    return parent;
}

bool is_tree_normalized(const MultiGraph& g, const RotationSystem& rs) {
    auto tree = spanning_tree(g);
    for (int e = 0; e < g.ne(); ++e)
        if (tree[e] && rs.lambda[e]) return false;
    return true;
}

// minimal normalized member index per relabel orbit (or -1)
std::vector<std::pair<long long, long long>> trace_normalized_orbits(
    const MultiGraph& g, const std::vector<Perm>& auts, const EnumLimits& limits) {
    Ctx ctx;
    auto roots = relabel_orbits_raw(g, auts, limits, ctx);
    std::unordered_map<long long, long long> min_normalized;  // root -> member index
    for (long long i = 0; i < ctx.total; ++i) {
        if (!is_tree_normalized(g, decode(ctx, i))) continue;
        auto [it, fresh] = min_normalized.emplace(roots[i], i);
        if (!fresh) it->second = std::min(it->second, i);
    }
    return {min_normalized.begin(), min_normalized.end()};
}

} // namespace

BigInt burnside_count(const MultiGraph& g, EmbClass cls, Relation rel,
                      const EnumLimits& limits) {
    if (cls == EmbClass::NonOrientable)
        return burnside_count(g, EmbClass::LocallyOrientable, rel, limits) -
               burnside_count(g, EmbClass::Orientable, rel, limits);
    auto auts = semiarc_aut_group(g);
    if (cls == EmbClass::Orientable) {
        std::vector<std::uint64_t> flips{0};
        if (rel == Relation::Isomorphism) {
            if (g.nv >= 62) throw input_error("too many vertices for the mirror mask");
            flips.push_back((1ULL << g.nv) - 1);  // mirror = flip everywhere
        }
        long long fixed = count_fixed_points(g, LambdaMode::Zero, auts, flips, limits);
        return exact_div(BigInt(fixed), BigInt(auts.size()) * (long long)flips.size());
    }
    // locally orientable
    if (rel == Relation::Isomorphism) {
        auto flips = all_flip_sets(g.nv);
        long long fixed = count_fixed_points(g, LambdaMode::Raw, auts, flips, limits);
        return exact_div(BigInt(fixed), BigInt(auts.size()) * (long long)flips.size());
    }
    // L / equivalence: relabel-orbit trace restricted to the normalized set
    return BigInt(trace_normalized_orbits(g, auts, limits).size());
}

BigRat equivalence_average_locally(const MultiGraph& g, const EnumLimits& limits) {
    auto auts = semiarc_aut_group(g);
    long long fixed = count_fixed_points(g, LambdaMode::NonTree, auts, {0}, limits);
    return BigRat(fixed) / BigRat((long long)auts.size());
}

std::vector<CombMap> orbit_partition(const MultiGraph& g, EmbClass cls, Relation rel,
                                     const EnumLimits& limits) {
    std::vector<CombMap> reps;
    if (rel == Relation::Isomorphism) {
        // canonical-form census over the class enumeration
        LambdaMode mode =
            (cls == EmbClass::Orientable) ? LambdaMode::Zero : LambdaMode::NonTree;
        Ctx ctx = make_ctx(g, mode);
        check_budget(ctx.total, limits.budget);
        int workers = std::max(1, limits.workers);
        std::vector<std::unordered_map<std::string, long long>> local(workers);
        parallel_ranges(ctx.total, workers, [&](int w, long long lo, long long hi) {
            for (long long i = lo; i < hi; ++i) {
                CombMap M = map_from_rotation(g, decode(ctx, i));
                auto [it, fresh] = local[w].emplace(canon_key(M), i);
                if (!fresh) it->second = std::min(it->second, i);
            }
        });
        std::map<std::string, long long> merged;  // ordered: deterministic output
        for (const auto& shard : local)
            for (const auto& [key, idx] : shard) {
                auto [it, fresh] = merged.emplace(key, idx);
                if (!fresh) it->second = std::min(it->second, idx);
            }
        for (const auto& [key, idx] : merged) {
            CombMap M = map_from_rotation(g, decode(ctx, idx));
            if (cls == EmbClass::NonOrientable && is_orientable(M)) continue;
            reps.push_back(std::move(M));
        }
        return reps;
    }
    // equivalence
    auto auts = semiarc_aut_group(g);
    if (cls == EmbClass::Orientable) {
        Ctx ctx = make_ctx(g, LambdaMode::Zero);
        BigInt work = BigInt(ctx.total) * (long long)auts.size();
        check_budget(work, limits.budget);
        std::unordered_map<std::string, long long> index_of;
        for (long long i = 0; i < ctx.total; ++i)
            index_of.emplace(system_key(decode(ctx, i)), i);
        std::vector<long long> parent(ctx.total);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<long long(long long)> find = [&](long long x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        for (long long i = 0; i < ctx.total; ++i) {
            auto rs = decode(ctx, i);
            for (const auto& aut : auts) {
                auto it = index_of.find(system_key(apply_relabel(g, aut, rs)));
                if (it == index_of.end())
                    throw input_error("relabel image left the orientable system set");
                long long a = find(i), b = find(it->second);
                if (a != b) parent[a] = b;
            }
        }
        std::map<long long, long long> min_member;
        for (long long i = 0; i < ctx.total; ++i) {
            auto [it, fresh] = min_member.emplace(find(i), i);
            if (!fresh) it->second = std::min(it->second, i);
        }
        for (const auto& [root, idx] : min_member)
            reps.push_back(map_from_rotation(g, decode(ctx, idx)));
    } else {
        auto traced = trace_normalized_orbits(g, auts, limits);
        Ctx ctx = make_ctx(g, LambdaMode::Raw);
        for (const auto& [root, idx] : traced) {
            CombMap M = map_from_rotation(g, decode(ctx, idx));
            if (cls == EmbClass::NonOrientable && is_orientable(M)) continue;
            reps.push_back(std::move(M));
        }
    }
    std::sort(reps.begin(), reps.end(), [](const CombMap& a, const CombMap& b) {
        return canon_code(a) < canon_code(b);
    });
    return reps;
}

std::map<long long, BigInt> genus_distribution(const MultiGraph& g, EmbClass cls,
                                               const EnumLimits& limits) {
    LambdaMode mode =
        (cls == EmbClass::Orientable) ? LambdaMode::Zero : LambdaMode::NonTree;
    Ctx ctx = make_ctx(g, mode);
    check_budget(ctx.total, limits.budget);
    int workers = std::max(1, limits.workers);
    std::vector<std::map<long long, long long>> local(workers);
    parallel_ranges(ctx.total, workers, [&](int w, long long lo, long long hi) {
        for (long long i = lo; i < hi; ++i) {
            auto inv = invariants(map_from_rotation(g, decode(ctx, i)));
            if (cls == EmbClass::NonOrientable && inv.orientable) continue;
            long long key = inv.orientable ? inv.genus : -inv.genus;
            ++local[w][key];
        }
    });
    std::map<long long, BigInt> merged;
    for (const auto& shard : local)
        for (const auto& [key, n] : shard) merged[key] += n;
    return merged;
}

} // namespace mapforge
