#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mapforge/embed.hpp"
#include "mapforge/errors.hpp"
#include "mapforge/graph.hpp"
#include "mapforge/map.hpp"

#include <map>
#include <set>

using namespace mapforge;

namespace {

MultiGraph asym6() {
    MultiGraph g;
    g.nv = 6;
    g.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {3, 5}};
    return g;
}

std::map<long long, long long> small_dist(const MultiGraph& g, EmbClass cls) {
    std::map<long long, long long> out;
    for (const auto& [genus, count] : genus_distribution(g, cls))
        out[genus] = (long long)count;
    return out;
}

} // namespace

TEST_CASE("system counts by class") {
    MultiGraph k4 = complete_graph(4);
    CHECK(count_systems(k4, LambdaMode::Zero) == 16);     // (3-1)!^4
    CHECK(count_systems(k4, LambdaMode::NonTree) == 128);  // 2^beta * 16
    CHECK(count_systems(k4, LambdaMode::Raw) == 1024);     // 2^eps * 16
    CHECK(count_embeddings(k4, EmbClass::Orientable) == 16);
    CHECK(count_embeddings(k4, EmbClass::LocallyOrientable) == 128);
    CHECK(count_embeddings(k4, EmbClass::NonOrientable) == 112);

    MultiGraph k5 = complete_graph(5);
    CHECK(count_embeddings(k5, EmbClass::Orientable) == 7776);
    CHECK(count_systems(k5, LambdaMode::Raw) == BigInt(7962624));

    MultiGraph b2 = bouquet(2);
    CHECK(count_systems(b2, LambdaMode::NonTree) == 24);  // 2^2 * 3!
}

TEST_CASE("system indexing round-trips and respects the budget") {
    MultiGraph k4 = complete_graph(4);
    std::set<std::string> keys;
    long long n = 0;
    for_each_system(k4, LambdaMode::NonTree, {},
                    [&](long long, const RotationSystem& rs) {
                        validate_rotation(k4, rs);
                        keys.insert(system_key(rs));
                        ++n;
                    });
    CHECK(n == 128);
    CHECK(keys.size() == 128);  // all distinct
    CHECK_THROWS_AS(
        for_each_system(k4, LambdaMode::NonTree, {100, 1},
                        [](long long, const RotationSystem&) {}),
        budget_error);
    try {
        for_each_system(k4, LambdaMode::Raw, {100, 1}, [](long long, const RotationSystem&) {});
        FAIL("budget not enforced");
    } catch (const budget_error& e) {
        CHECK(e.needed == 1024);
        CHECK(e.limit == 100);
    }
}

TEST_CASE("rotation systems build valid maps with matched invariants") {
    MultiGraph b2 = bouquet(2);
    int orientable_seen = 0;
    for_each_system(b2, LambdaMode::NonTree, {},
                    [&](long long, const RotationSystem& rs) {
                        CombMap M = map_from_rotation(b2, rs);
                        REQUIRE(validate(M).empty());
                        auto inv = invariants(M);
                        CHECK(inv.v == 1);
                        CHECK(inv.e == 2);
                        orientable_seen += inv.orientable;
                        // the all-zero lambda gauge is orientable iff lambda == 0
                        bool zero = rs.lambda == std::vector<std::uint8_t>{0, 0};
                        CHECK(inv.orientable == zero);
                    });
    CHECK(orientable_seen == 6);
}

TEST_CASE("Burnside counts match the frozen censuses for K4") {
    MultiGraph k4 = complete_graph(4);
    CHECK(burnside_count(k4, EmbClass::LocallyOrientable, Relation::Isomorphism) == 11);
    CHECK(burnside_count(k4, EmbClass::Orientable, Relation::Isomorphism) == 3);
    CHECK(burnside_count(k4, EmbClass::NonOrientable, Relation::Isomorphism) == 8);
    CHECK(burnside_count(k4, EmbClass::Orientable, Relation::Equivalence) == 3);
    CHECK(burnside_count(k4, EmbClass::LocallyOrientable, Relation::Equivalence) == 20);
}

TEST_CASE("orbit partition is the independent oracle") {
    MultiGraph k4 = complete_graph(4);
    for (auto cls : {EmbClass::Orientable, EmbClass::NonOrientable,
                     EmbClass::LocallyOrientable}) {
        for (auto rel : {Relation::Isomorphism, Relation::Equivalence}) {
            CAPTURE((int)cls);
            CAPTURE((int)rel);
            auto reps = orbit_partition(k4, cls, rel);
            CHECK(BigInt((long long)reps.size()) == burnside_count(k4, cls, rel));
        }
    }
    // representatives are valid, pairwise non-isomorphic, canonically sorted
    auto reps = orbit_partition(k4, EmbClass::LocallyOrientable, Relation::Isomorphism);
    REQUIRE(reps.size() == 11);
    std::vector<std::string> keys;
    for (const auto& M : reps) {
        CHECK(validate(M).empty());
        keys.push_back(canon_key(M));
    }
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    CHECK(std::set<std::string>(keys.begin(), keys.end()).size() == 11);
}

TEST_CASE("per-surface tallies for the two-loop bouquet") {
    MultiGraph b2 = bouquet(2);
    auto reps = orbit_partition(b2, EmbClass::LocallyOrientable, Relation::Isomorphism);
    REQUIRE(reps.size() == 6);
    std::map<std::pair<bool, long long>, int> tally;
    for (const auto& M : reps) {
        auto inv = invariants(M);
        tally[{inv.orientable, inv.genus}] += 1;
    }
    CHECK(tally[{true, 0}] == 1);   // plane
    CHECK(tally[{false, 1}] == 2);  // projective plane
    CHECK(tally[{true, 1}] == 1);   // torus
    CHECK(tally[{false, 2}] == 2);  // Klein bottle
}

TEST_CASE("genus distributions by class") {
    MultiGraph k4 = complete_graph(4);
    CHECK(small_dist(k4, EmbClass::Orientable) ==
          std::map<long long, long long>{{0, 2}, {1, 14}});
    MultiGraph b2 = bouquet(2);
    CHECK(small_dist(b2, EmbClass::LocallyOrientable) ==
          std::map<long long, long long>{{-2, 8}, {-1, 10}, {0, 4}, {1, 2}});
    CHECK(small_dist(b2, EmbClass::NonOrientable) ==
          std::map<long long, long long>{{-2, 8}, {-1, 10}});
}

TEST_CASE("flip and relabel actions preserve the embedded surface") {
    MultiGraph k4 = complete_graph(4);
    auto auts = semiarc_aut_group(k4);
    REQUIRE(auts.size() == 24);
    int checked = 0;
    for_each_system(k4, LambdaMode::NonTree, {},
                    [&](long long idx, const RotationSystem& rs) {
                        if (idx % 17 != 0) return;  // sample to keep it quick
                        ++checked;
                        CombMap M = map_from_rotation(k4, rs);
                        auto inv = invariants(M);
                        // relabeling by a semi-arc automorphism is an isomorphism
                        RotationSystem moved = apply_relabel(k4, auts[5], rs);
                        CombMap M2 = map_from_rotation(k4, moved);
                        CHECK(isomorphic(M, M2));
                        // flipping one vertex changes the system, not the map class
                        RotationSystem flipped = apply_flip(k4, 2, rs);
                        CombMap M3 = map_from_rotation(k4, flipped);
                        CHECK(isomorphic(M, M3));
                        // the mirror reverses orientation class but keeps the surface
                        RotationSystem mir = mirror_system(k4, rs);
                        CombMap M4 = map_from_rotation(k4, mir);
                        auto inv4 = invariants(M4);
                        CHECK(inv4.orientable == inv.orientable);
                        CHECK(inv4.genus == inv.genus);
                    });
    CHECK(checked == 8);
}

TEST_CASE("flips on the raw space: double flip returns home") {
    MultiGraph b2 = bouquet(2);
    for_each_system(b2, LambdaMode::Raw, {},
                    [&](long long, const RotationSystem& rs) {
                        RotationSystem once = apply_flip(b2, 0, rs);
                        RotationSystem twice = apply_flip(b2, 0, once);
                        CHECK(twice == rs);
                    });
}

TEST_CASE("tree-normalized systems are orientable exactly when lambda vanishes") {
    MultiGraph k4 = complete_graph(4);
    for_each_system(k4, LambdaMode::NonTree, {},
                    [&](long long, const RotationSystem& rs) {
                        bool zero = std::all_of(rs.lambda.begin(), rs.lambda.end(),
                                                [](std::uint8_t b) { return b == 0; });
                        CombMap M = map_from_rotation(k4, rs);
                        CHECK(is_orientable(M) == zero);
                        CHECK(is_tree_normalized(k4, rs));
                    });
}

TEST_CASE("the plain group average fails to be integral") {
    CHECK(equivalence_average_locally(complete_graph(4)) == BigRat(17, 2));
    CHECK(equivalence_average_locally(dipole(2)) == BigRat(3, 2));
    CHECK(equivalence_average_locally(dipole(3)) == BigRat(4));
}

TEST_CASE("bigger frozen censuses") {
    CHECK(burnside_count(bouquet(2), EmbClass::LocallyOrientable, Relation::Isomorphism) == 6);
    CHECK(burnside_count(bouquet(2), EmbClass::Orientable, Relation::Equivalence) == 2);
    CHECK(burnside_count(bouquet(2), EmbClass::LocallyOrientable, Relation::Equivalence) == 6);
    CHECK(burnside_count(bouquet(3), EmbClass::LocallyOrientable, Relation::Isomorphism) == 26);
    CHECK(burnside_count(dipole(3), EmbClass::LocallyOrientable, Relation::Isomorphism) == 2);
    CHECK(burnside_count(dipole(3), EmbClass::Orientable, Relation::Equivalence) == 2);
    CHECK(burnside_count(dipole(3), EmbClass::LocallyOrientable, Relation::Equivalence) == 6);
    MultiGraph a = asym6();
    CHECK(burnside_count(a, EmbClass::Orientable, Relation::Isomorphism) == 2);
    CHECK(burnside_count(a, EmbClass::NonOrientable, Relation::Isomorphism) == 2);
    CHECK(burnside_count(a, EmbClass::LocallyOrientable, Relation::Isomorphism) == 4);
}

TEST_CASE("worker count never changes results") {
    MultiGraph k4 = complete_graph(4);
    EnumLimits two{20'000'000, 2};
    EnumLimits four{20'000'000, 4};
    CHECK(burnside_count(k4, EmbClass::LocallyOrientable, Relation::Isomorphism, two) == 11);
    CHECK(burnside_count(k4, EmbClass::LocallyOrientable, Relation::Isomorphism, four) == 11);
    CHECK(genus_distribution(k4, EmbClass::Orientable, four) ==
          genus_distribution(k4, EmbClass::Orientable));
    auto reps1 = orbit_partition(k4, EmbClass::Orientable, Relation::Isomorphism);
    auto reps4 = orbit_partition(k4, EmbClass::Orientable, Relation::Isomorphism, four);
    CHECK(reps1.size() == reps4.size());
    for (std::size_t i = 0; i < reps1.size(); ++i) CHECK(reps1[i] == reps4[i]);
}

TEST_CASE("class strings parse both ways") {
    CHECK(emb_class_from_string("O") == EmbClass::Orientable);
    CHECK(emb_class_from_string("N") == EmbClass::NonOrientable);
    CHECK(emb_class_from_string("L") == EmbClass::LocallyOrientable);
    CHECK(relation_from_string("iso") == Relation::Isomorphism);
    CHECK(relation_from_string("equiv") == Relation::Equivalence);
    CHECK_THROWS_AS(emb_class_from_string("Q"), input_error);
    CHECK_THROWS_AS(relation_from_string("x"), input_error);
    CHECK(to_string(EmbClass::Orientable) == "O");
    CHECK(to_string(Relation::Equivalence) == "equiv");
}
