#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mapforge/errors.hpp"
#include "mapforge/graph.hpp"
#include "mapforge/map.hpp"

#include <algorithm>
#include <set>

using namespace mapforge;

TEST_CASE("quadricell involutions") {
    CHECK(q_alpha(0) == 2);
    CHECK(q_beta(0) == 1);
    CHECK(q_alphabeta(0) == 3);
    CHECK(q_alpha(q_alpha(7)) == 7);
    CHECK(q_dart(4) == 2);   // cell 4 = edge 1, a=0, b=0 -> dart 2
    CHECK(q_dart(7) == 3);   // cell 7 = edge 1, a=1, b=1 -> dart 3
    CHECK(q_dart(q_alpha(5)) == q_dart(5));  // alpha moves within a dart fibre
}

TEST_CASE("the calibration torus map is valid with the right shape") {
    CombMap M = fig12_map();
    CHECK(validate(M).empty());
    auto inv = invariants(M);
    CHECK(inv.v == 4);
    CHECK(inv.e == 6);
    CHECK(inv.f == 2);
    CHECK(inv.chi == 0);
    CHECK(inv.orientable);
    CHECK(inv.genus == 1);
    CHECK(inv.face_lengths == std::vector<int>{4, 8});
}

TEST_CASE("validation messages fire one by one") {
    CombMap not_perm{1, {0, 0, 1, 2}};
    auto v1 = validate(not_perm);
    REQUIRE(v1.size() == 1);
    CHECK(v1[0] == "P is not a permutation of the 4m quadricells");

    // alpha-conjugation fails: P = (0 1 2 3) also meets its alpha partner
    CombMap cycle4{1, {1, 2, 3, 0}};
    auto v2 = validate(cycle4);
    CHECK(std::find(v2.begin(), v2.end(),
                    "conjugating P by alpha does not invert P") != v2.end());
    CHECK(std::find(v2.begin(), v2.end(),
                    "P is not basic: a cell meets its alpha-partner's cycle") != v2.end());

    // two disjoint edges: valid alpha/beta/P structure but not transitive
    CombMap split{2, {3, 2, 1, 0, 7, 6, 5, 4}};
    auto v3 = validate(split);
    REQUIRE(v3.size() == 1);
    CHECK(v3[0] == "the group generated by alpha, beta and P is not transitive");

    CHECK_THROWS_AS(require_valid(split), input_error);
    CHECK(is_valid(fig12_map()));
}

TEST_CASE("vertices, faces and boundary cycles tile the cell set") {
    CombMap M = fig12_map();
    auto vo = vertex_orbits(M);
    auto fo = face_orbits(M);
    REQUIRE(vo.size() == 4);
    REQUIRE(fo.size() == 2);
    std::set<int> seen;
    for (const auto& orbit : vo) {
        CHECK(orbit.size() == 6);  // valency 3, two cells per incidence
        seen.insert(orbit.begin(), orbit.end());
    }
    CHECK(seen.size() == 24);
    seen.clear();
    for (const auto& orbit : fo) seen.insert(orbit.begin(), orbit.end());
    CHECK(seen.size() == 24);

    auto vid = cell_vertex_ids(M);
    for (std::size_t i = 0; i < vo.size(); ++i)
        for (int c : vo[i]) CHECK(vid[c] == (int)i);

    auto boundary = face_boundary_cycles(M);
    REQUIRE(boundary.size() == 2);
    std::vector<int> lengths = {(int)boundary[0].size(), (int)boundary[1].size()};
    std::sort(lengths.begin(), lengths.end());
    CHECK(lengths == std::vector<int>{4, 8});
    // each boundary cycle follows the face rotation q -> P(alphabeta(q))
    for (const auto& cycle : boundary)
        for (std::size_t i = 0; i < cycle.size(); ++i)
            CHECK(M.P[q_alphabeta(cycle[i])] == cycle[(i + 1) % cycle.size()]);
}

TEST_CASE("duality is an involution that swaps v and f") {
    CombMap M = fig12_map();
    CombMap D = dual(M);
    CHECK(validate(D).empty());
    auto inv = invariants(D);
    CHECK(inv.v == 2);
    CHECK(inv.f == 4);
    CHECK(inv.e == 6);
    CHECK(inv.chi == 0);
    CHECK(dual(D) == M);
}

TEST_CASE("isomorphism finds conjugations and rejects different surfaces") {
    CombMap M = fig12_map();
    // relabel by swapping edge blocks 0 and 1 wholesale
    Perm relab(M.cells());
    for (int q = 0; q < M.cells(); ++q) relab[q] = q;
    for (int i = 0; i < 4; ++i) std::swap(relab[i], relab[4 + i]);
    CombMap N{M.m, Perm(M.cells())};
    for (int q = 0; q < M.cells(); ++q) N.P[relab[q]] = relab[M.P[q]];
    REQUIRE(validate(N).empty());
    auto xi = isomorphism(M, N);
    REQUIRE(xi.has_value());
    // the witness commutes with alpha and beta and carries P to P'
    for (int q = 0; q < M.cells(); ++q) {
        CHECK((*xi)[q_alpha(q)] == q_alpha((*xi)[q]));
        CHECK((*xi)[q_beta(q)] == q_beta((*xi)[q]));
        CHECK((*xi)[M.P[q]] == N.P[(*xi)[q]]);
    }
    CHECK(canon_code(M) == canon_code(N));
    CHECK(canon_key(M) == canon_key(N));

    CombMap D = dual(M);  // same surface, different map
    CHECK_FALSE(isomorphic(M, D));
    CHECK(canon_key(M) != canon_key(D));
}

TEST_CASE("automorphisms of the calibration map") {
    CombMap M = fig12_map();
    auto auts = automorphism_group(M);
    CHECK(auts.size() == 8);
    CHECK(orientation_preserving_auts(M).size() == 4);
    CHECK(rooted_count(M) == 3);  // 4 eps / |Aut| = 24 / 8

    // distinct dart projections: the group acts faithfully on semi-arcs here
    std::set<Perm> projections;
    for (const auto& a : auts) {
        Perm dart(2 * M.m);
        for (int q = 0; q < M.cells(); ++q) dart[q_dart(q)] = q_dart(a[q]);
        projections.insert(dart);
    }
    CHECK(projections.size() == 8);
}

TEST_CASE("orientation classes split an orientable map in two") {
    CombMap M = fig12_map();
    auto cls = orientation_class(M);
    int zeros = (int)std::count(cls.begin(), cls.end(), 0);
    CHECK(zeros == M.cells() / 2);
    CHECK(is_orientable(M));
    for (const auto& a : automorphism_group(M))
        CHECK(preserves_orientation(M, a) == (cls[a[0]] == cls[0]));
}

TEST_CASE("underlying graph recovers K4 from the torus map") {
    CombMap M = fig12_map();
    MultiGraph g = underlying_graph(M);
    CHECK(g.nv == 4);
    CHECK(g.ne() == 6);
    CHECK(valency_sequence(g) == std::vector<int>{3, 3, 3, 3});
    for (int e = 0; e < g.ne(); ++e) CHECK_FALSE(g.is_loop(e));
}

TEST_CASE("semi-arc actions extend to the quadricells") {
    CombMap M = fig12_map();
    MultiGraph g = underlying_graph(M);
    auto semis = semiarc_aut_group(g);
    REQUIRE(semis.size() == 24);

    // the bit-copy extension always commutes with alpha and beta
    for (const auto& s : semis) {
        Perm ext = extend_semiarc_action(M.m, s);
        for (int q = 0; q < M.cells(); ++q) {
            CHECK(ext[q_alpha(q)] == q_alpha(ext[q]));
            CHECK(ext[q_beta(q)] == q_beta(ext[q]));
        }
    }

    // exactly |Aut M| of the 24 semi-arc auts lift to map automorphisms
    int extendable = 0;
    for (const auto& s : semis) {
        auto lift = extend_graph_aut(M, s);
        if (!lift.has_value()) continue;
        ++extendable;
        for (int q = 0; q < M.cells(); ++q) {
            CHECK((*lift)[M.P[q]] == M.P[(*lift)[q]]);
            CHECK(q_dart((*lift)[q]) == s[q_dart(q)]);
        }
    }
    CHECK(extendable == 8);

    CHECK_THROWS_AS(extend_semiarc_action(M.m, perm_identity(3)), input_error);
}

TEST_CASE("one-vertex regular maps hit the cyclic symmetry ceiling") {
    CombMap M5 = one_vertex_regular(5);
    auto inv = invariants(M5);
    CHECK(inv.v == 1);
    CHECK(inv.e == 5);
    CHECK(inv.f == 2);
    CHECK(inv.chi == -2);
    CHECK(inv.orientable);
    CHECK(inv.genus == 2);
    CHECK(automorphism_group(M5).size() == 20);
    CHECK(orientation_preserving_auts(M5).size() == 10);  // = 4g + 2
    CHECK_THROWS_AS(one_vertex_regular(4), input_error);

    CombMap M3 = one_vertex_regular(3);
    auto inv3 = invariants(M3);
    CHECK(inv3.genus == 1);
    CHECK(automorphism_group(M3).size() == 12);
}
