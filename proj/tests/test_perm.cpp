#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mapforge/errors.hpp"
#include "mapforge/numbers.hpp"
#include "mapforge/perm.hpp"

#include <algorithm>
#include <set>

using namespace mapforge;

TEST_CASE("composition applies the right factor first") {
    // p = (0 1 2), q = (0 1): (p*q)(0) = p(1) = 2
    Perm p = {1, 2, 0}, q = {1, 0, 2};
    Perm pq = perm_mul(p, q);
    CHECK(pq == Perm{2, 1, 0});
    Perm qp = perm_mul(q, p);
    CHECK(qp == Perm{0, 2, 1});
    CHECK(perm_mul(p, perm_inv(p)) == perm_identity(3));
}

TEST_CASE("cycles and orders") {
    Perm p = {1, 0, 3, 4, 2, 5};
    auto cyc = cycles_of(p);
    REQUIRE(cyc.size() == 3);
    CHECK(cyc[0] == std::vector<int>{0, 1});
    CHECK(cyc[1] == std::vector<int>{2, 3, 4});
    CHECK(cyc[2] == std::vector<int>{5});
    CHECK(cycle_type(p) == std::vector<int>{1, 2, 3});
    CHECK(perm_order(p) == 6);
    CHECK(perm_order(perm_identity(4)) == 1);
    CHECK_FALSE(is_perm(Perm{0, 0, 1}));
}

TEST_CASE("group generation and orbit counting") {
    Perm t1 = {1, 0, 2}, t2 = {0, 2, 1};
    auto s3 = generate_group(3, {t1, t2});
    CHECK(s3.size() == 6);
    std::set<Perm> uniq(s3.begin(), s3.end());
    CHECK(uniq.size() == 6);
    CHECK_THROWS_AS(generate_group(3, {t1, t2}, 4), input_error);

    Perm swap01 = {1, 0, 2, 3};
    Perm swap23 = {0, 1, 3, 2};
    CHECK(orbit_count(4, {&swap01, &swap23}) == 2);
    Perm id4 = perm_identity(4);
    CHECK(orbit_count(4, {&id4}) == 4);
}

TEST_CASE("conjugacy class sizes in S4 partition the group") {
    CHECK(conjugacy_class_size_Sn(4, {1, 1, 1, 1}) == 1);
    CHECK(conjugacy_class_size_Sn(4, {1, 1, 2}) == 6);
    CHECK(conjugacy_class_size_Sn(4, {2, 2}) == 3);
    CHECK(conjugacy_class_size_Sn(4, {1, 3}) == 8);
    CHECK(conjugacy_class_size_Sn(4, {4}) == 6);
    BigInt total = 0;
    for (const auto& type : partitions(4)) total += conjugacy_class_size_Sn(4, type);
    CHECK(total == 24);
}

TEST_CASE("partition counts") {
    CHECK(partitions(1).size() == 1);
    CHECK(partitions(5).size() == 7);
    CHECK(partitions(6).size() == 11);
    for (const auto& p : partitions(6))
        CHECK(std::is_sorted(p.begin(), p.end()));
}

TEST_CASE("hyperoctahedral group: explicit elements match class sizes") {
    for (int n = 1; n <= 3; ++n) {
        CAPTURE(n);
        auto elements = hyperoctahedral_elements(n);
        BigInt order = factorial(n) * pow_big(2, n);
        CHECK(BigInt((long long)elements.size()) == order);
        std::set<Perm> uniq(elements.begin(), elements.end());
        CHECK(uniq.size() == elements.size());

        auto classes = signed_classes_hyperoctahedral(n);
        BigInt total = 0;
        for (const auto& c : classes) total += c.size;
        CHECK(total == order);

        // tally elements into dart cycle types and compare against the
        // class data aggregated the same way
        std::map<std::vector<int>, long long> by_type;
        for (const auto& e : elements) by_type[cycle_type(e)] += 1;
        std::map<std::vector<int>, BigInt> predicted;
        for (const auto& c : classes) {
            std::vector<int> type;
            for (auto [len, mult] : c.dart_type)
                for (int i = 0; i < mult; ++i) type.push_back(len);
            predicted[type] += c.size;
        }
        for (const auto& [type, count] : by_type) {
            CAPTURE(type);
            CHECK(predicted[type] == BigInt(count));
        }
        CHECK(predicted.size() == by_type.size());
    }
}

TEST_CASE("signed class structure for n = 2") {
    auto classes = signed_classes_hyperoctahedral(2);
    CHECK(classes.size() == 5);
    for (const auto& c : classes) {
        CHECK(std::is_sorted(c.plus.begin(), c.plus.end()));
        CHECK(std::is_sorted(c.minus.begin(), c.minus.end()));
        int weight = 0;
        for (int l : c.plus) weight += l;
        for (int l : c.minus) weight += l;
        CHECK(weight == 2);
        CHECK(c.parts() == int(c.plus.size() + c.minus.size()));
    }
}

TEST_CASE("cycle index of S_n[S_2] for n = 1, 2") {
    auto z1 = cycle_index_SnS2(1);
    // (s1^2 + s2) / 2
    REQUIRE(z1.terms.size() == 2);
    CHECK(z1.terms.at({{1, 2}}) == BigRat(1, 2));
    CHECK(z1.terms.at({{2, 1}}) == BigRat(1, 2));

    auto z2 = cycle_index_SnS2(2);
    // (s1^4 + 2 s1^2 s2 + 3 s2^2 + 2 s4) / 8
    REQUIRE(z2.terms.size() == 4);
    CHECK(z2.terms.at({{1, 4}}) == BigRat(1, 8));
    CHECK(z2.terms.at({{1, 2}, {2, 1}}) == BigRat(2, 8));
    CHECK(z2.terms.at({{2, 2}}) == BigRat(3, 8));
    CHECK(z2.terms.at({{4, 1}}) == BigRat(2, 8));
}

TEST_CASE("cycle index of S_3[S_2] against the 48-element tally") {
    auto z3 = cycle_index_SnS2(3);
    CHECK(z3.coefficient_sum() == BigRat(1));

    std::map<std::vector<std::pair<int, int>>, long long> tally;
    for (const auto& e : hyperoctahedral_elements(3)) {
        std::vector<std::pair<int, int>> monomial;
        auto type = cycle_type(e);
        for (std::size_t i = 0; i < type.size();) {
            std::size_t j = i;
            while (j < type.size() && type[j] == type[i]) ++j;
            monomial.push_back({type[i], int(j - i)});
            i = j;
        }
        tally[monomial] += 1;
    }
    CHECK(tally.size() == z3.terms.size());
    for (const auto& [monomial, count] : tally) {
        CAPTURE(monomial);
        CHECK(z3.terms.at(monomial) == BigRat(count, 48));
    }

    // frozen spot values
    CHECK(z3.terms.at({{1, 6}}) == BigRat(1, 48));
    CHECK(z3.terms.at({{2, 3}}) == BigRat(7, 48));
    CHECK(z3.terms.at({{3, 2}}) == BigRat(1, 6));
    CHECK(z3.terms.at({{6, 1}}) == BigRat(1, 6));
    CHECK(z3.terms.at({{1, 2}, {2, 2}}) == BigRat(3, 16));
    CHECK(z3.pure_coefficient(2, 3) == BigRat(7, 48));
    CHECK(z3.pure_coefficient(5, 1) == BigRat(0));
    CHECK(z3.evaluate_all(BigRat(1)) == BigRat(1));
}

TEST_CASE("exact arithmetic helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(13) == 12);
    CHECK(pow_big(2, 40) == BigInt("1099511627776"));
    CHECK(exact_div(BigInt(84), BigInt(7)) == 12);
    CHECK_THROWS_AS(exact_div(BigInt(85), BigInt(7)), input_error);
    CHECK(is_integer(BigRat(8, 4)));
    CHECK_FALSE(is_integer(BigRat(17, 2)));
    CHECK(to_integer(BigRat(8, 4)) == 2);
    CHECK(to_string(BigRat(17, 2)) == "17/2");
}
