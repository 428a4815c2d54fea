#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "hookratio/boundary.hpp"
#include "hookratio/partition.hpp"
#include "oracle.hpp"

using namespace hookratio;

TEST_CASE("parse_partition") {
    CHECK(parse_partition("18,7,6") == Partition{18, 7, 6});
    CHECK(parse_partition(" 6 , 18, 7 ") == Partition{18, 7, 6});
    CHECK(parse_partition("").empty());
    CHECK(parse_partition("()").empty());

    const Partition big = parse_partition("66^55");
    CHECK(big.length() == 55);
    CHECK(big.size() == 66 * 55);
    CHECK(big[54] == 66);

    CHECK(parse_partition("16,1^24") == construct_hook_partition(15, 24));

    CHECK_THROWS_AS(parse_partition("3,0,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("4^"), std::invalid_argument);
}

TEST_CASE("canonical text compresses runs of four or more") {
    CHECK(Partition{18, 7, 6}.to_string() == "18,7,6");
    CHECK(parse_partition("66^55").to_string() == "66^55");
    CHECK(Partition{2, 2, 2, 1}.to_string() == "2,2,2,1");
    CHECK(construct_hook_partition(15, 24).to_string() == "16,1^24");
    CHECK(Partition{}.to_string().empty());
    for (const auto& p : oracle::partitions_up_to(10)) CHECK(parse_partition(p.to_string()) == p);
}

TEST_CASE("hook_length") {
    CHECK(hook_length(Partition{5, 2}, {0, 0}) == 6);
    CHECK(hook_length(Partition{1}, {0, 0}) == 1);
    CHECK(hook_length(Partition{18, 7, 6}, {0, 6}) == 13);
    CHECK_THROWS_AS(hook_length(Partition{5, 2}, {1, 2}), std::out_of_range);
    CHECK_THROWS_AS(hook_length(Partition{}, {0, 0}), std::out_of_range);
}

TEST_CASE("hook diagrams") {
    CHECK(hook_multiset(Partition{5, 2}).values() == std::vector<int>{1, 1, 2, 2, 3, 5, 6});
    CHECK(hook_multiset(Partition{3, 1}).values() == std::vector<int>{1, 1, 2, 4});

    const auto rows = hook_diagram(Partition{6, 6, 6, 6, 6});
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == std::vector<int>{10, 9, 8, 7, 6, 5});
    CHECK(rows[1] == std::vector<int>{9, 8, 7, 6, 5, 4});
    CHECK(rows[2] == std::vector<int>{8, 7, 6, 5, 4, 3});
    CHECK(rows[3] == std::vector<int>{7, 6, 5, 4, 3, 2});
    CHECK(rows[4] == std::vector<int>{6, 5, 4, 3, 2, 1});

    // The definition gives ...15 13 11... in the first row of (18,7,6).
    CHECK(hook_diagram(Partition{18, 7, 6})[0] ==
          std::vector<int>{20, 19, 18, 17, 16, 15, 13, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1});

    for (int n = 1; n <= 9; ++n) {
        std::vector<int> expect;
        for (int k = 1; k <= n; ++k) expect.push_back(k);
        CHECK(hook_multiset(Partition{n}).values() == expect);
    }
}

TEST_CASE("restricted_hooks") {
    CHECK(restricted_hooks(Partition{6, 6, 6, 6, 6}, 2).cardinality() == 15);
    CHECK(restricted_hooks(Partition{18, 7, 6}, 3).values() == std::vector<int>{1, 1, 1, 2, 2, 2, 3, 5, 6});
    CHECK(restricted_hooks(Partition{18, 7, 6}, 1) == hook_multiset(Partition{18, 7, 6}));
    CHECK_THROWS_AS(restricted_hooks(Partition{2}, 0), std::invalid_argument);
}

TEST_CASE("hook multiset invariants against the grid oracle, size <= 15") {
    for (const auto& lambda : oracle::partitions_up_to(15)) {
        const HookMultiset hooks = hook_multiset(lambda);
        CHECK(hooks.cardinality() == lambda.size());
        CHECK(hooks.values() == oracle::grid_hooks(lambda));
        CHECK(hook_multiset(lambda.conjugate()) == hooks);
        CHECK(restricted_hooks(lambda, 1) == hooks);
    }
}

TEST_CASE("boundary sequence of (18,7,6)") {
    const BoundarySequence b = to_boundary(Partition{18, 7, 6});
    CHECK(b.is_centered());
    CHECK(b.to_string() == "...0111|1110101111111111101...");
    CHECK(b.interior_zeros() == std::vector<std::int64_t>{3, 5, 17});
    CHECK(from_boundary(b) == Partition{18, 7, 6});
    CHECK(parse_boundary("\xE2\x8B\xAF" "0111|1110101111111111101" "\xE2\x8B\xAF") == b);
}

TEST_CASE("boundary edge cases") {
    const BoundarySequence empty = to_boundary(Partition{});
    CHECK(empty.window().empty());
    CHECK(empty.is_centered());
    CHECK(from_boundary(empty).empty());
    CHECK(empty.to_string() == "...0|1...");

    CHECK(to_boundary(Partition{2}).to_string() == "...01|101...");

    // Shifts keep the shape and move the charge.
    const BoundarySequence b = to_boundary(Partition{4, 2, 2, 1});
    for (std::int64_t s = -7; s <= 7; ++s) {
        CHECK(from_boundary(b.shifted(s)) == Partition{4, 2, 2, 1});
        CHECK(b.shifted(s).charge() == s);
        CHECK(b.shifted(s).centered() == b);
    }
    CHECK_THROWS_AS(BoundarySequence(0, {0, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(parse_boundary("0110"), std::invalid_argument);
    CHECK_THROWS_AS(parse_boundary("01|1|0"), std::invalid_argument);
}

TEST_CASE("boundary round trip and hook duality, size <= 15") {
    for (const auto& lambda : oracle::partitions_up_to(15)) {
        const BoundarySequence b = to_boundary(lambda);
        CHECK(b.is_centered());
        CHECK(from_boundary(b) == lambda);

        const auto [start, word] = oracle::outline_walk(lambda);
        std::vector<std::uint8_t> bytes(word.begin(), word.end());
        CHECK(BoundarySequence(start, bytes) == b);
        if (lambda.size() <= 12) CHECK(oracle::pair_hooks(word) == oracle::grid_hooks(lambda));
    }
}

TEST_CASE("construct_hook_partition") {
    CHECK(construct_hook_partition(15, 24).length() == 25);
    CHECK(construct_hook_partition(15, 24)[0] == 16);
    CHECK(construct_hook_partition(0, 0) == Partition{1});
    CHECK(construct_hook_partition(2, 1) == Partition{3, 1});
    CHECK(hook_multiset(construct_hook_partition(2, 1)).values() == std::vector<int>{1, 1, 2, 4});
    for (int a = 0; a <= 6; ++a) {
        for (int l = 0; l <= 6; ++l) {
            HookMultiset expect;
            for (int i = 1; i <= a; ++i) expect.add(i);
            for (int i = 1; i <= l; ++i) expect.add(i);
            expect.add(a + l + 1);
            CHECK(hook_multiset(construct_hook_partition(a, l)) == expect);
        }
    }
    CHECK_THROWS_AS(construct_hook_partition(-1, 0), std::invalid_argument);
}

TEST_CASE("dimension matches the tableau count") {
    CHECK(dimension(Partition{2, 1}) == 2);
    CHECK(dimension(Partition{2, 2}) == 2);
    CHECK(dimension(Partition{}) == 1);
    CHECK(dimension(Partition{7}) == 1);
    for (const auto& lambda : oracle::partitions_up_to(8)) {
        std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
        CHECK(dimension(lambda) == oracle::count_syt(parts));
    }
    // Sum of squares of dimensions is n!.
    BigInt sum = 0;
    for (const auto& lambda : enumerate_partitions(12)) sum += dimension(lambda) * dimension(lambda);
    CHECK(sum == BigInt(479001600));
}

TEST_CASE("enumerate_partitions") {
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
    CHECK(enumerate_partitions(4) ==
          std::vector<Partition>{Partition{4}, Partition{3, 1}, Partition{2, 2}, Partition{2, 1, 1}, Partition{1, 1, 1, 1}});
    CHECK(enumerate_partitions(10).size() == 42);
    for (int n = 0; n <= 25; ++n) {
        const auto all = enumerate_partitions(n);
        CHECK(static_cast<std::int64_t>(all.size()) == oracle::partition_count(n));
        std::set<Partition> seen(all.begin(), all.end());
        CHECK(seen.size() == all.size());
        for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] > all[i]);
        for (const auto& p : all) CHECK(p.size() == n);
    }
    CHECK_THROWS_AS(enumerate_partitions(41), std::out_of_range);
    CHECK(enumerate_partitions(41, 41).size() == static_cast<std::size_t>(oracle::partition_count(41)));
    CHECK_THROWS_AS(enumerate_partitions(-1), std::out_of_range);
}
