#include <doctest.h>

#include <stdexcept>

#include "branchq/partition.hpp"

using namespace branchq;

TEST_CASE("partition construction validates shape") {
    CHECK(Partition{}.length() == 0);
    CHECK(Partition{3, 1}.size() == 4);
    CHECK(Partition{3, 3, 2}.length() == 3);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("part lookup is zero beyond the length") {
    const Partition p{4, 2, 1};
    CHECK(p.part(0) == 4);
    CHECK(p.part(2) == 1);
    CHECK(p.part(3) == 0);
    CHECK(p.part(100) == 0);
}

TEST_CASE("to_string round trips through parse") {
    for (int d = 0; d <= 8; ++d) {
        for (const Partition& p : partitions_of(d)) {
            CHECK(parse_partition(p.to_string()) == p);
        }
    }
    CHECK(Partition{}.to_string() == "()");
    CHECK(Partition{3, 1}.to_string() == "(3,1)");
    const PartitionPair pp{Partition{3, 1}, Partition{2}};
    CHECK(pp.to_string() == "((3,1),(2))");
    CHECK(parse_partition_pair(pp.to_string()) == pp);
    CHECK(parse_partition_pair("((),())") == PartitionPair{});
}

TEST_CASE("parse rejects malformed text") {
    CHECK_THROWS_AS(parse_partition(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("(1,2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("(1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("1,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("(a)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition_pair("((1))"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition_pair("(1),(2)"), std::invalid_argument);
}

TEST_CASE("partitions_of counts and order") {
    const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int d = 0; d <= 12; ++d) {
        const auto ps = partitions_of(d);
        CHECK(static_cast<int>(ps.size()) == expected[d]);
        for (const Partition& p : ps) CHECK(p.size() == d);
        // reverse lexicographic: largest first part first
        for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1].parts > ps[i].parts);
    }
    CHECK(partitions_of(3) ==
          std::vector<Partition>{Partition{3}, Partition{2, 1}, Partition{1, 1, 1}});
    CHECK_THROWS_AS(partitions_of(-1), std::invalid_argument);
}

TEST_CASE("conjugate is an involution") {
    for (int d = 0; d <= 12; ++d)
        for (const Partition& p : partitions_of(d)) CHECK(conjugate(conjugate(p)) == p);
    CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate(Partition{}) == Partition{});
}

TEST_CASE("containment") {
    CHECK(contains(Partition{3, 2}, Partition{2, 2}));
    CHECK(contains(Partition{3, 2}, Partition{}));
    CHECK(!contains(Partition{3, 2}, Partition{2, 2, 1}));
    CHECK(!contains(Partition{3, 2}, Partition{4}));
    CHECK(!contains(Partition{3, 2}, Partition{3, 3}));
}

TEST_CASE("doubled partitions") {
    CHECK(doubled(Partition{}) == Partition{});
    CHECK(doubled(Partition{2, 1}) == Partition{4, 2});
    CHECK(doubled(Partition{1, 1, 1}) == Partition{2, 2, 2});
}

TEST_CASE("pair axis enumerates blocks largest sizes first") {
    const auto axis = pair_axis(1, 1);
    REQUIRE(axis.size() == 2);
    CHECK(axis[0] == PartitionPair{Partition{1}, Partition{1}});
    CHECK(axis[1] == PartitionPair{});

    const auto axis21 = pair_axis(2, 1);
    REQUIRE(axis21.size() == 3);
    CHECK(axis21[0] == PartitionPair{Partition{2}, Partition{1}});
    CHECK(axis21[1] == PartitionPair{Partition{1, 1}, Partition{1}});
    CHECK(axis21[2] == PartitionPair{Partition{1}, Partition{}});

    // block i holds pairs of sizes (p-i, q-i); lambda-major revlex inside
    const auto axis22 = pair_axis(2, 2);
    REQUIRE(axis22.size() == 6);
    CHECK(axis22[0] == PartitionPair{Partition{2}, Partition{2}});
    CHECK(axis22[1] == PartitionPair{Partition{2}, Partition{1, 1}});
    CHECK(axis22[2] == PartitionPair{Partition{1, 1}, Partition{2}});
    CHECK(axis22[3] == PartitionPair{Partition{1, 1}, Partition{1, 1}});
    CHECK(axis22[4] == PartitionPair{Partition{1}, Partition{1}});
    CHECK(axis22[5] == PartitionPair{});
}

TEST_CASE("parity axis walks sizes down by two") {
    const auto axis = parity_axis(4);
    REQUIRE(axis.size() == 8);
    CHECK(axis[0] == Partition{4});
    CHECK(axis[4] == Partition{1, 1, 1, 1});
    CHECK(axis[5] == Partition{2});
    CHECK(axis[6] == Partition{1, 1});
    CHECK(axis[7] == Partition{});

    const auto odd = parity_axis(3);
    REQUIRE(odd.size() == 4);
    CHECK(odd[3] == Partition{1});
}
