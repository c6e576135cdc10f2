#include "doctest.h"

#include <vector>

#include "golden.hpp"
#include "prs/partition.hpp"

using namespace prs;

namespace {

std::vector<std::vector<std::uint32_t>> block_members(const Partition& p) {
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& b : p.blocks) out.push_back(b.members());
    return out;
}

} // namespace

TEST_CASE("attribute set helpers") {
    AttrSet s = attr_bit(0) | attr_bit(2) | attr_bit(5);
    CHECK(attr_in(s, 0));
    CHECK_FALSE(attr_in(s, 1));
    CHECK(attr_count(s) == 3);
    CHECK(attr_ids(s) == std::vector<unsigned>{0, 2, 5});
    CHECK(full_attr_set(6) == 0b111111);
    CHECK(attr_ids(0).empty());
}

TEST_CASE("partition by all attributes: reference blocks, canonical order") {
    DecisionTable t = golden::table1();
    Partition p = partition_by(t, full_attr_set(6));
    // Blocks ordered by smallest member: {x1}{x2}{x3,x4}{x5}{x6}{x7}{x8,x9}{x10,x11}
    CHECK(block_members(p) == std::vector<std::vector<std::uint32_t>>{
                                  {0}, {1}, {2, 3}, {4}, {5}, {6}, {7, 8}, {9, 10}});
    CHECK(p.n_blocks() == 8);
    CHECK(p.n_objects == 11);
    for (std::size_t b = 0; b < p.n_blocks(); ++b) {
        CHECK(p.block_sizes[b] == p.blocks[b].count());
        for (auto obj : p.blocks[b].members()) CHECK(p.block_of[obj] == b);
    }
}

TEST_CASE("partition by subsets: P and Q from the reference walkthrough") {
    DecisionTable t = golden::table1();
    const AttrSet P = attr_bit(0) | attr_bit(1) | attr_bit(2); // {a1,a2,a3}
    const AttrSet Q = attr_bit(0) | attr_bit(1);               // {a1,a2}
    CHECK(block_members(partition_by(t, P)) ==
          std::vector<std::vector<std::uint32_t>>{{0}, {1, 2, 3}, {4}, {5, 6}, {7, 8, 9, 10}});
    // x1 shares (a1,a2) = (1,1) with x8..x11, so they are one block.
    CHECK(block_members(partition_by(t, Q)) ==
          std::vector<std::vector<std::uint32_t>>{{0, 7, 8, 9, 10}, {1, 2, 3}, {4, 5, 6}});
}

TEST_CASE("empty attribute set gives the single-block partition") {
    DecisionTable t = golden::table1();
    Partition p = partition_by(t, 0);
    REQUIRE(p.n_blocks() == 1);
    CHECK(p.blocks[0].count() == 11);
}

TEST_CASE("decision partition: classes in ascending code order") {
    DecisionTable t = golden::table1();
    Partition d = decision_partition(t);
    REQUIRE(d.n_blocks() == 2);
    CHECK(d.blocks[0].members() == std::vector<std::uint32_t>{0, 1, 2, 4, 7});
    CHECK(d.blocks[1].members() == std::vector<std::uint32_t>{3, 5, 6, 8, 9, 10});
}

TEST_CASE("table 2 partitions: the worked subsets") {
    DecisionTable t = golden::table2();
    const AttrSet P = full_attr_set(4); // {a1..a4}
    const AttrSet Q = full_attr_set(3); // {a1..a3}
    CHECK(block_members(partition_by(t, P)) ==
          std::vector<std::vector<std::uint32_t>>{
              {0, 6, 7}, {1}, {2, 3, 4}, {5}, {8, 9, 10, 11}});
    CHECK(block_members(partition_by(t, Q)) ==
          std::vector<std::vector<std::uint32_t>>{{0, 6, 7, 8, 9, 10, 11}, {1}, {2, 3, 4, 5}});
    CHECK(block_members(partition_by(t, full_attr_set(6))) ==
          std::vector<std::vector<std::uint32_t>>{
              {0}, {1}, {2, 3, 4}, {5}, {6, 7}, {8}, {9, 10, 11}});
}

TEST_CASE("is_finer: refinement order over nested subsets") {
    DecisionTable t = golden::table1();
    Partition c = partition_by(t, full_attr_set(6));
    Partition p = partition_by(t, attr_bit(0) | attr_bit(1) | attr_bit(2));
    Partition q = partition_by(t, attr_bit(0) | attr_bit(1));
    Partition one = partition_by(t, 0);
    CHECK(is_finer(c, p));
    CHECK(is_finer(p, q));
    CHECK(is_finer(c, q));
    CHECK(is_finer(q, one));
    CHECK_FALSE(is_finer(q, p));
    CHECK_FALSE(is_finer(p, c));
    CHECK(is_finer(c, c));

    DecisionTable t2 = golden::table2();
    CHECK_THROWS(is_finer(c, partition_by(t2, 0))); // 11 vs 12 objects
}

TEST_CASE("conditional probability is exact") {
    DecisionTable t = golden::table1();
    Partition c = partition_by(t, full_attr_set(6));
    Partition d = decision_partition(t);
    CHECK(cond_prob(c.blocks[2], d.blocks[0]) == Fraction(1, 2)); // {x3,x4} vs Y0
    CHECK(cond_prob(c.blocks[0], d.blocks[0]) == Fraction(1));    // {x1}
    CHECK(cond_prob(c.blocks[7], d.blocks[0]) == Fraction(0));    // {x10,x11}
    CHECK_THROWS_AS(cond_prob(ObjectSet(11), d.blocks[0]), ValidationError);
}

TEST_CASE("partitions cover the universe with disjoint blocks") {
    std::mt19937 rng(20260815);
    for (int trial = 0; trial < 20; ++trial) {
        DecisionTable t = golden::random_table(rng, 1 + trial, 3, 3, 3);
        Partition p = partition_by(t, golden::random_subset(rng, 3));
        ObjectSet seen(t.n_objects);
        std::size_t total = 0;
        for (const auto& b : p.blocks) {
            CHECK_FALSE(seen.intersects(b));
            seen |= b;
            total += b.count();
            CHECK_FALSE(b.empty());
        }
        CHECK(total == t.n_objects);
    }
}
