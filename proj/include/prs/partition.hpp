#pragma once

#include <cstdint>
#include <vector>

#include "prs/fraction.hpp"
#include "prs/objectset.hpp"
#include "prs/table.hpp"

namespace prs {

// Bitmask over condition-attribute ids. 64 attributes is far beyond anything
// the reducers or the subset oracle are asked to handle.
using AttrSet = std::uint64_t;

inline AttrSet attr_bit(unsigned id) { return AttrSet(1) << id; }
inline bool attr_in(AttrSet s, unsigned id) { return (s >> id) & 1; }
inline AttrSet full_attr_set(std::size_t m) {
    return m >= 64 ? ~AttrSet(0) : (AttrSet(1) << m) - 1;
}
inline int attr_count(AttrSet s) { return std::popcount(s); }
std::vector<unsigned> attr_ids(AttrSet s);

// Equivalence classes of the indiscernibility relation. Blocks are kept in
// canonical order (ascending smallest member), which a first-occurrence scan
// over objects 0..n-1 produces for free.
struct Partition {
    std::size_t n_objects = 0;
    std::vector<ObjectSet> blocks;
    std::vector<std::size_t> block_sizes;
    std::vector<std::uint32_t> block_of; // object index -> block index

    std::size_t n_blocks() const { return blocks.size(); }
};

// U/attrs: objects share a block iff they agree on every attribute in attrs.
// attrs = 0 gives the single-block partition (the coarsest one).
Partition partition_by(const DecisionTable& t, AttrSet attrs);

// U/D with classes ordered by ascending decision code.
Partition decision_partition(const DecisionTable& t);

// Every block of p contained in some block of q. Throws on universe mismatch.
bool is_finer(const Partition& p, const Partition& q);

// |block ∩ cls| / |block|, exact. Throws on an empty block.
Fraction cond_prob(const ObjectSet& block, const ObjectSet& cls);

} // namespace prs
