#include "prs/partition.hpp"

#include <unordered_map>

namespace prs {

std::vector<unsigned> attr_ids(AttrSet s) {
    std::vector<unsigned> out;
    while (s) {
        unsigned id = static_cast<unsigned>(std::countr_zero(s));
        out.push_back(id);
        s &= s - 1;
    }
    return out;
}

namespace {

struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& key) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint32_t v : key) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return h;
    }
};

Partition from_block_assignment(std::size_t n, const std::vector<std::uint32_t>& block_of,
                                std::size_t n_blocks) {
    Partition p;
    p.n_objects = n;
    p.block_of = block_of;
    p.blocks.assign(n_blocks, ObjectSet(n));
    p.block_sizes.assign(n_blocks, 0);
    for (std::size_t i = 0; i < n; ++i) {
        p.blocks[block_of[i]].set(i);
        ++p.block_sizes[block_of[i]];
    }
    return p;
}

} // namespace

Partition partition_by(const DecisionTable& t, AttrSet attrs) {
    const std::size_t n = t.n_objects;
    const std::vector<unsigned> ids = attr_ids(attrs);

    std::vector<std::uint32_t> block_of(n, 0);
    if (ids.empty())
        return from_block_assignment(n, block_of, n == 0 ? 0 : 1);

    // First-occurrence scan: block ids come out ordered by smallest member,
    // which is exactly the canonical order.
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, KeyHash> seen;
    seen.reserve(n * 2);
    std::uint32_t next = 0;
    std::vector<std::uint32_t> key(ids.size());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < ids.size(); ++j) key[j] = t.cond[ids[j]][i];
        auto [it, inserted] = seen.emplace(key, next);
        if (inserted) ++next;
        block_of[i] = it->second;
    }
    return from_block_assignment(n, block_of, next);
}

Partition decision_partition(const DecisionTable& t) {
    // Classes ordered by ascending decision code; every code occurs.
    return from_block_assignment(t.n_objects, t.dec, t.n_classes);
}

bool is_finer(const Partition& p, const Partition& q) {
    if (p.n_objects != q.n_objects)
        throw ValidationError("is_finer: partitions over different universes");
    for (const ObjectSet& block : p.blocks) {
        auto members = block.members();
        std::uint32_t qb = q.block_of[members.front()];
        for (std::uint32_t m : members)
            if (q.block_of[m] != qb) return false;
    }
    return true;
}

Fraction cond_prob(const ObjectSet& block, const ObjectSet& cls) {
    const std::size_t size = block.count();
    if (size == 0) throw ValidationError("cond_prob: empty block");
    return Fraction(static_cast<std::int64_t>(block.intersection_count(cls)),
                    static_cast<std::int64_t>(size));
}

} // namespace prs
