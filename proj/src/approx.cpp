#include "prs/approx.hpp"

namespace prs {

ObjectSet lower_approx(const Partition& p, const ObjectSet& x) {
    ObjectSet out(p.n_objects);
    for (const ObjectSet& b : p.blocks)
        if (b.is_subset_of(x)) out |= b;
    return out;
}

ObjectSet upper_approx(const Partition& p, const ObjectSet& x) {
    ObjectSet out(p.n_objects);
    for (const ObjectSet& b : p.blocks)
        if (b.intersects(x)) out |= b;
    return out;
}

ObjectSet prob_lower(const Partition& p, const ObjectSet& cls, const Thresholds& t) {
    // |B ∩ cls| / |B| >= alpha  <=>  |B ∩ cls| * alpha.den >= alpha.num * |B|
    ObjectSet out(p.n_objects);
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        const std::int64_t inter =
            static_cast<std::int64_t>(p.blocks[i].intersection_count(cls));
        const std::int64_t size = static_cast<std::int64_t>(p.block_sizes[i]);
        if (inter * t.alpha.den() >= t.alpha.num() * size) out |= p.blocks[i];
    }
    return out;
}

ObjectSet prob_upper(const Partition& p, const ObjectSet& cls, const Thresholds& t) {
    // Strict: |B ∩ cls| / |B| > beta
    ObjectSet out(p.n_objects);
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        const std::int64_t inter =
            static_cast<std::int64_t>(p.blocks[i].intersection_count(cls));
        const std::int64_t size = static_cast<std::int64_t>(p.block_sizes[i]);
        if (inter * t.beta.den() > t.beta.num() * size) out |= p.blocks[i];
    }
    return out;
}

ObjectSet positive_region(const Partition& p, const Partition& dec) {
    ObjectSet out(p.n_objects);
    for (const ObjectSet& cls : dec.blocks) out |= lower_approx(p, cls);
    return out;
}

ObjectSet prob_positive_region(const Partition& p, const Partition& dec, const Thresholds& t) {
    ObjectSet out(p.n_objects);
    for (const ObjectSet& cls : dec.blocks) out |= prob_lower(p, cls, t);
    return out;
}

DistributionVector distribution(const DecisionTable& t, AttrSet attrs,
                                const Thresholds& th, Target target) {
    const Partition p = partition_by(t, attrs);
    const Partition dec = decision_partition(t);
    DistributionVector v;
    v.target = target;
    v.per_class.reserve(dec.blocks.size());
    for (const ObjectSet& cls : dec.blocks)
        v.per_class.push_back(target == Target::Lower ? prob_lower(p, cls, th)
                                                      : prob_upper(p, cls, th));
    return v;
}

} // namespace prs
