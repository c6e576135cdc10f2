#include "prs/reduce.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace prs {

namespace {

// The greedy selection key: the modified fitness of the whole candidate set.
// For the lower target this orders candidates exactly like the additive
// significance (the minuend is shared); keying the upper target the same way
// keeps both phases uniform and reproduces the reference runs.
double set_key(const Evaluator& ev, AttrSet attrs, Target target, GranularityKind kind) {
    return target == Target::Lower ? ev.g_eta(attrs, kind) : ev.g_mu(attrs, kind);
}

// Attribute visit order for the pruning phases: ascending single-attribute
// modified fitness, ties toward the smallest id.
std::vector<unsigned> pruning_order(const Evaluator& ev, AttrSet attrs, Target target,
                                    GranularityKind kind) {
    std::vector<unsigned> ids = attr_ids(attrs);
    std::vector<double> key(ev.table().n_attrs(), 0.0);
    for (unsigned a : ids) key[a] = set_key(ev, attr_bit(a), target, kind);
    std::stable_sort(ids.begin(), ids.end(),
                     [&](unsigned x, unsigned y) { return key[x] < key[y]; });
    return ids;
}

ReductResult finish(const Evaluator& ev, ReductResult r, Target target) {
    r.fitness_c = ev.fitness_c(target);
    r.fitness_reduct = ev.fitness_formula(ev.partition(r.attrs), target);
    r.verified = verify_reduct(ev, r.attrs, target);
    return r;
}

} // namespace

bool is_consistent_set(const DecisionTable& t, AttrSet attrs, const Thresholds& th,
                       Target target) {
    return Evaluator(t, th).consistent(attrs, target);
}

AttrSet compute_core(const Evaluator& ev, Target target) {
    const AttrSet all = ev.all_attrs();
    AttrSet core = 0;
    for (unsigned a : attr_ids(all))
        if (!ev.consistent(all & ~attr_bit(a), target)) core |= attr_bit(a);
    return core;
}

AttrSet compute_core(const DecisionTable& t, const Thresholds& th, Target target) {
    return compute_core(Evaluator(t, th), target);
}

ReductResult reduce_addition_deletion(const Evaluator& ev, Target target, GranularityKind kind) {
    ReductResult r;
    r.target = target;
    r.kind = kind;
    r.algorithm = Algorithm::AddDel;
    r.core = compute_core(ev, target);
    r.attrs = r.core;
    for (unsigned a : attr_ids(r.core)) r.trace.push_back({ReductStep::Op::Seed, a});

    if (ev.consistent(r.attrs, target))
        return finish(ev, std::move(r), target); // the core already preserves everything

    const AttrSet all = ev.all_attrs();
    while (!ev.consistent(r.attrs, target)) {
        int best = -1;
        double best_key = 0.0;
        for (unsigned a : attr_ids(all & ~r.attrs)) {
            const double key = set_key(ev, r.attrs | attr_bit(a), target, kind);
            if (best < 0 || key > best_key) {
                best = static_cast<int>(a);
                best_key = key;
            }
        }
        r.attrs |= attr_bit(static_cast<unsigned>(best));
        r.trace.push_back({ReductStep::Op::Add, static_cast<unsigned>(best)});
    }

    for (unsigned a : pruning_order(ev, r.attrs, target, kind)) {
        if (ev.consistent(r.attrs & ~attr_bit(a), target)) {
            r.attrs &= ~attr_bit(a);
            r.trace.push_back({ReductStep::Op::Remove, a});
        }
    }
    return finish(ev, std::move(r), target);
}

ReductResult reduce_addition_deletion(const DecisionTable& t, const Thresholds& th,
                                      Target target, GranularityKind kind) {
    return reduce_addition_deletion(Evaluator(t, th), target, kind);
}

ReductResult reduce_deletion(const Evaluator& ev, Target target, GranularityKind kind) {
    ReductResult r;
    r.target = target;
    r.kind = kind;
    r.algorithm = Algorithm::Del;
    r.core = compute_core(ev, target);
    r.attrs = ev.all_attrs();

    for (unsigned a : pruning_order(ev, r.attrs, target, kind)) {
        if (ev.consistent(r.attrs & ~attr_bit(a), target)) {
            r.attrs &= ~attr_bit(a);
            r.trace.push_back({ReductStep::Op::Remove, a});
        }
    }
    return finish(ev, std::move(r), target);
}

ReductResult reduce_deletion(const DecisionTable& t, const Thresholds& th,
                             Target target, GranularityKind kind) {
    return reduce_deletion(Evaluator(t, th), target, kind);
}

AttrSet rbar_select(const Evaluator& ev, Target target, GranularityKind kind, unsigned k) {
    const std::size_t m = ev.table().n_attrs();
    if (k < 1 || k > m)
        throw ValidationError("rbar: k must be in 1.." + std::to_string(m));

    const Measure which = target == Target::Lower ? Measure::GEta : Measure::GMu;
    std::vector<unsigned> ids(m);
    std::iota(ids.begin(), ids.end(), 0u);
    std::vector<double> sig(m);
    for (unsigned a : ids) sig[a] = fitness_to_double(ev.sig_single(a, which, kind));
    std::stable_sort(ids.begin(), ids.end(),
                     [&](unsigned x, unsigned y) { return sig[x] > sig[y]; });

    AttrSet out = 0;
    for (unsigned i = 0; i < k; ++i) out |= attr_bit(ids[i]);
    return out;
}

AttrSet rbar_select(const DecisionTable& t, const Thresholds& th, Target target,
                    GranularityKind kind, unsigned k) {
    return rbar_select(Evaluator(t, th), target, kind, k);
}

std::vector<AttrSet> enumerate_all_reducts(const Evaluator& ev, Target target,
                                           unsigned max_attrs) {
    const std::size_t m = ev.table().n_attrs();
    if (m > max_attrs)
        throw ValidationError("oracle limited to " + std::to_string(max_attrs) +
                              " attributes (table has " + std::to_string(m) + ")");

    // Subsets in ascending (size, mask) order. A consistent set met in this
    // order is minimal unless it contains an earlier reduct: any consistent
    // proper subset would itself contain a minimal consistent set, already
    // found. Inconsistent sets never resurface smaller, so nothing is missed.
    std::vector<std::uint32_t> masks(std::size_t(1) << m);
    std::iota(masks.begin(), masks.end(), 0u);
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    std::vector<AttrSet> reducts;
    for (std::uint32_t mask : masks) {
        bool contains_reduct = false;
        for (AttrSet red : reducts)
            if ((mask & red) == red) { contains_reduct = true; break; }
        if (contains_reduct) continue;
        if (ev.consistent(mask, target)) reducts.push_back(mask);
    }
    return reducts;
}

std::vector<AttrSet> enumerate_all_reducts(const DecisionTable& t, const Thresholds& th,
                                           Target target, unsigned max_attrs) {
    return enumerate_all_reducts(Evaluator(t, th), target, max_attrs);
}

bool verify_reduct(const Evaluator& ev, AttrSet attrs, Target target) {
    if (!ev.consistent(attrs, target)) return false;
    for (unsigned a : attr_ids(attrs))
        if (ev.consistent(attrs & ~attr_bit(a), target)) return false;
    return true;
}

std::string attrs_to_string(const DecisionTable& t, AttrSet attrs, const std::string& sep) {
    std::string out;
    for (unsigned a : attr_ids(attrs)) {
        if (!out.empty()) out += sep;
        out += t.attrs[a].name;
    }
    return out;
}

} // namespace prs
