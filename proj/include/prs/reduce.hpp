#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prs/measure.hpp"

namespace prs {

enum class Algorithm { AddDel, Del };

inline const char* algorithm_name(Algorithm a) {
    return a == Algorithm::AddDel ? "add-del" : "del";
}

struct ReductStep {
    enum class Op : std::uint8_t { Seed, Add, Remove };
    Op op;
    unsigned attr;
};

struct ReductResult {
    AttrSet attrs = 0;
    Target target = Target::Lower;
    GranularityKind kind = GranularityKind::CE;
    Algorithm algorithm = Algorithm::AddDel;
    AttrSet core = 0;
    Fraction fitness_c;       // eta(C) or mu(C) per target
    Fraction fitness_reduct;  // same measure on the result
    std::vector<ReductStep> trace;
    bool verified = false;    // consistent + single-removal minimal
};

// Is attrs a distribution-preserving set for the target?  Both routes (vector
// equality, exact fitness equality) are evaluated and cross-checked inside.
bool is_consistent_set(const DecisionTable& t, AttrSet attrs, const Thresholds& th, Target target);

// Attributes whose single removal from C breaks preservation. Subset of every
// reduct.
AttrSet compute_core(const Evaluator& ev, Target target);
AttrSet compute_core(const DecisionTable& t, const Thresholds& th, Target target);

// Greedy grow-then-prune: seed with the core, repeatedly add the candidate
// whose augmented set scores the highest modified fitness (ties: smallest
// attribute id) until the distribution is preserved, then prune attributes in
// ascending single-attribute modified-fitness order.
ReductResult reduce_addition_deletion(const Evaluator& ev, Target target, GranularityKind kind);
ReductResult reduce_addition_deletion(const DecisionTable& t, const Thresholds& th,
                                      Target target, GranularityKind kind);

// Prune-only: start from C, visit attributes in ascending single-attribute
// modified-fitness order (ties: smallest id), drop each one whose removal
// keeps the distribution preserved.
ReductResult reduce_deletion(const Evaluator& ev, Target target, GranularityKind kind);
ReductResult reduce_deletion(const DecisionTable& t, const Thresholds& th,
                             Target target, GranularityKind kind);

// Ranking baseline: the k individually most significant attributes by
// sig_single of the modified fitness, descending (ties: smallest id). No
// joint-sufficiency guarantee — that is the point of the comparison.
AttrSet rbar_select(const Evaluator& ev, Target target, GranularityKind kind, unsigned k);
AttrSet rbar_select(const DecisionTable& t, const Thresholds& th, Target target,
                    GranularityKind kind, unsigned k);

// Exhaustive oracle: every minimal consistent subset, ascending by size then
// mask. Prunes supersets of found reducts (monotonicity makes that sound).
// Refuses tables wider than max_attrs.
std::vector<AttrSet> enumerate_all_reducts(const Evaluator& ev, Target target,
                                           unsigned max_attrs = 20);
std::vector<AttrSet> enumerate_all_reducts(const DecisionTable& t, const Thresholds& th,
                                           Target target, unsigned max_attrs = 20);

// consistent + every single-attribute removal inconsistent (which monotone
// fitness makes equivalent to full minimality).
bool verify_reduct(const Evaluator& ev, AttrSet attrs, Target target);

std::string attrs_to_string(const DecisionTable& t, AttrSet attrs, const std::string& sep = "|");

} // namespace prs
