#pragma once

#include <variant>
#include <vector>

#include "prs/approx.hpp"

namespace prs {

enum class GranularityKind { CE, KG, CG };

inline const char* kind_name(GranularityKind k) {
    switch (k) {
        case GranularityKind::CE: return "ce";
        case GranularityKind::KG: return "kg";
        default: return "cg";
    }
}

// Which fitness a significance query ranks by.
enum class Measure { Eta, Mu, GEta, GMu };

// Exact for eta/mu, floating for the granularity-weighted forms.
using FitnessValue = std::variant<Fraction, double>;

double fitness_to_double(const FitnessValue& v);

// Expected granularity of a partition: block-size measure weighted by block
// probability. CE sums (|X|/n)·log2|X| (log2 1 = 0 exactly), KG sums |X|²/n²,
// CG sums (|X|/n)·C(|X|,2)/C(n,2) with the n = 1 value defined as 0.
double expected_granularity(const Partition& p, GranularityKind kind);

// Shared per-run state: the decision classes, the full-attribute distribution
// vectors and their fitness values, computed once and reused by every
// fitness/consistency query at these thresholds.
class Evaluator {
public:
    Evaluator(const DecisionTable& t, const Thresholds& th);
    // The evaluator only borrows the table; a temporary would dangle.
    Evaluator(DecisionTable&&, const Thresholds&) = delete;

    const DecisionTable& table() const { return *t_; }
    const Thresholds& thresholds() const { return th_; }
    AttrSet all_attrs() const { return full_attr_set(t_->n_attrs()); }
    const Partition& decision() const { return dec_; }
    const std::vector<ObjectSet>& c_vector(Target target) const {
        return target == Target::Lower ? lower_c_ : upper_c_;
    }

    Partition partition(AttrSet attrs) const { return partition_by(*t_, attrs); }

    // Formula evaluations on an explicit partition (the empty attribute set
    // enters here as the single-block partition).
    Fraction eta_formula(const Partition& p) const;
    Fraction mu_formula(const Partition& p) const;
    Fraction fitness_formula(const Partition& p, Target target) const {
        return target == Target::Lower ? eta_formula(p) : mu_formula(p);
    }

    // Public fitness of an attribute set. The empty set is pinned to the
    // greedy-loop base values: eta 0, mu 1, g_eta 0, g_mu EG(Π₁).
    Fraction eta(AttrSet attrs) const;
    Fraction mu(AttrSet attrs) const;
    double g_eta(AttrSet attrs, GranularityKind kind) const;
    double g_mu(AttrSet attrs, GranularityKind kind) const;

    Fraction eta_c() const { return eta_c_; }
    Fraction mu_c() const { return mu_c_; }
    Fraction fitness_c(Target target) const {
        return target == Target::Lower ? eta_c_ : mu_c_;
    }
    double eg_pi1(GranularityKind kind) const;

    DistributionVector distribution_of(AttrSet attrs, Target target) const;

    // Does attrs preserve the full-attribute distribution vector? Evaluated by
    // direct vector equality AND by exact fitness equality on the partition;
    // the equivalence theorem says the two can never disagree, and a
    // disagreement throws std::logic_error.
    bool consistent(AttrSet attrs, Target target) const;

    FitnessValue sig_add(unsigned a, AttrSet attrs, Measure which, GranularityKind kind) const;
    FitnessValue sig_single(unsigned a, Measure which, GranularityKind kind) const;

private:
    const DecisionTable* t_;
    Thresholds th_;
    Partition dec_;
    std::vector<ObjectSet> lower_c_;
    std::vector<ObjectSet> upper_c_;
    Fraction eta_c_;
    Fraction mu_c_;
    double eg_pi1_[3];
};

// Spec-shaped free functions; each builds the shared state on the fly.
Fraction eta(const DecisionTable& t, AttrSet attrs, const Thresholds& th);
Fraction mu(const DecisionTable& t, AttrSet attrs, const Thresholds& th);
double g_eta(const DecisionTable& t, AttrSet attrs, const Thresholds& th, GranularityKind kind);
double g_mu(const DecisionTable& t, AttrSet attrs, const Thresholds& th, GranularityKind kind);
FitnessValue sig_add(unsigned a, AttrSet attrs, const DecisionTable& t, const Thresholds& th,
                     Measure which, GranularityKind kind);
FitnessValue sig_single(unsigned a, const DecisionTable& t, const Thresholds& th,
                        Measure which, GranularityKind kind);

} // namespace prs
