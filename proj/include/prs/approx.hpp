#pragma once

#include <vector>

#include "prs/fraction.hpp"
#include "prs/objectset.hpp"
#include "prs/partition.hpp"

namespace prs {

// Probabilistic thresholds, 0 <= beta < alpha <= 1. alpha = 1, beta = 0
// recovers the classical approximations.
struct Thresholds {
    Fraction alpha;
    Fraction beta;

    Thresholds(Fraction a, Fraction b) : alpha(a), beta(b) {
        if (!(Fraction(0) <= beta && beta < alpha && alpha <= Fraction(1)))
            throw ValidationError("thresholds must satisfy 0 <= beta < alpha <= 1 (got alpha=" +
                                  a.str() + ", beta=" + b.str() + ")");
    }
};

enum class Target { Lower, Upper };

inline const char* target_name(Target t) { return t == Target::Lower ? "lower" : "upper"; }

// Per-decision-class approximation sets of one target at one threshold pair.
struct DistributionVector {
    Target target = Target::Lower;
    std::vector<ObjectSet> per_class;

    friend bool operator==(const DistributionVector& a, const DistributionVector& b) {
        return a.target == b.target && a.per_class == b.per_class;
    }
    friend bool operator!=(const DistributionVector& a, const DistributionVector& b) {
        return !(a == b);
    }
};

// Classical approximations: union of blocks contained in / intersecting x.
ObjectSet lower_approx(const Partition& p, const ObjectSet& x);
ObjectSet upper_approx(const Partition& p, const ObjectSet& x);

// Probabilistic approximations: membership by conditional probability,
// >= alpha for the lower set, strictly > beta for the upper set. Comparisons
// are exact integer cross-multiplications.
ObjectSet prob_lower(const Partition& p, const ObjectSet& cls, const Thresholds& t);
ObjectSet prob_upper(const Partition& p, const ObjectSet& cls, const Thresholds& t);

// Union of per-class classical lower approximations.
ObjectSet positive_region(const Partition& p, const Partition& dec);

// Union of per-class probabilistic lower approximations. NOT monotone under
// partition refinement: coarsening can grow it (tested with a fixed witness).
ObjectSet prob_positive_region(const Partition& p, const Partition& dec, const Thresholds& t);

// The distribution vector of U/attrs: one approximation set per decision
// class, class order fixed by the decision partition.
DistributionVector distribution(const DecisionTable& t, AttrSet attrs,
                                const Thresholds& th, Target target);

} // namespace prs
