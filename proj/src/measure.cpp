#include "prs/measure.hpp"

#include <cmath>
#include <stdexcept>

namespace prs {

double fitness_to_double(const FitnessValue& v) {
    if (std::holds_alternative<Fraction>(v)) return std::get<Fraction>(v).to_double();
    return std::get<double>(v);
}

double expected_granularity(const Partition& p, GranularityKind kind) {
    const double n = static_cast<double>(p.n_objects);
    double sum = 0.0;
    switch (kind) {
        case GranularityKind::CE:
            for (std::size_t s : p.block_sizes) {
                if (s > 1) sum += (static_cast<double>(s) / n) * std::log2(static_cast<double>(s));
                // |X| = 1 contributes exactly 0
            }
            return sum;
        case GranularityKind::KG:
            for (std::size_t s : p.block_sizes) {
                const double ds = static_cast<double>(s);
                sum += ds * ds;
            }
            return sum / (n * n);
        case GranularityKind::CG: {
            if (p.n_objects <= 1) return 0.0;
            const double pairs_u = n * (n - 1.0) / 2.0;
            for (std::size_t s : p.block_sizes) {
                const double ds = static_cast<double>(s);
                sum += (ds / n) * (ds * (ds - 1.0) / 2.0) / pairs_u;
            }
            return sum;
        }
    }
    throw std::logic_error("unreachable granularity kind");
}

Evaluator::Evaluator(const DecisionTable& t, const Thresholds& th)
    : t_(&t), th_(th), dec_(decision_partition(t)) {
    if (t.n_objects == 0) throw ValidationError("empty table");
    const Partition part_c = partition_by(t, full_attr_set(t.n_attrs()));
    lower_c_.reserve(dec_.blocks.size());
    upper_c_.reserve(dec_.blocks.size());
    for (const ObjectSet& cls : dec_.blocks) {
        lower_c_.push_back(prob_lower(part_c, cls, th_));
        upper_c_.push_back(prob_upper(part_c, cls, th_));
    }
    eta_c_ = eta_formula(part_c);
    mu_c_ = mu_formula(part_c);

    Partition pi1 = partition_by(t, 0);
    eg_pi1_[0] = expected_granularity(pi1, GranularityKind::CE);
    eg_pi1_[1] = expected_granularity(pi1, GranularityKind::KG);
    eg_pi1_[2] = expected_granularity(pi1, GranularityKind::CG);
}

double Evaluator::eg_pi1(GranularityKind kind) const {
    return eg_pi1_[static_cast<int>(kind)];
}

Fraction Evaluator::eta_formula(const Partition& p) const {
    std::int64_t total = 0;
    for (const ObjectSet& set_i : lower_c_)
        total += static_cast<std::int64_t>(lower_approx(p, set_i).count());
    return Fraction(total, static_cast<std::int64_t>(t_->n_objects * dec_.blocks.size()));
}

Fraction Evaluator::mu_formula(const Partition& p) const {
    std::int64_t total = 0;
    for (const ObjectSet& set_i : upper_c_)
        total += static_cast<std::int64_t>(upper_approx(p, set_i).count());
    return Fraction(total, static_cast<std::int64_t>(t_->n_objects * dec_.blocks.size()));
}

Fraction Evaluator::eta(AttrSet attrs) const {
    if (attrs == 0) return Fraction(0);
    return eta_formula(partition(attrs));
}

Fraction Evaluator::mu(AttrSet attrs) const {
    if (attrs == 0) return Fraction(1);
    return mu_formula(partition(attrs));
}

double Evaluator::g_eta(AttrSet attrs, GranularityKind kind) const {
    if (attrs == 0) return 0.0;
    const Partition p = partition(attrs);
    const Fraction complement = Fraction(1) - eta_formula(p);
    return eg_pi1(kind) - complement.to_double() * expected_granularity(p, kind);
}

double Evaluator::g_mu(AttrSet attrs, GranularityKind kind) const {
    if (attrs == 0) return eg_pi1(kind);
    const Partition p = partition(attrs);
    return mu_formula(p).to_double() * expected_granularity(p, kind);
}

DistributionVector Evaluator::distribution_of(AttrSet attrs, Target target) const {
    const Partition p = partition(attrs);
    DistributionVector v;
    v.target = target;
    v.per_class.reserve(dec_.blocks.size());
    for (const ObjectSet& cls : dec_.blocks)
        v.per_class.push_back(target == Target::Lower ? prob_lower(p, cls, th_)
                                                      : prob_upper(p, cls, th_));
    return v;
}

bool Evaluator::consistent(AttrSet attrs, Target target) const {
    const Partition p = partition(attrs);
    const std::vector<ObjectSet>& ref =
        target == Target::Lower ? lower_c_ : upper_c_;

    bool vectors_equal = true;
    for (std::size_t i = 0; i < dec_.blocks.size() && vectors_equal; ++i) {
        const ObjectSet approx =
            target == Target::Lower ? prob_lower(p, dec_.blocks[i], th_)
                                    : prob_upper(p, dec_.blocks[i], th_);
        vectors_equal = approx == ref[i];
    }

    const Fraction fit = fitness_formula(p, target);
    const bool fitness_equal = fit == fitness_c(target);
    if (vectors_equal != fitness_equal)
        throw std::logic_error("consistency cross-check diverged: vector route says " +
                               std::to_string(vectors_equal) + ", fitness route says " +
                               std::to_string(fitness_equal));
    return vectors_equal;
}

FitnessValue Evaluator::sig_add(unsigned a, AttrSet attrs, Measure which,
                                GranularityKind kind) const {
    const AttrSet with = attrs | attr_bit(a);
    switch (which) {
        case Measure::Eta: return eta(with) - eta(attrs);
        case Measure::Mu: return mu(attrs) - mu(with);
        case Measure::GEta: return g_eta(with, kind) - g_eta(attrs, kind);
        case Measure::GMu: return g_mu(attrs, kind) - g_mu(with, kind);
    }
    throw std::logic_error("unreachable measure");
}

FitnessValue Evaluator::sig_single(unsigned a, Measure which, GranularityKind kind) const {
    // Identical to sig_add against the empty set: the empty-set fitness
    // overrides are exactly the base values these singletons subtract.
    return sig_add(a, 0, which, kind);
}

Fraction eta(const DecisionTable& t, AttrSet attrs, const Thresholds& th) {
    return Evaluator(t, th).eta(attrs);
}
Fraction mu(const DecisionTable& t, AttrSet attrs, const Thresholds& th) {
    return Evaluator(t, th).mu(attrs);
}
double g_eta(const DecisionTable& t, AttrSet attrs, const Thresholds& th, GranularityKind kind) {
    return Evaluator(t, th).g_eta(attrs, kind);
}
double g_mu(const DecisionTable& t, AttrSet attrs, const Thresholds& th, GranularityKind kind) {
    return Evaluator(t, th).g_mu(attrs, kind);
}
FitnessValue sig_add(unsigned a, AttrSet attrs, const DecisionTable& t, const Thresholds& th,
                     Measure which, GranularityKind kind) {
    return Evaluator(t, th).sig_add(a, attrs, which, kind);
}
FitnessValue sig_single(unsigned a, const DecisionTable& t, const Thresholds& th,
                        Measure which, GranularityKind kind) {
    return Evaluator(t, th).sig_single(a, which, kind);
}

} // namespace prs
