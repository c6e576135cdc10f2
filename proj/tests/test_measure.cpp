#include "doctest.h"

#include <cmath>

#include "golden.hpp"
#include "prs/measure.hpp"

using namespace prs;

namespace {

const AttrSet kP1 = attr_bit(0) | attr_bit(1) | attr_bit(2); // table 1 P = {a1,a2,a3}
const AttrSet kQ1 = attr_bit(0) | attr_bit(1);               // table 1 Q = {a1,a2}
const AttrSet kP2 = full_attr_set(4);                        // table 2 P = {a1..a4}
const AttrSet kQ2 = full_attr_set(3);                        // table 2 Q = {a1..a3}

} // namespace

TEST_CASE("fitness on the reference walkthrough (corrected Q values)") {
    const DecisionTable tbl = golden::table1();
    Evaluator ev(tbl, golden::th64());
    CHECK(ev.eta_c() == Fraction(7, 22));
    CHECK(ev.mu_c() == Fraction(15, 22));
    CHECK(ev.eta(kP1) == Fraction(4, 22));
    CHECK(ev.mu(kP1) == Fraction(18, 22));
    // Q = {a1,a2} merges x1 with x8..x11 (equal values on a1 and a2), so no
    // Q-block fits inside a lower region and every Q-block meets every upper
    // region: eta 0, mu 1. (A sometimes-quoted 1/22, 21/22 pair comes from a
    // misprinted U/Q that splits x1 out of that block.)
    CHECK(ev.eta(kQ1) == Fraction(0));
    CHECK(ev.mu(kQ1) == Fraction(1));
    // The monotone ordering the walkthrough demonstrates.
    CHECK(ev.eta(kP1) >= ev.eta(kQ1));
    CHECK(ev.mu(kP1) <= ev.mu(kQ1));
}

TEST_CASE("fitness on the second reference table") {
    const DecisionTable tbl = golden::table2();
    Evaluator ev(tbl, golden::th64());
    CHECK(ev.eta_c() == Fraction(10, 24));
    CHECK(ev.mu_c() == Fraction(14, 24));
    CHECK(ev.eta(kP2) == Fraction(5, 24));
    CHECK(ev.eta(kQ2) == Fraction(5, 24));
    CHECK(ev.mu(kP2) == Fraction(19, 24));
    CHECK(ev.mu(kQ2) == Fraction(19, 24));
}

TEST_CASE("expected granularity: reference values and bounds") {
    DecisionTable t2 = golden::table2();
    Evaluator ev(t2, golden::th64());
    Partition p = partition_by(t2, kP2);
    Partition q = partition_by(t2, kQ2);
    CHECK(expected_granularity(p, GranularityKind::CE) ==
          doctest::Approx(1.4591479170272446).epsilon(1e-12));
    CHECK(expected_granularity(q, GranularityKind::CE) ==
          doctest::Approx(2.304290371200269).epsilon(1e-12));
    CHECK(ev.g_mu(kP2, GranularityKind::CE) ==
          doctest::Approx(1.1551587676465687).epsilon(1e-12));
    CHECK(ev.g_mu(kQ2, GranularityKind::CE) ==
          doctest::Approx(1.824229877200213).epsilon(1e-12));

    DecisionTable t1 = golden::table1();
    Partition c1 = partition_by(t1, full_attr_set(6));
    CHECK(expected_granularity(c1, GranularityKind::KG) ==
          doctest::Approx(17.0 / 121.0).epsilon(1e-12));
    CHECK(expected_granularity(c1, GranularityKind::CG) ==
          doctest::Approx(6.0 / 605.0).epsilon(1e-12));
}

TEST_CASE("granularity extremes: discrete and single-block partitions") {
    // Hand-built partitions: 4 singletons, then one 4-block.
    Partition discrete;
    discrete.n_objects = 4;
    for (std::uint32_t i = 0; i < 4; ++i) {
        discrete.blocks.push_back(ObjectSet::of(4, {i}));
        discrete.block_sizes.push_back(1);
        discrete.block_of.push_back(i);
    }
    CHECK(expected_granularity(discrete, GranularityKind::CE) == 0.0);
    CHECK(expected_granularity(discrete, GranularityKind::KG) == doctest::Approx(0.25));
    CHECK(expected_granularity(discrete, GranularityKind::CG) == 0.0);

    Partition whole;
    whole.n_objects = 4;
    ObjectSet all(4);
    for (std::uint32_t i = 0; i < 4; ++i) all.set(i);
    whole.blocks.push_back(all);
    whole.block_sizes.push_back(4);
    whole.block_of = {0, 0, 0, 0};
    CHECK(expected_granularity(whole, GranularityKind::CE) == doctest::Approx(2.0));
    CHECK(expected_granularity(whole, GranularityKind::KG) == doctest::Approx(1.0));
    CHECK(expected_granularity(whole, GranularityKind::CG) == doctest::Approx(1.0));

    // n = 1: CG is defined as 0, KG hits its upper bound 1/n = 1.
    Partition unit;
    unit.n_objects = 1;
    unit.blocks.push_back(ObjectSet::of(1, {0}));
    unit.block_sizes.push_back(1);
    unit.block_of = {0};
    CHECK(expected_granularity(unit, GranularityKind::CE) == 0.0);
    CHECK(expected_granularity(unit, GranularityKind::KG) == doctest::Approx(1.0));
    CHECK(expected_granularity(unit, GranularityKind::CG) == 0.0);
}

TEST_CASE("empty attribute set overrides: the greedy-loop base values") {
    const DecisionTable tbl = golden::table1();
    Evaluator ev(tbl, golden::th64());
    CHECK(ev.eta(0) == Fraction(0));
    CHECK(ev.mu(0) == Fraction(1));
    for (auto kind : {GranularityKind::CE, GranularityKind::KG, GranularityKind::CG}) {
        CHECK(ev.g_eta(0, kind) == 0.0);
        CHECK(ev.g_mu(0, kind) == ev.eg_pi1(kind));
    }
    CHECK(ev.eg_pi1(GranularityKind::CE) == doctest::Approx(3.4594316186372973));
    CHECK(ev.eg_pi1(GranularityKind::KG) == doctest::Approx(1.0));
    CHECK(ev.eg_pi1(GranularityKind::CG) == doctest::Approx(1.0));
}

TEST_CASE("modified fitness on singletons: frozen reference numbers") {
    const DecisionTable tbl = golden::table1();
    Evaluator ev(tbl, golden::th64());
    // Every single attribute has eta 0 on this table, so Geta reduces to
    // EG(whole) - CE(U/{a}); these are the ranking numbers the walkthrough
    // uses.
    CHECK(ev.eta(attr_bit(0)) == Fraction(0));
    CHECK(ev.eta(attr_bit(1)) == Fraction(0));
    CHECK(ev.g_eta(attr_bit(0), GranularityKind::CE) ==
          doctest::Approx(0.9940302114769568).epsilon(1e-12));
    CHECK(ev.g_eta(attr_bit(1), GranularityKind::CE) ==
          doctest::Approx(0.8453509366224368).epsilon(1e-12));
    CHECK(ev.g_eta(attr_bit(4), GranularityKind::CE) ==
          doctest::Approx(0.94566030460064).epsilon(1e-12));
    // Every single attribute has mu 1, so Gmu({a}) = CE(U/{a}).
    CHECK(ev.mu(attr_bit(0)) == Fraction(1));
    CHECK(ev.g_mu(attr_bit(0), GranularityKind::CE) ==
          doctest::Approx(2.4654014071603405).epsilon(1e-12));
    CHECK(ev.g_mu(attr_bit(1), GranularityKind::CE) ==
          doctest::Approx(2.6140806820148605).epsilon(1e-12));
}

TEST_CASE("significance: directions and the single/add identity") {
    const DecisionTable tbl = golden::table1();
    Evaluator ev(tbl, golden::th64());
    const AttrSet core = attr_bit(0) | attr_bit(2);
    for (unsigned a = 0; a < 6; ++a) {
        for (auto kind : {GranularityKind::CE, GranularityKind::KG, GranularityKind::CG}) {
            for (auto which : {Measure::Eta, Measure::Mu, Measure::GEta, Measure::GMu}) {
                const FitnessValue s = ev.sig_single(a, which, kind);
                const FitnessValue s0 = ev.sig_add(a, 0, which, kind);
                CHECK(fitness_to_double(s) == fitness_to_double(s0));
            }
        }
        // eta and mu significances are exact fraction differences and
        // monotonicity makes them non-negative.
        CHECK(std::get<Fraction>(ev.sig_add(a, core, Measure::Eta, GranularityKind::CE)) >=
              Fraction(0));
        CHECK(std::get<Fraction>(ev.sig_add(a, core, Measure::Mu, GranularityKind::CE)) >=
              Fraction(0));
    }
    // The walkthrough's zero-vs-differentiating contrast: eta sees nothing in
    // single attributes here, the granularity-weighted form does.
    for (unsigned a = 0; a < 6; ++a)
        CHECK(std::get<Fraction>(ev.sig_single(a, Measure::Eta, GranularityKind::CE)) ==
              Fraction(0));
    const double g_a1 =
        fitness_to_double(ev.sig_single(0, Measure::GEta, GranularityKind::CE));
    const double g_a2 =
        fitness_to_double(ev.sig_single(1, Measure::GEta, GranularityKind::CE));
    CHECK(g_a1 != g_a2);
    CHECK(g_a1 > g_a2);
}

TEST_CASE("constant attribute: zero modified significance") {
    // a1 splits usefully, a2 is constant. U/{a2} is the whole universe, so
    // Geta({a2}) = EG(pi1)*eta({a2}) = 0 and Gmu-significance is 0 as well.
    DecisionTable t = golden::make_table(
        {{0, 0, 1, 1, 2, 2}, {0, 0, 0, 0, 0, 0}}, {0, 0, 1, 1, 2, 2});
    Evaluator ev(t, golden::th64());
    for (auto kind : {GranularityKind::CE, GranularityKind::KG, GranularityKind::CG}) {
        CHECK(fitness_to_double(ev.sig_single(1, Measure::GEta, kind)) ==
              doctest::Approx(0.0));
        CHECK(fitness_to_double(ev.sig_single(1, Measure::GMu, kind)) ==
              doctest::Approx(0.0));
        CHECK(fitness_to_double(ev.sig_single(0, Measure::GEta, kind)) >
              fitness_to_double(ev.sig_single(1, Measure::GEta, kind)));
    }
}

TEST_CASE("duplicated attributes have identical significance") {
    DecisionTable t = golden::make_table(
        {{0, 1, 0, 1, 2, 2}, {0, 1, 0, 1, 2, 2}, {0, 0, 1, 1, 0, 1}}, {0, 1, 0, 1, 1, 0});
    Evaluator ev(t, golden::th64());
    for (auto kind : {GranularityKind::CE, GranularityKind::KG, GranularityKind::CG})
        for (auto which : {Measure::Eta, Measure::Mu, Measure::GEta, Measure::GMu})
            CHECK(fitness_to_double(ev.sig_single(0, which, kind)) ==
                  fitness_to_double(ev.sig_single(1, which, kind)));
}

TEST_CASE("consistency: dual-route agreement on the reference table") {
    const DecisionTable tbl = golden::table1();
    Evaluator ev(tbl, golden::th64());
    CHECK(ev.consistent(full_attr_set(6), Target::Lower));
    CHECK(ev.consistent(full_attr_set(6), Target::Upper));
    // {a1,a3,a5,a6} preserves the lower distribution, {a1,a2} does not.
    CHECK(ev.consistent(attr_bit(0) | attr_bit(2) | attr_bit(4) | attr_bit(5), Target::Lower));
    CHECK_FALSE(ev.consistent(kQ1, Target::Lower));
    CHECK_FALSE(ev.consistent(0, Target::Lower));
    // Table with a single decision class: even the empty set preserves it.
    DecisionTable mono = golden::make_table({{0, 1, 0}}, {0, 0, 0});
    Evaluator evm(mono, golden::th64());
    CHECK(evm.consistent(0, Target::Lower));
    CHECK(evm.consistent(0, Target::Upper));
}

TEST_CASE("free-function wrappers match the evaluator") {
    DecisionTable t = golden::table1();
    Thresholds th = golden::th64();
    Evaluator ev(t, th);
    CHECK(eta(t, kP1, th) == ev.eta(kP1));
    CHECK(mu(t, kP1, th) == ev.mu(kP1));
    CHECK(g_eta(t, kP1, th, GranularityKind::KG) == ev.g_eta(kP1, GranularityKind::KG));
    CHECK(g_mu(t, kP1, th, GranularityKind::CG) == ev.g_mu(kP1, GranularityKind::CG));
    CHECK(fitness_to_double(sig_single(0, t, th, Measure::GEta, GranularityKind::CE)) ==
          fitness_to_double(ev.sig_single(0, Measure::GEta, GranularityKind::CE)));
    CHECK(fitness_to_double(sig_add(1, kP1, t, th, Measure::Mu, GranularityKind::CE)) ==
          fitness_to_double(ev.sig_add(1, kP1, Measure::Mu, GranularityKind::CE)));
}
