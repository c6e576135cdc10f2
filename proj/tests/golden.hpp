#pragma once

// Shared fixtures: the two reference decision tables with hand-checked
// expected values, plus direct-construction helpers for synthetic and random
// tables. Everything here is deterministic.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "prs/measure.hpp"
#include "prs/table.hpp"

namespace golden {

// 11 objects, six 0/1 condition attributes, binary decision.
// U/C = {x1}{x2}{x3,x4}{x5}{x6}{x7}{x8,x9}{x10,x11} (1-based labels).
inline const char* kTable1Csv =
    "a1,a2,a3,a4,a5,a6,d\n"
    "1,1,1,1,0,0,0\n"
    "0,1,1,0,1,0,0\n"
    "0,1,1,1,0,0,0\n"
    "0,1,1,1,0,0,1\n"
    "0,0,0,1,0,1,0\n"
    "0,0,1,1,1,1,1\n"
    "0,0,1,1,0,1,1\n"
    "1,1,0,0,1,1,0\n"
    "1,1,0,0,1,1,1\n"
    "1,1,0,0,0,0,1\n"
    "1,1,0,0,0,0,1\n";

// 12 objects, six 0/1 condition attributes, binary decision.
// U/C = {x1}{x2}{x3,x4,x5}{x6}{x7,x8}{x9}{x10,x11,x12}.
inline const char* kTable2Csv =
    "a1,a2,a3,a4,a5,a6,d\n"
    "1,0,0,1,1,0,0\n"
    "0,0,1,0,1,1,0\n"
    "0,1,1,0,1,0,0\n"
    "0,1,1,0,1,0,1\n"
    "0,1,1,0,1,0,1\n"
    "0,1,1,1,0,0,1\n"
    "1,0,0,1,0,1,0\n"
    "1,0,0,1,0,1,1\n"
    "1,0,0,0,1,1,0\n"
    "1,0,0,0,1,0,0\n"
    "1,0,0,0,1,0,1\n"
    "1,0,0,0,1,0,1\n";

inline prs::DecisionTable table1() {
    return prs::build_decision_table(prs::parse_csv(kTable1Csv, prs::PreprocessConfig{}),
                                     prs::PreprocessConfig{});
}

inline prs::DecisionTable table2() {
    return prs::build_decision_table(prs::parse_csv(kTable2Csv, prs::PreprocessConfig{}),
                                     prs::PreprocessConfig{});
}

// The threshold pair every reference value uses.
inline prs::Thresholds th64() { return {prs::Fraction(3, 5), prs::Fraction(2, 5)}; }

// Direct table construction from coded columns (no CSV round trip).
inline prs::DecisionTable make_table(const std::vector<std::vector<std::uint32_t>>& cols,
                                     const std::vector<std::uint32_t>& dec) {
    prs::DecisionTable t;
    t.n_objects = dec.size();
    t.cond = cols;
    t.dec = dec;
    std::uint32_t max_dec = 0;
    for (auto v : dec) max_dec = std::max(max_dec, v);
    t.n_classes = max_dec + 1;
    for (std::size_t a = 0; a < cols.size(); ++a) {
        prs::AttributeMeta meta;
        meta.name = "a" + std::to_string(a + 1);
        std::uint32_t mx = 0;
        for (auto v : cols[a]) mx = std::max(mx, v);
        for (std::uint32_t c = 0; c <= mx; ++c) meta.labels.push_back(std::to_string(c));
        t.attrs.push_back(std::move(meta));
    }
    t.decision.name = "d";
    for (std::uint32_t c = 0; c < t.n_classes; ++c)
        t.decision.labels.push_back(std::to_string(c));
    return t;
}

// Random decision table: n objects, m condition attributes with codes in
// [0, values), decisions in [0, classes).
inline prs::DecisionTable random_table(std::mt19937& rng, std::size_t n, std::size_t m,
                                       std::uint32_t values, std::uint32_t classes) {
    std::uniform_int_distribution<std::uint32_t> val(0, values - 1);
    std::uniform_int_distribution<std::uint32_t> cls(0, classes - 1);
    std::vector<std::vector<std::uint32_t>> cols(m, std::vector<std::uint32_t>(n));
    std::vector<std::uint32_t> dec(n);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t i = 0; i < n; ++i) cols[a][i] = val(rng);
    for (std::size_t i = 0; i < n; ++i) dec[i] = cls(rng);
    // Decision codes must be dense 0..k-1 (no empty class), so compress the
    // codes that were actually drawn to their rank.
    std::vector<std::uint32_t> seen;
    for (auto v : dec)
        if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
    std::sort(seen.begin(), seen.end());
    for (auto& v : dec)
        v = static_cast<std::uint32_t>(std::find(seen.begin(), seen.end(), v) - seen.begin());
    return make_table(cols, dec);
}

// Random thresholds in twelfths: alpha = a/12 (a in 1..12), beta = b/12 with
// b < a. Always valid, always exact.
inline prs::Thresholds random_thresholds(std::mt19937& rng) {
    std::uniform_int_distribution<int> da(1, 12);
    const int a = da(rng);
    std::uniform_int_distribution<int> db(0, a - 1);
    const int b = db(rng);
    return {prs::Fraction(a, 12), prs::Fraction(b, 12)};
}

// Random subset of the m attributes (possibly empty, possibly full).
inline prs::AttrSet random_subset(std::mt19937& rng, std::size_t m) {
    std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t(1) << m) - 1);
    return bits(rng);
}

} // namespace golden
