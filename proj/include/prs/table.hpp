#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prs/errors.hpp"

namespace prs {

enum class AttrKind { Categorical, Continuous };

struct AttributeMeta {
    std::string name;
    AttrKind kind = AttrKind::Categorical;
    // One label per code, code order. Categorical: the distinct cell values in
    // sorted order. Continuous: human-readable bin intervals.
    std::vector<std::string> labels;
    // Continuous only: ascending cut points (midpoints between adjacent bins).
    std::vector<double> cuts;

    std::size_t code_count() const { return labels.size(); }
};

// Fully coded decision table: |U| objects, condition columns C plus one
// decision column, every cell a dense code starting at 0.
struct DecisionTable {
    std::size_t n_objects = 0;
    std::vector<AttributeMeta> attrs;            // condition attributes, id = index
    std::vector<std::vector<std::uint32_t>> cond; // column-major: cond[attr][obj]
    AttributeMeta decision;
    std::vector<std::uint32_t> dec;              // dec[obj]
    std::size_t n_classes = 0;

    std::size_t n_attrs() const { return attrs.size(); }
    int attr_id(const std::string& name) const; // -1 when absent
};

struct PreprocessConfig {
    int bins = 10;                                   // equal-frequency bin count
    bool impute = true;                              // fill missing cells
    std::vector<std::string> missing_markers = {"?", ""};
    std::string decision_column;                     // name or 0-based index; empty = last
    char delimiter = ',';
};

// Parsed CSV before coding: header + string cells + missing flags.
struct RawTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> cells;   // row-major
    std::vector<std::vector<bool>> missing;        // row-major, same shape
    std::size_t decision_index = 0;

    std::size_t n_rows() const { return cells.size(); }
    std::size_t n_cols() const { return header.empty() ? 0 : header.size(); }
};

// RFC-style CSV: quoted fields, doubled quotes, CR/LF tolerant. Throws
// ValidationError on ragged rows, an empty file, or an unknown decision
// column; the caller handles file I/O so stream failures stay IoError.
RawTable parse_csv(const std::string& text, const PreprocessConfig& cfg);
RawTable parse_csv_file(const std::string& path, const PreprocessConfig& cfg);

// Mean (continuous) / mode (categorical, ties -> smallest code) imputation,
// in place. A column with no present values at all cannot be imputed.
void impute_missing(RawTable& raw, const PreprocessConfig& cfg);

// Equal-frequency cut points for one sorted-by-value column. Runs of equal
// values never straddle a cut; a run crossing a bin boundary closes the
// current bin. Fewer distinct values than bins just yields fewer bins.
std::vector<double> equal_frequency_cuts(std::vector<double> values, int bins);

// Full deterministic pipeline: kind inference (every present cell numeric =>
// continuous), imputation, equal-frequency discretization of continuous
// condition columns, dictionary coding of everything else.
DecisionTable build_decision_table(RawTable raw, const PreprocessConfig& cfg);

// Convenience: parse + build.
DecisionTable load_decision_table(const std::string& path, const PreprocessConfig& cfg);

// Flat key=value config file (keys: bins, impute, missing_markers,
// decision_column, delimiter). '#' starts a comment. Missing keys keep their
// defaults.
PreprocessConfig load_config_file(const std::string& path);

} // namespace prs
