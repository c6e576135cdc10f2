#include "prs/table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace prs {

namespace {

bool parse_number(const std::string& s, double& out) {
    if (s.empty()) return false;
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto res = std::from_chars(begin, end, out);
    return res.ec == std::errc() && res.ptr == end && std::isfinite(out);
}

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

bool is_missing(const std::string& cell, const PreprocessConfig& cfg) {
    for (const auto& m : cfg.missing_markers)
        if (cell == m) return true;
    return false;
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
    return s.substr(b, e - b);
}

} // namespace

int DecisionTable::attr_id(const std::string& name) const {
    for (std::size_t i = 0; i < attrs.size(); ++i)
        if (attrs[i].name == name) return static_cast<int>(i);
    return -1;
}

RawTable parse_csv(const std::string& text, const PreprocessConfig& cfg) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> field_row;
    std::string field;
    bool in_quotes = false;
    bool row_has_content = false;

    auto end_field = [&] {
        field_row.push_back(field);
        field.clear();
    };
    auto end_row = [&] {
        end_field();
        records.push_back(std::move(field_row));
        field_row.clear();
        row_has_content = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field += c;
            }
            row_has_content = true;
        } else if (c == '"') {
            in_quotes = true;
            row_has_content = true;
        } else if (c == cfg.delimiter) {
            end_field();
            row_has_content = true;
        } else if (c == '\n') {
            if (!field.empty() && field.back() == '\r') field.pop_back();
            if (row_has_content || !field_row.empty() || !field.empty()) end_row();
        } else {
            field += c;
            row_has_content = true;
        }
    }
    if (in_quotes) throw ValidationError("unterminated quoted field");
    if (!field.empty() && field.back() == '\r') field.pop_back();
    if (row_has_content || !field_row.empty() || !field.empty()) end_row();

    if (records.empty()) throw ValidationError("empty file: no header row");

    RawTable raw;
    raw.header = records.front();
    for (auto& h : raw.header) h = trim(h);
    const std::size_t ncols = raw.header.size();
    if (ncols < 2)
        throw ValidationError("need at least one condition attribute and a decision column");

    for (std::size_t r = 1; r < records.size(); ++r) {
        if (records[r].size() != ncols) {
            std::ostringstream msg;
            msg << "ragged row " << r + 1 << ": " << records[r].size()
                << " cells under " << ncols << " headers";
            throw ValidationError(msg.str());
        }
        std::vector<bool> miss(ncols, false);
        for (std::size_t c = 0; c < ncols; ++c) {
            records[r][c] = trim(records[r][c]);
            miss[c] = is_missing(records[r][c], cfg);
        }
        raw.cells.push_back(std::move(records[r]));
        raw.missing.push_back(std::move(miss));
    }
    if (raw.cells.empty()) throw ValidationError("no data rows");

    // Decision column: explicit name, explicit 0-based index, or the last one.
    if (cfg.decision_column.empty()) {
        raw.decision_index = ncols - 1;
    } else {
        auto it = std::find(raw.header.begin(), raw.header.end(), cfg.decision_column);
        if (it != raw.header.end()) {
            raw.decision_index = static_cast<std::size_t>(it - raw.header.begin());
        } else {
            double idx;
            if (parse_number(cfg.decision_column, idx) && idx == std::floor(idx) &&
                idx >= 0 && idx < static_cast<double>(ncols)) {
                raw.decision_index = static_cast<std::size_t>(idx);
            } else {
                throw ValidationError("unknown decision column: " + cfg.decision_column);
            }
        }
    }
    return raw;
}

RawTable parse_csv_file(const std::string& path, const PreprocessConfig& cfg) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failure on " + path);
    return parse_csv(buf.str(), cfg);
}

namespace {

bool column_is_numeric(const RawTable& raw, std::size_t col) {
    bool any_present = false;
    for (std::size_t r = 0; r < raw.n_rows(); ++r) {
        if (raw.missing[r][col]) continue;
        any_present = true;
        double v;
        if (!parse_number(raw.cells[r][col], v)) return false;
    }
    return any_present;
}

} // namespace

void impute_missing(RawTable& raw, const PreprocessConfig& cfg) {
    (void)cfg;
    const std::size_t ncols = raw.n_cols();
    for (std::size_t c = 0; c < ncols; ++c) {
        bool has_missing = false;
        for (std::size_t r = 0; r < raw.n_rows(); ++r)
            if (raw.missing[r][c]) { has_missing = true; break; }
        if (!has_missing) continue;

        if (column_is_numeric(raw, c)) {
            double sum = 0;
            std::size_t cnt = 0;
            for (std::size_t r = 0; r < raw.n_rows(); ++r)
                if (!raw.missing[r][c]) {
                    double v;
                    parse_number(raw.cells[r][c], v);
                    sum += v;
                    ++cnt;
                }
            if (cnt == 0)
                throw ValidationError("column '" + raw.header[c] + "' is entirely missing");
            const std::string fill = format_double(sum / static_cast<double>(cnt));
            for (std::size_t r = 0; r < raw.n_rows(); ++r)
                if (raw.missing[r][c]) {
                    raw.cells[r][c] = fill;
                    raw.missing[r][c] = false;
                }
        } else {
            // Mode; ties resolved toward the smallest category code, i.e. the
            // first value in sorted order.
            std::map<std::string, std::size_t> counts;
            for (std::size_t r = 0; r < raw.n_rows(); ++r)
                if (!raw.missing[r][c]) ++counts[raw.cells[r][c]];
            if (counts.empty())
                throw ValidationError("column '" + raw.header[c] + "' is entirely missing");
            std::string best;
            std::size_t best_count = 0;
            for (const auto& [value, count] : counts)
                if (count > best_count) { best = value; best_count = count; }
            for (std::size_t r = 0; r < raw.n_rows(); ++r)
                if (raw.missing[r][c]) {
                    raw.cells[r][c] = best;
                    raw.missing[r][c] = false;
                }
        }
    }
}

std::vector<double> equal_frequency_cuts(std::vector<double> values, int bins) {
    if (bins < 2) throw ValidationError("bins must be >= 2");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n == 0) return {};

    // Runs of equal values.
    std::vector<std::pair<double, std::size_t>> runs;
    for (double v : values) {
        if (!runs.empty() && runs.back().first == v)
            ++runs.back().second;
        else
            runs.emplace_back(v, 1);
    }

    // Walk runs, closing the current group once its cumulative count reaches
    // the next boundary floor(k*n/bins). A run that crosses a boundary stays
    // whole in the current group, then every boundary it passed is consumed.
    std::vector<double> cuts;
    const std::size_t nbins = static_cast<std::size_t>(bins);
    std::size_t cum = 0;
    std::size_t k = 1;
    for (std::size_t i = 0; i + 1 < runs.size() && k < nbins; ++i) {
        cum += runs[i].second;
        if (cum >= (k * n) / nbins) {
            cuts.push_back((runs[i].first + runs[i + 1].first) / 2.0);
            while (k < nbins && (k * n) / nbins <= cum) ++k;
        }
    }
    return cuts;
}

namespace {

// Group boundaries for one continuous column; returns the cut list actually
// used (at most bins-1 cuts, shrinking when distinct values run out).
std::vector<double> column_cuts(const RawTable& raw, std::size_t col, int bins) {
    std::vector<double> vals;
    vals.reserve(raw.n_rows());
    for (std::size_t r = 0; r < raw.n_rows(); ++r) {
        double v;
        parse_number(raw.cells[r][col], v);
        vals.push_back(v);
    }
    return equal_frequency_cuts(std::move(vals), bins);
}

std::uint32_t bin_code(double v, const std::vector<double>& cuts) {
    std::uint32_t code = 0;
    for (double c : cuts) {
        if (v <= c) break;
        ++code;
    }
    return code;
}

struct CodedColumn {
    AttributeMeta meta;
    std::vector<std::uint32_t> codes;
};

CodedColumn code_categorical(const RawTable& raw, std::size_t col, bool numeric) {
    // Dictionary order: numeric ascending when the whole column is numeric,
    // lexicographic otherwise. Either way codes are stable under row shuffles.
    std::vector<std::string> labels;
    for (std::size_t r = 0; r < raw.n_rows(); ++r) labels.push_back(raw.cells[r][col]);
    std::sort(labels.begin(), labels.end(), [&](const std::string& a, const std::string& b) {
        if (numeric) {
            double x, y;
            parse_number(a, x);
            parse_number(b, y);
            if (x != y) return x < y;
        }
        return a < b;
    });
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    CodedColumn out;
    out.meta.name = raw.header[col];
    out.meta.kind = AttrKind::Categorical;
    out.meta.labels = labels;
    out.codes.reserve(raw.n_rows());
    for (std::size_t r = 0; r < raw.n_rows(); ++r) {
        auto it = std::lower_bound(labels.begin(), labels.end(), raw.cells[r][col],
                                   [&](const std::string& a, const std::string& b) {
                                       if (numeric) {
                                           double x, y;
                                           parse_number(a, x);
                                           parse_number(b, y);
                                           if (x != y) return x < y;
                                       }
                                       return a < b;
                                   });
        out.codes.push_back(static_cast<std::uint32_t>(it - labels.begin()));
    }
    return out;
}

CodedColumn code_continuous(const RawTable& raw, std::size_t col, int bins) {
    CodedColumn out;
    out.meta.name = raw.header[col];
    out.meta.kind = AttrKind::Continuous;
    out.meta.cuts = column_cuts(raw, col, bins);

    out.codes.reserve(raw.n_rows());
    std::uint32_t max_code = 0;
    for (std::size_t r = 0; r < raw.n_rows(); ++r) {
        double v;
        parse_number(raw.cells[r][col], v);
        std::uint32_t code = bin_code(v, out.meta.cuts);
        max_code = std::max(max_code, code);
        out.codes.push_back(code);
    }

    for (std::size_t b = 0; b <= max_code; ++b) {
        std::string lo = b == 0 ? "-inf" : format_double(out.meta.cuts[b - 1]);
        std::string hi = b < out.meta.cuts.size() ? format_double(out.meta.cuts[b]) : "inf";
        out.meta.labels.push_back("(" + lo + "," + hi + (b < out.meta.cuts.size() ? "]" : ")"));
    }
    return out;
}

} // namespace

DecisionTable build_decision_table(RawTable raw, const PreprocessConfig& cfg) {
    if (cfg.impute) impute_missing(raw, cfg);
    for (std::size_t r = 0; r < raw.n_rows(); ++r)
        for (std::size_t c = 0; c < raw.n_cols(); ++c)
            if (raw.missing[r][c])
                throw ValidationError("missing cells remain (imputation disabled?)");

    DecisionTable t;
    t.n_objects = raw.n_rows();
    std::size_t n_cond = raw.n_cols() - 1;
    if (n_cond > 64) throw ValidationError("at most 64 condition attributes supported");

    for (std::size_t c = 0; c < raw.n_cols(); ++c) {
        const bool numeric = column_is_numeric(raw, c);
        if (c == raw.decision_index) {
            // The decision attribute is always treated as class labels.
            CodedColumn col = code_categorical(raw, c, numeric);
            t.decision = std::move(col.meta);
            t.dec = std::move(col.codes);
            t.n_classes = t.decision.labels.size();
        } else {
            CodedColumn col = numeric ? code_continuous(raw, c, cfg.bins)
                                      : code_categorical(raw, c, numeric);
            t.attrs.push_back(std::move(col.meta));
            t.cond.push_back(std::move(col.codes));
        }
    }
    return t;
}

DecisionTable load_decision_table(const std::string& path, const PreprocessConfig& cfg) {
    return build_decision_table(parse_csv_file(path, cfg), cfg);
}

PreprocessConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config " + path);
    PreprocessConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError("config line " + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "bins") {
            double v;
            if (!parse_number(value, v) || v != std::floor(v) || v < 2)
                throw ValidationError("config: bins must be an integer >= 2");
            cfg.bins = static_cast<int>(v);
        } else if (key == "impute") {
            if (value == "true" || value == "1") cfg.impute = true;
            else if (value == "false" || value == "0") cfg.impute = false;
            else throw ValidationError("config: impute must be true/false");
        } else if (key == "missing_markers") {
            cfg.missing_markers.clear();
            std::string cur;
            for (char ch : value) {
                if (ch == ',') { cfg.missing_markers.push_back(cur); cur.clear(); }
                else cur += ch;
            }
            cfg.missing_markers.push_back(cur);
        } else if (key == "decision_column") {
            cfg.decision_column = value;
        } else if (key == "delimiter") {
            if (value.size() != 1)
                throw ValidationError("config: delimiter must be a single character");
            cfg.delimiter = value[0];
        } else {
            throw ValidationError("config: unknown key '" + key + "'");
        }
    }
    return cfg;
}

} // namespace prs
