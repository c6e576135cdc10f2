#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prs/reduce.hpp"
#include "prs/table.hpp"

namespace prs {

enum class ReportFormat { Csv, Json };
enum class Command { Reduce, Core, Monotonicity, Significance, Rbar, Oracle };
enum class ChainOrder { Data, Greedy };

// Everything one invocation needs; built by the CLI frontend, consumable
// directly by tests.
struct RunSpec {
    Command command = Command::Reduce;
    std::string data_path;
    PreprocessConfig pre;
    std::vector<std::string> alpha_texts;        // exact decimal strings
    std::optional<std::string> beta_text;        // fixed beta; empty = rule max(0, alpha - 1/5)
    Target target = Target::Lower;
    Algorithm algorithm = Algorithm::AddDel;
    GranularityKind kind = GranularityKind::CE;
    std::string out_path;                        // empty = stdout
    ReportFormat format = ReportFormat::Csv;
    ChainOrder chain = ChainOrder::Data;         // monotonicity subset chain
    unsigned oracle_max_attrs = 20;
    bool timing = false;                         // opt-in wall-time column
    unsigned workers = 0;                        // 0 = hardware concurrency
};

struct Report {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> spec_echo; // ordered
};

// Validates every (alpha, beta) pair up front; a bad grid throws before any
// table work happens.
std::vector<Thresholds> expand_grid(const RunSpec& spec);

Report cmd_reduce(const RunSpec& spec);
Report cmd_core(const RunSpec& spec);
Report cmd_monotonicity(const RunSpec& spec);
Report cmd_single_significance(const RunSpec& spec);
Report cmd_compare_rbar(const RunSpec& spec);
Report cmd_oracle(const RunSpec& spec);

std::string render_csv(const Report& report);
std::string render_json(const Report& report);

// Dispatch + serialize + write (out_path empty -> returned string only).
// Deterministic: identical spec -> identical bytes (timing off).
std::string run_command(const RunSpec& spec);

} // namespace prs
