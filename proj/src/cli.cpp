#include "prs/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <thread>
#include <variant>

#include "json.hpp"

namespace prs {

namespace {

using Rows = std::vector<std::vector<std::string>>;

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string fmt_ms(double ms) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", ms);
    return buf;
}

std::string fitness_str(const FitnessValue& v) {
    if (std::holds_alternative<Fraction>(v)) return std::get<Fraction>(v).str();
    return format_double(std::get<double>(v));
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

const char* command_name(Command c) {
    switch (c) {
        case Command::Reduce: return "reduce";
        case Command::Core: return "core";
        case Command::Monotonicity: return "monotonicity";
        case Command::Significance: return "significance";
        case Command::Rbar: return "rbar";
        case Command::Oracle: return "oracle";
    }
    return "?";
}

std::vector<std::pair<std::string, std::string>> echo_spec(const RunSpec& spec) {
    std::vector<std::pair<std::string, std::string>> e;
    e.emplace_back("command", command_name(spec.command));
    e.emplace_back("data", spec.data_path);
    e.emplace_back("decision", spec.pre.decision_column.empty() ? "(last)" : spec.pre.decision_column);
    e.emplace_back("bins", std::to_string(spec.pre.bins));
    e.emplace_back("impute", bool_str(spec.pre.impute));
    std::string alphas;
    for (const auto& a : spec.alpha_texts) {
        if (!alphas.empty()) alphas += ",";
        alphas += a;
    }
    e.emplace_back("alpha", alphas);
    e.emplace_back("beta", spec.beta_text && !spec.beta_text->empty() ? *spec.beta_text
                                                                      : "max(0,alpha-1/5)");
    e.emplace_back("target", target_name(spec.target));
    e.emplace_back("algo", algorithm_name(spec.algorithm));
    e.emplace_back("kind", kind_name(spec.kind));
    e.emplace_back("chain", spec.chain == ChainOrder::Data ? "data" : "greedy");
    e.emplace_back("format", spec.format == ReportFormat::Csv ? "csv" : "json");
    e.emplace_back("timing", bool_str(spec.timing));
    return e;
}

// Grid points go to a small worker pool; rows land in grid order no matter
// which worker finishes first.
Rows run_points(const RunSpec& spec, const DecisionTable& t,
                const std::vector<Thresholds>& grid,
                const std::function<Rows(const DecisionTable&, const Thresholds&)>& fn) {
    const std::size_t n = grid.size();
    std::vector<Rows> per_point(n);

    std::size_t workers = spec.workers ? spec.workers : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = std::min(workers, n);

    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) per_point[i] = fn(t, grid[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::mutex err_mutex;
        std::exception_ptr error;
        auto work = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    per_point[i] = fn(t, grid[i]);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
        if (error) std::rethrow_exception(error);
    }

    Rows rows;
    for (auto& part : per_point)
        for (auto& row : part) rows.push_back(std::move(row));
    return rows;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// Chain of nested subsets for the monotonicity curves: dataset column order,
// or greedily by the modified fitness of the grown set.
std::vector<unsigned> chain_order(const Evaluator& ev, const RunSpec& spec) {
    const std::size_t m = ev.table().n_attrs();
    std::vector<unsigned> order;
    if (spec.chain == ChainOrder::Data) {
        for (unsigned a = 0; a < m; ++a) order.push_back(a);
        return order;
    }
    AttrSet have = 0;
    while (order.size() < m) {
        int best = -1;
        double best_key = 0.0;
        for (unsigned a = 0; a < m; ++a) {
            if (attr_in(have, a)) continue;
            const AttrSet grown = have | attr_bit(a);
            const double key = spec.target == Target::Lower ? ev.g_eta(grown, spec.kind)
                                                            : ev.g_mu(grown, spec.kind);
            if (best < 0 || key > best_key) {
                best = static_cast<int>(a);
                best_key = key;
            }
        }
        have |= attr_bit(static_cast<unsigned>(best));
        order.push_back(static_cast<unsigned>(best));
    }
    return order;
}

// Min-max rescale of one report column (over one grid point's rows) to [0,1];
// a flat curve maps to all zeros.
void rescale_column(Rows& rows, std::size_t col, const std::vector<double>& raw) {
    const auto [lo_it, hi_it] = std::minmax_element(raw.begin(), raw.end());
    const double lo = *lo_it, span = *hi_it - *lo_it;
    for (std::size_t i = 0; i < rows.size(); ++i)
        rows[i][col] = format_double(span > 0.0 ? (raw[i] - lo) / span : 0.0);
}

} // namespace

std::vector<Thresholds> expand_grid(const RunSpec& spec) {
    if (spec.alpha_texts.empty()) throw ValidationError("at least one alpha value is required");
    std::optional<Fraction> fixed_beta;
    if (spec.beta_text && !spec.beta_text->empty())
        fixed_beta = Fraction::parse_decimal(*spec.beta_text);

    std::vector<Thresholds> grid;
    grid.reserve(spec.alpha_texts.size());
    for (const auto& text : spec.alpha_texts) {
        const Fraction alpha = Fraction::parse_decimal(text);
        const Fraction beta =
            fixed_beta ? *fixed_beta : std::max(Fraction(0), alpha - Fraction(1, 5));
        grid.emplace_back(alpha, beta); // constructor rejects invalid pairs
    }
    return grid;
}

Report cmd_reduce(const RunSpec& spec) {
    const auto grid = expand_grid(spec);
    const DecisionTable t = load_decision_table(spec.data_path, spec.pre);
    Report rep;
    rep.spec_echo = echo_spec(spec);
    rep.header = {"alpha",  "beta", "target",    "algo",           "kind",    "reduct",
                  "length", "core", "fitness_c", "fitness_reduct", "verified"};
    if (spec.timing) rep.header.push_back("wall_ms");
    rep.rows = run_points(spec, t, grid, [&](const DecisionTable& tab, const Thresholds& th) {
        const auto t0 = std::chrono::steady_clock::now();
        Evaluator ev(tab, th);
        const ReductResult r = spec.algorithm == Algorithm::AddDel
                                   ? reduce_addition_deletion(ev, spec.target, spec.kind)
                                   : reduce_deletion(ev, spec.target, spec.kind);
        std::vector<std::string> row = {th.alpha.str(),
                                        th.beta.str(),
                                        target_name(spec.target),
                                        algorithm_name(spec.algorithm),
                                        kind_name(spec.kind),
                                        attrs_to_string(tab, r.attrs),
                                        std::to_string(attr_count(r.attrs)),
                                        attrs_to_string(tab, r.core),
                                        fitness_str(r.fitness_c),
                                        fitness_str(r.fitness_reduct),
                                        bool_str(r.verified)};
        if (spec.timing) row.push_back(fmt_ms(elapsed_ms(t0)));
        return Rows{std::move(row)};
    });
    return rep;
}

Report cmd_core(const RunSpec& spec) {
    const auto grid = expand_grid(spec);
    const DecisionTable t = load_decision_table(spec.data_path, spec.pre);
    Report rep;
    rep.spec_echo = echo_spec(spec);
    rep.header = {"alpha", "beta", "target", "core", "size"};
    if (spec.timing) rep.header.push_back("wall_ms");
    rep.rows = run_points(spec, t, grid, [&](const DecisionTable& tab, const Thresholds& th) {
        const auto t0 = std::chrono::steady_clock::now();
        const AttrSet core = compute_core(tab, th, spec.target);
        std::vector<std::string> row = {th.alpha.str(), th.beta.str(), target_name(spec.target),
                                        attrs_to_string(tab, core),
                                        std::to_string(attr_count(core))};
        if (spec.timing) row.push_back(fmt_ms(elapsed_ms(t0)));
        return Rows{std::move(row)};
    });
    return rep;
}

Report cmd_monotonicity(const RunSpec& spec) {
    const auto grid = expand_grid(spec);
    const DecisionTable t = load_decision_table(spec.data_path, spec.pre);
    Report rep;
    rep.spec_echo = echo_spec(spec);
    rep.header = {"alpha",    "beta",     "k",        "attrs",   "eta",     "mu",
                  "g_eta_ce", "g_eta_kg", "g_eta_cg", "g_mu_ce", "g_mu_kg", "g_mu_cg"};
    rep.rows = run_points(spec, t, grid, [&](const DecisionTable& tab, const Thresholds& th) {
        Evaluator ev(tab, th);
        const std::vector<unsigned> order = chain_order(ev, spec);
        const GranularityKind kinds[3] = {GranularityKind::CE, GranularityKind::KG,
                                          GranularityKind::CG};
        Rows rows;
        std::vector<double> raw[6]; // g_eta x3, g_mu x3, column-major over k
        AttrSet s = 0;
        for (std::size_t k = 0; k < order.size(); ++k) {
            s |= attr_bit(order[k]);
            std::vector<std::string> row = {th.alpha.str(),
                                            th.beta.str(),
                                            std::to_string(k + 1),
                                            attrs_to_string(tab, s),
                                            ev.eta(s).str(),
                                            ev.mu(s).str()};
            for (int g = 0; g < 3; ++g) {
                raw[g].push_back(ev.g_eta(s, kinds[g]));
                row.push_back(std::string()); // filled by the rescale below
            }
            for (int g = 0; g < 3; ++g) {
                raw[3 + g].push_back(ev.g_mu(s, kinds[g]));
                row.push_back(std::string());
            }
            rows.push_back(std::move(row));
        }
        for (int g = 0; g < 6; ++g) rescale_column(rows, 6 + static_cast<std::size_t>(g), raw[g]);
        return rows;
    });
    return rep;
}

Report cmd_single_significance(const RunSpec& spec) {
    const auto grid = expand_grid(spec);
    const DecisionTable t = load_decision_table(spec.data_path, spec.pre);
    Report rep;
    rep.spec_echo = echo_spec(spec);
    rep.header = {"alpha",         "beta",          "attr",          "sig_eta",
                  "sig_mu",        "sig_g_eta_ce",  "sig_g_eta_kg",  "sig_g_eta_cg",
                  "sig_g_mu_ce",   "sig_g_mu_kg",   "sig_g_mu_cg",   "rank_eta",
                  "rank_mu",       "rank_g_eta_ce", "rank_g_eta_kg", "rank_g_eta_cg",
                  "rank_g_mu_ce",  "rank_g_mu_kg",  "rank_g_mu_cg"};
    rep.rows = run_points(spec, t, grid, [&](const DecisionTable& tab, const Thresholds& th) {
        Evaluator ev(tab, th);
        const std::size_t m = tab.n_attrs();
        const GranularityKind kinds[3] = {GranularityKind::CE, GranularityKind::KG,
                                          GranularityKind::CG};

        // sig[c][a]: c = 0 eta, 1 mu, 2..4 g_eta by kind, 5..7 g_mu by kind
        std::vector<std::vector<FitnessValue>> sig(8, std::vector<FitnessValue>(m));
        for (unsigned a = 0; a < m; ++a) {
            sig[0][a] = ev.sig_single(a, Measure::Eta, GranularityKind::CE);
            sig[1][a] = ev.sig_single(a, Measure::Mu, GranularityKind::CE);
            for (int g = 0; g < 3; ++g) {
                sig[2 + g][a] = ev.sig_single(a, Measure::GEta, kinds[g]);
                sig[5 + g][a] = ev.sig_single(a, Measure::GMu, kinds[g]);
            }
        }

        // Ordinal rank per measure: most significant first, ties toward the
        // smaller attribute id. Fractions compare exactly.
        auto sig_less = [](const FitnessValue& x, const FitnessValue& y) {
            if (std::holds_alternative<Fraction>(x) && std::holds_alternative<Fraction>(y))
                return std::get<Fraction>(x) < std::get<Fraction>(y);
            return fitness_to_double(x) < fitness_to_double(y);
        };
        std::vector<std::vector<unsigned>> rank(8, std::vector<unsigned>(m));
        for (int c = 0; c < 8; ++c) {
            std::vector<unsigned> ids(m);
            for (unsigned a = 0; a < m; ++a) ids[a] = a;
            std::stable_sort(ids.begin(), ids.end(), [&](unsigned x, unsigned y) {
                return sig_less(sig[c][y], sig[c][x]); // descending
            });
            for (unsigned i = 0; i < m; ++i) rank[c][ids[i]] = i + 1;
        }

        Rows rows;
        for (unsigned a = 0; a < m; ++a) {
            std::vector<std::string> row = {th.alpha.str(), th.beta.str(), tab.attrs[a].name};
            for (int c = 0; c < 8; ++c) row.push_back(fitness_str(sig[c][a]));
            for (int c = 0; c < 8; ++c) row.push_back(std::to_string(rank[c][a]));
            rows.push_back(std::move(row));
        }
        return rows;
    });
    return rep;
}

Report cmd_compare_rbar(const RunSpec& spec) {
    const auto grid = expand_grid(spec);
    const DecisionTable t = load_decision_table(spec.data_path, spec.pre);
    Report rep;
    rep.spec_echo = echo_spec(spec);
    rep.header = {"alpha", "beta", "target",            "kind", "algo",
                  "reduct", "k",   "reduct_consistent", "rbar", "rbar_consistent"};
    if (spec.timing) rep.header.push_back("wall_ms");
    rep.rows = run_points(spec, t, grid, [&](const DecisionTable& tab, const Thresholds& th) {
        const auto t0 = std::chrono::steady_clock::now();
        Evaluator ev(tab, th);
        const ReductResult r = spec.algorithm == Algorithm::AddDel
                                   ? reduce_addition_deletion(ev, spec.target, spec.kind)
                                   : reduce_deletion(ev, spec.target, spec.kind);
        const unsigned k = static_cast<unsigned>(attr_count(r.attrs));
        const AttrSet rbar = k == 0 ? 0 : rbar_select(ev, spec.target, spec.kind, k);
        std::vector<std::string> row = {th.alpha.str(),
                                        th.beta.str(),
                                        target_name(spec.target),
                                        kind_name(spec.kind),
                                        algorithm_name(spec.algorithm),
                                        attrs_to_string(tab, r.attrs),
                                        std::to_string(k),
                                        bool_str(ev.consistent(r.attrs, spec.target)),
                                        attrs_to_string(tab, rbar),
                                        bool_str(ev.consistent(rbar, spec.target))};
        if (spec.timing) row.push_back(fmt_ms(elapsed_ms(t0)));
        return Rows{std::move(row)};
    });
    return rep;
}

Report cmd_oracle(const RunSpec& spec) {
    const auto grid = expand_grid(spec);
    const DecisionTable t = load_decision_table(spec.data_path, spec.pre);
    Report rep;
    rep.spec_echo = echo_spec(spec);
    rep.header = {"alpha", "beta", "target", "reduct", "length"};
    rep.rows = run_points(spec, t, grid, [&](const DecisionTable& tab, const Thresholds& th) {
        Evaluator ev(tab, th);
        const auto reducts = enumerate_all_reducts(ev, spec.target, spec.oracle_max_attrs);
        Rows rows;
        for (AttrSet red : reducts)
            rows.push_back({th.alpha.str(), th.beta.str(), target_name(spec.target),
                            attrs_to_string(tab, red), std::to_string(attr_count(red))});
        return rows;
    });
    return rep;
}

std::string render_csv(const Report& report) {
    auto escape = [](const std::string& s) {
        if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += "\"\"";
            else out += c;
        }
        out += "\"";
        return out;
    };
    std::string text;
    auto emit = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) text += ",";
            text += escape(fields[i]);
        }
        text += "\n";
    };
    emit(report.header);
    for (const auto& row : report.rows) emit(row);
    return text;
}

std::string render_json(const Report& report) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    auto& s = j["spec"];
    s = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.spec_echo) s[key] = value;
    auto& records = j["records"];
    records = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json rec = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < report.header.size() && i < row.size(); ++i)
            rec[report.header[i]] = row[i];
        records.push_back(std::move(rec));
    }
    return j.dump(2) + "\n";
}

std::string run_command(const RunSpec& spec) {
    Report rep;
    switch (spec.command) {
        case Command::Reduce: rep = cmd_reduce(spec); break;
        case Command::Core: rep = cmd_core(spec); break;
        case Command::Monotonicity: rep = cmd_monotonicity(spec); break;
        case Command::Significance: rep = cmd_single_significance(spec); break;
        case Command::Rbar: rep = cmd_compare_rbar(spec); break;
        case Command::Oracle: rep = cmd_oracle(spec); break;
    }
    const std::string text =
        spec.format == ReportFormat::Csv ? render_csv(rep) : render_json(rep);
    if (!spec.out_path.empty()) {
        std::ofstream out(spec.out_path, std::ios::binary);
        if (!out) throw IoError("cannot open output file: " + spec.out_path);
        out << text;
        out.flush();
        if (!out) throw IoError("failed while writing: " + spec.out_path);
    }
    return text;
}

} // namespace prs
