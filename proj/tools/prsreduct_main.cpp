#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prs/cli.hpp"

namespace {

struct Cli {
    prs::RunSpec spec;
    std::vector<std::string> alphas; // raw --alpha values, each may be comma separated
    std::string beta;
    std::string config;
    std::string decision;
    std::string target = "lower";
    std::string algo = "add-del";
    std::string kind = "ce";
    std::string format = "csv";
    std::string chain = "data";
    int bins = -1; // -1 = not given on the command line
    bool no_impute = false;
    unsigned workers = 0;
    unsigned max_attrs = 20;
};

void add_common(CLI::App* cmd, Cli& c) {
    cmd->add_option("--data", c.spec.data_path, "input CSV file")->required();
    cmd->add_option("--decision", c.decision,
                    "decision column, by name or zero-based index (default: last column)");
    cmd->add_option("--alpha", c.alphas,
                    "alpha threshold(s) as decimals; repeatable or comma separated")
        ->required();
    cmd->add_option("--beta", c.beta,
                    "beta threshold as a decimal (default rule: max(0, alpha - 1/5))");
    cmd->add_option("--target", c.target, "approximation target")
        ->check(CLI::IsMember({"lower", "upper"}));
    cmd->add_option("--algo", c.algo, "reduction algorithm")
        ->check(CLI::IsMember({"add-del", "del"}));
    cmd->add_option("--kind", c.kind, "granularity measure for the modified fitness")
        ->check(CLI::IsMember({"ce", "kg", "cg"}));
    cmd->add_option("--bins", c.bins, "equal-frequency bins for continuous columns (>= 2)");
    cmd->add_option("--out", c.spec.out_path, "output file (default: stdout)");
    cmd->add_option("--format", c.format, "report format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--config", c.config, "key=value preprocessing config file");
    cmd->add_option("--chain", c.chain, "monotonicity subset chain order")
        ->check(CLI::IsMember({"data", "greedy"}));
    cmd->add_flag("--timing", c.spec.timing, "add a wall_ms column (breaks byte-determinism)");
    cmd->add_option("--workers", c.workers, "worker threads for grid points (0 = auto)");
    cmd->add_flag("--no-impute", c.no_impute, "reject missing cells instead of imputing");
}

prs::RunSpec build_spec(Cli& c, prs::Command command) {
    prs::RunSpec spec = c.spec;
    spec.command = command;

    if (!c.config.empty()) spec.pre = prs::load_config_file(c.config);
    if (!c.decision.empty()) spec.pre.decision_column = c.decision;
    if (c.bins != -1) {
        if (c.bins < 2) throw prs::ValidationError("bins must be >= 2");
        spec.pre.bins = c.bins;
    }
    if (c.no_impute) spec.pre.impute = false;

    for (const std::string& chunk : c.alphas) {
        std::size_t start = 0;
        while (start <= chunk.size()) {
            const std::size_t comma = chunk.find(',', start);
            const std::string one =
                chunk.substr(start, comma == std::string::npos ? std::string::npos
                                                               : comma - start);
            if (!one.empty()) spec.alpha_texts.push_back(one);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    if (!c.beta.empty()) spec.beta_text = c.beta;

    spec.target = c.target == "upper" ? prs::Target::Upper : prs::Target::Lower;
    spec.algorithm = c.algo == "del" ? prs::Algorithm::Del : prs::Algorithm::AddDel;
    spec.kind = c.kind == "kg"   ? prs::GranularityKind::KG
                : c.kind == "cg" ? prs::GranularityKind::CG
                                 : prs::GranularityKind::CE;
    spec.format = c.format == "json" ? prs::ReportFormat::Json : prs::ReportFormat::Csv;
    spec.chain = c.chain == "greedy" ? prs::ChainOrder::Greedy : prs::ChainOrder::Data;
    spec.workers = c.workers;
    spec.oracle_max_attrs = c.max_attrs;
    return spec;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"distribution reducts of decision tables in the probabilistic rough set model"};
    app.require_subcommand(1);

    Cli cli;
    CLI::App* c_reduce = app.add_subcommand("reduce", "compute a reduct per (alpha, beta) point");
    CLI::App* c_core = app.add_subcommand("core", "compute the core attribute set");
    CLI::App* c_mono =
        app.add_subcommand("monotonicity", "fitness curves over a nested attribute chain");
    CLI::App* c_sig =
        app.add_subcommand("significance", "single-attribute significance and ranks");
    CLI::App* c_rbar =
        app.add_subcommand("rbar", "compare a reduct against ranking-based selection");
    CLI::App* c_oracle =
        app.add_subcommand("oracle", "enumerate all reducts exhaustively (small tables)");
    for (CLI::App* cmd : {c_reduce, c_core, c_mono, c_sig, c_rbar, c_oracle})
        add_common(cmd, cli);
    c_oracle->add_option("--max-attrs", cli.max_attrs,
                         "refuse tables wider than this many attributes (default 20)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // bad flags are validation errors
    }

    prs::Command command = prs::Command::Reduce;
    if (app.got_subcommand(c_core)) command = prs::Command::Core;
    else if (app.got_subcommand(c_mono)) command = prs::Command::Monotonicity;
    else if (app.got_subcommand(c_sig)) command = prs::Command::Significance;
    else if (app.got_subcommand(c_rbar)) command = prs::Command::Rbar;
    else if (app.got_subcommand(c_oracle)) command = prs::Command::Oracle;

    try {
        const prs::RunSpec spec = build_spec(cli, command);
        const std::string text = prs::run_command(spec);
        if (spec.out_path.empty()) std::cout << text;
        return 0;
    } catch (const prs::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const prs::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
