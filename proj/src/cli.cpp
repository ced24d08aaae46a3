#include "tvbounds/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tvbounds/config.hpp"
#include "tvbounds/report.hpp"
#include "tvbounds/sweep.hpp"
#include "tvbounds/verify.hpp"

namespace tvbounds {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

std::vector<double> parse_prob_list(const std::string& text) {
    std::vector<double> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::istringstream item(token);
        double v;
        if (!(item >> v)) {
            throw std::invalid_argument("bad probability token: '" + token + "'");
        }
        std::string rest;
        if (item >> rest) {
            throw std::invalid_argument("bad probability token: '" + token + "'");
        }
        out.push_back(v);
    }
    return out;
}

std::vector<double> read_probs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read probabilities file: " + path);
    }
    std::vector<double> out;
    double v;
    while (in >> v) {
        out.push_back(v);
        // Commas and whitespace both act as separators.
        while (in.peek() == ',' || in.peek() == '\n' || in.peek() == '\r') in.get();
    }
    if (!in.eof()) {
        throw std::invalid_argument("bad probability value in file: " + path);
    }
    return out;
}

VariantSelection parse_variants(const std::string& text) {
    VariantSelection sel{false, false, false};
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token == "three") sel.three_param = true;
        else if (token == "common") sel.common_alpha = true;
        else if (token == "closed") sel.closed_form = true;
        else if (token == "all") sel = VariantSelection{true, true, true};
        else throw std::invalid_argument("unknown variant: '" + token + "'");
    }
    if (!sel.three_param && !sel.common_alpha && !sel.closed_form) {
        throw std::invalid_argument("no variants selected");
    }
    return sel;
}

int emit(const std::string& text, const std::string& out_path, std::ostream& out,
         std::ostream& err) {
    if (out_path.empty()) {
        out << text;
        return kExitOk;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        err << "error: cannot open output file: " << out_path << "\n";
        return kExitIo;
    }
    f << text;
    f.flush();
    if (!f) {
        err << "error: failed writing output file: " << out_path << "\n";
        return kExitIo;
    }
    return kExitOk;
}

struct CommonOpts {
    std::string variants = "all";
    std::string format;
    std::string out_path;
    std::string config_path;
    std::vector<std::string> opt_overrides;  // key=value, applied after the file
};

// --opt flags beat --config, which beats TVBOUNDS_CONFIG, which beats the
// built-in defaults.
OptimizerConfig resolve_config(const CommonOpts& opts) {
    OptimizerConfig cfg;
    if (!opts.config_path.empty()) {
        cfg = load_optimizer_config(opts.config_path);
    } else if (const char* env = std::getenv("TVBOUNDS_CONFIG"); env && *env) {
        cfg = load_optimizer_config(env);
    }
    for (const std::string& kv : opts.opt_overrides) {
        cfg = parse_optimizer_config(kv + "\n", cfg);
    }
    return cfg;
}

void add_opt_flag(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--opt", opts.opt_overrides,
                    "optimizer budget override key=value (repeatable; same "
                    "keys as the config file)");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"total variation bounds for the Poisson approximation of "
                 "Bernoulli sums"};
    app.require_subcommand(1);

    // --- bounds ---
    auto* bounds_cmd =
        app.add_subcommand("bounds", "bound report for one instance");
    std::optional<std::string> probs_text;
    std::string probs_file;
    std::optional<double> lambda_opt;
    std::optional<long long> n_opt;
    CommonOpts bounds_opts;
    bounds_opts.format = "table";
    bounds_cmd->add_option("--probs", probs_text,
                           "comma-separated success probabilities");
    bounds_cmd->add_option("--probs-file", probs_file,
                           "file of probabilities (whitespace/comma separated)");
    bounds_cmd->add_option("--lambda", lambda_opt,
                           "mean; with --n gives n equal probabilities lambda/n");
    bounds_cmd->add_option("--n", n_opt, "number of equal-probability trials");
    bounds_cmd->add_option("--variants", bounds_opts.variants,
                           "comma list of three,common,closed or all");
    bounds_cmd->add_option("--format", bounds_opts.format, "table, json, or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    bounds_cmd->add_option("--out", bounds_opts.out_path, "output file");
    bounds_cmd->add_option("--config", bounds_opts.config_path,
                           "optimizer config file");
    add_opt_flag(bounds_cmd, bounds_opts);

    // --- sweep ---
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "ratio curves over a lambda grid (CSV by default)");
    double lambda_min = 0.1, lambda_max = 100.0;
    int points = 50;
    std::string scale = "log";
    CommonOpts sweep_opts;
    sweep_opts.format = "csv";
    sweep_cmd->add_option("--lambda-min", lambda_min, "grid lower end (> 0)");
    sweep_cmd->add_option("--lambda-max", lambda_max, "grid upper end");
    sweep_cmd->add_option("--points", points, "number of grid points (>= 2)");
    sweep_cmd->add_option("--scale", scale, "log or linear")
        ->check(CLI::IsMember({"log", "linear"}));
    sweep_cmd->add_option("--variants", sweep_opts.variants,
                          "comma list of three,common,closed or all");
    sweep_cmd->add_option("--format", sweep_opts.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--out", sweep_opts.out_path, "output file");
    sweep_cmd->add_option("--config", sweep_opts.config_path,
                          "optimizer config file");
    add_opt_flag(sweep_cmd, sweep_opts);

    // --- verify ---
    auto* verify_cmd =
        app.add_subcommand("verify", "run a seeded verification suite");
    std::string suite = "all";
    std::uint64_t seed = 12345;
    CommonOpts verify_opts;
    verify_cmd->add_option("--suite", suite, "stein, sandwich, ordering, limits, all")
        ->check(CLI::IsMember({"stein", "sandwich", "ordering", "limits", "all"}));
    verify_cmd->add_option("--seed", seed, "RNG seed");
    verify_cmd->add_option("--config", verify_opts.config_path,
                           "optimizer config file");
    add_opt_flag(verify_cmd, verify_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    try {
        if (bounds_cmd->parsed()) {
            const int sources = (probs_text.has_value() ? 1 : 0) +
                                (!probs_file.empty() ? 1 : 0) +
                                (lambda_opt.has_value() || n_opt.has_value() ? 1 : 0);
            if (sources != 1) {
                err << "error: give exactly one of --probs, --probs-file, or "
                       "--lambda with --n\n";
                return kExitInvalid;
            }
            std::vector<double> ps;
            if (probs_text) {
                ps = parse_prob_list(*probs_text);
            } else if (!probs_file.empty()) {
                ps = read_probs_file(probs_file);
            } else {
                if (!lambda_opt || !n_opt || *n_opt < 1 || !(*lambda_opt >= 0.0)) {
                    err << "error: --lambda requires --n >= 1 and lambda >= 0\n";
                    return kExitInvalid;
                }
                ps.assign(static_cast<std::size_t>(*n_opt),
                          *lambda_opt / static_cast<double>(*n_opt));
            }
            if (ps.empty()) {
                err << "error: empty instance\n";
                return kExitInvalid;
            }
            const OptimizerConfig cfg = resolve_config(bounds_opts);
            const BoundReport report =
                make_bound_report(ProbVector(ps), parse_variants(bounds_opts.variants),
                                  cfg);
            std::string text;
            if (bounds_opts.format == "json") text = render_report(report);
            else if (bounds_opts.format == "csv") text = render_report_csv(report);
            else text = render_report_table(report);
            return emit(text, bounds_opts.out_path, out, err);
        }

        if (sweep_cmd->parsed()) {
            const OptimizerConfig cfg = resolve_config(sweep_opts);
            const auto rows = run_sweep(
                lambda_min, lambda_max, points,
                scale == "log" ? SweepScale::log : SweepScale::linear,
                parse_variants(sweep_opts.variants), cfg);
            const std::string text = sweep_opts.format == "json"
                                         ? render_sweep_json(rows)
                                         : render_sweep_csv(rows);
            return emit(text, sweep_opts.out_path, out, err);
        }

        if (verify_cmd->parsed()) {
            const OptimizerConfig cfg = resolve_config(verify_opts);
            const VerifySummary summary = run_verify_suite(suite, seed, out, cfg);
            return summary.ok() ? kExitOk : kExitVerifyFailed;
        }
    } catch (const std::runtime_error& e) {
        // File I/O problems (config files, prob files).
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    err << "error: no subcommand\n";
    return kExitInvalid;
}

}  // namespace tvbounds
