#include "graphdim/errors.hpp"
#include "graphdim/estimate.hpp"
#include "graphdim/parse.hpp"
#include "graphdim/report.hpp"
#include "graphdim/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using namespace graphdim;

namespace {

constexpr int kExitSuiteFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInfeasible = 3;

struct CliConfig {
    int m = 20;
    std::string window; // "a:b", empty = command default
    std::uint64_t seed = 42;
    std::string out_dir = ".";
    std::string format = "json";
};

void add_common_flags(CLI::App* cmd, CliConfig& cfg) {
    cmd->add_option("-m", cfg.m, "grid exponent (2^m + 1 samples)")
        ->check(CLI::Range(kMinGridExponent, kMaxGridExponent));
    cmd->add_option("--window", cfg.window, "fit window k_min:k_max");
    cmd->add_option("--seed", cfg.seed, "random seed");
    cmd->add_option("--out", cfg.out_dir, "output directory");
    cmd->add_option("--format", cfg.format, "comma-separated outputs: csv,json,svg");
}

FitWindow parse_window(const std::string& text, int m) {
    const auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
        throw ParseError("window must be k_min:k_max", 0);
    FitWindow w{};
    try {
        w.k_min = std::stoi(text.substr(0, colon));
        w.k_max = std::stoi(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw ParseError("window bounds must be integers", 0);
    }
    if (w.k_min < 1 || w.k_max <= w.k_min)
        throw ParseError("window needs 1 <= k_min < k_max", 0);
    if (w.k_max > m - 4)
        throw ParseError("window does not fit grid (k_max > m - 4)", 0);
    return w;
}

FitWindow effective_window(const CliConfig& cfg, FitWindow fallback) {
    if (!cfg.window.empty()) return parse_window(cfg.window, cfg.m);
    fallback.k_max = std::min(fallback.k_max, cfg.m - 4);
    return fallback;
}

bool wants_format(const CliConfig& cfg, const std::string& fmt) {
    std::stringstream ss(cfg.format);
    std::string item;
    while (std::getline(ss, item, ','))
        if (item == fmt) return true;
    return false;
}

/// Write-then-rename so readers never observe a partial file.
void atomic_write(const fs::path& path, const std::string& contents) {
    fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out << contents;
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::string csv_string(const SampledFunction& f) {
    std::ostringstream out;
    write_csv(out, f);
    return out.str();
}

/// A CSV path if the argument names a file, otherwise an expression.
SampledFunction load_input(const std::string& input, int m) {
    if (fs::exists(input)) {
        std::ifstream in(input, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open " + input);
        return read_csv(in, input);
    }
    return sample(parse_expression(input, m), m);
}

int cmd_generate(const std::string& spec, const CliConfig& cfg) {
    const ExprPtr expr = parse_expression(spec, cfg.m);
    require_reciprocal_safe(expr, cfg.m);
    const SampledFunction f = sample(expr, cfg.m);
    atomic_write(fs::path(cfg.out_dir) / "sample.csv", csv_string(f));
    std::cout << "wrote " << (fs::path(cfg.out_dir) / "sample.csv").string() << " ("
              << f.size() << " rows)\n"
              << "min " << format_double(f.min_value()) << "  max "
              << format_double(f.max_value()) << "  zero-free "
              << (zero_free(f) ? "yes" : "no") << "\n";
    return 0;
}

int cmd_estimate(const std::string& input, const CliConfig& cfg) {
    const FitWindow window = effective_window(cfg, FitWindow{6, 16});
    const SampledFunction f = load_input(input, cfg.m);
    const EstimateResult result = estimate_sampled(f, window);
    const fs::path dir(cfg.out_dir);
    if (wants_format(cfg, "json"))
        atomic_write(dir / "estimate.json", to_json(result).dump(2) + "\n");
    if (wants_format(cfg, "csv")) {
        std::ostringstream out;
        write_scan_csv(out, result.records);
        atomic_write(dir / "scan.csv", out.str());
    }
    if (wants_format(cfg, "svg"))
        atomic_write(dir / "estimate.svg",
                     render_scan_svg(result.records, result.estimate, result.provenance));
    std::cout << "dimension estimate " << format_double(result.estimate.slope)
              << "  (window [" << window.k_min << "," << window.k_max << "], r2 "
              << format_double(result.estimate.r2) << ")\n";
    return 0;
}

int cmd_decompose(const std::string& spec, double beta, std::optional<double> alpha,
                  const CliConfig& cfg) {
    EstimateConfig est_cfg{cfg.m, effective_window(cfg, FitWindow{6, 16})};
    const ExprPtr f = parse_expression(spec, cfg.m);
    const DecompositionResult result =
        alpha ? decompose_two_targets(f, *alpha, beta, est_cfg)
              : decompose_target(f, beta, est_cfg);
    const fs::path dir(cfg.out_dir);
    atomic_write(dir / "g.csv", csv_string(sample(result.g, cfg.m)));
    atomic_write(dir / "h.csv", csv_string(sample(result.h, cfg.m)));
    atomic_write(dir / "decomposition.json", to_json(result).dump(2) + "\n");
    std::cout << "est_g " << format_double(result.est_g.slope) << "  est_h "
              << format_double(result.est_h.slope) << "  recon_error "
              << format_double(result.recon_error) << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, const CliConfig& cfg) {
    VerifyConfig vcfg;
    vcfg.seed = cfg.seed;
    vcfg.m = cfg.m;
    if (!cfg.window.empty()) vcfg.window = parse_window(cfg.window, cfg.m);
    std::vector<SuiteReport> reports;
    if (suite == "all") {
        reports = run_all(vcfg);
    } else {
        reports.push_back(run_suite(suite, vcfg));
    }
    for (const SuiteReport& r : reports) print_suite_table(std::cout, r);
    const std::string name = suite == "all" ? "verify_all" : "verify_" + suite;
    atomic_write(fs::path(cfg.out_dir) / (name + ".json"), to_json(reports).dump(2) + "\n");
    return all_pass(reports) ? 0 : kExitSuiteFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"box-counting dimension toolkit for graphs of functions on [0,1]"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string spec, input, suite = "all";
    double beta = 0.0;
    std::optional<double> alpha;

    CLI::App* gen = app.add_subcommand("generate", "sample an expression to CSV");
    gen->add_option("spec", spec, "expression")->required();
    add_common_flags(gen, cfg);

    CLI::App* est = app.add_subcommand("estimate", "box-count scan and dimension fit");
    est->add_option("input", input, "expression or CSV path")->required();
    add_common_flags(est, cfg);

    CLI::App* dec = app.add_subcommand("decompose", "product decomposition f = g*h");
    dec->add_option("spec", spec, "expression")->required();
    dec->add_option("--beta", beta, "target dimension for the constructed factor")->required();
    double alpha_val = 0.0;
    CLI::Option* alpha_opt = dec->add_option("--alpha", alpha_val, "expected dimension of f");
    add_common_flags(dec, cfg);

    CLI::App* ver = app.add_subcommand("verify", "run verification suites");
    ver->add_option("suite", suite, "suite name or 'all'");
    add_common_flags(ver, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    if (alpha_opt->count() > 0) alpha = alpha_val;

    try {
        if (gen->parsed()) return cmd_generate(spec, cfg);
        if (est->parsed()) return cmd_estimate(input, cfg);
        if (dec->parsed()) return cmd_decompose(spec, beta, alpha, cfg);
        if (ver->parsed()) return cmd_verify(suite, cfg);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << " (position " << e.position() << ")\n";
        return kExitInputError;
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const EvalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
