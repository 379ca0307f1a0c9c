// Acceptance gate: one line per criterion, exit 0 iff all pass.
// argv[1] (optional) is the path to the command-line binary; criteria 8 and 9
// exercise its exit codes and byte-level determinism through it.

#include "graphdim/boxcount.hpp"
#include "graphdim/decompose.hpp"
#include "graphdim/errors.hpp"
#include "graphdim/estimate.hpp"
#include "graphdim/expr.hpp"
#include "graphdim/parse.hpp"
#include "graphdim/report.hpp"
#include "graphdim/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

using namespace graphdim;
namespace fs = std::filesystem;

namespace {

std::string g_cli_path;
int g_failures = 0;

void criterion(int number, const std::string& title, double budget_seconds,
               const std::function<bool(std::ostringstream&)>& body) {
    std::ostringstream detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << " unexpected exception: " << e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds) {
        ok = false;
        detail << " OVER BUDGET (" << budget_seconds << "s)";
    }
    if (!ok) ++g_failures;
    std::cout << "criterion " << number << " [" << (ok ? "PASS" : "FAIL") << "] " << title
              << " (" << std::fixed << elapsed << "s)" << detail.str() << "\n"
              << std::defaultfloat;
    std::cout.flush();
}

int run_cli(const std::string& args) {
    const int status = std::system((g_cli_path + " " + args).c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::pair<std::string, ExprPtr>> fixture_matrix(int m) {
    return {
        {"x", make_linear(1.0, 0.0)},
        {"x^2+1", parse_expression("x^2+1", m)},
        {"const", make_constant(0.5)},
        {"takagi", make_takagi(default_takagi_terms(m))},
        {"peano", make_peano_x(default_peano_digits(m))},
        {"weier13", make_weierstrass(std::pow(3.0, -0.7), 3, default_weierstrass_terms(3, m))},
        {"weier15", make_weierstrass(std::pow(3.0, -0.5), 3, default_weierstrass_terms(3, m))},
        {"weier17", make_weierstrass(std::pow(3.0, -0.3), 3, default_weierstrass_terms(3, m))},
        {"fixture13", dimension_fixture(1.3, m)},
        {"fixture15", dimension_fixture(1.5, m)},
        {"fixture17", dimension_fixture(1.7, m)},
        {"cantor", make_cantor_extension(make_linear(1.0, 0.0), 1.0 / 3.0,
                                         default_cantor_depth(m))},
        {"x+takagi", parse_expression("x+takagi()", m)},
        {"w15*w13", make_product(dimension_fixture(1.5, m), dimension_fixture(1.3, m))},
    };
}

double est(const ExprPtr& e, int m, FitWindow w) {
    return estimate_expression(e, EstimateConfig{m, w}).estimate.slope;
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];

    criterion(1, "oscillation sandwich holds on the fixture matrix", 60.0,
              [](std::ostringstream& out) {
                  const int m = 20;
                  int violations = 0, fixtures = 0;
                  for (const auto& [name, expr] : fixture_matrix(m)) {
                      const SampledFunction f = sample(expr, m);
                      for (const ScaleRecord& r : scan(f, 4, m - 4)) {
                          const bool ok =
                              r.lower_bound <= static_cast<double>(r.grid_count) &&
                              static_cast<double>(r.grid_count) <= r.upper_bound;
                          if (!ok) {
                              ++violations;
                              out << " " << name << "@k=" << r.k;
                          }
                      }
                      ++fixtures;
                  }
                  out << " fixtures=" << fixtures << " violations=" << violations;
                  return fixtures >= 12 && violations == 0;
              });

    criterion(2, "smooth baseline estimates 1.0 +/- 0.03", 10.0, [](std::ostringstream& out) {
        const FitWindow w{6, 14};
        const double e1 = est(make_linear(1.0, 0.0), 20, w);
        const double e2 = est(parse_expression("x^2+1", 20), 20, w);
        out << " est(x)=" << e1 << " est(x^2+1)=" << e2;
        return std::abs(e1 - 1.0) <= 0.03 && std::abs(e2 - 1.0) <= 0.03;
    });

    criterion(3, "Peano coordinate anchors: 1.5 and the collapsed product", 120.0,
              [](std::ostringstream& out) {
                  const double peano =
                      est(make_peano_x(default_peano_digits(22)), 22, FitWindow{6, 16});
                  const double zero = est(
                      make_product(make_constant(0.0), make_peano_x(default_peano_digits(20))),
                      20, FitWindow{6, 14});
                  out << " est(peano)=" << peano << " est(0*peano)=" << zero;
                  return std::abs(peano - 1.5) <= 0.05 && std::abs(zero - 1.0) <= 0.03;
              });

    criterion(4, "Weierstrass calibration within 0.08", 300.0, [](std::ostringstream& out) {
        bool ok = true;
        for (double p : {-0.7, -0.5, -0.3}) {
            const double a = std::pow(3.0, p);
            const double target = 2.0 + std::log(a) / std::log(3.0);
            const double e = est(make_weierstrass(a, 3, default_weierstrass_terms(3, 22)), 22,
                                 FitWindow{6, 16});
            out << " est=" << e << "/target=" << target;
            ok = ok && std::abs(e - target) <= 0.08;
        }
        return ok;
    });

    criterion(5, "reciprocal and square leave the estimate within 0.05", 180.0,
              [](std::ostringstream& out) {
                  bool ok = true;
                  for (double beta : {1.3, 1.5, 1.7}) {
                      const ExprPtr f = dimension_fixture(beta, 22);
                      const FitWindow w{6, 16};
                      const double ef = est(f, 22, w);
                      const double er = est(make_reciprocal(f), 22, w);
                      const double es = est(make_power(f, 2), 22, w);
                      out << " [beta=" << beta << " recip=" << std::abs(ef - er)
                          << " square=" << std::abs(ef - es) << "]";
                      ok = ok && std::abs(ef - er) <= 0.05 && std::abs(ef - es) <= 0.05;
                  }
                  return ok;
              });

    criterion(6, "bi-Lipschitz distortion bounds over 1e5 seeded pairs", 30.0,
              [](std::ostringstream& out) {
                  std::int64_t violations = 0;
                  for (double beta : {1.3, 1.5, 1.7}) {
                      const SampledFunction f = sample(dimension_fixture(beta, 20), 20);
                      for (MapKind kind : {MapKind::reciprocal, MapKind::square}) {
                          violations += bilipschitz_verify(f, kind, 100000, 42).violations;
                      }
                  }
                  out << " violations=" << violations;
                  return violations == 0;
              });

    criterion(7, "product, sum, polynomial and rational suites pass", 300.0,
              [](std::ostringstream& out) {
                  const VerifyConfig cfg; // defaults: seed 42, m 22, window [8,18]
                  bool ok = true;
                  for (const std::string suite :
                       {"product_upper", "sum_upper", "lower_product", "product_equality",
                        "polynomial", "rational"}) {
                      const SuiteReport rep = run_suite(suite, cfg);
                      out << " " << suite << "=" << (rep.pass ? "pass" : "FAIL");
                      ok = ok && rep.pass;
                      for (const FixtureResult& f : rep.fixtures) {
                          if (f.name.rfind("sharpness", 0) == 0) {
                              out << " sharpness_margin=" << f.margin;
                              ok = ok && f.pass;
                          }
                      }
                  }
                  return ok;
              });

    criterion(8, "decomposition targets and infeasibility", 240.0, [](std::ostringstream& out) {
        bool ok = true;
        const DecompositionResult one = decompose_target(make_linear(1.0, 1.0), 1.5);
        out << " est_g=" << one.est_g.slope << " est_h=" << one.est_h.slope
            << " recon=" << one.recon_error;
        ok = ok && std::abs(one.est_g.slope - 1.5) <= 0.08 &&
             std::abs(one.est_h.slope - 1.5) <= 0.08 && one.recon_error <= 1e-9;

        const DecompositionResult two =
            decompose_two_targets(dimension_fixture(1.7, kDecomposeConfig.m), 1.7, 1.3);
        out << " est_g=" << two.est_g.slope << " est_h=" << two.est_h.slope;
        ok = ok && std::abs(two.est_g.slope - 1.7) <= 0.08 &&
             std::abs(two.est_h.slope - 1.3) <= 0.08 && two.recon_error <= 1e-9;

        bool threw = false;
        try {
            decompose_target(dimension_fixture(1.7, 16), 1.2, EstimateConfig{16, {4, 12}});
        } catch (const InfeasibleError&) {
            threw = true;
        }
        out << " infeasible_throws=" << (threw ? "yes" : "no");
        ok = ok && threw;
        if (!g_cli_path.empty()) {
            const int code = run_cli("decompose \"fixture(1.7)\" --beta 1.2 -m 16 --window 4:12"
                                     " --out acceptance_tmp/decompose 2>/dev/null");
            out << " cli_exit=" << code;
            ok = ok && code == 3;
        }
        return ok;
    });

    criterion(9, "verify-all reports are byte-identical across runs", 300.0,
              [](std::ostringstream& out) {
                  if (g_cli_path.empty()) {
                      out << " skipped: no cli path";
                      return false;
                  }
                  const fs::path base = "acceptance_tmp";
                  fs::create_directories(base / "run1");
                  fs::create_directories(base / "run2");
                  const int c1 = run_cli("verify all --seed 42 -m 20 --out acceptance_tmp/run1"
                                         " > /dev/null");
                  const int c2 = run_cli("verify all --seed 42 -m 20 --out acceptance_tmp/run2"
                                         " > /dev/null");
                  const std::string a = slurp(base / "run1/verify_all.json");
                  const std::string b = slurp(base / "run2/verify_all.json");
                  out << " exit=" << c1 << "/" << c2 << " bytes=" << a.size() << "/" << b.size()
                      << " identical=" << (a == b && !a.empty() ? "yes" : "no");
                  return c1 == 0 && c2 == 0 && !a.empty() && a == b;
              });

    std::error_code ec;
    fs::remove_all("acceptance_tmp", ec);
    std::cout << (g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << "\n";
    return g_failures == 0 ? 0 : 1;
}
