#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypermaj/cone.hpp"
#include "hypermaj/errors.hpp"
#include "hypermaj/io.hpp"
#include "hypermaj/lpm.hpp"
#include "hypermaj/majorization.hpp"
#include "hypermaj/spectral.hpp"
#include "hypermaj/verify.hpp"

namespace {

using hypermaj::Vec;
using nlohmann::json;

// Exit codes: 0 pass, 1 verification failure, 2 usage or parse error,
// 3 mathematical precondition violation.
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMath = 3;

void print_vec(const char* label, const Vec& v) {
  std::printf("%s:", label);
  for (double x : v) std::printf(" %.17g", x);
  std::printf("\n");
}

void print_matrix(const hypermaj::Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      std::printf(j + 1 == m.cols() ? "%.17g" : "%.17g ", m(i, j));
    std::printf("\n");
  }
}

int cmd_eig(const std::vector<std::string>& files, double tol, bool as_json) {
  if (files.size() == 1) {
    const hypermaj::SymmetricMatrix a(
        hypermaj::parse_matrix_auto(hypermaj::read_file(files[0])));
    const Vec lam = hypermaj::eigenvalues_sym(a);
    if (as_json) {
      std::printf("%s\n", json{{"eigenvalues", lam}, {"certified", true}}.dump().c_str());
    } else {
      print_vec("eigenvalues", lam);
      std::printf("certified: true\n");
    }
    return kExitPass;
  }
  const hypermaj::HomogeneousPolynomial p =
      hypermaj::parse_polynomial_json(hypermaj::read_file(files[0]));
  Vec x;
  try {
    x = hypermaj::parse_vector_json(hypermaj::read_file(files[1]));
  } catch (const hypermaj::ParseError&) {
    throw hypermaj::ParseError(
        "eig: with a polynomial the second file must be a vector point; "
        "pass a matrix file alone for its spectrum");
  }
  const hypermaj::DirectionalSpectrum spec =
      hypermaj::directional_eigenvalues(p, Vec(p.n(), 1.0), x, tol);
  if (as_json) {
    std::printf("%s\n",
                json{{"eigenvalues", spec.eigenvalues}, {"certified", spec.certified}}
                    .dump()
                    .c_str());
  } else {
    print_vec("eigenvalues", spec.eigenvalues);
    std::printf("certified: %s\n", spec.certified ? "true" : "false");
  }
  return kExitPass;
}

int cmd_cone(const std::string& poly_file, const std::string& point_file,
             const std::string& mode, double tol, bool tol_set, bool as_json) {
  const hypermaj::HomogeneousPolynomial p =
      hypermaj::parse_polynomial_json(hypermaj::read_file(poly_file));
  const Vec x = hypermaj::parse_vector_json(hypermaj::read_file(point_file));
  const hypermaj::ConeMode m =
      mode == "open" ? hypermaj::ConeMode::kOpen : hypermaj::ConeMode::kClosed;
  const Vec dir(p.n(), 1.0);
  const hypermaj::ConeMembership res =
      tol_set ? hypermaj::cone_member(p, dir, x, m, tol) : hypermaj::cone_member(p, dir, x, m);
  if (as_json) {
    std::printf("%s\n", json{{"member", res.member},
                             {"mode", mode},
                             {"min_eigenvalue", res.min_eigenvalue},
                             {"eps", res.eps}}
                            .dump()
                            .c_str());
  } else {
    std::printf("member: %s\nmode: %s\nmin_eigenvalue: %.17g\neps: %.17g\n",
                res.member ? "true" : "false", mode.c_str(), res.min_eigenvalue, res.eps);
  }
  return res.member ? kExitPass : kExitFail;
}

int cmd_major(const std::string& x_file, const std::string& y_file, double tol, bool tol_set,
              bool as_json) {
  const Vec x = hypermaj::parse_vector_json(hypermaj::read_file(x_file));
  const Vec y = hypermaj::parse_vector_json(hypermaj::read_file(y_file));
  const bool ok = tol_set ? hypermaj::majorizes(x, y, tol) : hypermaj::majorizes(x, y);
  if (as_json) {
    std::printf("%s\n", json{{"majorizes", ok}}.dump().c_str());
  } else {
    std::printf("x majorized by y: %s\n", ok ? "true" : "false");
  }
  return ok ? kExitPass : kExitFail;
}

int cmd_witness(const std::string& x_file, const std::string& y_file, bool as_json) {
  const Vec x = hypermaj::parse_vector_json(hypermaj::read_file(x_file));
  const Vec y = hypermaj::parse_vector_json(hypermaj::read_file(y_file));
  const hypermaj::DoublyStochasticMatrix d = hypermaj::doubly_stochastic_witness(x, y);
  if (as_json) {
    std::printf("%s\n", hypermaj::matrix_to_json(d.entries()).c_str());
  } else {
    print_matrix(d.entries());
  }
  return kExitPass;
}

int cmd_birkhoff(const std::string& matrix_file, double tol, bool tol_set, bool as_json) {
  const hypermaj::DoublyStochasticMatrix d(
      hypermaj::parse_matrix_auto(hypermaj::read_file(matrix_file)));
  const hypermaj::BirkhoffDecomposition dec =
      tol_set ? hypermaj::birkhoff_decompose(d, tol) : hypermaj::birkhoff_decompose(d);
  if (as_json) {
    json perms = json::array();
    for (const auto& p : dec.permutations) {
      json one = json::array();
      for (std::size_t i : p) one.push_back(i + 1);
      perms.push_back(std::move(one));
    }
    std::printf("%s\n", json{{"weights", dec.weights}, {"permutations", perms}}.dump().c_str());
  } else {
    for (std::size_t t = 0; t < dec.weights.size(); ++t) {
      std::printf("%.17g:", dec.weights[t]);
      for (std::size_t i : dec.permutations[t]) std::printf(" %zu", i + 1);
      std::printf("\n");
    }
  }
  return kExitPass;
}

int cmd_lpm_eval(const std::string& poly_file, const std::string& matrix_file, bool as_json) {
  const hypermaj::LpmPolynomial p = hypermaj::parse_lpm_json(hypermaj::read_file(poly_file));
  const hypermaj::SymmetricMatrix a(
      hypermaj::parse_matrix_auto(hypermaj::read_file(matrix_file)));
  const double v = hypermaj::lpm_eval(p, a);
  if (as_json) {
    std::printf("%s\n", json{{"value", v}}.dump().c_str());
  } else {
    std::printf("value: %.17g\n", v);
  }
  return kExitPass;
}

int cmd_lpm_pinch(const std::string& matrix_file, const std::string& partition_file,
                  bool as_json) {
  const hypermaj::SymmetricMatrix a(
      hypermaj::parse_matrix_auto(hypermaj::read_file(matrix_file)));
  const hypermaj::Partition pi =
      hypermaj::parse_partition_json(hypermaj::read_file(partition_file), a.size());
  const hypermaj::SymmetricMatrix out = hypermaj::block_pinch(a, pi);
  if (as_json) {
    std::printf("%s\n", hypermaj::matrix_to_json(out.entries()).c_str());
  } else {
    print_matrix(out.entries());
  }
  return kExitPass;
}

int cmd_lpm_fischer(const std::string& poly_file, const std::string& matrix_file,
                    const std::string& partition_file, double tol, bool tol_set, bool as_json) {
  const hypermaj::LpmPolynomial p = hypermaj::parse_lpm_json(hypermaj::read_file(poly_file));
  const hypermaj::SymmetricMatrix a(
      hypermaj::parse_matrix_auto(hypermaj::read_file(matrix_file)));
  const hypermaj::Partition pi =
      hypermaj::parse_partition_json(hypermaj::read_file(partition_file), a.size());
  const hypermaj::FischerReport rep =
      tol_set ? hypermaj::fischer_check(p, a, pi, tol) : hypermaj::fischer_check(p, a, pi);
  if (as_json) {
    std::printf("%s\n", json{{"cone_preserved", rep.cone_preserved},
                             {"inequality_holds", rep.inequality_holds},
                             {"lhs", rep.lhs},
                             {"rhs", rep.rhs}}
                            .dump()
                            .c_str());
  } else {
    std::printf("cone_preserved: %s\ninequality_holds: %s\nlhs: %.17g\nrhs: %.17g\n",
                rep.cone_preserved ? "true" : "false",
                rep.inequality_holds ? "true" : "false", rep.lhs, rep.rhs);
  }
  return rep.cone_preserved && rep.inequality_holds ? kExitPass : kExitFail;
}

int cmd_verify(const std::string& suite, int trials, std::uint64_t seed) {
  hypermaj::SuiteConfig cfg;
  cfg.trials = trials;
  cfg.seed = seed;
  std::vector<hypermaj::VerificationReport> reports;
  if (suite == "all") {
    reports = hypermaj::run_all(cfg);
  } else {
    const std::vector<std::string> names = hypermaj::suite_names();
    bool known = false;
    for (const auto& n : names) known = known || n == suite;
    if (!known) {
      std::fprintf(stderr, "unknown suite \"%s\"; valid names are: all", suite.c_str());
      for (const auto& n : names) std::fprintf(stderr, " %s", n.c_str());
      std::fprintf(stderr, "\n");
      return kExitUsage;
    }
    reports.push_back(hypermaj::run_suite(suite, cfg));
  }
  long failures = 0;
  for (const auto& rep : reports) {
    failures += rep.failures;
    std::printf("%s\n", hypermaj::report_to_json(rep).c_str());
  }
  return failures == 0 ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperbolic-polynomial eigenvalues, cones, and majorization checks"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of plain text");
  // Let --json appear after the subcommand name too.
  app.fallthrough();

  std::vector<std::string> eig_files;
  double eig_tol = 1e-7;
  CLI::App* eig = app.add_subcommand(
      "eig", "spectrum of a symmetric matrix, or of a point along the all-ones direction");
  eig->add_option("files", eig_files,
                  "matrix file, or polynomial file followed by a vector point file")
      ->expected(1, 2)
      ->required();
  eig->add_option("--tol", eig_tol, "imaginary-part tolerance for root certification");

  std::string cone_poly, cone_point, cone_mode = "closed";
  double cone_tol = 0.0;
  CLI::App* cone = app.add_subcommand("cone", "hyperbolicity cone membership of a point");
  cone->add_option("polynomial", cone_poly, "polynomial file")->required();
  cone->add_option("point", cone_point, "vector point file")->required();
  cone->add_option("--mode", cone_mode, "open or closed cone")
      ->check(CLI::IsMember({"open", "closed"}));
  CLI::Option* cone_tol_opt =
      cone->add_option("--tol", cone_tol, "membership tolerance (default scales with the point)");

  std::string major_x, major_y;
  double major_tol = 0.0;
  CLI::App* major = app.add_subcommand("major", "check that x is majorized by y");
  major->add_option("x", major_x, "vector file")->required();
  major->add_option("y", major_y, "vector file")->required();
  CLI::Option* major_tol_opt =
      major->add_option("--tol", major_tol, "partial-sum tolerance (default scales with y)");

  std::string wit_x, wit_y;
  CLI::App* witness =
      app.add_subcommand("witness", "doubly stochastic D with D y = x for majorized pairs");
  witness->add_option("x", wit_x, "vector file")->required();
  witness->add_option("y", wit_y, "vector file")->required();

  std::string birk_matrix;
  double birk_tol = 0.0;
  CLI::App* birkhoff =
      app.add_subcommand("birkhoff", "decompose a doubly stochastic matrix into permutations");
  birkhoff->add_option("matrix", birk_matrix, "matrix file (JSON or CSV)")->required();
  CLI::Option* birk_tol_opt =
      birkhoff->add_option("--tol", birk_tol, "entry tolerance for the input check");

  CLI::App* lpm = app.add_subcommand("lpm", "principal-minor polynomial operations");
  lpm->require_subcommand(1);

  std::string le_poly, le_matrix;
  CLI::App* lpm_eval = lpm->add_subcommand("eval", "evaluate a minor-sum polynomial at a matrix");
  lpm_eval->add_option("polynomial", le_poly, "minor-sum polynomial file")->required();
  lpm_eval->add_option("matrix", le_matrix, "matrix file (JSON or CSV)")->required();

  std::string lp_matrix, lp_partition;
  CLI::App* lpm_pinch = lpm->add_subcommand("pinch", "zero out off-diagonal blocks");
  lpm_pinch->add_option("matrix", lp_matrix, "matrix file (JSON or CSV)")->required();
  lpm_pinch->add_option("partition", lp_partition, "partition file")->required();

  std::string lf_poly, lf_matrix, lf_partition;
  double lf_tol = 0.0;
  CLI::App* lpm_fischer =
      lpm->add_subcommand("fischer", "pinching inequality and cone preservation check");
  lpm_fischer->add_option("polynomial", lf_poly, "minor-sum polynomial file")->required();
  lpm_fischer->add_option("matrix", lf_matrix, "matrix file (JSON or CSV)")->required();
  lpm_fischer->add_option("partition", lf_partition, "partition file")->required();
  CLI::Option* lf_tol_opt = lpm_fischer->add_option("--tol", lf_tol, "inequality slack factor");

  std::string verify_suite;
  int verify_trials = 200;
  std::uint64_t verify_seed = 1;
  CLI::App* verify = app.add_subcommand("verify", "run verification suites, one JSON line each");
  verify->add_option("suite", verify_suite, "suite name or \"all\"")->required();
  verify->add_option("--trials", verify_trials, "trials per suite")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_seed, "master seed");

  try {
    app.parse(argc, argv);
    if (eig->parsed()) return cmd_eig(eig_files, eig_tol, as_json);
    if (cone->parsed())
      return cmd_cone(cone_poly, cone_point, cone_mode, cone_tol,
                      cone_tol_opt->count() > 0, as_json);
    if (major->parsed())
      return cmd_major(major_x, major_y, major_tol, major_tol_opt->count() > 0, as_json);
    if (witness->parsed()) return cmd_witness(wit_x, wit_y, as_json);
    if (birkhoff->parsed())
      return cmd_birkhoff(birk_matrix, birk_tol, birk_tol_opt->count() > 0, as_json);
    if (lpm_eval->parsed()) return cmd_lpm_eval(le_poly, le_matrix, as_json);
    if (lpm_pinch->parsed()) return cmd_lpm_pinch(lp_matrix, lp_partition, as_json);
    if (lpm_fischer->parsed())
      return cmd_lpm_fischer(lf_poly, lf_matrix, lf_partition, lf_tol,
                             lf_tol_opt->count() > 0, as_json);
    if (verify->parsed()) return cmd_verify(verify_suite, verify_trials, verify_seed);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  } catch (const hypermaj::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const hypermaj::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitMath;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitMath;
  }
}
