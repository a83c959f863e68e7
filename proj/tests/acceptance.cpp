// Acceptance battery: twelve self-contained checks, one PASS/FAIL line
// each, exit status = number of failures. argv[1] names the command line
// binary used by the final end-to-end check.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "hypermaj/cone.hpp"
#include "hypermaj/errors.hpp"
#include "hypermaj/lpm.hpp"
#include "hypermaj/majorization.hpp"
#include "hypermaj/partition.hpp"
#include "hypermaj/polynomial.hpp"
#include "hypermaj/rng.hpp"
#include "hypermaj/spectral.hpp"
#include "hypermaj/verify.hpp"

using namespace hypermaj;

namespace {

// Tolerances owned by this battery (library-internal ones live with the
// library): inequality slack scale, concavity floor, reconstruction and
// weight budgets, exhaustive-identity tolerances.
constexpr double kSlackEps = 1e-8;
constexpr double kConcavityFloor = -1e-9;
constexpr double kBirkhoffRecon = 1e-9;
constexpr double kBirkhoffWeightSum = 1e-10;
constexpr double kPinchIdentity = 1e-12;
constexpr double kSignFlipRel = 1e-10;
constexpr double kAnchorTol = 1e-9;

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename Body>
void criterion(int id, const char* label, Body&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    ok = false;
    note = std::string("threw: ") + e.what();
  }
  const double dt = seconds_since(t0);
  std::printf("criterion %2d %s: %s (%.2f s)%s%s\n", id, ok ? "PASS" : "FAIL", label, dt,
              note.empty() ? "" : " -- ", note.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

Vec ones(std::size_t n) { return Vec(n, 1.0); }

bool slack_ok(double lhs, double rhs) {
  return lhs - rhs >= -kSlackEps * (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  criterion(1, "diagonal majorized by spectrum on 1000 random matrices", [](std::string& note) {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(1001);
    for (int t = 0; t < 1000; ++t) {
      const std::size_t n = 2 + static_cast<std::size_t>(rng.below(7));
      if (!schur_horn_check(random_symmetric(rng, n))) {
        note = "failed at trial " + std::to_string(t);
        return false;
      }
    }
    if (seconds_since(t0) >= 5.0) {
      note = "exceeded the 5 s budget";
      return false;
    }
    return true;
  });

  criterion(2, "diagonal-vs-spectrum inequality across the polynomial family", [](std::string& note) {
    const auto t0 = std::chrono::steady_clock::now();

    // Worked anchor first: P(diag) = 4 against P(spectrum) = 3.
    Matrix m(2, 2);
    m(0, 0) = m(1, 1) = 2.0;
    m(0, 1) = m(1, 0) = 1.0;
    const VerificationReport anchor =
        verify_main(elementary_symmetric(2, 2), SymmetricMatrix(m));
    if (anchor.failures != 0 || std::abs(anchor.worst_slack - 1.0) > kAnchorTol) {
      note = "anchor slack " + std::to_string(anchor.worst_slack);
      return false;
    }

    Rng rng(1002);
    for (int t = 0; t < 500; ++t) {
      const std::size_t n = 2 + static_cast<std::size_t>(rng.below(5));
      const NamedPolynomial fam = symmetric_family(n, static_cast<std::uint64_t>(t));
      const Vec lam = random_cone_point(fam.poly, ones(n), rng, t % 10 == 9);
      const SymmetricMatrix a = matrix_with_spectrum(lam, rng.bits());
      const VerificationReport r = verify_main(fam.poly, a);
      if (r.failures != 0) {
        note = "trial " + std::to_string(t) + " (" + fam.name + ", n=" +
               std::to_string(n) + "): " + std::to_string(r.failures) + " failure(s)";
        return false;
      }
    }
    if (seconds_since(t0) >= 30.0) {
      note = "exceeded the 30 s budget";
      return false;
    }
    return true;
  });

  criterion(3, "determinant-diagonal and minor-sum specializations on 500 matrices each", [](std::string& note) {
    Rng rng(1003);
    for (int t = 0; t < 500; ++t) {
      const std::size_t n = 2 + static_cast<std::size_t>(rng.below(6));
      const SymmetricMatrix a = random_psd(rng, n);
      double diag_prod = 1.0;
      for (std::size_t i = 0; i < n; ++i) diag_prod *= a(i, i);
      if (!slack_ok(diag_prod, lu_determinant(a.entries()))) {
        note = "diagonal product fell below the determinant at trial " + std::to_string(t);
        return false;
      }
    }
    for (int t = 0; t < 500; ++t) {
      const std::size_t n = 2 + static_cast<std::size_t>(rng.below(6));
      const std::size_t k = 1 + static_cast<std::size_t>(rng.below(n));
      const VerificationReport r = verify_le_kpositive(random_k_positive(rng, n, k), k);
      if (r.failures != 0) {
        note = "minor-sum comparison failed at trial " + std::to_string(t);
        return false;
      }
    }
    return true;
  });

  criterion(4, "root-scaled concavity along 200 cone segments per polynomial", [](std::string& note) {
    Rng rng(1004);
    for (std::size_t n = 3; n <= 5; ++n) {
      for (std::uint64_t i = 0; i < n; ++i) {
        const NamedPolynomial fam = symmetric_family(n, i);
        for (int t = 0; t < 200; ++t) {
          const Vec x = random_cone_point(fam.poly, ones(n), rng);
          const Vec y = random_cone_point(fam.poly, ones(n), rng);
          const ConcavityReport r = concavity_probe(fam.poly, ones(n), x, y, 10);
          if (!r.passed || r.worst_gap < kConcavityFloor) {
            note = fam.name + " on n=" + std::to_string(n) + ": gap " +
                   std::to_string(r.worst_gap);
            return false;
          }
        }
      }
    }
    return true;
  });

  criterion(5, "permutation decomposition of 200 doubly stochastic matrices", [](std::string& note) {
    Rng rng(1005);
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = 2 + static_cast<std::size_t>(rng.below(7));
      const std::size_t terms = 1 + static_cast<std::size_t>(rng.below(5));
      const DoublyStochasticMatrix d = random_doubly_stochastic(rng, n, terms);
      const BirkhoffDecomposition bd = birkhoff_decompose(d);

      if (bd.weights.size() > (n - 1) * (n - 1) + 1) {
        note = "term count " + std::to_string(bd.weights.size()) + " over budget at n=" +
               std::to_string(n);
        return false;
      }
      Matrix recon(n, n);
      double total = 0.0;
      for (std::size_t j = 0; j < bd.weights.size(); ++j) {
        recon = recon + bd.weights[j] * permutation_matrix(bd.permutations[j]);
        total += bd.weights[j];
      }
      if (max_abs(recon - d.entries()) > kBirkhoffRecon) {
        note = "reconstruction error " + std::to_string(max_abs(recon - d.entries()));
        return false;
      }
      if (std::abs(total - 1.0) > kBirkhoffWeightSum) {
        note = "weights sum to " + std::to_string(total);
        return false;
      }
    }
    return true;
  });

  criterion(6, "averaging keeps 500 points inside the closed cone", [](std::string& note) {
    Rng rng(1006);
    for (int t = 0; t < 500; ++t) {
      const std::size_t n = 2 + static_cast<std::size_t>(rng.below(6));
      const NamedPolynomial fam = symmetric_family(n, static_cast<std::uint64_t>(t));
      const Vec y = random_cone_point(fam.poly, ones(n), rng, t % 10 == 9);
      const DoublyStochasticMatrix d =
          random_doubly_stochastic(rng, n, 1 + static_cast<std::size_t>(rng.below(4)));
      const Vec x = d.entries() * y;
      if (!cone_member(fam.poly, ones(n), x, ConeMode::kClosed).member) {
        note = "trial " + std::to_string(t) + " left the cone (" + fam.name + ")";
        return false;
      }
    }
    return true;
  });

  criterion(7, "two-sided averaging chain over 100 rotations per polynomial", [](std::string& note) {
    Rng rng(1007);
    for (std::uint64_t i = 0; i < 4; ++i) {
      const NamedPolynomial fam = symmetric_family(4, i);
      for (int rep = 0; rep < 10; ++rep) {
        const Vec lam = random_cone_point(fam.poly, ones(4), rng);
        const SymmetricMatrix a = matrix_with_spectrum(lam, rng.bits());
        const VerificationReport r = verify_minmax(fam.poly, a, 10, rng.bits());
        if (r.failures != 0) {
          note = fam.name + " rep " + std::to_string(rep) + ": " +
                 std::to_string(r.failures) + " failure(s)";
          return false;
        }
      }
    }
    return true;
  });

  criterion(8, "spectral rearrangement suites at 200 trials each", [](std::string& note) {
    SuiteConfig cfg;
    cfg.trials = 200;
    cfg.seed = 1008;
    for (const char* name : {"fan_sum", "fan_diff", "rank_one", "sum_psd", "block_pinch"}) {
      const VerificationReport r = run_suite(name, cfg);
      if (r.failures != 0) {
        note = std::string(name) + ": " + std::to_string(r.failures) + " failure(s)";
        return false;
      }
    }
    return true;
  });

  criterion(9, "sign averaging equals pinching for every partition up to n=6", [](std::string& note) {
    Rng rng(1009);
    for (std::size_t n = 2; n <= 6; ++n) {
      const std::vector<Partition> parts = all_partitions(n);
      for (int t = 0; t < 50; ++t) {
        const SymmetricMatrix a = random_symmetric(rng, n);
        for (const Partition& p : parts) {
          const double dev =
              max_abs(reynolds_sign_average(a, p).entries() - block_pinch(a, p).entries());
          if (dev > kPinchIdentity) {
            note = "n=" + std::to_string(n) + ": deviation " + std::to_string(dev);
            return false;
          }
        }
      }
    }
    return true;
  });

  criterion(10, "pinching inequality with cross-checked verdicts on n=4,5", [](std::string& note) {
    Rng rng(1010);
    const std::vector<Partition> parts4 = all_partitions(4);
    for (std::uint64_t i = 0; i < 3; ++i) {
      const NamedLpm fam = lpm_family(4, i);
      for (int t = 0; t < 200; ++t) {
        const SymmetricMatrix a = random_lpm_cone_point(fam.poly, rng, t % 10 == 9);
        for (const Partition& p : parts4) {
          FischerReport fr;
          try {
            fr = fischer_check(fam.poly, a, p);
          } catch (const ConeMembershipError&) {
            continue;  // boundary draw outside the fixed entry tolerance
          }
          if (!fr.cone_preserved || !fr.inequality_holds) {
            note = fam.name + " n=4 trial " + std::to_string(t) + " failed";
            return false;
          }
          const VerificationReport vr = verify_symmetrization(fam.poly, a, p);
          if ((vr.failures == 0) != (fr.cone_preserved && fr.inequality_holds)) {
            note = fam.name + " n=4: verdicts disagree";
            return false;
          }
        }
      }
    }
    for (std::uint64_t i = 0; i < 3; ++i) {
      const NamedLpm fam = lpm_family(5, i);
      for (int t = 0; t < 200; ++t) {
        const SymmetricMatrix a = random_lpm_cone_point(fam.poly, rng, t % 10 == 9);
        const Partition p = random_partition(rng, 5);
        FischerReport fr;
        try {
          fr = fischer_check(fam.poly, a, p);
        } catch (const ConeMembershipError&) {
          continue;
        }
        if (!fr.cone_preserved || !fr.inequality_holds) {
          note = fam.name + " n=5 trial " + std::to_string(t) + " failed";
          return false;
        }
        const VerificationReport vr = verify_symmetrization(fam.poly, a, p);
        if ((vr.failures == 0) != (fr.cone_preserved && fr.inequality_holds)) {
          note = fam.name + " n=5: verdicts disagree";
          return false;
        }
      }
    }
    return true;
  });

  criterion(11, "exhaustive sign-flip invariance up to n=6", [](std::string& note) {
    Rng rng(1011);
    for (std::size_t n = 2; n <= 6; ++n) {
      for (int t = 0; t < 20; ++t) {
        const NamedLpm fam = lpm_family(n, static_cast<std::uint64_t>(t));
        const SymmetricMatrix a = random_symmetric(rng, n);
        const double base = lpm_eval(fam.poly, a);
        for (std::uint32_t pattern = 0; pattern < (1u << n); ++pattern) {
          std::vector<int> signs(n);
          for (std::size_t i = 0; i < n; ++i) signs[i] = (pattern >> i & 1u) ? -1 : 1;
          const double flipped = lpm_eval(fam.poly, sign_conjugate(a, SignVector(signs)));
          if (std::abs(flipped - base) > kSignFlipRel * (1.0 + std::abs(base))) {
            note = fam.name + " n=" + std::to_string(n) + ": deviation " +
                   std::to_string(std::abs(flipped - base));
            return false;
          }
        }
      }
    }
    return true;
  });

  criterion(12, "full default verification run finishes clean inside 3 minutes", [&cli](std::string& note) {
    if (cli.empty()) {
      note = "no binary path given";
      return false;
    }
    const std::string cmd = "\"" + cli + "\" verify all > /dev/null";
    const auto t0 = std::chrono::steady_clock::now();
    const int status = std::system(cmd.c_str());
    const double dt = seconds_since(t0);
    if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0) {
      note = "exit status " + std::to_string(status);
      return false;
    }
    if (dt >= 180.0) {
      note = "took " + std::to_string(dt) + " s";
      return false;
    }
    return true;
  });

  if (g_failures != 0) std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures;
}
