#include "hypermaj/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hypermaj/cone.hpp"
#include "hypermaj/errors.hpp"

namespace hypermaj {

namespace {

using nlohmann::json;

constexpr double kEps = 1e-8;           // additive inequality slack factor
constexpr double kStrictFloor = 1e-9;   // strict-gap floor for the probe
constexpr double kPinchTol = 1e-12;     // Reynolds vs pinch entrywise agreement
constexpr double kSignFlipTol = 1e-10;  // sign-conjugation relative deviation

// Stream id for the Haar draws inside verify_minmax ("mnmx" in ASCII);
// suites derive their own streams from their names.
constexpr std::uint64_t kMinmaxStream = 0x6d6e6d78ULL;

std::uint64_t fnv1a(const char* s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (; *s != '\0'; ++s) {
    h ^= static_cast<unsigned char>(*s);
    h *= 1099511628211ULL;
  }
  return h;
}

double slack_floor(double lhs, double rhs) {
  return -kEps * (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
}

Vec ones(std::size_t n) { return Vec(n, 1.0); }

ConeMembership closed_member(const HomogeneousPolynomial& p, const Vec& x) {
  return cone_member(p, ones(p.n()), x, ConeMode::kClosed);
}

json mat_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json partition_json(const Partition& p) {
  json blocks = json::array();
  for (const auto& b : p.blocks()) {
    json block = json::array();
    for (std::size_t i : b) block.push_back(i + 1);  // 1-based, as in the wire format
    blocks.push_back(std::move(block));
  }
  return blocks;
}

// Running elementary-symmetric values of a vector, e[j] = S_j(v).
Vec esym_values(const Vec& v) {
  Vec e(v.size() + 1, 0.0);
  e[0] = 1.0;
  for (double x : v) {
    for (std::size_t j = v.size(); j >= 1; --j) e[j] += x * e[j - 1];
  }
  return e;
}

Matrix outer(const Vec& v) {
  Matrix m(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * v[j];
  }
  return m;
}

// Collects the outcome of one check: counterexamples tagged by kind,
// plus the running minimum of inequality margins.
class Recorder {
 public:
  explicit Recorder(const char* name) {
    rep_.check_name = name;
    rep_.trials = 1;
  }

  void set_trials(long t) { rep_.trials = t; }
  void set_seed(std::uint64_t s) { rep_.seed = s; }

  void margin(double m) {
    if (!have_margin_ || m < rep_.worst_slack) rep_.worst_slack = m;
    have_margin_ = true;
  }

  void check(bool ok, const char* kind, json detail) {
    if (ok) return;
    detail["kind"] = kind;
    rep_.counterexamples.push_back(detail.dump());
    rep_.failures += 1;
  }

  void inequality(const char* kind, double lhs, double rhs, json detail) {
    margin(lhs - rhs);
    detail["lhs"] = lhs;
    detail["rhs"] = rhs;
    check(lhs - rhs >= slack_floor(lhs, rhs), kind, std::move(detail));
  }

  void equality(const char* kind, double lhs, double rhs, double tol, json detail) {
    detail["lhs"] = lhs;
    detail["rhs"] = rhs;
    check(std::abs(lhs - rhs) <= tol, kind, std::move(detail));
  }

  VerificationReport take() { return std::move(rep_); }

 private:
  VerificationReport rep_;
  bool have_margin_ = false;
};

// Merges per-trial reports into one suite report. Annotating only the
// counterexamples keeps the passing path allocation-free.
class Accumulator {
 public:
  Accumulator(const char* name, const SuiteConfig& cfg) {
    rep_.check_name = name;
    rep_.seed = cfg.seed;
  }

  void add(const VerificationReport& item, long trial, const json& note,
           bool use_margin = true) {
    rep_.trials += item.trials;
    rep_.failures += item.failures;
    for (const auto& ce : item.counterexamples) {
      json j = json::parse(ce);
      j["trial"] = trial;
      for (auto it = note.begin(); it != note.end(); ++it) j[it.key()] = it.value();
      rep_.counterexamples.push_back(j.dump());
    }
    if (use_margin && (!have_margin_ || item.worst_slack < rep_.worst_slack)) {
      rep_.worst_slack = item.worst_slack;
      have_margin_ = true;
    }
  }

  VerificationReport take() { return std::move(rep_); }

 private:
  VerificationReport rep_;
  bool have_margin_ = false;
};

// Shared body of verify_main and verify_le_kpositive, so the S_k
// specialization agrees with the general theorem check bit for bit.
VerificationReport main_theorem_impl(const char* name, const HomogeneousPolynomial& p,
                                     const SymmetricMatrix& a) {
  if (!is_symmetric(p)) throw SymmetryError(std::string(name) + ": polynomial is not symmetric");
  if (p.n() != a.size()) {
    throw DimensionError(std::string(name) + ": polynomial and matrix sizes differ");
  }
  const Vec lam = eigenvalues_sym(a);
  if (!closed_member(p, lam).member) {
    throw ConeMembershipError(std::string(name) + ": spectrum outside the closed cone");
  }
  Recorder rec(name);
  const Vec d = diagonal_of(a);
  const ConeMembership dm = closed_member(p, d);
  rec.check(dm.member, "cone",
            json{{"vector", d}, {"min_eigenvalue", dm.min_eigenvalue}});
  rec.inequality("inequality", evaluate(p, d), evaluate(p, lam),
                 json{{"matrix", mat_json(a.entries())}});
  return rec.take();
}

// Shared body of verify_transfer and verify_schur_concavity.
VerificationReport transfer_impl(const char* name, const HomogeneousPolynomial& p, const Vec& x,
                                 const Vec& y) {
  if (x.size() != p.n() || y.size() != p.n()) {
    throw DimensionError(std::string(name) + ": vector length does not match the polynomial");
  }
  if (!majorizes(x, y)) {
    throw MajorizationError(std::string(name) + ": x is not majorized by y");
  }
  if (!closed_member(p, y).member) {
    throw ConeMembershipError(std::string(name) + ": y outside the closed cone");
  }
  Recorder rec(name);
  const ConeMembership xm = closed_member(p, x);
  rec.check(xm.member, "cone", json{{"x", x}, {"min_eigenvalue", xm.min_eigenvalue}});
  rec.inequality("inequality", evaluate(p, x), evaluate(p, y), json{{"x", x}, {"y", y}});
  return rec.take();
}

}  // namespace

std::string report_to_json(const VerificationReport& r) {
  json j;
  j["check"] = r.check_name;
  j["trials"] = r.trials;
  j["failures"] = r.failures;
  j["worst_slack"] = r.worst_slack;
  j["seed"] = r.seed;
  json ces = json::array();
  for (const auto& ce : r.counterexamples) ces.push_back(json::parse(ce));
  j["counterexamples"] = ces;
  return j.dump();
}

VerificationReport verify_main(const HomogeneousPolynomial& p, const SymmetricMatrix& a) {
  return main_theorem_impl("main", p, a);
}

VerificationReport verify_le_kpositive(const SymmetricMatrix& a, std::size_t k) {
  if (k < 1 || k > a.size()) throw DomainError("verify_le_kpositive: k out of range");
  return main_theorem_impl("le", elementary_symmetric(a.size(), static_cast<int>(k)), a);
}

VerificationReport verify_transfer(const HomogeneousPolynomial& p, const Vec& x, const Vec& y) {
  return transfer_impl("transfer", p, x, y);
}

VerificationReport verify_schur_concavity(const HomogeneousPolynomial& p, const Vec& x,
                                          const Vec& y) {
  if (!is_symmetric(p)) throw SymmetryError("verify_schur_concavity: polynomial is not symmetric");
  return transfer_impl("schur_concavity", p, x, y);
}

VerificationReport verify_minmax(const HomogeneousPolynomial& p, const SymmetricMatrix& a,
                                 int trials, std::uint64_t seed) {
  if (!is_symmetric(p)) throw SymmetryError("verify_minmax: polynomial is not symmetric");
  if (p.n() != a.size()) throw DimensionError("verify_minmax: polynomial and matrix sizes differ");
  if (trials < 0) throw DomainError("verify_minmax: negative trial count");
  const EigenDecomposition ed = eigen_sym(a);
  if (!closed_member(p, ed.eigenvalues).member) {
    throw ConeMembershipError("verify_minmax: spectrum outside the closed cone");
  }
  Recorder rec("minmax");
  rec.set_trials(trials);
  rec.set_seed(seed);
  const double bottom = evaluate(p, ed.eigenvalues);
  const double top = evaluate(p, mean_vector(ed.eigenvalues));
  for (int t = 0; t < trials; ++t) {
    const Matrix u = random_orthogonal(a.size(), derive_seed(seed, kMinmaxStream,
                                                             static_cast<std::uint64_t>(t)));
    const SymmetricMatrix c = symmetric_part(u * a.entries() * transpose(u));
    const double mid = evaluate(p, diagonal_of(c));
    rec.inequality("inequality", mid, bottom, json{{"haar_trial", t}, {"side", "lower"}});
    rec.inequality("inequality", top, mid, json{{"haar_trial", t}, {"side", "upper"}});
  }
  const Matrix u0 = transpose(ed.vectors);
  const SymmetricMatrix c0 = symmetric_part(u0 * a.entries() * transpose(u0));
  const double left = evaluate(p, diagonal_of(c0));
  rec.equality("equality", left, bottom,
               kEps * (1.0 + std::max(std::abs(left), std::abs(bottom))),
               json{{"matrix", mat_json(a.entries())}});
  return rec.take();
}

VerificationReport verify_fan_sum(const HomogeneousPolynomial& p, const SymmetricMatrix& a,
                                  const SymmetricMatrix& b) {
  if (!is_symmetric(p)) throw SymmetryError("verify_fan_sum: polynomial is not symmetric");
  if (p.n() != a.size() || a.size() != b.size()) {
    throw DimensionError("verify_fan_sum: size mismatch");
  }
  const Vec la = eigenvalues_sym(a);
  const Vec lb = eigenvalues_sym(b);
  Vec s(la.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = la[i] + lb[i];
  if (!closed_member(p, s).member) {
    throw ConeMembershipError("verify_fan_sum: lambda(A)+lambda(B) outside the closed cone");
  }
  Recorder rec("fan_sum");
  const Vec ls = eigenvalues_sym(SymmetricMatrix(a.entries() + b.entries()));
  rec.check(majorizes(ls, s), "majorization", json{{"x", ls}, {"y", s}});
  const ConeMembership m = closed_member(p, ls);
  rec.check(m.member, "cone", json{{"x", ls}, {"min_eigenvalue", m.min_eigenvalue}});
  rec.inequality("inequality", evaluate(p, ls), evaluate(p, s),
                 json{{"matrix", mat_json(a.entries())}, {"matrix_b", mat_json(b.entries())}});
  return rec.take();
}

VerificationReport verify_fan_diff(const HomogeneousPolynomial& p, const SymmetricMatrix& a,
                                   const SymmetricMatrix& b) {
  if (!is_symmetric(p)) throw SymmetryError("verify_fan_diff: polynomial is not symmetric");
  if (p.n() != a.size() || a.size() != b.size()) {
    throw DimensionError("verify_fan_diff: size mismatch");
  }
  const Vec y = eigenvalues_sym(SymmetricMatrix(a.entries() - b.entries()));
  if (!closed_member(p, y).member) {
    throw ConeMembershipError("verify_fan_diff: lambda(A-B) outside the closed cone");
  }
  Recorder rec("fan_diff");
  const Vec la = eigenvalues_sym(a);
  const Vec lb = eigenvalues_sym(b);
  Vec x(la.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = la[i] - lb[i];
  rec.check(majorizes(x, y), "majorization", json{{"x", x}, {"y", y}});
  const ConeMembership m = closed_member(p, x);
  rec.check(m.member, "cone", json{{"x", x}, {"min_eigenvalue", m.min_eigenvalue}});
  rec.inequality("inequality", evaluate(p, x), evaluate(p, y),
                 json{{"matrix", mat_json(a.entries())}, {"matrix_b", mat_json(b.entries())}});
  return rec.take();
}

VerificationReport verify_sum_psd_embed(const HomogeneousPolynomial& p2n,
                                        const SymmetricMatrix& a, const SymmetricMatrix& b) {
  if (!is_symmetric(p2n)) throw SymmetryError("verify_sum_psd_embed: polynomial is not symmetric");
  const std::size_t n = a.size();
  if (b.size() != n || p2n.n() != 2 * n) {
    throw DimensionError("verify_sum_psd_embed: polynomial must live on 2n variables");
  }
  const Vec la = eigenvalues_sym(a);
  const Vec lb = eigenvalues_sym(b);
  const double psd_tol_a = 1e-9 * (1.0 + inf_norm(la));
  const double psd_tol_b = 1e-9 * (1.0 + inf_norm(lb));
  if (la.back() < -psd_tol_a) {
    throw ConeMembershipError("verify_sum_psd_embed: A is not positive semidefinite");
  }
  if (lb.back() < -psd_tol_b) {
    throw ConeMembershipError("verify_sum_psd_embed: B is not positive semidefinite");
  }
  Vec v(la);
  v.insert(v.end(), lb.begin(), lb.end());
  if (!closed_member(p2n, v).member) {
    throw ConeMembershipError(
        "verify_sum_psd_embed: (lambda(A), lambda(B)) outside the closed cone");
  }
  Recorder rec("sum_psd");
  Vec u = eigenvalues_sym(SymmetricMatrix(a.entries() + b.entries()));
  u.resize(2 * n, 0.0);
  rec.check(majorizes(v, u), "majorization", json{{"x", v}, {"y", u}});
  const ConeMembership m = closed_member(p2n, u);
  rec.check(m.member, "cone", json{{"y", u}, {"min_eigenvalue", m.min_eigenvalue}});
  rec.inequality("inequality", evaluate(p2n, v), evaluate(p2n, u), json{{"u", u}, {"v", v}});
  return rec.take();
}

VerificationReport verify_block_pinch(const HomogeneousPolynomial& p, const SymmetricMatrix& a,
                                      const Partition& pi) {
  if (!is_symmetric(p)) throw SymmetryError("verify_block_pinch: polynomial is not symmetric");
  if (p.n() != a.size() || pi.n() != a.size()) {
    throw DimensionError("verify_block_pinch: size mismatch");
  }
  const Vec lam = eigenvalues_sym(a);
  if (!closed_member(p, lam).member) {
    throw ConeMembershipError("verify_block_pinch: spectrum outside the closed cone");
  }
  Recorder rec("block_pinch");
  Vec w;
  w.reserve(a.size());
  for (const SymmetricMatrix& block : block_extract(a, pi)) {
    const Vec bl = eigenvalues_sym(block);
    w.insert(w.end(), bl.begin(), bl.end());
  }
  rec.check(majorizes(w, lam), "majorization", json{{"x", w}, {"y", lam}});
  const ConeMembership m = closed_member(p, w);
  rec.check(m.member, "cone", json{{"x", w}, {"min_eigenvalue", m.min_eigenvalue}});
  rec.inequality("inequality", evaluate(p, w), evaluate(p, lam),
                 json{{"matrix", mat_json(a.entries())}, {"partition", partition_json(pi)}});
  return rec.take();
}

VerificationReport verify_symmetrization(const LpmPolynomial& p, const SymmetricMatrix& a,
                                         const Partition& pi) {
  if (p.n() != a.size() || pi.n() != a.size()) {
    throw DimensionError("verify_symmetrization: size mismatch");
  }
  // Same cone tolerance fischer_check applies, so the cross-check below
  // can never trip its entry gate once ours has passed.
  if (!lpm_cone_member(p, a, ConeMode::kClosed, kEps).member) {
    throw ConeMembershipError("verify_symmetrization: A outside the closed cone");
  }
  Recorder rec("symmetrization");
  const SymmetricMatrix r = reynolds_sign_average(a, pi);
  const ConeMembership m = lpm_cone_member(p, r, ConeMode::kClosed, kEps);
  const bool cone_ok = m.member;
  rec.check(cone_ok, "cone",
            json{{"matrix", mat_json(r.entries())}, {"min_eigenvalue", m.min_eigenvalue}});
  const double lhs = lpm_eval(p, r);
  const double rhs = lpm_eval(p, a);
  rec.inequality("inequality", lhs, rhs,
                 json{{"matrix", mat_json(a.entries())}, {"partition", partition_json(pi)}});
  const bool ineq_ok = lhs - rhs >= slack_floor(lhs, rhs);
  const FischerReport f = fischer_check(p, a, pi);
  rec.check(f.inequality_holds == ineq_ok && f.cone_preserved == cone_ok, "cross",
            json{{"fischer_lhs", f.lhs},
                 {"fischer_rhs", f.rhs},
                 {"fischer_inequality", f.inequality_holds},
                 {"fischer_cone", f.cone_preserved},
                 {"lhs", lhs},
                 {"rhs", rhs}});
  return rec.take();
}

StrictnessProbe strictness_probe(const HomogeneousPolynomial& p, const Vec& x, const Vec& y) {
  if (!is_symmetric(p)) throw SymmetryError("strictness_probe: polynomial is not symmetric");
  if (x.size() != p.n() || y.size() != p.n()) {
    throw DimensionError("strictness_probe: vector length does not match the polynomial");
  }
  if (!majorizes(x, y)) throw MajorizationError("strictness_probe: x is not majorized by y");
  if (!closed_member(p, y).member) {
    throw ConeMembershipError("strictness_probe: y outside the closed cone");
  }
  const double tol = 1e-9 * (1.0 + inf_norm(y));
  const Vec xs = sorted_descending(x);
  const Vec ys = sorted_descending(y);
  bool same = true;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (std::abs(xs[i] - ys[i]) > tol) {
      same = false;
      break;
    }
  }
  if (same) throw DomainError("strictness_probe: x is a permutation of y");
  const double px = evaluate(p, x);
  const double py = evaluate(p, y);
  StrictnessProbe probe;
  probe.gap = px - py;
  probe.strict = probe.gap > kStrictFloor * (1.0 + std::max(std::abs(px), std::abs(py)));
  return probe;
}

// ---- generators -----------------------------------------------------------

SymmetricMatrix random_symmetric(Rng& rng, std::size_t n) {
  if (n == 0) throw DomainError("random_symmetric: empty size");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double g = rng.gauss();
      m(i, j) = g;
      m(j, i) = g;
    }
  }
  return SymmetricMatrix(m);
}

SymmetricMatrix random_psd(Rng& rng, std::size_t n) {
  if (n == 0) throw DomainError("random_psd: empty size");
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.gauss();
  }
  return SymmetricMatrix((1.0 / static_cast<double>(n)) * (transpose(g) * g));
}

SymmetricMatrix matrix_with_spectrum(const Vec& lambda, std::uint64_t seed) {
  if (lambda.empty()) throw DomainError("matrix_with_spectrum: empty spectrum");
  const std::size_t n = lambda.size();
  const Matrix u = random_orthogonal(n, seed);
  Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = lambda[i];
  return symmetric_part(u * d * transpose(u));
}

SymmetricMatrix random_k_positive(Rng& rng, std::size_t n, std::size_t k, bool boundary) {
  if (n == 0) throw DomainError("random_k_positive: empty size");
  if (k < 1 || k > n) throw DomainError("random_k_positive: k out of range");
  Vec lam(n);
  if (boundary) {
    for (double& v : lam) v = std::abs(rng.gauss());
    std::size_t arg = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (lam[i] < lam[arg]) arg = i;
    }
    lam[arg] = 0.0;
  } else {
    bool accepted = false;
    for (int attempt = 0; attempt < 50 && !accepted; ++attempt) {
      for (double& v : lam) v = rng.gauss();
      accepted = true;
      const Vec e = esym_values(lam);
      for (std::size_t j = 1; j <= k; ++j) {
        if (!(e[j] > 0.0)) {
          accepted = false;
          break;
        }
      }
    }
    if (!accepted) {
      // Entrywise-positive spectra have every S_j positive.
      const double mn = *std::min_element(lam.begin(), lam.end());
      for (double& v : lam) v += 1.0 + std::abs(mn);
    }
  }
  return matrix_with_spectrum(lam, rng.bits());
}

DoublyStochasticMatrix random_doubly_stochastic(Rng& rng, std::size_t n, std::size_t terms) {
  if (n == 0) throw DomainError("random_doubly_stochastic: empty size");
  if (terms == 0) throw DomainError("random_doubly_stochastic: need at least one permutation");
  Vec w(terms);
  double total = 0.0;
  for (double& v : w) {
    v = rng.uniform(0.2, 1.0);
    total += v;
  }
  Matrix acc(n, n);
  for (std::size_t m = 0; m < terms; ++m) {
    Permutation p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    for (std::size_t i = n; i > 1; --i) {
      std::swap(p[i - 1], p[static_cast<std::size_t>(rng.below(i))]);
    }
    const double weight = w[m] / total;
    for (std::size_t i = 0; i < n; ++i) acc(i, p[i]) += weight;
  }
  return DoublyStochasticMatrix(acc);
}

Vec random_cone_point(const HomogeneousPolynomial& p, const Vec& a, Rng& rng, bool boundary) {
  if (a.size() != p.n()) throw DimensionError("random_cone_point: direction length mismatch");
  for (int attempt = 0; attempt < 8; ++attempt) {
    Vec x(p.n());
    for (double& v : x) v = rng.gauss();
    const DirectionalSpectrum spec = directional_eigenvalues(p, a, x);
    if (!spec.certified) continue;
    const double mn = spec.eigenvalues.back();
    const double s = boundary ? -mn : 1.0 + std::abs(mn);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += s * a[i];
    return x;
  }
  throw NotHyperbolicDirection("random_cone_point: sampled restrictions failed certification");
}

SymmetricMatrix random_lpm_cone_point(const LpmPolynomial& p, Rng& rng, bool boundary) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    const SymmetricMatrix x = random_symmetric(rng, p.n());
    const LpmSpectrum spec = lpm_identity_spectrum(p, x);
    if (!spec.certified) continue;
    const double mn = spec.eigenvalues.back();
    const double s = boundary ? -mn : 1.0 + std::abs(mn);
    Matrix m = x.entries();
    for (std::size_t i = 0; i < p.n(); ++i) m(i, i) += s;
    return SymmetricMatrix(m);
  }
  throw NotHyperbolicDirection("random_lpm_cone_point: sampled restrictions failed certification");
}

Partition random_partition(Rng& rng, std::size_t n) {
  if (n == 0) throw DomainError("random_partition: empty ground set");
  std::vector<std::size_t> label(n, 0);
  std::size_t used = 1;
  for (std::size_t i = 1; i < n; ++i) {
    label[i] = static_cast<std::size_t>(rng.below(used + 1));
    if (label[i] == used) ++used;
  }
  std::vector<IndexSet> blocks(used);
  for (std::size_t i = 0; i < n; ++i) blocks[label[i]].push_back(i);
  return Partition(n, blocks);
}

HomogeneousPolynomial polynomial_product(const HomogeneousPolynomial& p,
                                         const HomogeneousPolynomial& q) {
  if (p.n() != q.n()) throw DimensionError("polynomial_product: variable counts differ");
  std::map<std::vector<int>, double> acc;
  for (const auto& tp : p.terms()) {
    for (const auto& tq : q.terms()) {
      std::vector<int> e(p.n());
      for (std::size_t i = 0; i < p.n(); ++i) e[i] = tp.first[i] + tq.first[i];
      acc[e] += tp.second * tq.second;
    }
  }
  std::vector<Monomial> terms;
  terms.reserve(acc.size());
  for (const auto& kv : acc) {
    if (kv.second != 0.0) terms.push_back({kv.first, kv.second});
  }
  return HomogeneousPolynomial(p.n(), p.degree() + q.degree(), terms);
}

LpmPolynomial minor_sum_polynomial(std::size_t n, std::size_t k) {
  if (n < 1) throw DomainError("minor_sum_polynomial: empty size");
  if (k < 1 || k > n) throw DomainError("minor_sum_polynomial: k out of range");
  std::vector<LpmTerm> terms;
  IndexSet idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    terms.push_back({idx, 1.0});
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return LpmPolynomial(n, terms);
}

NamedPolynomial symmetric_family(std::size_t n, std::uint64_t index) {
  if (n < 2) throw DomainError("symmetric_family: need at least two variables");
  const std::uint64_t i = index % static_cast<std::uint64_t>(n);
  if (i + 2 <= n) {
    const int k = static_cast<int>(i) + 2;
    return {elementary_symmetric(n, k), "S_" + std::to_string(k)};
  }
  return {polynomial_product(elementary_symmetric(n, 1), elementary_symmetric(n, 2)), "S_1*S_2"};
}

NamedLpm lpm_family(std::size_t n, std::uint64_t index) {
  if (n < 1) throw DomainError("lpm_family: empty size");
  switch (index % 3) {
    case 0:
      return {minor_sum_polynomial(n, n), "det"};
    case 1:
      return {minor_sum_polynomial(n, std::min<std::size_t>(2, n)), "minor_sum_2"};
    default:
      return {minor_sum_polynomial(n, std::min<std::size_t>(3, n)), "minor_sum_3"};
  }
}

// ---- suites ----------------------------------------------------------------

namespace {

Rng trial_rng(const SuiteConfig& cfg, const char* name, long t) {
  return Rng(cfg.seed, fnv1a(name), static_cast<std::uint64_t>(t));
}

std::size_t cycle_n(long t) { return 2 + static_cast<std::size_t>(t % 7); }

bool boundary_trial(long t) { return t % 10 == 9; }

VerificationReport suite_schur_horn(const SuiteConfig& cfg) {
  Accumulator acc("schur_horn", cfg);
  for (long t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg, "schur_horn", t);
    const std::size_t n = cycle_n(t);
    const SymmetricMatrix a = random_symmetric(rng, n);
    Recorder rec("schur_horn");
    const Vec lam = eigenvalues_sym(a);
    const Vec d = sorted_descending(diagonal_of(a));
    double pl = 0.0;
    double pd = 0.0;
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      pl += lam[i];
      pd += d[i];
      worst = (i == 0) ? pl - pd : std::min(worst, pl - pd);
    }
    rec.margin(worst);
    rec.check(schur_horn_check(a), "majorization", json{{"matrix", mat_json(a.entries())}});
    acc.add(rec.take(), t, json{{"n", n}});
  }
  return acc.take();
}

VerificationReport suite_main(const SuiteConfig& cfg) {
  Accumulator acc("main", cfg);
  for (long t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg, "main", t);
    const std::size_t n = cycle_n(t);
    const NamedPolynomial fam = symmetric_family(n, static_cast<std::uint64_t>(t));
    const Vec v = random_cone_point(fam.poly, ones(n), rng, boundary_trial(t));
    const SymmetricMatrix a = matrix_with_spectrum(v, rng.bits());
    acc.add(verify_main(fam.poly, a), t, json{{"poly", fam.name}, {"n", n}});
  }
  return acc.take();
}

VerificationReport suite_hadamard(const SuiteConfig& cfg) {
  Accumulator acc("hadamard", cfg);
  for (long t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg, "hadamard", t);
    const std::size_t n = cycle_n(t);
    SymmetricMatrix a = [&] {
      if (!boundary_trial(t)) return random_psd(rng, n);
      Vec lam(n);
      for (double& v : lam) v = std::abs(rng.gauss());
      lam[n - 1] = 0.0;  // singular PSD: determinant side exactly 0
      return matrix_with_spectrum(lam, rng.bits());
    }();
    acc.add(verify_main(elementary_symmetric(n, static_cast<int>(n)), a), t,
            json{{"poly", "S_" + std::to_string(n)}, {"n", n}});
    // Independent route to the same inequality: LU determinant against
    // the diagonal product, no symmetric-function machinery involved.
    // An extra check inside the same trial, so it must not inflate the
    // merged trial count.
    double prod = 1.0;
    for (std::size_t i = 0; i < n; ++i) prod *= a(i, i);
    Recorder rec("hadamard_oracle");
    rec.set_trials(0);
    rec.inequality("inequality", prod, lu_determinant(a.entries()),
                   json{{"matrix", mat_json(a.entries())}});
    acc.add(rec.take(), t, json{{"n", n}});
  }
  return acc.take();
}

VerificationReport suite_le(const SuiteConfig& cfg) {
  Accumulator acc("le", cfg);
  for (long t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg, "le", t);
    const std::size_t n = cycle_n(t);
    const std::size_t k = 1 + static_cast<std::size_t>(t) % n;
    const SymmetricMatrix a = random_k_positive(rng, n, k, boundary_trial(t));
    acc.add(verify_le_kpositive(a, k), t, json{{"n", n}, {"k", k}});
  }
  return acc.take();
}

VerificationReport suite_garding(const SuiteConfig& cfg) {
  Accumulator acc("garding", cfg);
  for (long t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg, "garding", t);
    const std::size_t n = cycle_n(t);
    const NamedPolynomial fam = symmetric_family(n, static_cast<std::uint64_t>(t));
    const Vec x = random_cone_point(fam.poly, ones(n), rng, false);
    const Vec y = random_cone_point(fam.poly, ones(n), rng, false);
    const ConcavityReport cr = concavity_probe(fam.poly, ones(n), x, y, 10);
    Recorder rec("garding");
    rec.margin(cr.worst_gap);
    rec.check(cr.passed, "inequality",
              json{{"x", x}, {"y", y}, {"worst_gap", cr.worst_gap}});
    acc.add(rec.take(), t, json{{"poly", fam.name}, {"n", n}});
  }
  return acc.take();
}

VerificationReport suite_hyperbolicity(const SuiteConfig& cfg) {
  Accumulator acc("hyperbolicity", cfg);
  for (long t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg, "hyperbolicity", t);
    const std::size_t n = cycle_n(t);
    const NamedPolynomial fam = symmetric_family(n, static_cast<std::uint64_t>(t));
    const HyperbolicityReport hr = hyperbolicity_probe(fam.poly, ones(n), 8, rng.bits());
    Recorder rec("hyperbolicity");
    rec.check(hr.passed, "real_rootedness", json{{"failed_samples", hr.failures.size()}});
    acc.add(rec.take(), t, json{{"poly", fam.name}, {"n", n}}, /*use_margin=*/false);
  }
  return acc.take();
}

VerificationReport suite_birkhoff(const SuiteConfig& cfg) {
  Accumulator acc("birkhoff", cfg);
  for (long t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg, "birkhoff", t);
    const std::size_t n = cycle_n(t);
    const std::size_t terms = 2 + static_cast<std::size_t>(t % 4);
    const DoublyStochasticMatrix d = random_doubly_stochastic(rng, n, terms);
    Recorder rec("birkhoff");
    try {
      const BirkhoffDecomposition dec = birkhoff_decompose(d);
      Matrix back(n, n);
      for (std::size_t m = 0; m < dec.weights.size(); ++m) {
        back = back + dec.weights[m] * permutation_matrix(dec.permutations[m]);
      }
      const double err = max_abs(back - d.entries());
      rec.margin(1e-9 - err);
      rec.check(err <= 1e-9, "reconstruction", json{{"error", err}});
      const double wsum = sum(dec.weights);
      rec.margin(1e-10 - std::abs(wsum - 1.0));
      rec.check(std::abs(wsum - 1.0) <= 1e-10, "weights", json{{"sum", wsum}});
      double wmin = dec.weights.empty() ? 0.0 : dec.weights[0];
      for (double w : dec.weights) wmin = std::min(wmin, w);
      rec.check(wmin > 0.0, "weights", json{{"min", wmin}});
      const std::size_t budget = (n - 1) * (n - 1) + 1;
      rec.check(dec.weights.size() <= budget, "count",
                json{{"terms", dec.weights.size()}, {"budget", budget}});
    } catch (const NotDoublyStochastic& e) {
      rec.check(false, "decomposition",
                json{{"error", e.what()}, {"matrix", mat_json(d.entries())}});
    }
    acc.add(rec.take(), t, json{{"n", n}});
  }
  return acc.take();
}

VerificationReport suite_majorization_closure(const SuiteConfig& cfg) {
  Accumulator acc("majorization_closure", cfg);
  for (long t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg, "majorization_closure", t);
    const std::size_t n = cycle_n(t);
    const NamedPolynomial fam = symmetric_family(n, static_cast<std::uint64_t>(t));
    const Vec y = random_cone_point(fam.poly, ones(n), rng, boundary_trial(t));
    const DoublyStochasticMatrix d =
        random_doubly_stochastic(rng, n, 2 + static_cast<std::size_t>(t % 4));
    const Vec x = d.entries() * y;
    Recorder rec("majorization_closure");
    rec.check(majorizes(x, y), "majorization", json{{"x", x}, {"y", y}});
    const ConeMembership m = closed_member(fam.poly, x);
    rec.margin(m.min_eigenvalue);
    rec.check(m.member, "cone", json{{"x", x}, {"min_eigenvalue", m.min_eigenvalue}});
    acc.add(rec.take(), t, json{{"poly", fam.name}, {"n", n}});
  }
  return acc.take();
}

VerificationReport suite_schur_concavity(const SuiteConfig& cfg) {
  Accumulator acc("schur_concavity", cfg);
  for (long t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg, "schur_concavity", t);
    const std::size_t n = cycle_n(t);
    const NamedPolynomial fam = symmetric_family(n, static_cast<std::uint64_t>(t));
    const Vec y = random_cone_point(fam.poly, ones(n), rng, boundary_trial(t));
    Vec x;
    if (t % 7 == 5) {
      x = mean_vector(y);
    } else if (t % 7 == 6) {
      x = sorted_descending(y);  // permutation of y: equality case
    } else {
      const DoublyStochasticMatrix d =
          random_doubly_stochastic(rng, n, 2 + static_cast<std::size_t>(t % 4));
      x = d.entries() * y;
    }
    acc.add(verify_schur_concavity(fam.poly, x, y), t, json{{"poly", fam.name}, {"n", n}});
  }
  return acc.take();
}

VerificationReport suite_strictness(const SuiteConfig& cfg) {
  Accumulator acc("strictness", cfg);
  for (long t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg, "strictness", t);
    const std::size_t n = cycle_n(t);
    const NamedPolynomial fam = symmetric_family(n, static_cast<std::uint64_t>(t));
    Vec y = random_cone_point(fam.poly, ones(n), rng, false);
    const Vec ys = sorted_descending(y);
    if (ys.front() - ys.back() < 1e-6) y[0] += 1.0;  // keep the pair non-permuted
    const Vec x = mean_vector(y);
    const StrictnessProbe probe = strictness_probe(fam.poly, x, y);
    Recorder rec("strictness");
    rec.inequality("inequality", evaluate(fam.poly, x), evaluate(fam.poly, y),
                   json{{"strict", probe.strict}, {"gap", probe.gap}});
    acc.add(rec.take(), t, json{{"poly", fam.name}, {"n", n}});
  }
  return acc.take();
}

VerificationReport suite_minmax(const SuiteConfig& cfg) {
  Accumulator acc("minmax", cfg);
  for (long t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg, "minmax", t);
    const std::size_t n = cycle_n(t);
    const NamedPolynomial fam = symmetric_family(n, static_cast<std::uint64_t>(t));
    Vec v;
    if (t % 10 == 0) {
      v = Vec(n, 1.5 + rng.uniform01());  // scalar matrix: whole chain collapses
    } else {
      v = random_cone_point(fam.poly, ones(n), rng, boundary_trial(t));
    }
    const SymmetricMatrix a = matrix_with_spectrum(v, rng.bits());
    acc.add(verify_minmax(fam.poly, a, 1, rng.bits()), t, json{{"poly", fam.name}, {"n", n}});
  }
  return acc.take();
}

VerificationReport suite_fan_sum(const SuiteConfig& cfg) {
  Accumulator acc("fan_sum", cfg);
  for (long t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg, "fan_sum", t);
    const std::size_t n = cycle_n(t);
    const NamedPolynomial fam = symmetric_family(n, static_cast<std::uint64_t>(t));
    const Vec va = random_cone_point(fam.poly, ones(n), rng, boundary_trial(t));
    const Vec vb = random_cone_point(fam.poly, ones(n), rng, false);
    const SymmetricMatrix a = matrix_with_spectrum(va, rng.bits());
    const SymmetricMatrix b = matrix_with_spectrum(vb, rng.bits());
    acc.add(verify_fan_sum(fam.poly, a, b), t, json{{"poly", fam.name}, {"n", n}});
  }
  return acc.take();
}

VerificationReport suite_fan_diff(const SuiteConfig& cfg) {
  Accumulator acc("fan_diff", cfg);
  for (long t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg, "fan_diff", t);
    const std::size_t n = cycle_n(t);
    const NamedPolynomial fam = symmetric_family(n, static_cast<std::uint64_t>(t));
    // Build the difference first so lambda(A - B) is a known cone point.
    const Vec vc = random_cone_point(fam.poly, ones(n), rng, boundary_trial(t));
    const SymmetricMatrix c = matrix_with_spectrum(vc, rng.bits());
    const SymmetricMatrix b = SymmetricMatrix(0.5 * random_symmetric(rng, n).entries());
    const SymmetricMatrix a = SymmetricMatrix(c.entries() + b.entries());
    acc.add(verify_fan_diff(fam.poly, a, b), t, json{{"poly", fam.name}, {"n", n}});
  }
  return acc.take();
}

VerificationReport suite_rank_one(const SuiteConfig& cfg) {
  Accumulator acc("rank_one", cfg);
  for (long t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg, "rank_one", t);
    const std::size_t n = cycle_n(t);
    const NamedPolynomial fam = symmetric_family(n, static_cast<std::uint64_t>(t));
    const Vec v = random_cone_point(fam.poly, ones(n), rng, boundary_trial(t));
    const SymmetricMatrix a = matrix_with_spectrum(v, rng.bits());
    Vec w(n);
    double norm2 = 0.0;
    for (double& e : w) {
      e = 0.7 * rng.gauss();
      norm2 += e * e;
    }
    const Vec x = eigenvalues_sym(SymmetricMatrix(a.entries() + outer(w)));
    Vec y = eigenvalues_sym(a);
    y[0] += norm2;
    Recorder rec("rank_one");
    rec.check(majorizes(x, y), "majorization", json{{"x", x}, {"y", y}});
    const ConeMembership ym = closed_member(fam.poly, y);
    rec.check(ym.member, "cone", json{{"which", "y"}, {"min_eigenvalue", ym.min_eigenvalue}});
    const ConeMembership xm = closed_member(fam.poly, x);
    rec.check(xm.member, "cone", json{{"which", "x"}, {"min_eigenvalue", xm.min_eigenvalue}});
    rec.inequality("inequality", evaluate(fam.poly, x), evaluate(fam.poly, y),
                   json{{"x", x}, {"y", y}});
    acc.add(rec.take(), t, json{{"poly", fam.name}, {"n", n}});
  }
  return acc.take();
}

VerificationReport suite_sum_psd(const SuiteConfig& cfg) {
  Accumulator acc("sum_psd", cfg);
  for (long t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg, "sum_psd", t);
    const std::size_t n = 2 + static_cast<std::size_t>(t % 3);
    const std::size_t nn = 2 * n;
    NamedPolynomial fam = [&]() -> NamedPolynomial {
      switch (t % 3) {
        case 0:
          return {elementary_symmetric(nn, 2), "S_2"};
        case 1:
          return {elementary_symmetric(nn, 3), "S_3"};
        default:
          return {polynomial_product(elementary_symmetric(nn, 1), elementary_symmetric(nn, 1)),
                  "S_1^2"};
      }
    }();
    const SymmetricMatrix a = random_psd(rng, n);
    const SymmetricMatrix b =
        boundary_trial(t) ? SymmetricMatrix(Matrix(n, n)) : random_psd(rng, n);
    acc.add(verify_sum_psd_embed(fam.poly, a, b), t, json{{"poly", fam.name}, {"n", n}});
  }
  return acc.take();
}

VerificationReport suite_block_pinch(const SuiteConfig& cfg) {
  Accumulator acc("block_pinch", cfg);
  for (long t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg, "block_pinch", t);
    const std::size_t n = cycle_n(t);
    const NamedPolynomial fam = symmetric_family(n, static_cast<std::uint64_t>(t));
    const Vec v = random_cone_point(fam.poly, ones(n), rng, boundary_trial(t));
    const SymmetricMatrix a = matrix_with_spectrum(v, rng.bits());
    const Partition pi = random_partition(rng, n);
    acc.add(verify_block_pinch(fam.poly, a, pi), t,
            json{{"poly", fam.name}, {"n", n}, {"partition", partition_json(pi)}});
  }
  return acc.take();
}

VerificationReport suite_pinching(const SuiteConfig& cfg) {
  Accumulator acc("pinching", cfg);
  for (long t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg, "pinching", t);
    const std::size_t n = 2 + static_cast<std::size_t>(t % 5);
    const SymmetricMatrix a = random_symmetric(rng, n);
    const Partition pi = random_partition(rng, n);
    const SymmetricMatrix r = reynolds_sign_average(a, pi);
    const SymmetricMatrix q = block_pinch(a, pi);
    const double err = max_abs(r.entries() - q.entries());
    Recorder rec("pinching");
    rec.margin(kPinchTol - err);
    rec.check(err <= kPinchTol, "equality",
              json{{"max_diff", err}, {"partition", partition_json(pi)}});
    acc.add(rec.take(), t, json{{"n", n}});
  }
  return acc.take();
}

VerificationReport suite_sign_flip(const SuiteConfig& cfg) {
  Accumulator acc("sign_flip", cfg);
  for (long t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg, "sign_flip", t);
    const std::size_t n = 2 + static_cast<std::size_t>(t % 5);
    const NamedLpm fam = lpm_family(n, static_cast<std::uint64_t>(t));
    const SymmetricMatrix a = random_symmetric(rng, n);
    const double base = lpm_eval(fam.poly, a);
    double worst_rel = 0.0;
    for (std::uint32_t pattern = 0; pattern < (1u << n); ++pattern) {
      std::vector<int> signs(n, 1);
      for (std::size_t i = 0; i < n; ++i) {
        if ((pattern >> i) & 1u) signs[i] = -1;
      }
      const double val = lpm_eval(fam.poly, sign_conjugate(a, SignVector(signs)));
      worst_rel = std::max(worst_rel, std::abs(val - base) / (1.0 + std::abs(base)));
    }
    Recorder rec("sign_flip");
    rec.margin(kSignFlipTol - worst_rel);
    rec.check(worst_rel <= kSignFlipTol, "equality",
              json{{"worst_rel", worst_rel}, {"matrix", mat_json(a.entries())}});
    acc.add(rec.take(), t, json{{"poly", fam.name}, {"n", n}});
  }
  return acc.take();
}

VerificationReport suite_fischer(const SuiteConfig& cfg) {
  Accumulator acc("fischer", cfg);
  for (long t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg, "fischer", t);
    const std::size_t n = 4 + static_cast<std::size_t>(t % 2);
    const NamedLpm fam = lpm_family(n, static_cast<std::uint64_t>(t));
    const SymmetricMatrix a = random_lpm_cone_point(fam.poly, rng, boundary_trial(t));
    const Partition pi = random_partition(rng, n);
    const FischerReport f = fischer_check(fam.poly, a, pi);
    Recorder rec("fischer");
    rec.margin(f.lhs - f.rhs);
    rec.check(f.inequality_holds, "inequality", json{{"lhs", f.lhs}, {"rhs", f.rhs}});
    rec.check(f.cone_preserved, "cone", json{{"partition", partition_json(pi)}});
    acc.add(rec.take(), t, json{{"poly", fam.name}, {"n", n}});
  }
  return acc.take();
}

VerificationReport suite_symmetrization(const SuiteConfig& cfg) {
  Accumulator acc("symmetrization", cfg);
  for (long t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg, "symmetrization", t);
    const std::size_t n = 4 + static_cast<std::size_t>(t % 2);
    const NamedLpm fam = lpm_family(n, static_cast<std::uint64_t>(t));
    const SymmetricMatrix a = random_lpm_cone_point(fam.poly, rng, boundary_trial(t));
    const Partition pi = random_partition(rng, n);
    acc.add(verify_symmetrization(fam.poly, a, pi), t, json{{"poly", fam.name}, {"n", n}});
  }
  return acc.take();
}

using SuiteFn = VerificationReport (*)(const SuiteConfig&);

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
};

constexpr SuiteEntry kSuiteTable[] = {
    {"schur_horn", &suite_schur_horn},
    {"main", &suite_main},
    {"hadamard", &suite_hadamard},
    {"le", &suite_le},
    {"garding", &suite_garding},
    {"hyperbolicity", &suite_hyperbolicity},
    {"birkhoff", &suite_birkhoff},
    {"majorization_closure", &suite_majorization_closure},
    {"schur_concavity", &suite_schur_concavity},
    {"strictness", &suite_strictness},
    {"minmax", &suite_minmax},
    {"fan_sum", &suite_fan_sum},
    {"fan_diff", &suite_fan_diff},
    {"rank_one", &suite_rank_one},
    {"sum_psd", &suite_sum_psd},
    {"block_pinch", &suite_block_pinch},
    {"pinching", &suite_pinching},
    {"sign_flip", &suite_sign_flip},
    {"fischer", &suite_fischer},
    {"symmetrization", &suite_symmetrization},
};

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const SuiteEntry& e : kSuiteTable) names.emplace_back(e.name);
  return names;
}

VerificationReport run_suite(const std::string& name, const SuiteConfig& config) {
  if (config.trials < 1) throw DomainError("run_suite: trials must be at least 1");
  for (const SuiteEntry& e : kSuiteTable) {
    if (name == e.name) return e.fn(config);
  }
  throw DomainError("run_suite: unknown suite '" + name + "'");
}

std::vector<VerificationReport> run_all(const SuiteConfig& config) {
  std::vector<VerificationReport> reports;
  reports.reserve(std::size(kSuiteTable));
  for (const SuiteEntry& e : kSuiteTable) reports.push_back(e.fn(config));
  return reports;
}

}  // namespace hypermaj
