#include "hypermaj/real_roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "hypermaj/errors.hpp"

namespace hypermaj {

namespace {

using Cplx = std::complex<double>;

constexpr double kEps = std::numeric_limits<double>::epsilon();

Cplx horner(const Vec& c, Cplx z) {
  Cplx acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double horner(const Vec& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Vec derivative(const Vec& c) {
  Vec d(c.size() > 1 ? c.size() - 1 : 1, 0.0);
  for (std::size_t j = 1; j < c.size(); ++j) d[j - 1] = c[j] * static_cast<double>(j);
  return d;
}

// Aberth-Ehrlich on a monic polynomial with c.back() == 1. Degree >= 1.
std::vector<Cplx> aberth(const Vec& c) {
  const int deg = static_cast<int>(c.size()) - 1;
  const Vec dc = derivative(c);

  double maxc = 0.0;
  for (int j = 0; j < deg; ++j) maxc = std::max(maxc, std::abs(c[j]));
  const double cauchy = 1.0 + maxc;  // all roots lie in |z| <= cauchy
  double r0 = std::abs(c[0]) > 0.0 ? std::pow(std::abs(c[0]), 1.0 / deg) : 0.5;
  r0 = std::clamp(r0, 1e-3, cauchy);

  std::vector<Cplx> z(deg);
  for (int i = 0; i < deg; ++i) {
    // Slightly irrational angular offset so no starting point sits on a
    // symmetry axis of the root configuration.
    const double angle = 6.283185307179586 * (i + 0.354) / deg + 0.7;
    z[i] = Cplx(r0 * std::cos(angle), r0 * std::sin(angle));
  }

  // At a multiple root the corrections bottom out at the root's noise
  // floor instead of reaching the stop threshold, and from there the
  // iterates wander; a near-collision can even fling one far out through
  // the repulsion denominator. Remember the calmest configuration seen
  // so the wandering tail cannot decide the answer.
  std::vector<Cplx> w(deg);
  std::vector<Cplx> best = z;
  double best_worst = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 400; ++iter) {
    double worst = 0.0;
    for (int i = 0; i < deg; ++i) {
      const Cplx pz = horner(c, z[i]);
      Cplx dz = horner(dc, z[i]);
      if (dz == Cplx(0.0, 0.0)) dz = Cplx(kEps, kEps);
      const Cplx newton = pz / dz;
      Cplx s = 0.0;
      for (int j = 0; j < deg; ++j) {
        if (j == i) continue;
        Cplx diff = z[i] - z[j];
        if (diff == Cplx(0.0, 0.0)) diff = Cplx(kEps * (1.0 + std::abs(z[i])), 0.0);
        s += 1.0 / diff;
      }
      const Cplx denom = 1.0 - newton * s;
      w[i] = std::abs(denom) > 1e-12 ? newton / denom : newton;
    }
    for (int i = 0; i < deg; ++i) {
      z[i] -= w[i];
      worst = std::max(worst, std::abs(w[i]) / (1.0 + std::abs(z[i])));
    }
    if (worst < best_worst) {
      best_worst = worst;
      best = z;
    }
    if (worst < 4.0 * kEps) break;
  }
  return best;
}

// The polynomial together with all of its derivatives (monic input).
struct Tower {
  std::vector<Vec> d;        // d[j] = j-th derivative coefficients
  std::vector<double> norm;  // max |coefficient| of d[j]
  int degree = 0;

  explicit Tower(const Vec& monic) {
    d.push_back(monic);
    while (d.back().size() > 1) d.push_back(derivative(d.back()));
    for (const Vec& v : d) {
      double m = 0.0;
      for (double x : v) m = std::max(m, std::abs(x));
      norm.push_back(std::max(m, kEps));
    }
    degree = static_cast<int>(monic.size()) - 1;
  }
};

// Newton iteration x -> x - m p(x)/p'(x), quadratically convergent at a
// root of multiplicity m; keeps the best residual seen among iterates
// within `window` of the start (at a converged multiple root the step is
// noise over noise and can jump into a different root's basin, so points
// outside the window are never trusted). For m >= 2 the estimate is then
// refined on the (m-1)-th derivative, where an m-fold root of p is a
// *simple* root and Newton is machine accurate; the refinement is kept
// only when it stays inside the window and reduces that derivative's
// residual.
double polish_real(const Tower& t, double x0, int m, double window) {
  const Vec& c = t.d[0];
  const Vec& dc = t.d.size() > 1 ? t.d[1] : t.d[0];
  double best = x0;
  double best_resid = std::abs(horner(c, x0));
  double x = x0;
  for (int iter = 0; iter < 40; ++iter) {
    const double px = horner(c, x);
    const double dpx = horner(dc, x);
    if (dpx == 0.0) break;
    const double step = static_cast<double>(m) * px / dpx;
    if (!std::isfinite(step)) break;
    x -= step;
    if (std::abs(x - x0) > window) break;
    const double resid = std::abs(horner(c, x));
    if (resid < best_resid) {
      best_resid = resid;
      best = x;
    }
    if (std::abs(step) <= 4.0 * kEps * (1.0 + std::abs(x))) break;
  }

  if (m >= 2 && m < static_cast<int>(t.d.size())) {
    const Vec& g = t.d[m - 1];
    const Vec& dg = t.d[m];
    double y = best;
    for (int iter = 0; iter < 40; ++iter) {
      const double gy = horner(g, y);
      const double dgy = horner(dg, y);
      if (dgy == 0.0) break;
      const double step = gy / dgy;
      if (!std::isfinite(step)) break;
      y -= step;
      if (std::abs(step) <= 4.0 * kEps * (1.0 + std::abs(y))) break;
    }
    if (std::abs(y - x0) <= window &&
        std::abs(horner(g, y)) <= std::abs(horner(g, best)))
      best = y;
  }
  return best;
}

// True iff r behaves like a real root of multiplicity m: p and its first
// m-1 derivatives vanish there, each to the accuracy a genuine m-fold
// root can be localized to in doubles. An m-fold root is only determined
// to ~eps^(1/m), so the j-th derivative bound scales like eps^((m-j)/m);
// a stray conjugate pair at distance beta leaves |p'| ~ beta^2, which
// these bounds reject.
bool certifies(const Tower& t, double r, int m) {
  const double kn = static_cast<double>(t.degree) * static_cast<double>(t.degree);
  for (int j = 0; j < m && j < static_cast<int>(t.d.size()); ++j) {
    const double bound = 64.0 * t.norm[j] *
                         std::pow(1.0 + std::abs(r), t.degree - j) *
                         std::pow(kn * kEps, static_cast<double>(m - j) / m);
    if (std::abs(horner(t.d[j], r)) > bound) return false;
  }
  return true;
}

struct Cluster {
  Cplx center;
  int multiplicity = 0;
  bool snapped = false;  // center came out of a certified polish already
};

Cluster merge_of(const Cluster& a, const Cluster& b) {
  const double ma = a.multiplicity, mb = b.multiplicity;
  return Cluster{(a.center * ma + b.center * mb) / (ma + mb),
                 a.multiplicity + b.multiplicity, false};
}

// Single-linkage pass: union clusters whose centers are within tau. With
// gating enabled, a tentative merge is kept only when its polished real
// center certifies as a root of the combined multiplicity, in which case
// the imaginary scatter is explained rounding noise and the center snaps
// onto the axis.
void link_pass(std::vector<Cluster>& clusters, double tau, const Tower* gate) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < clusters.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < clusters.size() && !changed; ++j) {
        if (std::abs(clusters[i].center - clusters[j].center) > tau) continue;
        Cluster cand = merge_of(clusters[i], clusters[j]);
        if (gate != nullptr) {
          const double r = polish_real(*gate, cand.center.real(),
                                       cand.multiplicity, 4.0 * tau);
          if (!certifies(*gate, r, cand.multiplicity)) continue;
          cand.center = Cplx(r, 0.0);
          cand.snapped = true;
        }
        clusters[i] = cand;
        clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
      }
    }
  }
}

}  // namespace

RootSet all_real_roots(const UnivariateRestriction& p, double tol_imag) {
  Vec c = p.coefficients;
  if (c.size() < 2) throw DomainError("all_real_roots: degree must be >= 1");
  double maxc = 0.0;
  for (double v : c) maxc = std::max(maxc, std::abs(v));
  if (maxc == 0.0 || std::abs(c.back()) <= 1e-14 * maxc)
    throw DegenerateLeadingCoefficient(
        "all_real_roots: leading coefficient negligible relative to the rest");

  const int degree = static_cast<int>(c.size()) - 1;

  // Monic normalization.
  const double lead = c.back();
  for (double& v : c) v /= lead;

  // Exact zero constant terms peel off as exact roots at 0.
  int zeros = 0;
  Vec work = c;
  while (work.size() > 1 && work.front() == 0.0) {
    work.erase(work.begin());
    ++zeros;
  }

  std::vector<Cplx> raw;
  if (work.size() > 1) raw = aberth(work);
  for (int i = 0; i < zeros; ++i) raw.emplace_back(0.0, 0.0);

  double max_mod = 0.0;
  for (const Cplx& z : raw) max_mod = std::max(max_mod, std::abs(z));
  const double scale = 1.0 + max_mod;

  const Tower tower(c);

  std::vector<Cluster> clusters;
  clusters.reserve(raw.size());
  for (const Cplx& z : raw) clusters.push_back(Cluster{z, 1});

  // Base window: anything closer than 1e-6 * scale is one root for us.
  link_pass(clusters, 1e-6 * scale, nullptr);

  // Multiplicity rescue: a true m-fold real root scatters over a radius
  // ~ (const * eps)^(1/m), which dwarfs the base window once m >= 3, so
  // widen the linkage window level by level; gating rejects merges that
  // are not genuine multiple real roots.
  const double kn = static_cast<double>(degree) * static_cast<double>(degree);
  for (int m = 2; m <= degree; ++m) {
    const double tau = 4.0 * scale * std::pow(kn * kEps, 1.0 / m);
    link_pass(clusters, tau, &tower);
  }

  // A double root's iterates can land as an asymmetric near-conjugate
  // pair inside the base window; the ungated pass then swallows them
  // before any gated merge can vet the result, leaving a multiple
  // cluster whose center sits off the axis by the full stall radius.
  // Give such clusters the certify-and-snap treatment a gated merge
  // would have applied.
  for (Cluster& cl : clusters) {
    if (cl.snapped || cl.multiplicity < 2 || cl.center.imag() == 0.0) continue;
    const double tau =
        4.0 * scale * std::pow(kn * kEps, 1.0 / cl.multiplicity);
    const double r = polish_real(tower, cl.center.real(), cl.multiplicity, 4.0 * tau);
    if (!certifies(tower, r, cl.multiplicity)) continue;
    cl.center = Cplx(r, 0.0);
    cl.snapped = true;
  }

  RootSet out;
  for (const Cluster& cl : clusters) {
    const double im = std::abs(cl.center.imag());
    out.max_imag_residual = std::max(out.max_imag_residual, im);
    if (im > tol_imag * scale) out.certified = false;
  }
  for (const Cluster& cl : clusters) {
    double r = cl.center.real();
    if (!cl.snapped && std::abs(cl.center.imag()) <= tol_imag * scale)
      r = polish_real(tower, r, cl.multiplicity, 1e-4 * scale);
    for (int i = 0; i < cl.multiplicity; ++i) out.roots.push_back(r);
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

}  // namespace hypermaj
