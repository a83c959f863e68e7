#include "hypermaj/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "hypermaj/errors.hpp"

namespace hypermaj {

namespace {

double ipow(double base, int e) {
  double r = 1.0;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// Number of distinct permutations of the exponent multiset, i.e. the
// orbit size of a monomial under coordinate permutations. Computed as a
// product of binomials so every intermediate value is an exact integer.
std::uint64_t orbit_size(const std::vector<int>& sorted_exps) {
  std::map<int, std::uint64_t> mult;
  for (int e : sorted_exps) ++mult[e];
  std::uint64_t result = 1;
  std::uint64_t remaining = sorted_exps.size();
  for (const auto& [value, count] : mult) {
    (void)value;
    // result *= C(remaining, count)
    std::uint64_t c = 1;
    for (std::uint64_t j = 1; j <= count; ++j) {
      c = c * (remaining - count + j) / j;
    }
    result *= c;
    remaining -= count;
  }
  return result;
}

}  // namespace

HomogeneousPolynomial::HomogeneousPolynomial(std::size_t n, int k,
                                             const std::vector<Monomial>& terms)
    : n_(n), k_(k) {
  if (n < 1) throw DomainError("polynomial: need at least one variable");
  if (k < 1) throw DomainError("polynomial: degree must be >= 1");
  if (terms.empty()) throw DomainError("polynomial: the zero polynomial is not allowed");
  for (const Monomial& m : terms) {
    if (m.exponents.size() != n)
      throw DimensionError("polynomial: exponent vector has length " +
                           std::to_string(m.exponents.size()) + ", expected " +
                           std::to_string(n));
    int total = 0;
    for (int e : m.exponents) {
      if (e < 0) throw DomainError("polynomial: negative exponent");
      total += e;
    }
    if (total != k)
      throw DomainError("polynomial: term of degree " + std::to_string(total) +
                        " in a degree-" + std::to_string(k) + " polynomial");
    if (!std::isfinite(m.coefficient) || m.coefficient == 0.0)
      throw DomainError("polynomial: coefficients must be finite and nonzero");
    if (!terms_.emplace(m.exponents, m.coefficient).second)
      throw DomainError("polynomial: duplicate exponent vector");
  }
}

double evaluate(const UnivariateRestriction& p, double t) {
  double acc = 0.0;
  for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend(); ++it)
    acc = acc * t + *it;
  return acc;
}

double evaluate(const HomogeneousPolynomial& P, const Vec& x) {
  if (x.size() != P.n())
    throw DimensionError("evaluate: point has dimension " + std::to_string(x.size()) +
                         ", polynomial expects " + std::to_string(P.n()));
  double acc = 0.0;
  for (const auto& [exps, coef] : P.terms()) {
    double term = coef;
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > 0) term *= ipow(x[i], exps[i]);
    acc += term;
  }
  return acc;
}

HomogeneousPolynomial elementary_symmetric(std::size_t n, int k) {
  if (n < 1) throw DomainError("elementary_symmetric: need n >= 1");
  if (k < 1 || static_cast<std::size_t>(k) > n)
    throw DomainError("elementary_symmetric: need 1 <= k <= n, got k = " +
                      std::to_string(k) + ", n = " + std::to_string(n));
  std::vector<Monomial> terms;
  // Enumerate k-subsets of [0, n) in lexicographic order.
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    Monomial m;
    m.exponents.assign(n, 0);
    for (std::size_t i : idx) m.exponents[i] = 1;
    m.coefficient = 1.0;
    terms.push_back(std::move(m));
    // next combination
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - static_cast<std::size_t>(k - pos)) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (std::size_t j = pos + 1; j < static_cast<std::size_t>(k); ++j)
      idx[j] = idx[j - 1] + 1;
  }
  return HomogeneousPolynomial(n, k, terms);
}

bool is_symmetric(const HomogeneousPolynomial& P) {
  // Group terms by descending-sorted exponent vector. Symmetric iff each
  // group carries one coefficient value and is fully populated: group
  // size equals the number of distinct rearrangements of the multiset.
  struct Group {
    double coefficient;
    std::uint64_t count;
    bool mismatch;
  };
  std::map<std::vector<int>, Group> groups;
  for (const auto& [exps, coef] : P.terms()) {
    std::vector<int> key = exps;
    std::sort(key.begin(), key.end(), std::greater<int>());
    auto [it, inserted] = groups.emplace(std::move(key), Group{coef, 1, false});
    if (!inserted) {
      ++it->second.count;
      if (it->second.coefficient != coef) it->second.mismatch = true;
    }
  }
  for (const auto& [key, g] : groups) {
    if (g.mismatch) return false;
    if (g.count != orbit_size(key)) return false;
  }
  return true;
}

HomogeneousPolynomial permute(const HomogeneousPolynomial& P, const Permutation& sigma) {
  if (sigma.size() != P.n())
    throw DimensionError("permute: permutation length differs from variable count");
  if (!is_permutation(sigma)) throw DomainError("permute: not a permutation");
  std::vector<Monomial> out;
  out.reserve(P.terms().size());
  for (const auto& [exps, coef] : P.terms()) {
    Monomial m;
    m.exponents.assign(P.n(), 0);
    // Q(x) = P(sigma x) with (sigma x)[i] = x[sigma[i]]: the factor
    // x_{sigma[i]}^{e_i} contributes e_i to the exponent of x_{sigma[i]}.
    for (std::size_t i = 0; i < sigma.size(); ++i) m.exponents[sigma[i]] = exps[i];
    m.coefficient = coef;
    out.push_back(std::move(m));
  }
  return HomogeneousPolynomial(P.n(), P.degree(), out);
}

UnivariateRestriction restrict_to_line(const HomogeneousPolynomial& P, const Vec& a,
                                       const Vec& x) {
  if (a.size() != P.n() || x.size() != P.n())
    throw DimensionError("restrict_to_line: direction/point dimension differs from n");
  const int k = P.degree();

  // P(t a + x) = s^k P((t/s) a + x/s): work with the rescaled point when
  // it is large, then undo the substitution on the coefficients.
  const double s = inf_norm(x);
  const bool rescale = s > 1.0;
  Vec xs = x;
  if (rescale)
    for (double& v : xs) v /= s;

  Vec total(static_cast<std::size_t>(k) + 1, 0.0);
  Vec factor, next;
  std::vector<std::vector<double>> binom(static_cast<std::size_t>(k) + 1);
  for (int m = 0; m <= k; ++m) {
    binom[m].assign(static_cast<std::size_t>(m) + 1, 1.0);
    for (int j = 1; j < m; ++j) binom[m][j] = binom[m - 1][j - 1] + binom[m - 1][j];
  }

  for (const auto& [exps, coef] : P.terms()) {
    Vec prod{1.0};  // running coefficients of prod_i (a_i t + xs_i)^{e_i}
    for (std::size_t i = 0; i < exps.size(); ++i) {
      const int e = exps[i];
      if (e == 0) continue;
      // (a_i t + b)^e expanded with binomial coefficients.
      const double b = xs[i];
      factor.assign(static_cast<std::size_t>(e) + 1, 0.0);
      for (int j = 0; j <= e; ++j)
        factor[j] = binom[e][j] * ipow(a[i], j) * ipow(b, e - j);
      next.assign(prod.size() + e, 0.0);
      for (std::size_t p = 0; p < prod.size(); ++p) {
        if (prod[p] == 0.0) continue;
        for (int j = 0; j <= e; ++j) next[p + j] += prod[p] * factor[j];
      }
      prod.swap(next);
    }
    for (std::size_t j = 0; j < prod.size(); ++j) total[j] += coef * prod[j];
  }

  if (rescale) {
    // c_j(t) for the original point: multiply by s^(k - j).
    double scale = 1.0;
    for (int j = k; j >= 0; --j) {
      total[j] *= scale;
      scale *= s;
    }
  }
  return UnivariateRestriction{std::move(total)};
}

}  // namespace hypermaj
