#ifndef HYPERMAJ_POLYNOMIAL_HPP
#define HYPERMAJ_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "hypermaj/linalg.hpp"

namespace hypermaj {

// One term c * x^e of a homogeneous polynomial; exponents are
// nonnegative and sum to the polynomial degree.
struct Monomial {
  std::vector<int> exponents;
  double coefficient = 0.0;
};

// Sparse homogeneous polynomial in n variables of degree k >= 1.
// Terms are kept in a map keyed by exponent vector (lexicographic), so
// iteration order, evaluation order and serialization are deterministic.
class HomogeneousPolynomial {
 public:
  using TermMap = std::map<std::vector<int>, double>;

  // Validates: n >= 1, k >= 1, at least one term, every exponent vector
  // has length n with nonnegative entries summing to k, coefficients
  // finite and nonzero, no duplicate exponent vectors.
  HomogeneousPolynomial(std::size_t n, int k, const std::vector<Monomial>& terms);

  std::size_t n() const { return n_; }
  int degree() const { return k_; }
  const TermMap& terms() const { return terms_; }

  bool operator==(const HomogeneousPolynomial& other) const {
    return n_ == other.n_ && k_ == other.k_ && terms_ == other.terms_;
  }

 private:
  std::size_t n_;
  int k_;
  TermMap terms_;
};

// Dense univariate polynomial c_0 + c_1 t + ... + c_k t^k produced by
// restricting a degree-k homogeneous polynomial to a line; coefficients
// ascending, always exactly k + 1 of them.
struct UnivariateRestriction {
  Vec coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

double evaluate(const UnivariateRestriction& p, double t);

// P(x). Throws DimensionError when x.size() != P.n().
double evaluate(const HomogeneousPolynomial& P, const Vec& x);

// The k-th elementary symmetric polynomial on n variables: all C(n, k)
// squarefree monomials with coefficient 1. Throws DomainError unless
// 1 <= k <= n.
HomogeneousPolynomial elementary_symmetric(std::size_t n, int k);

// Exact combinatorial symmetry test: groups terms by sorted exponent
// multiset and checks each orbit is fully populated with bitwise-equal
// coefficients. No sampling, no tolerance.
bool is_symmetric(const HomogeneousPolynomial& P);

// Q with Q(x) = P(sigma x) where (sigma x)[i] = x[sigma[i]].
HomogeneousPolynomial permute(const HomogeneousPolynomial& P, const Permutation& sigma);

// Coefficients of t -> P(t a + x), computed term by term from binomial
// expansions (exact up to rounding). Inputs with ||x||_inf > 1 are
// rescaled first so large points do not lose relative accuracy.
// The leading coefficient equals P(a).
UnivariateRestriction restrict_to_line(const HomogeneousPolynomial& P, const Vec& a,
                                       const Vec& x);

}  // namespace hypermaj

#endif  // HYPERMAJ_POLYNOMIAL_HPP
