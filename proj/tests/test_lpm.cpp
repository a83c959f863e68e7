#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "hypermaj/errors.hpp"
#include "hypermaj/lpm.hpp"
#include "hypermaj/rng.hpp"
#include "hypermaj/verify.hpp"
#include "test_util.hpp"

using namespace hypermaj;
using testutil::check_close;
using testutil::mat;
using testutil::sym;

namespace {

LpmPolynomial det_poly(std::size_t n) {
  IndexSet all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return LpmPolynomial(n, {{all, 1.0}});
}

double esym(const Vec& lam, std::size_t k) {
  Vec e(k + 1, 0.0);
  e[0] = 1.0;
  for (double v : lam)
    for (std::size_t j = std::min(k, e.size() - 1); j >= 1; --j) e[j] += v * e[j - 1];
  return e[k];
}

}  // namespace

TEST_SUITE("lpm") {

TEST_CASE("principal minors") {
  const SymmetricMatrix a = sym({{2, 1}, {1, 2}});
  CHECK(principal_minor(a, {}) == 1.0);
  CHECK(principal_minor(a, {0}) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(principal_minor(a, {1}) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(principal_minor(a, {0, 1}) == doctest::Approx(3.0).epsilon(1e-13));

  CHECK_THROWS_AS(principal_minor(a, {0, 0}), DomainError);
  CHECK_THROWS_AS(principal_minor(a, {2}), DomainError);
}

TEST_CASE("evaluation anchors") {
  CHECK(lpm_eval(det_poly(2), sym({{2, 1}, {1, 2}})) ==
        doctest::Approx(3.0).epsilon(1e-13));

  // 2x2 minor sum of diag(1,2,3): 2 + 3 + 6 = 11.
  const SymmetricMatrix d = sym({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  CHECK(lpm_eval(minor_sum_polynomial(3, 2), d) == doctest::Approx(11.0).epsilon(1e-13));
  CHECK(lpm_eval(minor_sum_polynomial(3, 1), d) == doctest::Approx(6.0).epsilon(1e-13));
}

TEST_CASE("minor sums equal spectral symmetric functions") {
  Rng rng(81);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.below(5));
    const SymmetricMatrix a = random_symmetric(rng, n);
    const Vec lam = eigenvalues_sym(a);
    for (std::size_t k = 1; k <= n; ++k) {
      const double viaminors = lpm_eval(minor_sum_polynomial(n, k), a);
      CHECK(viaminors ==
            doctest::Approx(esym(lam, k)).epsilon(1e-9).scale(1.0 + std::abs(viaminors)));
    }
  }
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(LpmPolynomial(0, {{IndexSet{}, 1.0}}), DomainError);
  CHECK_THROWS_AS(LpmPolynomial(21, {{IndexSet{0}, 1.0}}), DomainError);
  CHECK_THROWS_AS(LpmPolynomial(3, std::vector<LpmTerm>{}), DomainError);
  CHECK_THROWS_AS(LpmPolynomial(3, {{IndexSet{0}, 1.0}, {IndexSet{0}, 2.0}}),
                  DomainError);
  CHECK_THROWS_AS(LpmPolynomial(3, {{IndexSet{3}, 1.0}}), DomainError);
  CHECK_THROWS_AS(LpmPolynomial(3, {{IndexSet{0}, 0.0}}), DomainError);

  const LpmPolynomial mixed(2, {{IndexSet{0}, 1.0}, {IndexSet{0, 1}, 1.0}});
  CHECK_FALSE(mixed.homogeneous());
  CHECK_THROWS_AS(mixed.degree(), DomainError);
  CHECK(det_poly(3).degree() == 3);
}

TEST_CASE("sign vectors and blockwise patterns") {
  CHECK_THROWS_AS(SignVector({1, 0, -1}), DomainError);
  CHECK_NOTHROW(SignVector({1, -1, 1}));

  const Partition p(4, {{0, 2}, {1, 3}});
  const SignVector s = blockwise_signs(p, 0b10);
  CHECK(s.signs == std::vector<int>{1, -1, 1, -1});
  const SignVector all_plus = blockwise_signs(p, 0);
  CHECK(all_plus.signs == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("sign conjugation fixes principal minors") {
  // D A D keeps every principal minor: det(D_J A_J D_J) = det(A_J).
  Rng rng(83);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.below(3));
    const SymmetricMatrix a = random_symmetric(rng, n);
    const LpmPolynomial p = minor_sum_polynomial(n, 2);
    const double base = lpm_eval(p, a);
    for (std::uint32_t pattern = 0; pattern < (1u << n); ++pattern) {
      std::vector<int> signs(n);
      for (std::size_t i = 0; i < n; ++i) signs[i] = (pattern >> i & 1u) ? -1 : 1;
      const SymmetricMatrix c = sign_conjugate(a, SignVector(signs));
      CHECK(std::abs(lpm_eval(p, c) - base) <= 1e-10 * (1.0 + std::abs(base)));
    }
  }

  const SymmetricMatrix a = sym({{2, 1}, {1, 2}});
  CHECK_THROWS_AS(sign_conjugate(a, SignVector({1, 1, 1})), DimensionError);
}

TEST_CASE("pinching anchors") {
  const SymmetricMatrix a = sym({{1, 2}, {2, 1}});
  const SymmetricMatrix pinched = block_pinch(a, Partition::singletons(2));
  CHECK(max_abs(pinched.entries() - mat({{1, 0}, {0, 1}})) == 0.0);

  const SymmetricMatrix whole = block_pinch(a, Partition::one_block(2));
  CHECK(max_abs(whole.entries() - a.entries()) == 0.0);
}

TEST_CASE("sign averaging equals pinching") {
  Rng rng(89);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.below(5));
    const SymmetricMatrix a = random_symmetric(rng, n);
    const Partition p = random_partition(rng, n);
    const SymmetricMatrix avg = reynolds_sign_average(a, p);
    const SymmetricMatrix pin = block_pinch(a, p);
    CHECK(max_abs(avg.entries() - pin.entries()) <= 1e-12);
  }
}

TEST_CASE("sign averaging rejects oversized groups") {
  // 21 singleton blocks needs 2^21 group elements.
  Matrix m(21, 21);
  for (std::size_t i = 0; i < 21; ++i) m(i, i) = 1.0;
  CHECK_THROWS_AS(reynolds_sign_average(SymmetricMatrix(m), Partition::singletons(21)),
                  GroupTooLarge);
}

TEST_CASE("pinching composes along refinement") {
  Rng rng(97);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(rng.below(4));
    const SymmetricMatrix a = random_symmetric(rng, n);
    const Partition coarse = random_partition(rng, n);

    // Split each coarse block in half to get a genuine refinement.
    std::vector<IndexSet> halves;
    for (const IndexSet& b : coarse.blocks()) {
      if (b.size() < 2) {
        halves.push_back(b);
        continue;
      }
      halves.emplace_back(b.begin(), b.begin() + static_cast<long>(b.size() / 2));
      halves.emplace_back(b.begin() + static_cast<long>(b.size() / 2), b.end());
    }
    const Partition fine(n, halves);
    REQUIRE(refines(fine, coarse));

    const SymmetricMatrix once = block_pinch(block_pinch(a, coarse), fine);
    const SymmetricMatrix direct = block_pinch(a, fine);
    CHECK(max_abs(once.entries() - direct.entries()) == 0.0);
  }
}

TEST_CASE("identity-direction spectrum matches the eigensolver") {
  const LpmSpectrum s = lpm_identity_spectrum(det_poly(2), sym({{2, 1}, {1, 2}}));
  REQUIRE(s.certified);
  check_close(s.eigenvalues, Vec{3, 1}, 1e-9);

  Rng rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.below(4));
    const SymmetricMatrix a = random_symmetric(rng, n);
    const LpmSpectrum ls = lpm_identity_spectrum(det_poly(n), a);
    REQUIRE(ls.certified);
    CHECK(std::is_sorted(ls.eigenvalues.rbegin(), ls.eigenvalues.rend()));
    check_close(ls.eigenvalues, eigenvalues_sym(a), 1e-7);
  }
}

TEST_CASE("identity-direction spectrum requires a usable polynomial") {
  // Inhomogeneous input is rejected.
  const LpmPolynomial mixed(2, {{IndexSet{0}, 1.0}, {IndexSet{0, 1}, 1.0}});
  CHECK_THROWS_AS(lpm_identity_spectrum(mixed, sym({{1, 0}, {0, 1}})), DomainError);

  // P(I) < 0 is not a hyperbolic direction.
  const LpmPolynomial neg(2, {{IndexSet{0, 1}, -1.0}});
  CHECK_THROWS_AS(lpm_identity_spectrum(neg, sym({{1, 0}, {0, 1}})),
                  NotHyperbolicDirection);
}

TEST_CASE("matrix cone membership for the determinant is the psd cone") {
  const LpmPolynomial d2 = det_poly(2);
  CHECK(lpm_cone_member(d2, sym({{1, 0}, {0, 2}}), ConeMode::kOpen).member);
  CHECK_FALSE(lpm_cone_member(d2, sym({{1, 0}, {0, -1}}), ConeMode::kClosed).member);

  // Rank-deficient PSD: on the boundary.
  const SymmetricMatrix edge = sym({{1, 0}, {0, 0}});
  CHECK_FALSE(lpm_cone_member(d2, edge, ConeMode::kOpen).member);
  CHECK(lpm_cone_member(d2, edge, ConeMode::kClosed).member);
}

TEST_CASE("pinching inequality report") {
  const FischerReport r =
      fischer_check(det_poly(2), sym({{2, 1}, {1, 2}}), Partition::singletons(2));
  CHECK(r.cone_preserved);
  CHECK(r.inequality_holds);
  CHECK(r.lhs == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(3.0).epsilon(1e-12));

  CHECK_THROWS_AS(fischer_check(det_poly(2), sym({{-1, 0}, {0, -1}}),
                                Partition::singletons(2)),
                  ConeMembershipError);
}

TEST_CASE("stability probe") {
  CHECK(psd_stable_probe(det_poly(3), 120, 7).passed);
  CHECK(psd_stable_probe(minor_sum_polynomial(4, 2), 120, 7).passed);
}

}  // TEST_SUITE
