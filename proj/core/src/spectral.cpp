#include "hypermaj/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hypermaj/errors.hpp"
#include "hypermaj/majorization.hpp"
#include "hypermaj/rng.hpp"

namespace hypermaj {

namespace {

// Elementary symmetric functions S_0..S_n of the given values via the
// running recurrence e[j] += v * e[j-1]; numerically stable at desk scale.
Vec elementary_symmetric_values(const Vec& lambda) {
  Vec e(lambda.size() + 1, 0.0);
  e[0] = 1.0;
  std::size_t used = 0;
  for (double v : lambda) {
    ++used;
    for (std::size_t j = used; j >= 1; --j) e[j] += v * e[j - 1];
  }
  return e;
}

}  // namespace

SymmetricMatrix::SymmetricMatrix(const Matrix& entries) : entries_(entries) {
  if (!entries_.square() || entries_.rows() == 0)
    throw SymmetryError("symmetric matrix must be square and nonempty");
  const std::size_t n = entries_.rows();
  const double tol = 1e-12 * (1.0 + max_abs(entries_));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(entries_(i, j) - entries_(j, i)) > tol)
        throw SymmetryError("matrix is not symmetric within tolerance");
      const double avg = 0.5 * (entries_(i, j) + entries_(j, i));
      entries_(i, j) = avg;
      entries_(j, i) = avg;
    }
}

EigenDecomposition eigen_sym(const SymmetricMatrix& a) {
  const std::size_t n = a.size();
  Matrix w = a.entries();
  Matrix v = Matrix::identity(n);

  const double target = 1e-12 * std::max(frobenius_norm(w), 1e-300);
  for (int sweep = 0; sweep < 50; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * w(p, q) * w(p, q);
    if (std::sqrt(off) <= target) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (w(p, q) == 0.0) continue;
        const double tau = (w(q, q) - w(p, p)) / (2.0 * w(p, q));
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // w <- J^T w J for the (p,q) rotation J, exploiting symmetry.
        for (std::size_t i = 0; i < n; ++i) {
          const double wip = w(i, p), wiq = w(i, q);
          w(i, p) = c * wip - s * wiq;
          w(i, q) = s * wip + c * wiq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double wpi = w(p, i), wqi = w(q, i);
          w(p, i) = c * wpi - s * wqi;
          w(q, i) = s * wpi + c * wqi;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - s * viq;
          v(i, q) = s * vip + c * viq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return w(i, i) > w(j, j); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = w(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

Vec eigenvalues_sym(const SymmetricMatrix& a) { return eigen_sym(a).eigenvalues; }

Vec diagonal_of(const SymmetricMatrix& a) {
  Vec d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a(i, i);
  return d;
}

bool schur_horn_check(const SymmetricMatrix& a) {
  return majorizes(diagonal_of(a), eigenvalues_sym(a));
}

CharPolyCoefficients char_poly_coefficients(const SymmetricMatrix& a) {
  return CharPolyCoefficients{elementary_symmetric_values(eigenvalues_sym(a))};
}

bool k_positive(const SymmetricMatrix& a, std::size_t k, double eps) {
  if (k < 1 || k > a.size()) throw DomainError("k_positive: k must lie in 1..n");
  const Vec lambda = eigenvalues_sym(a);
  const Vec e = elementary_symmetric_values(lambda);
  for (std::size_t j = 1; j <= k; ++j)
    if (!(e[j] > eps)) return false;
  return true;
}

bool k_positive(const SymmetricMatrix& a, std::size_t k) {
  const double eps = 1e-10 * (1.0 + inf_norm(eigenvalues_sym(a)));
  return k_positive(a, k, eps);
}

Matrix random_orthogonal(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("random_orthogonal: n must be >= 1");
  Rng rng(derive_seed(seed, 0x6f727468ULL, 0));  // orthogonal-sampler stream
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.gauss();

  // Householder QR; q accumulates the reflectors applied to the identity.
  Matrix q = Matrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    double norm = 0.0;
    for (std::size_t i = k; i < n; ++i) norm += g(i, k) * g(i, k);
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    const double alpha = g(k, k) >= 0.0 ? -norm : norm;
    Vec v(n, 0.0);
    for (std::size_t i = k; i < n; ++i) v[i] = g(i, k);
    v[k] -= alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = k; i < n; ++i) vnorm2 += v[i] * v[i];
    if (vnorm2 == 0.0) continue;
    for (std::size_t j = k; j < n; ++j) {
      double dot = 0.0;
      for (std::size_t i = k; i < n; ++i) dot += v[i] * g(i, j);
      const double f = 2.0 * dot / vnorm2;
      for (std::size_t i = k; i < n; ++i) g(i, j) -= f * v[i];
    }
    for (std::size_t j = 0; j < n; ++j) {
      double dot = 0.0;
      for (std::size_t i = k; i < n; ++i) dot += v[i] * q(i, j);
      const double f = 2.0 * dot / vnorm2;
      for (std::size_t i = k; i < n; ++i) q(i, j) -= f * v[i];
    }
  }
  // q now holds Q^T (the reflectors applied to I). Fold the signs of the
  // R diagonal into the rows so the implied R has positive diagonal,
  // which is what makes the distribution exactly Haar.
  Matrix u(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const double sign = g(i, i) >= 0.0 ? 1.0 : -1.0;
    for (std::size_t j = 0; j < n; ++j) u(j, i) = sign * q(i, j);
  }
  return u;
}

SymmetricMatrix symmetric_part(const Matrix& m) {
  if (!m.square()) throw DimensionError("symmetric_part: matrix must be square");
  Matrix s(m.rows(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) s(i, j) = 0.5 * (m(i, j) + m(j, i));
  return SymmetricMatrix(s);
}

std::vector<SymmetricMatrix> block_extract(const SymmetricMatrix& a, const Partition& p) {
  if (p.n() != a.size()) throw DomainError("block_extract: partition size mismatch");
  std::vector<SymmetricMatrix> out;
  out.reserve(p.block_count());
  for (const IndexSet& block : p.blocks()) {
    Matrix sub(block.size(), block.size());
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = 0; j < block.size(); ++j) sub(i, j) = a(block[i], block[j]);
    out.emplace_back(sub);
  }
  return out;
}

}  // namespace hypermaj
