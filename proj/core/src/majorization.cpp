#include "hypermaj/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hypermaj/errors.hpp"

namespace hypermaj {

namespace {

double witness_tol(const Vec& y) { return 1e-9 * (1.0 + inf_norm(y)); }

// Kuhn augmenting-path matching restricted to entries strictly above
// `threshold`. match_col[j] = row matched to column j, or npos.
bool try_kuhn(const Matrix& m, double threshold, std::vector<std::size_t>& match_col) {
  const std::size_t n = m.rows();
  const std::size_t npos = static_cast<std::size_t>(-1);
  match_col.assign(n, npos);
  std::vector<char> visited(n);

  auto augment = [&](auto&& self, std::size_t row) -> bool {
    for (std::size_t col = 0; col < n; ++col) {
      if (visited[col] || !(m(row, col) > threshold)) continue;
      visited[col] = 1;
      if (match_col[col] == npos || self(self, match_col[col])) {
        match_col[col] = row;
        return true;
      }
    }
    return false;
  };

  for (std::size_t row = 0; row < n; ++row) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(augment, row)) return false;
  }
  return true;
}

// Perfect matching on entries > tol maximizing the minimum matched entry,
// found by binary search over the distinct entry values. Returns row ->
// column, or an empty vector when no perfect matching exists at all.
Permutation bottleneck_matching(const Matrix& m, double tol) {
  const std::size_t n = m.rows();
  Vec values;
  values.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) > tol) values.push_back(m(i, j));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::vector<std::size_t> match_col;
  if (values.empty() || !try_kuhn(m, tol, match_col)) return {};

  // Feasibility is monotone in the threshold: find the largest value v
  // such that entries >= v still carry a perfect matching. Thresholding
  // with "> v_prev" implements ">= v" on the discrete value set.
  std::size_t lo = 0, hi = values.size() - 1;  // values[lo] always feasible
  std::vector<std::size_t> best = match_col;
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    const double thresh = mid == 0 ? tol : std::max(tol, values[mid - 1]);
    if (try_kuhn(m, thresh, match_col)) {
      best = match_col;
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }

  Permutation row_to_col(n);
  for (std::size_t col = 0; col < n; ++col) row_to_col[best[col]] = col;
  return row_to_col;
}

}  // namespace

DoublyStochasticMatrix::DoublyStochasticMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (!entries_.square() || entries_.rows() == 0)
    throw NotDoublyStochastic("doubly stochastic matrix must be square and nonempty");
  const std::size_t n = entries_.rows();
  for (std::size_t i = 0; i < n; ++i) {
    double row_sum = 0.0, col_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (entries_(i, j) < -1e-12)
        throw NotDoublyStochastic("doubly stochastic matrix has a negative entry");
      row_sum += entries_(i, j);
      col_sum += entries_(j, i);
    }
    if (std::abs(row_sum - 1.0) > 1e-10 || std::abs(col_sum - 1.0) > 1e-10)
      throw NotDoublyStochastic("doubly stochastic matrix has a row or column sum away from 1");
  }
}

bool majorizes(const Vec& x, const Vec& y, double tol) {
  if (x.size() != y.size()) throw DimensionError("majorizes: vector lengths differ");
  if (x.empty()) return true;
  const Vec xs = sorted_descending(x);
  const Vec ys = sorted_descending(y);
  double px = 0.0, py = 0.0;
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    px += xs[k];
    py += ys[k];
    if (px > py + tol) return false;
  }
  px += xs.back();
  py += ys.back();
  return std::abs(px - py) <= tol;
}

bool majorizes(const Vec& x, const Vec& y) { return majorizes(x, y, witness_tol(y)); }

DoublyStochasticMatrix doubly_stochastic_witness(const Vec& x, const Vec& y) {
  const double tol = witness_tol(y);
  if (!majorizes(x, y, tol))
    throw MajorizationError("doubly_stochastic_witness: x is not majorized by y");
  const std::size_t n = x.size();

  const Permutation px = sorting_permutation_descending(x);
  const Permutation py = sorting_permutation_descending(y);
  const Vec xs = permute_vector(x, px);
  Vec w = permute_vector(y, py);

  // Chain of pairwise averaging transforms driving w (descending) onto xs
  // (descending). Donor j is the largest index still above target, and
  // receiver k the first index past it still below target; every entry
  // strictly between them already sits on target, which is what keeps the
  // intermediate vectors sorted. Each step pins at least one coordinate,
  // so n-1 steps suffice.
  Matrix d_sorted = Matrix::identity(n);
  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::size_t j = n, k = n;
    for (std::size_t i = n; i-- > 0;) {
      if (w[i] > xs[i] + 1e-15) {
        j = i;
        break;
      }
    }
    if (j == n) break;
    for (std::size_t i = j + 1; i < n; ++i) {
      if (w[i] < xs[i] - 1e-15) {
        k = i;
        break;
      }
    }
    if (k == n) break;

    const double delta = std::min(w[j] - xs[j], xs[k] - w[k]);
    const double lambda = delta / (w[j] - w[k]);
    // Averaging matrix: rows j and k mix with weight lambda.
    Matrix t = Matrix::identity(n);
    t(j, j) = 1.0 - lambda;
    t(j, k) = lambda;
    t(k, k) = 1.0 - lambda;
    t(k, j) = lambda;
    const double wj = w[j], wk = w[k];
    w[j] = (1.0 - lambda) * wj + lambda * wk;
    w[k] = (1.0 - lambda) * wk + lambda * wj;
    d_sorted = t * d_sorted;
  }

  // Undo the sorting: x = Px^T (D_sorted (Py y)).
  const Matrix d =
      transpose(permutation_matrix(px)) * d_sorted * permutation_matrix(py);

  Vec product = d * y;
  double resid = 0.0;
  for (std::size_t i = 0; i < n; ++i) resid = std::max(resid, std::abs(product[i] - x[i]));
  if (resid > tol)
    throw MajorizationError("doubly_stochastic_witness: residual exceeds tolerance");
  return DoublyStochasticMatrix(d);
}

BirkhoffDecomposition birkhoff_decompose(const DoublyStochasticMatrix& d, double tol) {
  const std::size_t n = d.size();
  Matrix residual = d.entries();
  BirkhoffDecomposition out;
  const std::size_t budget = (n - 1) * (n - 1) + 1;

  for (std::size_t iter = 0; iter <= budget; ++iter) {
    if (max_abs(residual) <= tol) return out;
    if (iter == budget)
      throw NotDoublyStochastic("birkhoff_decompose: decomposition budget exceeded");
    const Permutation p = bottleneck_matching(residual, tol);
    if (p.empty())
      throw NotDoublyStochastic("birkhoff_decompose: no perfect matching on positive support");
    double alpha = residual(0, p[0]);
    for (std::size_t i = 1; i < n; ++i) alpha = std::min(alpha, residual(i, p[i]));
    for (std::size_t i = 0; i < n; ++i) residual(i, p[i]) -= alpha;
    out.weights.push_back(alpha);
    out.permutations.push_back(p);
  }
  return out;
}

Vec mean_vector(const Vec& y) {
  if (y.empty()) throw DomainError("mean_vector: input must be nonempty");
  const double mean = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(y.size());
  return Vec(y.size(), mean);
}

}  // namespace hypermaj
