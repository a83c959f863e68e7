#ifndef HYPERMAJ_LINALG_HPP
#define HYPERMAJ_LINALG_HPP

#include <cstddef>
#include <vector>

namespace hypermaj {

using Vec = std::vector<double>;
using Permutation = std::vector<std::size_t>;  // i -> p[i], a bijection on [0, n)

// Dense row-major matrix. Everything in this library is desk scale
// (n <= a few dozen), so no views, no expression templates.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
Vec operator*(const Matrix& a, const Vec& x);

Matrix transpose(const Matrix& a);

// Largest entry magnitude; 0 for an empty matrix.
double max_abs(const Matrix& a);
double frobenius_norm(const Matrix& a);

double inf_norm(const Vec& x);
double sum(const Vec& x);
Vec sorted_descending(Vec x);
Vec sorted_ascending(Vec x);

// Determinant by LU with partial pivoting. Returns 0 for a numerically
// singular input rather than failing.
double lu_determinant(Matrix a);

bool is_permutation(const Permutation& p);
// result[i] = x[p[i]]
Vec permute_vector(const Vec& x, const Permutation& p);
// Matrix P with P(i, p[i]) = 1, so (P x)[i] = x[p[i]], matching permute_vector.
Matrix permutation_matrix(const Permutation& p);
// Stable permutation sorting x descending: x[p[0]] >= x[p[1]] >= ...
Permutation sorting_permutation_descending(const Vec& x);

}  // namespace hypermaj

#endif  // HYPERMAJ_LINALG_HPP
