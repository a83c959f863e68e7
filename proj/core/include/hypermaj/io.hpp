#pragma once

#include <cstddef>
#include <string>

#include "hypermaj/linalg.hpp"
#include "hypermaj/lpm.hpp"
#include "hypermaj/partition.hpp"
#include "hypermaj/polynomial.hpp"

namespace hypermaj {

// Readers throw ParseError naming the offending field or term. All JSON
// indices in files are 1-based; the in-memory types are 0-based.

std::string read_file(const std::string& path);

// {"n": 3, "k": 2, "terms": [{"exps": [1,1,0], "coef": 1.0}, ...]}
HomogeneousPolynomial parse_polynomial_json(const std::string& text);

// {"n": 4, "terms": [{"J": [1,2], "c": 1.0}, ...]}, J entries 1-based
LpmPolynomial parse_lpm_json(const std::string& text);

Vec parse_vector_json(const std::string& text);

// Array of equal-length row arrays.
Matrix parse_matrix_json(const std::string& text);

// Comma-separated rows, one line per row.
Matrix parse_matrix_csv(const std::string& text);

// JSON when the first non-space byte is '[', CSV otherwise.
Matrix parse_matrix_auto(const std::string& text);

// [[1,2],[3]] with 1-based indices partitioning {1..n}.
Partition parse_partition_json(const std::string& text, std::size_t n);

// Deterministic JSON renderings (fixed key order, shortest float form).
std::string vector_to_json(const Vec& x);
std::string matrix_to_json(const Matrix& m);

}  // namespace hypermaj
