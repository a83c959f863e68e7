#include "hypermaj/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hypermaj/errors.hpp"

namespace hypermaj {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

double number_field(const json& obj, const char* field, const std::string& where) {
  if (!obj.contains(field) || !obj[field].is_number())
    throw ParseError(where + ": missing or non-numeric field \"" + field + "\"");
  return obj[field].get<double>();
}

std::size_t index_field(const json& value, const std::string& where) {
  if (!value.is_number_integer() || value.get<long long>() < 1)
    throw ParseError(where + ": indices must be integers >= 1");
  return static_cast<std::size_t>(value.get<long long>());
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

HomogeneousPolynomial parse_polynomial_json(const std::string& text) {
  const json j = parse_or_throw(text, "polynomial");
  if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("terms"))
    throw ParseError("polynomial: expected object with fields n, k, terms");
  if (!j["n"].is_number_integer() || !j["k"].is_number_integer())
    throw ParseError("polynomial: n and k must be integers");
  const long long n = j["n"].get<long long>();
  const long long k = j["k"].get<long long>();
  if (n < 1 || k < 1) throw ParseError("polynomial: n and k must be >= 1");
  if (!j["terms"].is_array() || j["terms"].empty())
    throw ParseError("polynomial: terms must be a nonempty array");

  std::vector<Monomial> monomials;
  std::size_t index = 0;
  for (const json& term : j["terms"]) {
    const std::string where = "polynomial term #" + std::to_string(index + 1);
    if (!term.is_object() || !term.contains("exps") || !term.contains("coef"))
      throw ParseError(where + ": expected object with fields exps, coef");
    if (!term["exps"].is_array() || term["exps"].size() != static_cast<std::size_t>(n))
      throw ParseError(where + ": exps must be an array of length n");
    Monomial m;
    for (const json& e : term["exps"]) {
      if (!e.is_number_integer() || e.get<long long>() < 0)
        throw ParseError(where + ": exponents must be integers >= 0");
      m.exponents.push_back(static_cast<int>(e.get<long long>()));
    }
    m.coefficient = number_field(term, "coef", where);
    monomials.push_back(std::move(m));
    ++index;
  }
  try {
    return HomogeneousPolynomial(static_cast<std::size_t>(n), static_cast<int>(k), monomials);
  } catch (const Error& e) {
    throw ParseError(std::string("polynomial: ") + e.what());
  }
}

LpmPolynomial parse_lpm_json(const std::string& text) {
  const json j = parse_or_throw(text, "lpm polynomial");
  if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
    throw ParseError("lpm polynomial: expected object with fields n, terms");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1)
    throw ParseError("lpm polynomial: n must be an integer >= 1");
  const std::size_t n = static_cast<std::size_t>(j["n"].get<long long>());
  if (!j["terms"].is_array() || j["terms"].empty())
    throw ParseError("lpm polynomial: terms must be a nonempty array");

  std::vector<LpmTerm> terms;
  std::size_t index = 0;
  for (const json& term : j["terms"]) {
    const std::string where = "lpm term #" + std::to_string(index + 1);
    if (!term.is_object() || !term.contains("J") || !term.contains("c"))
      throw ParseError(where + ": expected object with fields J, c");
    if (!term["J"].is_array()) throw ParseError(where + ": J must be an array");
    LpmTerm t;
    for (const json& e : term["J"]) {
      const std::size_t one_based = index_field(e, where);
      if (one_based > n) throw ParseError(where + ": index exceeds n");
      t.indices.push_back(one_based - 1);
    }
    t.coefficient = number_field(term, "c", where);
    terms.push_back(std::move(t));
    ++index;
  }
  try {
    return LpmPolynomial(n, terms);
  } catch (const Error& e) {
    throw ParseError(std::string("lpm polynomial: ") + e.what());
  }
}

Vec parse_vector_json(const std::string& text) {
  const json j = parse_or_throw(text, "vector");
  if (!j.is_array() || j.empty()) throw ParseError("vector: expected a nonempty array");
  Vec out;
  for (const json& v : j) {
    if (!v.is_number()) throw ParseError("vector: entries must be numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

Matrix parse_matrix_json(const std::string& text) {
  const json j = parse_or_throw(text, "matrix");
  if (!j.is_array() || j.empty()) throw ParseError("matrix: expected a nonempty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty())
    throw ParseError("matrix: rows must be nonempty arrays");
  const std::size_t cols = j[0].size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ParseError("matrix: row " + std::to_string(i + 1) + " has inconsistent length");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[i][c].is_number())
        throw ParseError("matrix: row " + std::to_string(i + 1) + " has a non-numeric entry");
      m(i, c) = j[i][c].get<double>();
    }
  }
  return m;
}

Matrix parse_matrix_csv(const std::string& text) {
  std::vector<Vec> rows;
  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Vec row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t used = 0;
        const double v = std::stod(cell, &used);
        if (cell.find_first_not_of(" \t\r", used) != std::string::npos)
          throw ParseError("");
        row.push_back(v);
      } catch (...) {
        throw ParseError("matrix csv: line " + std::to_string(lineno) +
                         ": cannot parse cell \"" + cell + "\"");
      }
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("matrix csv: line " + std::to_string(lineno) +
                       " has inconsistent column count");
    if (row.empty())
      throw ParseError("matrix csv: line " + std::to_string(lineno) + " has no cells");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("matrix csv: no rows");
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

Matrix parse_matrix_auto(const std::string& text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') return parse_matrix_json(text);
  return parse_matrix_csv(text);
}

Partition parse_partition_json(const std::string& text, std::size_t n) {
  const json j = parse_or_throw(text, "partition");
  if (!j.is_array() || j.empty())
    throw ParseError("partition: expected a nonempty array of blocks");
  std::vector<IndexSet> blocks;
  std::size_t index = 0;
  for (const json& block : j) {
    const std::string where = "partition block #" + std::to_string(index + 1);
    if (!block.is_array()) throw ParseError(where + ": blocks must be arrays");
    IndexSet b;
    for (const json& e : block) {
      const std::size_t one_based = index_field(e, where);
      if (one_based > n) throw ParseError(where + ": index exceeds n");
      b.push_back(one_based - 1);
    }
    blocks.push_back(std::move(b));
    ++index;
  }
  try {
    return Partition(n, std::move(blocks));
  } catch (const Error& e) {
    throw ParseError(std::string("partition: ") + e.what());
  }
}

std::string vector_to_json(const Vec& x) { return json(x).dump(); }

std::string matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows.dump();
}

}  // namespace hypermaj
