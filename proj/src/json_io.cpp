#include "modlie/json_io.hpp"

#include <cstdint>
#include <limits>

namespace modlie {

using nlohmann::json;

json scalar_to_json(const FieldSpec& f, const Scalar& s) {
  if (f.is_prime_field()) return s.rep();
  const Rational& q = s.rat();
  if (denominator(q) == 1) {
    // Small integers stay numeric when they fit.
    auto n = numerator(q);
    if (n >= std::numeric_limits<std::int64_t>::min() &&
        n <= std::numeric_limits<std::int64_t>::max())
      return n.convert_to<std::int64_t>();
  }
  return q.str();
}

Scalar scalar_from_json(const FieldSpec& f, const json& j) {
  if (j.is_number_integer()) return f.of_int(j.get<std::int64_t>());
  if (j.is_string()) {
    Rational q(j.get<std::string>());
    return f.of_rational(q);
  }
  throw ParseError("scalar must be an integer or an \"a/b\" string");
}

json matrix_to_json(const Matrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(scalar_to_json(m.field(), m.at(i, j)));
    entries.push_back(std::move(row));
  }
  return json{{"field", m.field().name()},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const json& j) {
  FieldSpec f = FieldSpec::parse(j.at("field").get<std::string>());
  std::size_t rows = j.at("rows").get<std::size_t>();
  std::size_t cols = j.at("cols").get<std::size_t>();
  const json& entries = j.at("entries");
  if (entries.size() != rows) throw ParseError("matrix entries row count mismatch");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (entries[i].size() != cols) throw ParseError("matrix entries col count mismatch");
    for (std::size_t k = 0; k < cols; ++k)
      m.set(i, k, scalar_from_json(f, entries[i][k]));
  }
  return m;
}

json subspace_to_json(const Subspace& s) {
  json basis = json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < s.ambient_dim(); ++j)
      row.push_back(scalar_to_json(s.field(), s.basis().at(i, j)));
    basis.push_back(std::move(row));
  }
  return json{{"field", s.field().name()},
              {"ambient_dim", s.ambient_dim()},
              {"basis", std::move(basis)}};
}

Subspace subspace_from_json(const json& j) {
  FieldSpec f = FieldSpec::parse(j.at("field").get<std::string>());
  std::size_t ambient = j.at("ambient_dim").get<std::size_t>();
  const json& basis = j.at("basis");
  Matrix m(f, basis.size(), ambient);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].size() != ambient) throw ParseError("subspace basis width mismatch");
    for (std::size_t k = 0; k < ambient; ++k)
      m.set(i, k, scalar_from_json(f, basis[i][k]));
  }
  return Subspace::span(m);
}

}  // namespace modlie
