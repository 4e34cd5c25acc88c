#include "modlie/algebra.hpp"

#include "modlie/json_io.hpp"

namespace modlie {

using nlohmann::json;

StructureAlgebra::StructureAlgebra(FieldSpec f, std::size_t dim)
    : field_(f), dim_(dim), c_(dim * dim * dim, f.zero()) {
  names_.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) names_[i] = "b" + std::to_string(i);
}

StructureAlgebra::StructureAlgebra(FieldSpec f, std::vector<std::string> basis_names)
    : StructureAlgebra(f, basis_names.size()) {
  names_ = std::move(basis_names);
}

Vec StructureAlgebra::basis_product(std::size_t i, std::size_t j) const {
  Vec v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = c(i, j, k);
  return v;
}

Vec StructureAlgebra::product(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw DimensionMismatch("product operand length != algebra dim");
  Vec out = zero_vec(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar f = field_.mul(x[i], y[j]);
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& ck = c(i, j, k);
        if (!ck.is_zero()) out[k] = field_.add(out[k], field_.mul(f, ck));
      }
    }
  }
  return out;
}

Matrix StructureAlgebra::left_mul_matrix(const Vec& x) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = product(x, unit_vec(field_, dim_, j));
    for (std::size_t k = 0; k < dim_; ++k)
      if (!col[k].is_zero()) m.set(k, j, col[k]);
  }
  return m;
}

Matrix StructureAlgebra::ad(std::size_t i) const {
  return left_mul_matrix(unit_vec(field_, dim_, i));
}

void StructureAlgebra::set_grading(std::vector<long long> degrees) {
  if (degrees.size() != dim_) throw DimensionMismatch("grading length != dim");
  grading_ = std::move(degrees);
}

Subspace StructureAlgebra::center() const {
  if (dim_ == 0) return Subspace(field_, 0);
  // x is central iff L_{e_i}(x)... we need x*e_i = 0 and e_i*x = 0; stack the
  // right- and left-multiplication constraints for every basis element.
  Matrix stacked(field_, 2 * dim_ * dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        // row block for (x * e_i): coefficient of x_j is c(j, i, k)
        stacked.set((2 * i) * dim_ + k, j, c(j, i, k));
        // row block for (e_i * x): coefficient of x_j is c(i, j, k)
        stacked.set((2 * i + 1) * dim_ + k, j, c(i, j, k));
      }
  }
  return Subspace::span(stacked.kernel_basis());
}

StructureAlgebra StructureAlgebra::restricted_to(const Subspace& s) const {
  if (s.ambient_dim() != dim_ || s.field() != field_)
    throw DimensionMismatch("subspace does not live in this algebra");
  StructureAlgebra r(field_, s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      Vec p = product(s.basis_vector(i), s.basis_vector(j));
      auto coords = s.coordinates(p);
      if (!coords)
        throw NotASubalgebra("subspace is not closed under the product (basis pair " +
                             std::to_string(i) + "," + std::to_string(j) + ")");
      for (std::size_t k = 0; k < s.dim(); ++k) r.set_c(i, j, k, (*coords)[k]);
    }
  return r;
}

json algebra_to_json(const StructureAlgebra& a) {
  json products = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      json terms = json::array();
      for (std::size_t k = 0; k < a.dim(); ++k) {
        const Scalar& v = a.c(i, j, k);
        if (!v.is_zero()) terms.push_back(json::array({k, scalar_to_json(a.field(), v)}));
      }
      if (!terms.empty()) products.push_back(json::array({i, j, std::move(terms)}));
    }
  json out{{"field", a.field().name()},
           {"dim", a.dim()},
           {"basis", a.basis_names()},
           {"products", std::move(products)}};
  if (a.grading()) out["grading"] = *a.grading();
  return out;
}

StructureAlgebra algebra_from_json(const json& j) {
  FieldSpec f = FieldSpec::parse(j.at("field").get<std::string>());
  std::size_t dim = j.at("dim").get<std::size_t>();
  StructureAlgebra a(f, dim);
  if (j.contains("basis")) {
    auto names = j.at("basis").get<std::vector<std::string>>();
    if (names.size() != dim) throw ParseError("basis name count != dim");
    for (std::size_t i = 0; i < dim; ++i) a.set_basis_name(i, names[i]);
  }
  for (const auto& entry : j.at("products")) {
    std::size_t i = entry.at(0).get<std::size_t>();
    std::size_t jj = entry.at(1).get<std::size_t>();
    if (i >= dim || jj >= dim) throw ParseError("product index out of range");
    for (const auto& term : entry.at(2)) {
      std::size_t k = term.at(0).get<std::size_t>();
      if (k >= dim) throw ParseError("product target index out of range");
      a.set_c(i, jj, k, scalar_from_json(f, term.at(1)));
    }
  }
  if (j.contains("grading"))
    a.set_grading(j.at("grading").get<std::vector<long long>>());
  return a;
}

}  // namespace modlie
