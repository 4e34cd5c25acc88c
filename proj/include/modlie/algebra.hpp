#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "modlie/matrix.hpp"
#include "modlie/subspace.hpp"

namespace modlie {

// A finite-dimensional algebra given by structure constants: the product of
// basis elements i and j has coefficient c[i][j][k] on basis element k. Both
// (i,j) and (j,i) entries are materialized, so the same container carries
// Lie, associative, commutative and Novikov algebras; validators, not the
// storage, enforce identities.
class StructureAlgebra {
 public:
  StructureAlgebra() = default;
  StructureAlgebra(FieldSpec f, std::size_t dim);
  StructureAlgebra(FieldSpec f, std::vector<std::string> basis_names);

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  void set_basis_name(std::size_t i, std::string name) { names_[i] = std::move(name); }

  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  void set_c(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
    c_[(i * dim_ + j) * dim_ + k] = v;
  }
  void set_c_int(std::size_t i, std::size_t j, std::size_t k, long long v) {
    set_c(i, j, k, field_.of_int(v));
  }

  // Product of basis elements i and j as a coordinate vector.
  Vec basis_product(std::size_t i, std::size_t j) const;
  // Bilinear expansion through the structure constants.
  Vec product(const Vec& x, const Vec& y) const;

  // Left-multiplication operator x -> (y -> x*y); for a Lie algebra this is
  // ad(x) on basis element i.
  Matrix left_mul_matrix(const Vec& x) const;
  Matrix ad(std::size_t i) const;

  // Optional integer degree per basis element; brackets of graded algebras
  // respect the grading additively.
  const std::optional<std::vector<long long>>& grading() const { return grading_; }
  void set_grading(std::vector<long long> degrees);

  // {x : x*e_i = 0 = e_i*x for all i}
  Subspace center() const;

  // Structure constants of the algebra restricted to a product-closed
  // subspace, in the subspace's basis coordinates. Throws NotASubalgebra.
  StructureAlgebra restricted_to(const Subspace& s) const;

  bool operator==(const StructureAlgebra& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && c_ == o.c_;
  }

 private:
  FieldSpec field_ = FieldSpec::gf2();
  std::size_t dim_ = 0;
  std::vector<std::string> names_;
  std::vector<Scalar> c_;
  std::optional<std::vector<long long>> grading_;
};

// Structure-constant JSON format:
//   {"field": ..., "dim": d, "basis": [names],
//    "products": [[i, j, [[k, coeff], ...]], ...]}
// Omitted pairs mean zero product.
nlohmann::json algebra_to_json(const StructureAlgebra& a);
StructureAlgebra algebra_from_json(const nlohmann::json& j);

}  // namespace modlie
