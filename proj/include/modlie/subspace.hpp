#pragma once

#include <optional>

#include "modlie/matrix.hpp"

namespace modlie {

// A subspace of K^ambient, canonicalized to a reduced row-echelon basis on
// construction, so equality is structural.
class Subspace {
 public:
  Subspace() = default;
  Subspace(FieldSpec f, std::size_t ambient)
      : basis_(f, 0, ambient) {}

  // Rows of `vectors` span the subspace (dependent/zero rows are fine).
  static Subspace span(const Matrix& vectors);
  static Subspace span_vectors(const FieldSpec& f, std::size_t ambient,
                               const std::vector<Vec>& vectors);
  static Subspace full(FieldSpec f, std::size_t ambient) {
    return span(Matrix::identity(f, ambient));
  }

  const FieldSpec& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains_vector(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // Coordinates of v in the basis rows, when v lies in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersection(const Subspace& other) const;
  // Span of this plus one extra vector.
  Subspace extended(const Vec& v) const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  void check_compatible(const Subspace& other) const;
  Matrix basis_;  // RREF, no zero rows
};

struct SubspaceOps {
  Subspace sum;
  Subspace intersection;
  bool contains = false;  // every basis vector of b lies in a
};
SubspaceOps subspace_ops(const Subspace& a, const Subspace& b);

}  // namespace modlie
