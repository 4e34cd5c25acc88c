#include "modlie/subspace.hpp"

namespace modlie {

Subspace Subspace::span(const Matrix& vectors) {
  auto rr = vectors.rref();
  Subspace s;
  s.basis_ = rr.reduced.submatrix(0, 0, rr.rank, vectors.cols());
  return s;
}

Subspace Subspace::span_vectors(const FieldSpec& f, std::size_t ambient,
                                const std::vector<Vec>& vectors) {
  return span(Matrix::from_row_vectors(f, ambient, vectors));
}

bool Subspace::contains_vector(const Vec& v) const {
  if (v.size() != ambient_dim()) throw DimensionMismatch("vector/ambient mismatch");
  const FieldSpec& f = field();
  Vec r = v;
  for (std::size_t k = 0; k < dim(); ++k) {
    // Pivot column of row k is the first nonzero entry.
    std::size_t p = 0;
    while (p < ambient_dim() && basis_.at(k, p).is_zero()) ++p;
    if (p == ambient_dim()) continue;
    if (r[p].is_zero()) continue;
    Scalar c = r[p];  // pivot entry is 1 in RREF
    for (std::size_t j = p; j < ambient_dim(); ++j)
      r[j] = f.sub(r[j], f.mul(c, basis_.at(k, j)));
  }
  return is_zero_vec(r);
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_dim()) throw DimensionMismatch("vector/ambient mismatch");
  const FieldSpec& f = field();
  Vec r = v;
  Vec coords = zero_vec(f, dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    std::size_t p = 0;
    while (p < ambient_dim() && basis_.at(k, p).is_zero()) ++p;
    if (p == ambient_dim() || r[p].is_zero()) continue;
    Scalar c = r[p];
    coords[k] = c;
    for (std::size_t j = p; j < ambient_dim(); ++j)
      r[j] = f.sub(r[j], f.mul(c, basis_.at(k, j)));
  }
  if (!is_zero_vec(r)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Subspace& other) const {
  check_compatible(other);
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains_vector(other.basis_vector(i))) return false;
  return true;
}

void Subspace::check_compatible(const Subspace& other) const {
  if (field() != other.field() || ambient_dim() != other.ambient_dim())
    throw DimensionMismatch("subspaces live in different ambient spaces");
}

Subspace Subspace::sum(const Subspace& other) const {
  check_compatible(other);
  return span(basis_.vstack(other.basis_));
}

Subspace Subspace::intersection(const Subspace& other) const {
  check_compatible(other);
  // Zassenhaus: rref of [[A A], [B 0]]; rows with zero left half carry the
  // intersection in their right half.
  std::size_t d = ambient_dim();
  const FieldSpec& f = field();
  Matrix block(f, dim() + other.dim(), 2 * d);
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Scalar v = basis_.at(i, j);
      if (v.is_zero()) continue;
      block.set(i, j, v);
      block.set(i, d + j, v);
    }
  for (std::size_t i = 0; i < other.dim(); ++i)
    for (std::size_t j = 0; j < d; ++j) block.set(dim() + i, j, other.basis_.at(i, j));
  auto rr = block.rref();
  std::vector<Vec> inter;
  for (std::size_t i = 0; i < rr.rank; ++i) {
    if (rr.pivots[i] < d) continue;
    Vec v(d);
    for (std::size_t j = 0; j < d; ++j) v[j] = rr.reduced.at(i, d + j);
    inter.push_back(std::move(v));
  }
  return span_vectors(f, d, inter);
}

Subspace Subspace::extended(const Vec& v) const {
  Matrix one = Matrix::from_row_vectors(field(), ambient_dim(), {v});
  return span(basis_.vstack(one));
}

SubspaceOps subspace_ops(const Subspace& a, const Subspace& b) {
  SubspaceOps r;
  r.sum = a.sum(b);
  r.intersection = a.intersection(b);
  r.contains = a.contains(b);
  return r;
}

}  // namespace modlie
