#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "modlie/field.hpp"

namespace modlie {

using Vec = std::vector<Scalar>;

struct Rref;  // defined below Matrix

// Dense exact matrix. GF(2) entries are bit-packed into machine words per
// row; GF(p>2) entries are bytes; rational entries are exact fractions.
class Matrix {
 public:
  Matrix() : Matrix(FieldSpec::gf2(), 0, 0) {}
  Matrix(FieldSpec f, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldSpec f, std::size_t n);
  // Convenience: build from integer literals (reduced into the field).
  static Matrix from_rows(FieldSpec f,
                          std::initializer_list<std::initializer_list<long long>> rows);
  static Matrix from_row_vectors(FieldSpec f, std::size_t cols,
                                 const std::vector<Vec>& rows);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& v);
  void set_int(std::size_t i, std::size_t j, long long v) { set(i, j, field_.of_int(v)); }
  void add_at(std::size_t i, std::size_t j, const Scalar& v);

  Vec row(std::size_t i) const;
  void set_row(std::size_t i, const Vec& v);

  Matrix add(const Matrix& o) const;
  Matrix sub(const Matrix& o) const;
  Matrix mul(const Matrix& o) const;
  Matrix scale(const Scalar& s) const;
  Matrix transpose() const;
  Vec apply(const Vec& x) const;  // M x

  Matrix vstack(const Matrix& below) const;
  Matrix hstack(const Matrix& right) const;
  Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  Rref rref() const;

  // Rows of the result form an RREF basis of {x : M x = 0}.
  Matrix kernel_basis() const;
  std::size_t rank() const;

  // One solution of M x = rhs, or nullopt when inconsistent.
  std::optional<Vec> solve(const Vec& rhs) const;
  Matrix inverse() const;  // throws InvalidParameter when singular

  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  enum class Rep { gf2, gfp, rat };

  std::size_t words() const { return (cols_ + 63) / 64; }
  bool bit(std::size_t i, std::size_t j) const {
    return (bits_[i * words() + j / 64] >> (j % 64)) & 1u;
  }
  void put_bit(std::size_t i, std::size_t j, bool v) {
    std::uint64_t& w = bits_[i * words() + j / 64];
    std::uint64_t m = std::uint64_t(1) << (j % 64);
    if (v)
      w |= m;
    else
      w &= ~m;
  }
  void xor_row(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);

  Rref rref_gf2() const;

  FieldSpec field_;
  std::size_t rows_ = 0, cols_ = 0;
  Rep rep_ = Rep::gf2;
  std::vector<std::uint64_t> bits_;  // gf2
  std::vector<std::uint8_t> bytes_;  // gfp, p > 2
  std::vector<Rational> rats_;       // Q
};

struct Rref {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

// Small helpers on coordinate vectors.
Vec zero_vec(const FieldSpec& f, std::size_t n);
Vec unit_vec(const FieldSpec& f, std::size_t n, std::size_t i);
Vec add_vec(const FieldSpec& f, const Vec& a, const Vec& b);
Vec sub_vec(const FieldSpec& f, const Vec& a, const Vec& b);
Vec scale_vec(const FieldSpec& f, const Scalar& s, const Vec& a);
bool is_zero_vec(const Vec& a);

}  // namespace modlie
