#include "modlie/matrix.hpp"

#include <algorithm>
#include <utility>

namespace modlie {

Matrix::Matrix(FieldSpec f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols) {
  if (f.is_gf2()) {
    rep_ = Rep::gf2;
    bits_.assign(rows * words(), 0);
  } else if (f.is_prime_field()) {
    rep_ = Rep::gfp;
    bytes_.assign(rows * cols, 0);
  } else {
    rep_ = Rep::rat;
    rats_.assign(rows * cols, Rational(0));
  }
}

Matrix Matrix::identity(FieldSpec f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, f.one());
  return m;
}

Matrix Matrix::from_rows(FieldSpec f,
                         std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t nr = rows.size();
  std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
  Matrix m(f, nr, nc);
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != nc) throw DimensionMismatch("ragged row list");
    std::size_t j = 0;
    for (long long v : r) m.set_int(i, j++, v);
    ++i;
  }
  return m;
}

Matrix Matrix::from_row_vectors(FieldSpec f, std::size_t cols,
                                const std::vector<Vec>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("row length mismatch");
    m.set_row(i, rows[i]);
  }
  return m;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
  switch (rep_) {
    case Rep::gf2:
      return Scalar::prime_rep(bit(i, j) ? 1 : 0);
    case Rep::gfp:
      return Scalar::prime_rep(bytes_[i * cols_ + j]);
    default:
      return Scalar::rational(rats_[i * cols_ + j]);
  }
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
  switch (rep_) {
    case Rep::gf2:
      put_bit(i, j, v.rep() != 0);
      break;
    case Rep::gfp:
      bytes_[i * cols_ + j] = static_cast<std::uint8_t>(v.rep());
      break;
    default:
      rats_[i * cols_ + j] = v.rat();
  }
}

void Matrix::add_at(std::size_t i, std::size_t j, const Scalar& v) {
  set(i, j, field_.add(at(i, j), v));
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  for (std::size_t j = 0; j < cols_; ++j) set(i, j, v[j]);
}

void Matrix::xor_row(std::size_t dst, std::size_t src) {
  std::size_t w = words();
  for (std::size_t k = 0; k < w; ++k) bits_[dst * w + k] ^= bits_[src * w + k];
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  switch (rep_) {
    case Rep::gf2: {
      std::size_t w = words();
      for (std::size_t k = 0; k < w; ++k) std::swap(bits_[a * w + k], bits_[b * w + k]);
      break;
    }
    case Rep::gfp:
      for (std::size_t j = 0; j < cols_; ++j)
        std::swap(bytes_[a * cols_ + j], bytes_[b * cols_ + j]);
      break;
    default:
      for (std::size_t j = 0; j < cols_; ++j)
        std::swap(rats_[a * cols_ + j], rats_[b * cols_ + j]);
  }
}

Matrix Matrix::add(const Matrix& o) const {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("matrix add shape/field mismatch");
  Matrix r = *this;
  if (rep_ == Rep::gf2) {
    for (std::size_t k = 0; k < bits_.size(); ++k) r.bits_[k] ^= o.bits_[k];
    return r;
  }
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      r.set(i, j, field_.add(at(i, j), o.at(i, j)));
  return r;
}

Matrix Matrix::sub(const Matrix& o) const {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("matrix sub shape/field mismatch");
  if (rep_ == Rep::gf2) return add(o);
  Matrix r = *this;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      r.set(i, j, field_.sub(at(i, j), o.at(i, j)));
  return r;
}

Matrix Matrix::scale(const Scalar& s) const {
  Matrix r = *this;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, field_.mul(at(i, j), s));
  return r;
}

Matrix Matrix::mul(const Matrix& o) const {
  if (field_ != o.field_) throw DimensionMismatch("matrix mul field mismatch");
  if (cols_ != o.rows_) throw DimensionMismatch("matrix mul shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  if (rep_ == Rep::gf2) {
    std::size_t rw = r.words(), ow = o.words();
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (bit(i, j))
          for (std::size_t k = 0; k < ow; ++k)
            r.bits_[i * rw + k] ^= o.bits_[j * ow + k];
    return r;
  }
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      Scalar a = at(i, j);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < o.cols_; ++k) {
        Scalar t = field_.mul(a, o.at(j, k));
        if (!t.is_zero()) r.set(i, k, field_.add(r.at(i, k), t));
      }
    }
  return r;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw DimensionMismatch("matrix apply length mismatch");
  Vec y = zero_vec(field_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      Scalar a = at(i, j);
      if (!a.is_zero()) y[i] = field_.add(y[i], field_.mul(a, x[j]));
    }
  }
  return y;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      Scalar v = at(i, j);
      if (!v.is_zero()) r.set(j, i, v);
    }
  return r;
}

Matrix Matrix::vstack(const Matrix& below) const {
  if (field_ != below.field_ || cols_ != below.cols_)
    throw DimensionMismatch("vstack mismatch");
  Matrix r(field_, rows_ + below.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
  for (std::size_t i = 0; i < below.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(rows_ + i, j, below.at(i, j));
  return r;
}

Matrix Matrix::hstack(const Matrix& right) const {
  if (field_ != right.field_ || rows_ != right.rows_)
    throw DimensionMismatch("hstack mismatch");
  Matrix r(field_, rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
    for (std::size_t j = 0; j < right.cols_; ++j) r.set(i, cols_ + j, right.at(i, j));
  }
  return r;
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr,
                         std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("submatrix out of range");
  Matrix r(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) r.set(i, j, at(r0 + i, c0 + j));
  return r;
}

Rref Matrix::rref_gf2() const {
  Rref res{*this, 0, {}};
  Matrix& m = res.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = rows_;
    for (std::size_t i = r; i < rows_; ++i)
      if (m.bit(i, c)) {
        piv = i;
        break;
      }
    if (piv == rows_) continue;
    m.swap_rows(r, piv);
    for (std::size_t i = 0; i < rows_; ++i)
      if (i != r && m.bit(i, c)) m.xor_row(i, r);
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

Rref Matrix::rref() const {
  if (rep_ == Rep::gf2) return rref_gf2();
  Rref res{*this, 0, {}};
  Matrix& m = res.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = rows_;
    for (std::size_t i = r; i < rows_; ++i)
      if (!m.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv == rows_) continue;
    m.swap_rows(r, piv);
    Scalar ipiv = field_.inv(m.at(r, c));
    for (std::size_t j = c; j < cols_; ++j)
      m.set(r, j, field_.mul(ipiv, m.at(r, j)));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      Scalar f = m.at(i, c);
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < cols_; ++j)
        m.set(i, j, field_.sub(m.at(i, j), field_.mul(f, m.at(r, j))));
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t Matrix::rank() const { return rref().rank; }

Matrix Matrix::kernel_basis() const {
  Rref rr = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  Matrix out(field_, cols_ - rr.rank, cols_);
  std::size_t row_idx = 0;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    out.set(row_idx, f, field_.one());
    for (std::size_t k = 0; k < rr.rank; ++k) {
      Scalar v = rr.reduced.at(k, f);
      if (!v.is_zero()) out.set(row_idx, rr.pivots[k], field_.neg(v));
    }
    ++row_idx;
  }
  // Canonicalize so kernels compare structurally.
  return out.rref().reduced.submatrix(0, 0, out.rows(), cols_);
}

std::optional<Vec> Matrix::solve(const Vec& rhs) const {
  if (rhs.size() != rows_) throw DimensionMismatch("solve rhs length mismatch");
  Matrix aug(field_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
    aug.set(i, cols_, rhs[i]);
  }
  Rref rr = aug.rref();
  Vec x = zero_vec(field_, cols_);
  for (std::size_t k = 0; k < rr.rank; ++k) {
    if (rr.pivots[k] == cols_) return std::nullopt;  // inconsistent
    x[rr.pivots[k]] = rr.reduced.at(k, cols_);
  }
  return x;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw DimensionMismatch("inverse of non-square matrix");
  Matrix aug = hstack(identity(field_, rows_));
  Rref rr = aug.rref();
  if (rr.rank < rows_) throw InvalidParameter("matrix is singular");
  for (std::size_t k = 0; k < rows_; ++k)
    if (rr.pivots[k] != k) throw InvalidParameter("matrix is singular");
  return rr.reduced.submatrix(0, cols_, rows_, cols_);
}

bool Matrix::is_zero() const {
  switch (rep_) {
    case Rep::gf2:
      for (auto w : bits_)
        if (w) return false;
      return true;
    case Rep::gfp:
      for (auto b : bytes_)
        if (b) return false;
      return true;
    default:
      for (const auto& q : rats_)
        if (q != 0) return false;
      return true;
  }
}

bool Matrix::operator==(const Matrix& o) const {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
  switch (rep_) {
    case Rep::gf2:
      return bits_ == o.bits_;
    case Rep::gfp:
      return bytes_ == o.bytes_;
    default:
      return rats_ == o.rats_;
  }
}

Vec zero_vec(const FieldSpec& f, std::size_t n) { return Vec(n, f.zero()); }

Vec unit_vec(const FieldSpec& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v[i] = f.one();
  return v;
}

Vec add_vec(const FieldSpec& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector add length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vec sub_vec(const FieldSpec& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sub length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

Vec scale_vec(const FieldSpec& f, const Scalar& s, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(s, a[i]);
  return r;
}

bool is_zero_vec(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace modlie
