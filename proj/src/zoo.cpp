#include "modlie/zoo.hpp"

#include "modlie/liecore.hpp"

namespace modlie::zoo {

bool binom_is_odd(unsigned long long n, unsigned long long k) {
  return k <= n && (k & (n - k)) == 0;
}

StructureAlgebra ess() {
  StructureAlgebra a = zassenhaus(2);
  return a;
}

StructureAlgebra zassenhaus(std::size_t n) {
  if (n < 2) throw InvalidParameter("Zassenhaus algebra needs n >= 2");
  if (n > 20) throw InvalidParameter("Zassenhaus parameter too large");
  long long top = (1LL << n) - 3;  // max basis degree
  std::size_t dim = static_cast<std::size_t>(1LL << n) - 1;
  std::vector<std::string> names;
  std::vector<long long> degrees;
  for (long long i = -1; i <= top; ++i) {
    names.push_back("e_" + std::to_string(i));
    degrees.push_back(i);
  }
  StructureAlgebra a(FieldSpec::gf2(), std::move(names));
  for (long long i = -1; i <= top; ++i)
    for (long long j = -1; j <= top; ++j) {
      long long s = i + j;
      if (s < -1 || s > top) continue;
      if (binom_is_odd(static_cast<unsigned long long>(s + 2),
                       static_cast<unsigned long long>(i + 1)))
        a.set_c_int(i + 1, j + 1, s + 1, 1);
    }
  a.set_grading(std::move(degrees));
  (void)dim;
  return a;
}

DividedPowers divided_powers(std::size_t n) {
  if (n < 1) throw InvalidParameter("divided powers algebra needs n >= 1");
  if (n > 20) throw InvalidParameter("divided powers parameter too large");
  std::size_t dim = std::size_t(1) << n;
  std::vector<std::string> names;
  std::vector<long long> degrees;
  for (std::size_t i = 0; i < dim; ++i) {
    names.push_back("x(" + std::to_string(i) + ")");
    degrees.push_back(static_cast<long long>(i));
  }
  DividedPowers out{StructureAlgebra(FieldSpec::gf2(), std::move(names)),
                    Matrix(FieldSpec::gf2(), dim, dim)};
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (i + j < dim && binom_is_odd(i + j, i)) out.algebra.set_c_int(i, j, i + j, 1);
  out.algebra.set_grading(std::move(degrees));
  for (std::size_t i = 1; i < dim; ++i) out.derivation.set_int(i - 1, i, 1);
  return out;
}

StructureAlgebra truncated_poly(std::size_t m, const FieldSpec& f) {
  if (m < 1) throw InvalidParameter("truncated polynomial algebra needs m >= 1");
  std::vector<std::string> names;
  std::vector<long long> degrees;
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back(i == 0 ? "1" : (i == 1 ? "t" : "t^" + std::to_string(i)));
    degrees.push_back(static_cast<long long>(i));
  }
  StructureAlgebra a(f, std::move(names));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i + j < m) a.set_c_int(i, j, i + j, 1);
  a.set_grading(std::move(degrees));
  return a;
}

StructureAlgebra truncated_poly(std::size_t m, unsigned p) {
  return truncated_poly(m, FieldSpec::gf(p));
}

namespace {

std::vector<std::string> tensor_names(const StructureAlgebra& a, const StructureAlgebra& b) {
  std::vector<std::string> names;
  names.reserve(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      names.push_back(a.basis_names()[i] + "(x)" + b.basis_names()[j]);
  return names;
}

void tensor_grading(const StructureAlgebra& a, const StructureAlgebra& b,
                    StructureAlgebra& out) {
  if (!a.grading() || !b.grading()) return;
  std::vector<long long> degrees;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      degrees.push_back((*a.grading())[i] + (*b.grading())[j]);
  out.set_grading(std::move(degrees));
}

void check_derivation(const StructureAlgebra& c, const Matrix& d) {
  if (d.rows() != c.dim() || d.cols() != c.dim() || d.field() != c.field())
    throw DimensionMismatch("derivation matrix shape/field mismatch");
  const FieldSpec& f = c.field();
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = 0; j < c.dim(); ++j) {
      Vec lhs = d.apply(c.basis_product(i, j));
      Vec rhs = add_vec(f,
                        c.product(d.apply(unit_vec(f, c.dim(), i)), unit_vec(f, c.dim(), j)),
                        c.product(unit_vec(f, c.dim(), i), d.apply(unit_vec(f, c.dim(), j))));
      if (lhs != rhs)
        throw NotADerivation("Leibniz fails on basis pair (" + std::to_string(i) +
                             "," + std::to_string(j) + ")");
    }
}

}  // namespace

StructureAlgebra koszul_bracket(const StructureAlgebra& a, const StructureAlgebra& b) {
  if (a.field() != b.field()) throw DimensionMismatch("tensor factors over different fields");
  const FieldSpec& f = a.field();
  std::size_t da = a.dim(), db = b.dim();
  StructureAlgebra out(f, tensor_names(a, b));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k < da; ++k)
      for (std::size_t j = 0; j < db; ++j)
        for (std::size_t l = 0; l < db; ++l) {
          std::size_t lhs = i * db + j, rhs = k * db + l;
          for (std::size_t m = 0; m < da; ++m) {
            const Scalar& cik = a.c(i, k, m);
            const Scalar& cki = a.c(k, i, m);
            if (cik.is_zero() && cki.is_zero()) continue;
            for (std::size_t n = 0; n < db; ++n) {
              Scalar term = f.sub(f.mul(cik, b.c(j, l, n)), f.mul(cki, b.c(l, j, n)));
              if (!term.is_zero()) {
                std::size_t tgt = m * db + n;
                out.set_c(lhs, rhs, tgt, f.add(out.c(lhs, rhs, tgt), term));
              }
            }
          }
        }
  tensor_grading(a, b, out);
  return out;
}

NovikovPair novikov_from_comm_der(const StructureAlgebra& c, const Matrix& d) {
  using liecore::Identity;
  if (!liecore::validate(c, Identity::commutative).pass ||
      !liecore::validate(c, Identity::associative).pass)
    throw InvalidParameter("Novikov construction needs a commutative associative algebra");
  check_derivation(c, d);
  const FieldSpec& f = c.field();
  std::size_t n = c.dim();
  NovikovPair out{StructureAlgebra(f, c.basis_names()), StructureAlgebra(f, c.basis_names())};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // e_i o e_j = e_i * d(e_j)
      Vec v = c.product(unit_vec(f, n, i), d.apply(unit_vec(f, n, j)));
      for (std::size_t k = 0; k < n; ++k) {
        out.left.set_c(i, j, k, v[k]);
        out.right.set_c(j, i, k, v[k]);
      }
    }
  return out;
}

StructureAlgebra current(const StructureAlgebra& l, const StructureAlgebra& a) {
  using liecore::Identity;
  if (!liecore::validate(l, Identity::lie).pass)
    throw InvalidParameter("current algebra needs a Lie first factor");
  if (!liecore::validate(a, Identity::commutative).pass ||
      !liecore::validate(a, Identity::associative).pass)
    throw InvalidParameter("current algebra needs a commutative associative second factor");
  const FieldSpec& f = l.field();
  if (f != a.field()) throw DimensionMismatch("tensor factors over different fields");
  std::size_t dl = l.dim(), da = a.dim();
  StructureAlgebra out(f, tensor_names(l, a));
  for (std::size_t i = 0; i < dl; ++i)
    for (std::size_t k = 0; k < dl; ++k)
      for (std::size_t m = 0; m < dl; ++m) {
        const Scalar& clik = l.c(i, k, m);
        if (clik.is_zero()) continue;
        for (std::size_t j = 0; j < da; ++j)
          for (std::size_t ll = 0; ll < da; ++ll)
            for (std::size_t nn = 0; nn < da; ++nn) {
              Scalar term = f.mul(clik, a.c(j, ll, nn));
              if (!term.is_zero())
                out.set_c(i * da + j, k * da + ll, m * da + nn,
                          f.add(out.c(i * da + j, k * da + ll, m * da + nn), term));
            }
      }
  tensor_grading(l, a, out);
  return out;
}

StructureAlgebra semidirect_current(const StructureAlgebra& s, const StructureAlgebra& a,
                                    const std::vector<Matrix>& dlist) {
  StructureAlgebra cur = current(s, a);
  if (dlist.empty()) return cur;
  const FieldSpec& f = s.field();
  std::size_t da = a.dim(), nd = dlist.size();
  std::size_t dcur = cur.dim(), dim = dcur + nd;

  for (const auto& d : dlist) check_derivation(a, d);
  // D must be closed under matrix commutator; find commutator coordinates by
  // solving against the flattened dlist.
  Matrix cols(f, da * da, nd);
  for (std::size_t b = 0; b < nd; ++b)
    for (std::size_t r = 0; r < da; ++r)
      for (std::size_t cc = 0; cc < da; ++cc)
        cols.set(r * da + cc, b, dlist[b].at(r, cc));
  auto dcoords = [&](const Matrix& m) {
    Vec flat(da * da);
    for (std::size_t r = 0; r < da; ++r)
      for (std::size_t cc = 0; cc < da; ++cc) flat[r * da + cc] = m.at(r, cc);
    auto sol = cols.solve(flat);
    if (!sol) throw NotASubalgebra("derivation list is not closed under commutator");
    return *sol;
  };

  std::vector<std::string> names = cur.basis_names();
  for (std::size_t p = 0; p < nd; ++p) names.push_back("d" + std::to_string(p));
  StructureAlgebra out(f, std::move(names));
  // current block
  for (std::size_t i = 0; i < dcur; ++i)
    for (std::size_t j = 0; j < dcur; ++j)
      for (std::size_t k = 0; k < dcur; ++k) out.set_c(i, j, k, cur.c(i, j, k));
  // [delta_p, x_i (x) f_j] = x_i (x) delta_p(f_j)
  for (std::size_t p = 0; p < nd; ++p)
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t j = 0; j < da; ++j)
        for (std::size_t n = 0; n < da; ++n) {
          Scalar v = dlist[p].at(n, j);
          if (v.is_zero()) continue;
          out.set_c(dcur + p, i * da + j, i * da + n, v);
          out.set_c(i * da + j, dcur + p, i * da + n, f.neg(v));
        }
  // [delta_p, delta_q]
  for (std::size_t p = 0; p < nd; ++p)
    for (std::size_t q = 0; q < nd; ++q) {
      if (p == q) continue;
      Vec coords = dcoords(dlist[p].mul(dlist[q]).sub(dlist[q].mul(dlist[p])));
      for (std::size_t r = 0; r < nd; ++r) out.set_c(dcur + p, dcur + q, dcur + r, coords[r]);
    }
  (void)dim;
  return out;
}

}  // namespace modlie::zoo
