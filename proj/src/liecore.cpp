#include "modlie/liecore.hpp"

namespace modlie::liecore {

namespace {

// Product of the opposite algebra, for the right-Novikov checks.
Vec opp_product(const StructureAlgebra& a, const Vec& x, const Vec& y) {
  return a.product(y, x);
}

}  // namespace

Identity identity_from_string(const std::string& s) {
  if (s == "lie") return Identity::lie;
  if (s == "associative") return Identity::associative;
  if (s == "commutative") return Identity::commutative;
  if (s == "left-novikov") return Identity::left_novikov;
  if (s == "right-novikov") return Identity::right_novikov;
  throw UnsupportedIdentity("unknown identity tag: " + s);
}

std::string identity_name(Identity id) {
  switch (id) {
    case Identity::lie: return "lie";
    case Identity::associative: return "associative";
    case Identity::commutative: return "commutative";
    case Identity::left_novikov: return "left-novikov";
    default: return "right-novikov";
  }
}

std::string ValidationReport::describe(const StructureAlgebra& a) const {
  if (pass) return "pass";
  auto name = [&](std::size_t i) { return a.basis_names()[i]; };
  return "fail: " + law + " at (" + name(witness[0]) + ", " + name(witness[1]) +
         ", " + name(witness[2]) + ")";
}

ValidationReport validate(const StructureAlgebra& a, Identity id) {
  const FieldSpec& f = a.field();
  std::size_t d = a.dim();
  ValidationReport rep;
  auto fail = [&](std::size_t i, std::size_t j, std::size_t k, const char* law) {
    rep.pass = false;
    rep.witness[0] = i;
    rep.witness[1] = j;
    rep.witness[2] = k;
    rep.law = law;
    return rep;
  };

  auto ei = [&](std::size_t i) { return unit_vec(f, d, i); };

  switch (id) {
    case Identity::lie: {
      for (std::size_t i = 0; i < d; ++i)
        if (!is_zero_vec(a.basis_product(i, i)))
          return fail(i, i, i, "alternation x*x = 0");
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
          if (!is_zero_vec(add_vec(f, a.basis_product(i, j),
                                   a.basis_product(j, i))))
            return fail(i, j, j, "anticommutativity");
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
          for (std::size_t k = j + 1; k < d; ++k) {
            Vec s = a.product(a.basis_product(i, j), ei(k));
            s = add_vec(f, s, a.product(a.basis_product(j, k), ei(i)));
            s = add_vec(f, s, a.product(a.basis_product(k, i), ei(j)));
            if (!is_zero_vec(s)) return fail(i, j, k, "Jacobi identity");
          }
      return rep;
    }
    case Identity::associative: {
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t k = 0; k < d; ++k) {
            Vec lhs = a.product(a.basis_product(i, j), ei(k));
            Vec rhs = a.product(ei(i), a.basis_product(j, k));
            if (lhs != rhs) return fail(i, j, k, "associativity");
          }
      return rep;
    }
    case Identity::commutative: {
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
          if (a.basis_product(i, j) != a.basis_product(j, i))
            return fail(i, j, j, "commutativity");
      return rep;
    }
    case Identity::left_novikov:
    case Identity::right_novikov: {
      // Left Novikov: left-symmetric associator plus right-commutativity.
      // Right Novikov: the same identities in the opposite algebra.
      bool opp = (id == Identity::right_novikov);
      auto prod = [&](const Vec& x, const Vec& y) {
        return opp ? opp_product(a, x, y) : a.product(x, y);
      };
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t k = 0; k < d; ++k) {
            Vec x = ei(i), y = ei(j), z = ei(k);
            // (x y) z - x (y z) = (y x) z - y (x z)
            Vec lhs = sub_vec(f, prod(prod(x, y), z), prod(x, prod(y, z)));
            Vec rhs = sub_vec(f, prod(prod(y, x), z), prod(y, prod(x, z)));
            if (lhs != rhs) return fail(i, j, k, "left-symmetric associator");
            // (x y) z = (x z) y
            if (prod(prod(x, y), z) != prod(prod(x, z), y))
              return fail(i, j, k, "right-commutativity");
          }
      return rep;
    }
  }
  throw UnsupportedIdentity("unknown identity");
}

bool is_lie(const StructureAlgebra& a) { return validate(a, Identity::lie).pass; }

Vec bracket(const StructureAlgebra& a, const Vec& x, const Vec& y) {
  if (x.size() != a.dim() || y.size() != a.dim())
    throw DimensionMismatch("bracket operand length != algebra dim");
  return a.product(x, y);
}

Subspace subalgebra_closure(const StructureAlgebra& a, const std::vector<Vec>& generators) {
  if (generators.empty()) throw InvalidParameter("closure needs at least one generator");
  Subspace s = Subspace::span_vectors(a.field(), a.dim(), generators);
  for (;;) {
    std::vector<Vec> extra;
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t j = 0; j < s.dim(); ++j) {
        Vec p = a.product(s.basis_vector(i), s.basis_vector(j));
        if (!s.contains_vector(p)) extra.push_back(std::move(p));
      }
    if (extra.empty()) return s;
    for (auto& v : extra) s = s.extended(v);
  }
}

namespace {

Subspace bracket_span(const StructureAlgebra& a, const Subspace& u, const Subspace& v) {
  std::vector<Vec> prods;
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j)
      prods.push_back(a.product(u.basis_vector(i), v.basis_vector(j)));
  return Subspace::span_vectors(a.field(), a.dim(), prods);
}

}  // namespace

SeriesReport series(const StructureAlgebra& a, const Subspace& on, SeriesKind kind) {
  // Closure check first.
  for (std::size_t i = 0; i < on.dim(); ++i)
    for (std::size_t j = 0; j < on.dim(); ++j)
      if (!on.contains_vector(a.product(on.basis_vector(i), on.basis_vector(j))))
        throw NotASubalgebra("series: subspace is not closed under the product");

  SeriesReport rep;
  rep.kind = kind;
  rep.terms.push_back(on);
  // Dims strictly decrease, so dim+1 steps bound the loop.
  for (std::size_t step = 0; step <= a.dim(); ++step) {
    const Subspace& cur = rep.terms.back();
    Subspace next = (kind == SeriesKind::derived) ? bracket_span(a, cur, cur)
                                                  : bracket_span(a, on, cur);
    if (next == cur) break;
    rep.terms.push_back(std::move(next));
    if (rep.terms.back().is_zero()) break;
  }
  rep.stabilized = true;
  if (rep.terms.back().is_zero()) rep.index = rep.terms.size() - 1;
  return rep;
}

bool is_nilpotent(const StructureAlgebra& a, const Subspace& on,
                  std::optional<std::size_t>* index_out) {
  SeriesReport rep = series(a, on, SeriesKind::lower_central);
  if (index_out) *index_out = rep.index;
  return rep.index.has_value();
}

bool is_solvable(const StructureAlgebra& a) {
  return series(a, Subspace::full(a.field(), a.dim()), SeriesKind::derived)
      .index.has_value();
}

namespace {

Vec flatten(const Matrix& m) {
  Vec v(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m.at(i, j);
  return v;
}

Matrix unflatten(const FieldSpec& f, std::size_t d, const Vec& v) {
  Matrix m(f, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m.set(i, j, v[i * d + j]);
  return m;
}

Matrix commutator(const Matrix& x, const Matrix& y) {
  return x.mul(y).sub(y.mul(x));
}

// Coordinates of `target` in the (independent) matrix list `basis`.
Vec matrix_coords(const std::vector<Matrix>& basis, const Matrix& target) {
  const FieldSpec& f = target.field();
  std::size_t n = basis.size();
  std::size_t len = target.rows() * target.cols();
  Matrix cols(f, len, n);
  for (std::size_t b = 0; b < n; ++b) {
    Vec fb = flatten(basis[b]);
    for (std::size_t r = 0; r < len; ++r) cols.set(r, b, fb[r]);
  }
  auto sol = cols.solve(flatten(target));
  if (!sol) throw NotASubalgebra("matrix space not closed");
  return *sol;
}

// Lie algebra structure constants of a commutator-closed matrix list.
StructureAlgebra matrix_lie_algebra(const FieldSpec& f, const std::vector<Matrix>& basis,
                                    const std::vector<std::string>& names) {
  StructureAlgebra alg(f, names);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      Vec coords = matrix_coords(basis, commutator(basis[i], basis[j]));
      for (std::size_t k = 0; k < basis.size(); ++k) alg.set_c(i, j, k, coords[k]);
    }
  return alg;
}

}  // namespace

DerivationAlgebra derivations(const StructureAlgebra& a) {
  const FieldSpec& f = a.field();
  std::size_t d = a.dim();
  // Unknowns: D[r][s], flattened row-major. One equation block per ordered
  // basis pair (i,j) and output coordinate k:
  //   sum_m c(i,j,m) D[k][m] - sum_r D[r][i] c(r,j,k) - sum_r D[r][j] c(i,r,k) = 0
  Matrix eqs(f, d * d * d, d * d);
  std::size_t row = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k, ++row) {
        for (std::size_t m = 0; m < d; ++m)
          eqs.add_at(row, k * d + m, a.c(i, j, m));
        for (std::size_t r = 0; r < d; ++r) {
          eqs.add_at(row, r * d + i, f.neg(a.c(r, j, k)));
          eqs.add_at(row, r * d + j, f.neg(a.c(i, r, k)));
        }
      }
  Matrix kb = eqs.kernel_basis();
  DerivationAlgebra out;
  std::vector<std::string> names;
  for (std::size_t b = 0; b < kb.rows(); ++b) {
    out.matrices.push_back(unflatten(f, d, kb.row(b)));
    names.push_back("D" + std::to_string(b));
  }
  out.algebra = matrix_lie_algebra(f, out.matrices, names);
  return out;
}

TwoEnvelope two_envelope(const StructureAlgebra& a) {
  const FieldSpec& f = a.field();
  if (f.characteristic() != 2)
    throw WrongCharacteristic("2-envelope requires characteristic 2");
  if (!a.center().is_zero())
    throw UnsupportedCenter("2-envelope realization needs a centerless algebra");

  std::size_t d = a.dim();
  std::vector<Matrix> mats;
  std::vector<std::string> names;
  Subspace span(f, d * d);
  auto try_add = [&](const Matrix& m, const std::string& name) {
    Vec fm = flatten(m);
    if (span.contains_vector(fm)) return false;
    span = span.extended(fm);
    mats.push_back(m);
    names.push_back(name);
    return true;
  };

  for (std::size_t i = 0; i < d; ++i) try_add(a.ad(i), a.basis_names()[i]);
  // Close under squaring and commutators; the list grows in place, so a
  // simple scan-until-stable covers iterated squares.
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < mats.size(); ++i) {
      if (try_add(mats[i].mul(mats[i]), names[i] + "^[2]")) grew = true;
      for (std::size_t j = 0; j < i; ++j)
        if (try_add(commutator(mats[i], mats[j]),
                    "[" + names[i] + "," + names[j] + "]"))
          grew = true;
    }
  }

  TwoEnvelope env;
  env.basis_matrices = mats;
  env.envelope = matrix_lie_algebra(f, mats, names);
  env.embedding = Matrix(f, d, mats.size());
  for (std::size_t i = 0; i < d; ++i) {
    Vec coords = matrix_coords(mats, a.ad(i));
    for (std::size_t k = 0; k < mats.size(); ++k) env.embedding.set(i, k, coords[k]);
  }
  for (const auto& m : mats) env.square_map.push_back(matrix_coords(mats, m.mul(m)));
  return env;
}

}  // namespace modlie::liecore
