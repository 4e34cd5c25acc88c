#include "modlie/cohomology.hpp"

#include <algorithm>

#include "modlie/liecore.hpp"
#include "modlie/zoo.hpp"

namespace modlie::cohomology {

Flavor flavor_from_string(const std::string& s) {
  if (s == "alternating") return Flavor::alternating;
  if (s == "symmetric") return Flavor::symmetric;
  throw InvalidParameter("unknown cochain flavor: " + s);
}

const char* flavor_name(Flavor f) {
  return f == Flavor::alternating ? "alternating" : "symmetric";
}

CoefficientModule CoefficientModule::trivial(const StructureAlgebra& l) {
  return CoefficientModule{1, std::vector<Matrix>(l.dim(), Matrix(l.field(), 1, 1))};
}

CoefficientModule CoefficientModule::adjoint(const StructureAlgebra& l) {
  std::vector<Matrix> action;
  action.reserve(l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i) action.push_back(l.ad(i));
  return CoefficientModule{l.dim(), std::move(action)};
}

CoefficientModule CoefficientModule::from_action(const StructureAlgebra& l,
                                                 std::vector<Matrix> action) {
  if (action.size() != l.dim())
    throw DimensionMismatch("need one action matrix per basis element");
  const FieldSpec& f = l.field();
  std::size_t md = action.empty() ? 0 : action[0].rows();
  for (const auto& a : action)
    if (a.rows() != md || a.cols() != md || a.field() != f)
      throw DimensionMismatch("action matrices must be square, equal-sized, same field");
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j) {
      Matrix lhs(f, md, md);
      for (std::size_t k = 0; k < l.dim(); ++k) {
        const Scalar& c = l.c(i, j, k);
        if (!c.is_zero()) lhs = lhs.add(action[k].scale(c));
      }
      Matrix rhs = action[i].mul(action[j]).sub(action[j].mul(action[i]));
      if (!(lhs == rhs))
        throw NotARepresentation("rho([e_" + std::to_string(i) + ",e_" +
                                 std::to_string(j) + "]) != [rho,rho]");
    }
  return CoefficientModule{md, std::move(action)};
}

namespace {

void enumerate(std::size_t d, std::size_t n, bool strict, std::size_t start,
               std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t v = start; v < d; ++v) {
    cur.push_back(v);
    enumerate(d, n, strict, strict ? v + 1 : v, cur, out);
    cur.pop_back();
  }
}

// Sorts `t` in place, toggling `negate` once per transposition. Returns
// false when the term vanishes (repeated entry, alternating flavor).
bool normalize(std::vector<std::size_t>& t, Flavor flavor, bool& negate) {
  for (std::size_t i = 1; i < t.size(); ++i)
    for (std::size_t j = i; j > 0 && t[j] < t[j - 1]; --j) {
      std::swap(t[j], t[j - 1]);
      negate = !negate;
    }
  if (flavor == Flavor::alternating)
    for (std::size_t i = 1; i < t.size(); ++i)
      if (t[i] == t[i - 1]) return false;
  return true;
}

void require_valid(const StructureAlgebra& l, const CoefficientModule& m,
                   Flavor flavor) {
  if (flavor == Flavor::symmetric && l.field().characteristic() != 2)
    throw WrongCharacteristic("symmetric cochains are defined in characteristic 2");
  if (!liecore::validate(l, liecore::Identity::lie).pass)
    throw InvalidParameter("cohomology needs a Lie algebra");
  if (m.action.size() != l.dim())
    throw DimensionMismatch("coefficient module does not match the algebra");
  for (const auto& a : m.action)
    if (a.rows() != m.dim || a.cols() != m.dim || a.field() != l.field())
      throw DimensionMismatch("coefficient module action matrices malformed");
}

}  // namespace

std::size_t CochainSpace::tuple_index(const std::vector<std::size_t>& t) const {
  auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
  if (it == tuples.end() || *it != t)
    throw InvalidParameter("tuple is not in the canonical basis");
  return static_cast<std::size_t>(it - tuples.begin());
}

CochainSpace cochain_space(const StructureAlgebra& l, const CoefficientModule& m,
                           std::size_t degree, Flavor flavor) {
  CochainSpace s{flavor, degree, l.dim(), m.dim, {}};
  std::vector<std::size_t> cur;
  enumerate(l.dim(), degree, flavor == Flavor::alternating, 0, cur, s.tuples);
  return s;
}

Matrix differential(const StructureAlgebra& l, const CoefficientModule& m,
                    std::size_t n, Flavor flavor) {
  require_valid(l, m, flavor);
  const FieldSpec& f = l.field();
  bool with_signs = f.characteristic() != 2;
  CochainSpace src = cochain_space(l, m, n, flavor);
  CochainSpace dst = cochain_space(l, m, n + 1, flavor);
  std::size_t md = m.dim;
  Matrix d(f, dst.dim(), src.dim());
  for (std::size_t si = 0; si < dst.tuples.size(); ++si) {
    const auto& S = dst.tuples[si];
    // action term: rho(x_i) f(.. x^_i ..)
    for (std::size_t i = 0; i <= n; ++i) {
      std::vector<std::size_t> rest;
      rest.reserve(n);
      for (std::size_t r = 0; r <= n; ++r)
        if (r != i) rest.push_back(S[r]);
      std::size_t ti = src.tuple_index(rest);
      bool neg = with_signs && (i % 2 == 1);
      const Matrix& rho = m.action[S[i]];
      for (std::size_t a = 0; a < md; ++a)
        for (std::size_t b = 0; b < md; ++b) {
          Scalar v = rho.at(a, b);
          if (v.is_zero()) continue;
          if (neg) v = f.neg(v);
          d.add_at(si * md + a, ti * md + b, v);
        }
    }
    // bracket term: f([x_i, x_j], .. x^_i .. x^_j ..)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        std::vector<std::size_t> rest;
        rest.reserve(n);
        for (std::size_t r = 0; r <= n; ++r)
          if (r != i && r != j) rest.push_back(S[r]);
        bool base_neg = with_signs && ((i + j) % 2 == 1);
        for (std::size_t k = 0; k < l.dim(); ++k) {
          const Scalar& c = l.c(S[i], S[j], k);
          if (c.is_zero()) continue;
          std::vector<std::size_t> t;
          t.reserve(n);
          t.push_back(k);
          t.insert(t.end(), rest.begin(), rest.end());
          bool neg = base_neg;
          if (!normalize(t, flavor, neg)) continue;
          std::size_t ti = src.tuple_index(t);
          Scalar v = neg ? f.neg(c) : c;
          for (std::size_t a = 0; a < md; ++a)
            d.add_at(si * md + a, ti * md + a, v);
        }
      }
  }
  return d;
}

CohomologyReport cohomology(const StructureAlgebra& l, const CoefficientModule& m,
                            std::size_t n, Flavor flavor, std::size_t max_degree) {
  if (n > max_degree)
    throw ResourceBudget("cochain degree " + std::to_string(n) +
                         " exceeds the budget of " + std::to_string(max_degree));
  Matrix dn = differential(l, m, n, flavor);
  CohomologyReport rep{n, flavor, 0, 0, 0, {}};
  Matrix ker = dn.kernel_basis();
  for (std::size_t i = 0; i < ker.rows(); ++i) rep.cocycle_basis.push_back(ker.row(i));
  rep.dim_cocycles = rep.cocycle_basis.size();
  if (n > 0) {
    Matrix dprev = differential(l, m, n - 1, flavor);
    if (!dn.mul(dprev).is_zero())
      throw Error("coboundary composition d o d is nonzero; complex is broken");
    rep.dim_coboundaries = dprev.rref().rank;
  }
  rep.dim_h = rep.dim_cocycles - rep.dim_coboundaries;
  return rep;
}

std::vector<Vec> zassenhaus_commutative_cocycles(std::size_t n) {
  if (n < 2) throw InvalidParameter("need n >= 2");
  StructureAlgebra w = zoo::zassenhaus(n);
  CoefficientModule triv = CoefficientModule::trivial(w);
  CochainSpace space = cochain_space(w, triv, 2, Flavor::symmetric);
  const FieldSpec& f = w.field();
  std::vector<Vec> out;
  // The symmetric differential is graded, so representatives can be chosen
  // weight-homogeneous. k = 0 lives in weight -2; each k >= 1 is the sum of
  // all pair duals e_i v e_j of weight i + j = 2^n - 4 + 2^k.
  {
    Vec v = zero_vec(f, space.dim());
    v[space.tuple_index({0, 0})] = f.one();  // e_-1 v e_-1
    out.push_back(std::move(v));
  }
  long long top = (1LL << n) - 3;
  for (std::size_t k = 1; k < n; ++k) {
    long long wt = (1LL << n) - 4 + (1LL << k);
    Vec v = zero_vec(f, space.dim());
    for (long long i = wt - top; 2 * i <= wt; ++i)
      v[space.tuple_index({static_cast<std::size_t>(i + 1),
                           static_cast<std::size_t>(wt - i + 1)})] = f.one();
    out.push_back(std::move(v));
  }
  return out;
}

bool is_cocycle(const StructureAlgebra& l, const CoefficientModule& m,
                std::size_t n, Flavor flavor, const Vec& cochain) {
  Matrix dn = differential(l, m, n, flavor);
  if (cochain.size() != dn.cols())
    throw DimensionMismatch("cochain does not live in the stated cochain space");
  return is_zero_vec(dn.apply(cochain));
}

bool is_coboundary(const StructureAlgebra& l, const CoefficientModule& m,
                   std::size_t n, Flavor flavor, const Vec& cochain,
                   Vec* preimage) {
  std::size_t expected = cochain_space(l, m, n, flavor).dim();
  if (cochain.size() != expected)
    throw DimensionMismatch("cochain does not live in the stated cochain space");
  if (n == 0) {
    if (!is_zero_vec(cochain)) return false;
    if (preimage) *preimage = Vec{};
    return true;
  }
  Matrix dprev = differential(l, m, n - 1, flavor);
  auto sol = dprev.solve(cochain);
  if (!sol) return false;
  if (preimage) *preimage = *sol;
  return true;
}

}  // namespace modlie::cohomology
