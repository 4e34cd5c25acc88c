#include "modlie/younggraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "modlie/cohomology.hpp"
#include "modlie/liecore.hpp"
#include "modlie/zoo.hpp"

namespace modlie::younggraph {

namespace {

void check_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (p.parts[i] == 0) throw InvalidParameter("partition parts must be positive");
    if (i > 0 && p.parts[i] > p.parts[i - 1])
      throw InvalidParameter("partition parts must be weakly decreasing");
  }
}

// Graph order: ascending by cumulative-sum sequences, a total refinement of
// dominance with (1^n) first.
bool graph_less(const Partition& x, const Partition& y) {
  std::size_t len = std::max(x.parts.size(), y.parts.size());
  unsigned sx = 0, sy = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (i < x.parts.size()) sx += x.parts[i];
    if (i < y.parts.size()) sy += y.parts[i];
    if (sx != sy) return sx < sy;
  }
  return false;
}

long long mn_rec(std::vector<long long>& beta, const std::vector<unsigned>& mu,
                 std::size_t mi) {
  if (mi == mu.size()) return 1;
  long long r = mu[mi];
  long long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    long long nb = beta[i] - r;
    if (nb < 0) continue;
    if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    int height = 0;
    for (long long b : beta)
      if (b > nb && b < beta[i]) ++height;
    long long old = beta[i];
    beta[i] = nb;
    long long sub = mn_rec(beta, mu, mi + 1);
    beta[i] = old;
    total += (height % 2 ? -sub : sub);
  }
  return total;
}

unsigned long long factorial(unsigned n) {
  unsigned long long f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

struct Perm {
  std::vector<std::size_t> p;
  int sign;
  std::size_t class_index;  // into partitions_of(n)
};

int perm_sign(const std::vector<std::size_t>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

Partition cycle_type(const std::vector<std::size_t>& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<unsigned> parts;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition{parts};
}

std::vector<Perm> all_perms(std::size_t n, const std::vector<Partition>& classes) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    Perm e{p, perm_sign(p), 0};
    auto ct = cycle_type(p);
    e.class_index =
        std::find(classes.begin(), classes.end(), ct) - classes.begin();
    out.push_back(std::move(e));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Strictly increasing n-tuples of [0, d) in lexicographic order.
void wedge_rec(std::size_t d, std::size_t n, std::size_t start,
               std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < d; ++i) {
    cur.push_back(i);
    wedge_rec(d, n, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> wedge_tuples(std::size_t d, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  wedge_rec(d, n, 0, cur, out);
  return out;
}

// Sorts t in place; returns the sign of the sorting permutation, or 0 when
// t has a repeated entry.
int sort_sign(std::vector<std::size_t>& t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i)
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) return 0;
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  return sign;
}

// For each conjugacy class c of S_n, the matrix of
// (1/n!) Σ_{σ in c} (σ acting on the A-slots) restricted to the embedded
// alternating power of K^a (x) K^b, in wedge coordinates. Individual σ do not
// preserve the alternating power, but class sums are central and do.
std::vector<Matrix> class_sum_matrices(std::size_t a, std::size_t b, std::size_t n,
                                       const std::vector<Partition>& classes) {
  auto f = FieldSpec::rationals();
  auto tuples = wedge_tuples(a * b, n);
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < tuples.size(); ++i) index[tuples[i]] = i;

  std::size_t c = tuples.size();
  std::vector<Matrix> sums(classes.size(), Matrix(f, c, c));
  auto perms = all_perms(n, classes);
  Scalar inv_fact = f.inv(f.of_int(static_cast<long long>(factorial(n))));

  std::vector<std::size_t> alpha(n), beta(n), dst(n);
  for (std::size_t col = 0; col < c; ++col) {
    for (const Perm& tau : perms) {
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t v = tuples[col][tau.p[k]];
        alpha[k] = v / b;
        beta[k] = v % b;
      }
      for (const Perm& sigma : perms) {
        // slot k receives the A-index of slot sigma^{-1}(k)
        for (std::size_t k = 0; k < n; ++k) dst[sigma.p[k]] = k;
        for (std::size_t k = 0; k < n; ++k) dst[k] = alpha[dst[k]] * b + beta[k];
        auto s = dst;
        int sg = sort_sign(s);
        if (sg == 0) continue;
        sums[sigma.class_index].add_at(index.at(s), col,
                                       f.of_int(tau.sign * sg));
      }
    }
  }
  for (auto& m : sums) m = m.scale(inv_fact);
  return sums;
}

Matrix combine_projector(const Partition& lambda,
                         const std::vector<Partition>& classes,
                         const std::vector<Matrix>& sums, std::size_t n) {
  auto f = FieldSpec::rationals();
  std::size_t c = sums.front().rows();
  Matrix e(f, c, c);
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    long long chi = character(lambda, classes[ci]);
    if (chi == 0) continue;
    e = e.add(sums[ci].scale(f.of_int(chi)));
  }
  // chi_lambda(identity) = dimension of the irreducible
  Partition identity_class{std::vector<unsigned>(n, 1)};
  long long dim = character(lambda, identity_class);
  Scalar scale = f.div(f.of_int(dim),
                       f.of_int(static_cast<long long>(factorial(
                           static_cast<unsigned>(n)))));
  return e.scale(scale);
}

// Blocks of `d` after the row-basis changes `p_src` (level n) and `p_tgt`
// (level n+1): the assembled matrix is p_tgt * d * p_src^{-1}.
BlockReport make_report(std::size_t level, std::vector<std::string> src_labels,
                        std::vector<std::string> tgt_labels,
                        const std::vector<std::size_t>& src_dims,
                        const std::vector<std::size_t>& tgt_dims,
                        const Matrix& p_src, const Matrix& p_tgt,
                        const Matrix& d) {
  BlockReport rep;
  rep.level = level;
  rep.source_labels = std::move(src_labels);
  rep.target_labels = std::move(tgt_labels);
  rep.source_basis = p_src;
  rep.target_basis = p_tgt;
  Matrix b(d.field(), p_tgt.rows(), p_src.rows());
  if (p_src.rows() > 0 && p_tgt.rows() > 0)
    b = p_tgt.mul(d).mul(p_src.inverse());
  std::size_t coff = 0;
  for (std::size_t s = 0; s < src_dims.size(); ++s) {
    std::size_t roff = 0;
    for (std::size_t t = 0; t < tgt_dims.size(); ++t) {
      Block blk;
      blk.from = s;
      blk.to = t;
      blk.matrix = b.submatrix(roff, coff, tgt_dims[t], src_dims[s]);
      blk.is_zero = blk.matrix.is_zero();
      rep.blocks.push_back(std::move(blk));
      roff += tgt_dims[t];
    }
    coff += src_dims[s];
  }
  return rep;
}

// Structure constants of l rewritten in the basis given by the rows of q.
StructureAlgebra in_basis(const StructureAlgebra& l, const Matrix& q) {
  StructureAlgebra out(l.field(), l.dim());
  Matrix qti = q.transpose().inverse();
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j) {
      Vec c = qti.apply(l.product(q.row(i), q.row(j)));
      for (std::size_t k = 0; k < l.dim(); ++k) out.set_c(i, j, k, c[k]);
    }
  return out;
}

void check_closed(const StructureAlgebra& l, const Subspace& s, const char* name) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j) {
      if (!s.contains_vector(l.product(s.basis_vector(i), s.basis_vector(j))))
        throw NotASubalgebra(std::string(name) + ": bracket of basis vectors " +
                             std::to_string(i) + ", " + std::to_string(j) +
                             " leaves the subspace");
    }
}

}  // namespace

unsigned Partition::size() const {
  unsigned s = 0;
  for (unsigned p : parts) s += p;
  return s;
}

Partition Partition::transpose() const {
  check_partition(*this);
  Partition t;
  if (parts.empty()) return t;
  for (unsigned j = 1; j <= parts[0]; ++j) {
    unsigned cnt = 0;
    for (unsigned p : parts)
      if (p >= j) ++cnt;
    t.parts.push_back(cnt);
  }
  return t;
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  // descending-part recursion
  auto rec = [&](auto&& self, unsigned rest, unsigned maxpart) -> void {
    if (rest == 0) {
      out.push_back(Partition{cur});
      return;
    }
    for (unsigned p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  std::sort(out.begin(), out.end(),
            [](const Partition& x, const Partition& y) { return graph_less(x, y); });
  return out;
}

long long character(const Partition& lambda, const Partition& mu) {
  check_partition(lambda);
  check_partition(mu);
  if (lambda.size() != mu.size())
    throw InvalidParameter("character: |lambda| != |mu|");
  if (lambda.size() == 0) return 1;
  // first-column beta numbers; border-strip removal = subtracting a cycle
  // length from one beta number, sign from the number of betas jumped over
  std::size_t rows = lambda.parts.size();
  std::vector<long long> beta(rows);
  for (std::size_t i = 0; i < rows; ++i)
    beta[i] = static_cast<long long>(lambda.parts[i]) +
              static_cast<long long>(rows - 1 - i);
  return mn_rec(beta, mu.parts, 0);
}

CharacterTable character_table(unsigned n) {
  if (n == 0 || n > 8) throw InvalidParameter("character_table: need 1 <= n <= 8");
  CharacterTable t;
  t.n = n;
  t.rows = partitions_of(n);
  t.cols = t.rows;
  unsigned long long nfact = factorial(n);
  for (const auto& mu : t.cols) {
    unsigned long long denom = 1;
    unsigned run = 0;
    for (std::size_t i = 0; i < mu.parts.size(); ++i) {
      denom *= mu.parts[i];
      run = (i > 0 && mu.parts[i] == mu.parts[i - 1]) ? run + 1 : 1;
      denom *= run;
    }
    t.class_sizes.push_back(nfact / denom);
  }
  for (const auto& lam : t.rows) {
    std::vector<long long> row;
    for (const auto& mu : t.cols) row.push_back(character(lam, mu));
    t.values.push_back(std::move(row));
  }
  return t;
}

std::vector<CauchyComponent> cauchy_decompose(std::size_t a_dim, std::size_t b_dim,
                                              std::size_t n) {
  if (a_dim == 0 || b_dim == 0 || n == 0)
    throw InvalidParameter("cauchy_decompose: dimensions and degree must be positive");
  if (n > 6) throw ResourceBudget("cauchy_decompose: degree capped at 6");
  auto classes = partitions_of(static_cast<unsigned>(n));
  auto sums = class_sum_matrices(a_dim, b_dim, n, classes);
  std::vector<CauchyComponent> out;
  for (const auto& lam : classes) {
    Matrix e = combine_projector(lam, classes, sums, n);
    out.push_back({lam, Subspace::span(e.transpose())});
  }
  return out;
}

Matrix cauchy_projector(const Partition& lambda, std::size_t a_dim,
                        std::size_t b_dim, std::size_t n) {
  if (lambda.size() != n)
    throw InvalidParameter("cauchy_projector: |lambda| != n");
  auto classes = partitions_of(static_cast<unsigned>(n));
  auto sums = class_sum_matrices(a_dim, b_dim, n, classes);
  return combine_projector(lambda, classes, sums, n);
}

std::vector<BlockReport> young_graph_report(const StructureAlgebra& a,
                                            const StructureAlgebra& b,
                                            std::size_t n_max) {
  if (!a.field().is_rationals() || a.field() != b.field())
    throw WrongCharacteristic("young_graph_report: both algebras must be over Q");
  if (n_max < 2 || n_max > 5)
    throw InvalidParameter("young_graph_report: need 2 <= n_max <= 5");
  auto l = zoo::koszul_bracket(a, b);
  auto rep = liecore::validate(l, liecore::Identity::lie);
  if (!rep.pass)
    throw InvalidParameter("young_graph_report: tensor bracket is not a Lie algebra (" +
                           rep.describe(l) + ")");
  auto triv = cohomology::CoefficientModule::trivial(l);

  // per level: component labels, dims, and stacked basis matrix
  struct Level {
    std::vector<std::string> labels;
    std::vector<std::size_t> dims;
    Matrix basis;
  };
  std::vector<Level> levels(n_max + 1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto comps = cauchy_decompose(a.dim(), b.dim(), n);
    Level lev;
    lev.basis = Matrix(l.field(), 0, 0);
    bool first = true;
    for (const auto& c : comps) {
      lev.labels.push_back(c.lambda.str());
      lev.dims.push_back(c.basis.dim());
      if (c.basis.dim() == 0) continue;
      lev.basis = first ? c.basis.basis() : lev.basis.vstack(c.basis.basis());
      first = false;
    }
    auto space = cohomology::cochain_space(l, triv, n, cohomology::Flavor::alternating);
    if (lev.basis.rows() != space.dim())
      throw Error("young_graph_report: Cauchy components do not span");
    levels[n] = std::move(lev);
  }

  std::vector<BlockReport> out;
  for (std::size_t n = 1; n + 1 <= n_max; ++n) {
    Matrix d = cohomology::differential(l, triv, n, cohomology::Flavor::alternating);
    out.push_back(make_report(n, levels[n].labels, levels[n + 1].labels,
                              levels[n].dims, levels[n + 1].dims, levels[n].basis,
                              levels[n + 1].basis, d));
  }
  return out;
}

std::vector<BlockReport> triangle_report(const StructureAlgebra& l, const Subspace& n,
                                         const Subspace& m, std::size_t n_max) {
  if (n.ambient_dim() != l.dim() || m.ambient_dim() != l.dim())
    throw DimensionMismatch("triangle_report: part ambient dimension mismatch");
  if (n.field() != l.field() || m.field() != l.field())
    throw InvalidParameter("triangle_report: field mismatch");
  if (n.dim() + m.dim() != l.dim() || !n.intersection(m).is_zero())
    throw InvalidParameter("triangle_report: parts are not a direct vector-space sum");
  if (n_max < 2 || n_max > 5)
    throw InvalidParameter("triangle_report: need 2 <= n_max <= 5");
  check_closed(l, n, "n_part");
  check_closed(l, m, "m_part");

  Matrix q = m.is_zero() ? n.basis() : n.basis().vstack(m.basis());
  if (n.is_zero()) q = m.basis();
  auto la = in_basis(l, q);
  auto triv = cohomology::CoefficientModule::trivial(la);
  std::size_t nd = n.dim();

  struct Level {
    std::vector<std::string> labels;
    std::vector<std::size_t> dims;
    Matrix perm;  // grouped-order permutation of wedge coordinates
  };
  std::vector<Level> levels(n_max + 1);
  for (std::size_t k = 1; k <= n_max; ++k) {
    auto space = cohomology::cochain_space(la, triv, k, cohomology::Flavor::alternating);
    // bidegree of a tuple: factors below nd count toward i
    std::vector<std::size_t> bidegree(space.tuples.size());
    for (std::size_t t = 0; t < space.tuples.size(); ++t) {
      std::size_t i = 0;
      for (std::size_t v : space.tuples[t])
        if (v < nd) ++i;
      bidegree[t] = i;
    }
    Level lev;
    lev.perm = Matrix(l.field(), space.dim(), space.dim());
    std::size_t row = 0;
    for (std::size_t j = 0; j <= k; ++j) {  // j ascending, i = k - j descending
      std::size_t i = k - j;
      if (i > nd || j > m.dim()) continue;
      lev.labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
      std::size_t cnt = 0;
      for (std::size_t t = 0; t < space.tuples.size(); ++t)
        if (bidegree[t] == i) {
          lev.perm.set(row++, t, l.field().one());
          ++cnt;
        }
      lev.dims.push_back(cnt);
    }
    levels[k] = std::move(lev);
  }

  std::vector<BlockReport> out;
  for (std::size_t k = 1; k + 1 <= n_max; ++k) {
    Matrix d = cohomology::differential(la, triv, k, cohomology::Flavor::alternating);
    out.push_back(make_report(k, levels[k].labels, levels[k + 1].labels,
                              levels[k].dims, levels[k + 1].dims, levels[k].perm,
                              levels[k + 1].perm, d));
  }
  return out;
}

}  // namespace modlie::younggraph
