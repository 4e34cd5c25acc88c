#include "modlie/decomp.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "modlie/json_io.hpp"
#include "modlie/liecore.hpp"
#include "modlie/zoo.hpp"

namespace modlie::decomp {

namespace {

void check_closed(const StructureAlgebra& l, const Subspace& s, const char* name) {
  if (s.ambient_dim() != l.dim() || s.field() != l.field())
    throw DimensionMismatch(std::string(name) + " does not live in the algebra's space");
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j) {
      Vec b = l.product(s.basis_vector(i), s.basis_vector(j));
      if (!s.contains_vector(b))
        throw NotASubalgebra(std::string(name) + " is not closed: bracket of basis vectors " +
                             std::to_string(i) + " and " + std::to_string(j) +
                             " falls outside");
    }
}

std::size_t nilpotency_index(const StructureAlgebra& l, const Subspace& s,
                             const char* name) {
  auto rep = liecore::series(l, s, liecore::SeriesKind::lower_central);
  if (!rep.index)
    throw InvalidParameter(std::string(name) + " is not nilpotent");
  return *rep.index;
}

}  // namespace

DecompositionCertificate verify(const StructureAlgebra& l, const Subspace& n,
                                const Subspace& m) {
  check_closed(l, n, "n_part");
  check_closed(l, m, "m_part");
  DecompositionCertificate c{l, n, m, 0, 0, false, false};
  c.n_nilpotency_index = nilpotency_index(l, n, "n_part");
  c.m_nilpotency_index = nilpotency_index(l, m, "m_part");
  if (n.sum(m).dim() != l.dim())
    throw InvalidParameter("n_part + m_part do not span the algebra");
  c.is_direct = n.intersection(m).is_zero();
  c.ambient_solvable = liecore::is_solvable(l);
  return c;
}

PetravchukFixture petravchuk_fixture() {
  auto env = liecore::two_envelope(zoo::ess());
  const FieldSpec& f = env.envelope.field();
  // basis order: e_-1, e_0, e_1, e_-1^[2], e_1^[2]
  Matrix nb = Matrix::from_rows(f, {{1, 1, 0, 1, 0},    // e_0 + e_-1 + e_-1^[2]
                                    {0, 1, 1, 0, 1}});  // e_0 + e_1 + e_1^[2]
  Matrix mb = Matrix::from_rows(f, {{0, 0, 0, 1, 0},    // e_-1^[2]
                                    {0, 1, 0, 0, 0},    // e_0
                                    {0, 0, 0, 0, 1}});  // e_1^[2]
  return PetravchukFixture{std::move(env.envelope), Subspace::span(nb),
                           Subspace::span(mb)};
}

namespace {

// Embeds X ⊗ W into the s ⊗ a block of semidirect_current coordinates
// (block width `total` = dim(s)*dim(a) + #derivations).
std::vector<Vec> tensor_block(const FieldSpec& f, const Subspace& x,
                              const Subspace& w, std::size_t da,
                              std::size_t total) {
  std::vector<Vec> out;
  for (std::size_t r = 0; r < x.dim(); ++r)
    for (std::size_t c = 0; c < w.dim(); ++c) {
      Vec xv = x.basis_vector(r), wv = w.basis_vector(c);
      Vec v = zero_vec(f, total);
      for (std::size_t i = 0; i < xv.size(); ++i)
        for (std::size_t j = 0; j < da; ++j) v[i * da + j] = f.mul(xv[i], wv[j]);
      out.push_back(std::move(v));
    }
  return out;
}

}  // namespace

Eq3Instance eq3_instance(const StructureAlgebra& a, const std::vector<Matrix>& dlist) {
  auto fix = petravchuk_fixture();
  StructureAlgebra l = zoo::semidirect_current(fix.l, a, dlist);
  const FieldSpec& f = l.field();
  std::size_t da = a.dim(), total = l.dim();
  Subspace full_a = Subspace::full(f, da);
  std::vector<Vec> ngens = tensor_block(f, fix.n, full_a, da, total);
  for (std::size_t p = 0; p < dlist.size(); ++p)
    ngens.push_back(unit_vec(f, total, fix.l.dim() * da + p));
  std::vector<Vec> mgens = tensor_block(f, fix.m, full_a, da, total);
  return Eq3Instance{std::move(l),
                     Subspace::span_vectors(f, total, ngens),
                     Subspace::span_vectors(f, total, mgens)};
}

Subspace lower_central_formula_span(const StructureAlgebra& s,
                                    const StructureAlgebra& a,
                                    const std::vector<Matrix>& dlist,
                                    std::size_t n) {
  if (n < 1) throw InvalidParameter("lower central powers start at 1");
  const FieldSpec& f = s.field();
  std::size_t ds = s.dim(), da = a.dim(), nd = dlist.size();
  std::size_t total = ds * da + nd;

  // S^i from the lower central series of s
  auto srep = liecore::series(s, Subspace::full(f, ds), liecore::SeriesKind::lower_central);
  auto s_power = [&](std::size_t i) -> const Subspace& {
    std::size_t idx = std::min(i - 1, srep.terms.size() - 1);
    return srep.terms[idx];
  };

  // D^j(A): spans of j-fold derivative images of A
  std::vector<Subspace> dja;
  dja.push_back(Subspace::full(f, da));
  for (std::size_t j = 1; j <= n; ++j) {
    std::vector<Vec> imgs;
    const Subspace& prev = dja.back();
    for (std::size_t r = 0; r < prev.dim(); ++r)
      for (const auto& d : dlist) imgs.push_back(d.apply(prev.basis_vector(r)));
    dja.push_back(Subspace::span_vectors(f, da, imgs));
  }
  auto a_times = [&](const Subspace& w) {
    std::vector<Vec> prods;
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t r = 0; r < w.dim(); ++r)
        prods.push_back(a.product(unit_vec(f, da, i), w.basis_vector(r)));
    return Subspace::span_vectors(f, da, prods);
  };

  // D^n as an abstract Lie algebra of commutators
  Subspace d_power(f, nd);
  if (nd > 0) {
    Matrix cols(f, a.dim() * a.dim(), nd);
    for (std::size_t b = 0; b < nd; ++b)
      for (std::size_t r = 0; r < da; ++r)
        for (std::size_t c = 0; c < da; ++c)
          cols.set(r * da + c, b, dlist[b].at(r, c));
    StructureAlgebra dalg(f, nd);
    for (std::size_t p = 0; p < nd; ++p)
      for (std::size_t q = 0; q < nd; ++q) {
        if (p == q) continue;
        Matrix comm = dlist[p].mul(dlist[q]).sub(dlist[q].mul(dlist[p]));
        Vec flat(da * da);
        for (std::size_t r = 0; r < da; ++r)
          for (std::size_t c = 0; c < da; ++c) flat[r * da + c] = comm.at(r, c);
        auto sol = cols.solve(flat);
        if (!sol) throw NotASubalgebra("derivation list is not closed under commutator");
        for (std::size_t k = 0; k < nd; ++k) dalg.set_c(p, q, k, (*sol)[k]);
      }
    auto drep = liecore::series(dalg, Subspace::full(f, nd), liecore::SeriesKind::lower_central);
    d_power = drep.terms[std::min(n - 1, drep.terms.size() - 1)];
  }

  std::vector<Vec> gens = tensor_block(f, s_power(n), Subspace::full(f, da), da, total);
  for (std::size_t i = 2; i + 1 <= n; ++i) {
    std::size_t j = n - i;
    auto block = tensor_block(f, s_power(i), a_times(dja[j]), da, total);
    gens.insert(gens.end(), block.begin(), block.end());
  }
  {
    auto block = tensor_block(f, Subspace::full(f, ds), dja[n - 1], da, total);
    gens.insert(gens.end(), block.begin(), block.end());
  }
  for (std::size_t r = 0; r < d_power.dim(); ++r) {
    Vec v = zero_vec(f, total);
    Vec coords = d_power.basis_vector(r);
    for (std::size_t p = 0; p < nd; ++p) v[ds * da + p] = coords[p];
    gens.push_back(std::move(v));
  }
  return Subspace::span_vectors(f, total, gens);
}

namespace {

struct Cand {
  Subspace sub;
  std::size_t index;
};

}  // namespace

SearchResult search(const StructureAlgebra& l, std::size_t budget, std::uint64_t seed) {
  if (!liecore::validate(l, liecore::Identity::lie).pass)
    throw InvalidParameter("search needs a Lie algebra");
  const FieldSpec& f = l.field();
  std::size_t d = l.dim();
  SearchResult res;
  res.operations_used = 0;

  auto ops_left = [&] { return res.operations_used < budget; };
  // One "operation" = one closure + nilpotency test.
  auto make = [&](const std::vector<Vec>& gens) -> std::optional<Cand> {
    if (!ops_left()) return std::nullopt;
    ++res.operations_used;
    if (gens.empty()) return Cand{Subspace(f, d), 0};
    Subspace s = liecore::subalgebra_closure(l, gens);
    std::optional<std::size_t> idx;
    if (!liecore::is_nilpotent(l, s, &idx)) return std::nullopt;
    return Cand{std::move(s), *idx};
  };

  std::vector<Cand> cands;
  auto remember = [&](std::optional<Cand> c) {
    if (!c) return;
    for (const auto& e : cands)
      if (e.sub == c->sub) return;
    cands.push_back(std::move(*c));
  };
  auto basis_gens = [&](const std::vector<std::size_t>& idxs) {
    std::vector<Vec> g;
    for (auto i : idxs) g.push_back(unit_vec(f, d, i));
    return g;
  };

  remember(make({}));
  // the whole algebra: if nilpotent, N = L, M = 0 settles it
  {
    std::vector<std::size_t> all(d);
    for (std::size_t i = 0; i < d; ++i) all[i] = i;
    if (auto whole = make(basis_gens(all))) {
      res.log.push_back("algebra is nilpotent; trivial split N = L, M = 0");
      res.certificate = verify(l, whole->sub, Subspace(f, d));
      return res;
    }
  }
  for (std::size_t i = 0; i < d; ++i) remember(make(basis_gens({i})));
  if (l.grading()) {
    const auto& deg = *l.grading();
    std::map<long long, std::vector<std::size_t>> by_deg;
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < d; ++i) {
      by_deg[deg[i]].push_back(i);
      (deg[i] >= 0 ? pos : neg).push_back(i);
    }
    for (auto& [dg, idxs] : by_deg) remember(make(basis_gens(idxs)));
    remember(make(basis_gens(pos)));
    remember(make(basis_gens(neg)));
  }
  res.log.push_back("seed candidates: " + std::to_string(cands.size()));

  // greedy growth by basis vectors
  std::size_t fixed = cands.size();
  for (std::size_t ci = 0; ci < fixed && ops_left(); ++ci) {
    Cand cur = cands[ci];
    bool grew = true;
    while (grew && ops_left()) {
      grew = false;
      for (std::size_t i = 0; i < d; ++i) {
        Vec e = unit_vec(f, d, i);
        if (cur.sub.contains_vector(e)) continue;
        std::vector<Vec> gens;
        for (std::size_t r = 0; r < cur.sub.dim(); ++r)
          gens.push_back(cur.sub.basis_vector(r));
        gens.push_back(e);
        auto c2 = make(gens);
        if (c2 && c2->sub.dim() > cur.sub.dim() && c2->sub.dim() < d) {
          cur = *c2;
          grew = true;
        }
      }
    }
    remember(cur);
  }
  res.log.push_back("candidates after growth: " + std::to_string(cands.size()));

  auto attempt = [&](const Cand& n, const Cand& m) -> bool {
    if (n.sub.sum(m.sub).dim() != d) return false;
    try {
      res.certificate = verify(l, n.sub, m.sub);
    } catch (const Error&) {
      return false;
    }
    return true;
  };

  for (std::size_t i = 0; i < cands.size(); ++i)
    for (std::size_t j = 0; j < cands.size(); ++j)
      if (attempt(cands[i], cands[j])) {
        res.log.push_back("direct pairing of seed candidates succeeded");
        return res;
      }

  std::mt19937_64 rng(seed);
  auto rand_vec = [&] {
    Vec v(d);
    unsigned span = f.characteristic() == 0 ? 2u : static_cast<unsigned>(f.characteristic());
    for (auto& x : v) x = f.of_int(static_cast<long long>(rng() % span));
    return v;
  };
  std::size_t restarts = 0;
  while (ops_left()) {
    ++restarts;
    Cand n = cands[rng() % cands.size()];
    Cand m = cands[rng() % cands.size()];
    for (std::size_t step = 0; step < 4 * d && ops_left(); ++step) {
      if (attempt(n, m)) {
        res.log.push_back("hill climbing succeeded at restart " +
                          std::to_string(restarts));
        return res;
      }
      Cand& grow = (step % 2 == 0) ? m : n;
      const Cand& other = (step % 2 == 0) ? n : m;
      std::vector<Vec> gens;
      for (std::size_t r = 0; r < grow.sub.dim(); ++r)
        gens.push_back(grow.sub.basis_vector(r));
      gens.push_back(rand_vec());
      auto c2 = make(gens);
      if (c2 && other.sub.sum(c2->sub).dim() > other.sub.sum(grow.sub).dim())
        grow = *c2;
    }
  }
  res.log.push_back("no certificate within budget of " + std::to_string(budget) +
                    " operations (" + std::to_string(restarts) + " restarts)");
  return res;
}

nlohmann::json certificate_to_json(const DecompositionCertificate& c) {
  return nlohmann::json{{"algebra", algebra_to_json(c.algebra)},
                        {"n_part", subspace_to_json(c.n_part)},
                        {"m_part", subspace_to_json(c.m_part)},
                        {"n_nilpotency_index", c.n_nilpotency_index},
                        {"m_nilpotency_index", c.m_nilpotency_index},
                        {"is_direct", c.is_direct},
                        {"ambient_solvable", c.ambient_solvable}};
}

DecompositionCertificate certificate_from_json(const nlohmann::json& j) {
  try {
    StructureAlgebra l = algebra_from_json(j.at("algebra"));
    Subspace n = subspace_from_json(j.at("n_part"));
    Subspace m = subspace_from_json(j.at("m_part"));
    DecompositionCertificate c = verify(l, n, m);
    if (c.n_nilpotency_index != j.at("n_nilpotency_index").get<std::size_t>() ||
        c.m_nilpotency_index != j.at("m_nilpotency_index").get<std::size_t>() ||
        c.is_direct != j.at("is_direct").get<bool>() ||
        c.ambient_solvable != j.at("ambient_solvable").get<bool>())
      throw ParseError("stored certificate verdicts disagree with re-verification");
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace modlie::decomp
