#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "modlie/liecore.hpp"
#include "modlie/zoo.hpp"
#include "testutil.hpp"

using namespace modlie;
using namespace modlie::liecore;
using modlie::testutil::abelian;
using modlie::testutil::heisenberg_gf2;

namespace {

// Exact binomial coefficient, for parity cross-checks.
boost::multiprecision::cpp_int binom_exact(unsigned n, unsigned k) {
  if (k > n) return 0;
  boost::multiprecision::cpp_int r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

Vec e(const StructureAlgebra& a, std::size_t i) {
  return unit_vec(a.field(), a.dim(), i);
}

}  // namespace

TEST_CASE("validate: ess is a Lie algebra") {
  CHECK(validate(zoo::ess(), Identity::lie).pass);
}

TEST_CASE("validate: alternation violation is caught") {
  StructureAlgebra a(FieldSpec::gf2(), 2);
  a.set_c_int(0, 0, 1, 1);
  auto rep = validate(a, Identity::lie);
  CHECK_FALSE(rep.pass);
  CHECK(rep.witness[0] == 0);
  CHECK(rep.law == "alternation x*x = 0");
}

TEST_CASE("validate: random dense constants fail with a checkable witness") {
  std::mt19937 rng(99);
  int failures = 0;
  for (int trial = 0; trial < 10; ++trial) {
    StructureAlgebra a(FieldSpec::gf2(), 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) a.set_c_int(i, j, k, rng() & 1);
    auto rep = validate(a, Identity::lie);
    if (rep.pass) continue;  // astronomically unlikely, but not an error
    ++failures;
    // Re-check the witness by direct expansion of the named law.
    std::size_t i = rep.witness[0], j = rep.witness[1], k = rep.witness[2];
    const FieldSpec& f = a.field();
    if (rep.law == "alternation x*x = 0") {
      CHECK_FALSE(is_zero_vec(a.basis_product(i, i)));
    } else if (rep.law == "anticommutativity") {
      CHECK_FALSE(is_zero_vec(add_vec(f, a.basis_product(i, j), a.basis_product(j, i))));
    } else {
      Vec s = a.product(a.basis_product(i, j), e(a, k));
      s = add_vec(f, s, a.product(a.basis_product(j, k), e(a, i)));
      s = add_vec(f, s, a.product(a.basis_product(k, i), e(a, j)));
      CHECK_FALSE(is_zero_vec(s));
    }
  }
  CHECK(failures >= 8);
}

TEST_CASE("validate: unknown identity tag") {
  CHECK_THROWS_AS(identity_from_string("jordan"), UnsupportedIdentity);
}

TEST_CASE("bracket examples") {
  auto s = zoo::ess();
  // [e_-1, e_0] = e_-1
  CHECK(bracket(s, e(s, 0), e(s, 1)) == e(s, 0));
  SUBCASE("alternation on random vectors") {
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
      Vec x(3);
      for (auto& v : x) v = s.field().of_int(rng() & 1);
      CHECK(is_zero_vec(bracket(s, x, x)));
    }
  }
  SUBCASE("W1'(3): [e_1, e_2] = 0 since binom(5,2) = 10 is even") {
    auto w = zoo::zassenhaus(3);
    CHECK(binom_exact(5, 2) == 10);
    CHECK(is_zero_vec(bracket(w, e(w, 2), e(w, 3))));
  }
  SUBCASE("length mismatch") {
    CHECK_THROWS_AS(bracket(s, Vec(2), Vec(3)), DimensionMismatch);
  }
}

TEST_CASE("Lucas parity agrees with exact binomials") {
  for (unsigned n = 0; n < 40; ++n)
    for (unsigned k = 0; k <= n; ++k)
      CHECK(zoo::binom_is_odd(n, k) == (binom_exact(n, k) % 2 == 1));
}

TEST_CASE("subalgebra_closure") {
  auto s = zoo::ess();
  SUBCASE("e_-1 and e_1 generate everything") {
    auto c = subalgebra_closure(s, {e(s, 0), e(s, 2)});
    CHECK(c.dim() == 3);
  }
  SUBCASE("single generator with zero square") {
    auto c = subalgebra_closure(s, {e(s, 0)});
    CHECK(c.dim() == 1);
  }
  SUBCASE("an ideal is already closed") {
    auto h = heisenberg_gf2();
    auto c = subalgebra_closure(h, {e(h, 2)});
    CHECK(c.dim() == 1);
  }
  CHECK_THROWS_AS(subalgebra_closure(s, {}), InvalidParameter);
}

TEST_CASE("series") {
  SUBCASE("abelian: lower-central index 1") {
    auto a = abelian(FieldSpec::gf2(), 3);
    auto rep = series(a, Subspace::full(a.field(), 3), SeriesKind::lower_central);
    REQUIRE(rep.index.has_value());
    CHECK(*rep.index == 1);
  }
  SUBCASE("Heisenberg: lower-central index 2") {
    auto h = heisenberg_gf2();
    auto rep = series(h, Subspace::full(h.field(), 3), SeriesKind::lower_central);
    REQUIRE(rep.index.has_value());
    CHECK(*rep.index == 2);
    // terms are nested
    for (std::size_t k = 1; k < rep.terms.size(); ++k)
      CHECK(rep.terms[k - 1].contains(rep.terms[k]));
  }
  SUBCASE("ess: derived series stabilizes at ess itself") {
    auto s = zoo::ess();
    auto rep = series(s, Subspace::full(s.field(), 3), SeriesKind::derived);
    CHECK_FALSE(rep.index.has_value());
    CHECK(rep.terms.back().dim() == 3);
    CHECK_FALSE(is_solvable(s));
  }
  SUBCASE("non-closed subspace errors") {
    auto s = zoo::ess();
    auto line = Subspace::span(Matrix::from_rows(s.field(), {{1, 1, 0}}));
    // [e_-1 + e_0, ...] leaves the line
    CHECK_THROWS_AS(series(s, line.sum(Subspace::span(Matrix::from_rows(
                                s.field(), {{0, 0, 1}}))),
                           SeriesKind::derived),
                    NotASubalgebra);
  }
}

TEST_CASE("derivations") {
  SUBCASE("Der(ess) has dimension 5 = 2^2 + 2 - 1") {
    auto der = derivations(zoo::ess());
    CHECK(der.matrices.size() == 5);
    CHECK(validate(der.algebra, Identity::lie).pass);
  }
  SUBCASE("Der(abelian d) = gl_d") {
    auto der = derivations(abelian(FieldSpec::gf2(), 3));
    CHECK(der.matrices.size() == 9);
  }
  SUBCASE("Der(W1'(3)) has dimension 10 = 2^3 + 3 - 1") {
    auto der = derivations(zoo::zassenhaus(3));
    CHECK(der.matrices.size() == 10);
    CHECK(validate(der.algebra, Identity::lie).pass);
  }
  SUBCASE("each returned matrix satisfies Leibniz exactly") {
    auto a = zoo::ess();
    auto der = derivations(a);
    const FieldSpec& f = a.field();
    for (const auto& D : der.matrices)
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
          Vec lhs = D.apply(a.basis_product(i, j));
          Vec rhs = add_vec(f, a.product(D.apply(e(a, i)), e(a, j)),
                            a.product(e(a, i), D.apply(e(a, j))));
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("two_envelope") {
  SUBCASE("envelope of ess is 5-dimensional, in the expected basis order") {
    auto env = two_envelope(zoo::ess());
    REQUIRE(env.envelope.dim() == 5);
    CHECK(env.envelope.basis_names() ==
          std::vector<std::string>{"e_-1", "e_0", "e_1", "e_-1^[2]", "e_1^[2]"});
    CHECK(validate(env.envelope, Identity::lie).pass);
    // basis matrices closed under squaring, squares recorded correctly
    for (std::size_t i = 0; i < 5; ++i) {
      Matrix sq = env.basis_matrices[i].mul(env.basis_matrices[i]);
      Matrix rebuilt(env.envelope.field(), sq.rows(), sq.cols());
      for (std::size_t k = 0; k < 5; ++k)
        if (!env.square_map[i][k].is_zero())
          rebuilt = rebuilt.add(env.basis_matrices[k]);
      CHECK(sq == rebuilt);
    }
  }
  SUBCASE("envelope of W1'(n) has dimension 2^n + n - 1") {
    CHECK(two_envelope(zoo::zassenhaus(3)).envelope.dim() == 10);
  }
  SUBCASE("the extra W1'(3) generators are the expected ad-powers") {
    auto w = zoo::zassenhaus(3);
    auto env = two_envelope(w);
    std::size_t d = w.dim();
    auto flat = [&](const Matrix& m) {
      Vec v(d * d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) v[i * d + j] = m.at(i, j);
      return v;
    };
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < d; ++i) gens.push_back(flat(w.ad(i)));
    Matrix ad_m1 = w.ad(0);                       // ad e_-1
    Matrix ad_top = w.ad(static_cast<std::size_t>((1 << 2)) );  // ad e_3 = e_{2^{n-1}-1}
    gens.push_back(flat(ad_m1.mul(ad_m1)));                      // (ad e_-1)^2
    gens.push_back(flat(ad_m1.mul(ad_m1).mul(ad_m1).mul(ad_m1))); // (ad e_-1)^4
    gens.push_back(flat(ad_top.mul(ad_top)));                    // (ad e_3)^2
    auto predicted = Subspace::span_vectors(w.field(), d * d, gens);
    std::vector<Vec> env_flat;
    for (const auto& m : env.basis_matrices) env_flat.push_back(flat(m));
    auto actual = Subspace::span_vectors(w.field(), d * d, env_flat);
    CHECK(predicted == actual);
  }
  SUBCASE("abelian algebra has no centerless realization") {
    CHECK_THROWS_AS(two_envelope(abelian(FieldSpec::gf2(), 2)), UnsupportedCenter);
  }
  SUBCASE("characteristic must be 2") {
    CHECK_THROWS_AS(two_envelope(testutil::sl2_rational()), WrongCharacteristic);
  }
}

TEST_CASE("restricted structure constants preserve series behavior") {
  auto env = two_envelope(zoo::ess());
  // M = span{e_-1^[2], e_0, e_1^[2]} is a nilpotent subalgebra.
  auto f = env.envelope.field();
  auto m = Subspace::span(Matrix::from_rows(
      f, {{0, 0, 0, 1, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}}));
  auto restricted = env.envelope.restricted_to(m);
  CHECK(is_lie(restricted));
  std::optional<std::size_t> idx;
  CHECK(is_nilpotent(env.envelope, m, &idx));
}
