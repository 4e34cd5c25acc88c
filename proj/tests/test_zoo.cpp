#include <doctest.h>

#include "modlie/liecore.hpp"
#include "modlie/zoo.hpp"
#include "testutil.hpp"

using namespace modlie;
using namespace modlie::liecore;
using namespace modlie::zoo;

namespace {

Vec e(const StructureAlgebra& a, std::size_t i) {
  return unit_vec(a.field(), a.dim(), i);
}

Matrix pow_n(const Matrix& m, std::size_t n) {
  Matrix r = Matrix::identity(m.field(), m.rows());
  for (std::size_t i = 0; i < n; ++i) r = r.mul(m);
  return r;
}

}  // namespace

TEST_CASE("ess") {
  auto s = ess();
  CHECK(s.dim() == 3);
  CHECK(validate(s, Identity::lie).pass);
  CHECK(s == zassenhaus(2));
  CHECK(s.basis_names() == zassenhaus(2).basis_names());
  CHECK(s.center().is_zero());
  // the displayed multiplication table
  CHECK(bracket(s, e(s, 0), e(s, 1)) == e(s, 0));
  CHECK(bracket(s, e(s, 0), e(s, 2)) == e(s, 1));
  CHECK(bracket(s, e(s, 1), e(s, 2)) == e(s, 2));
}

TEST_CASE("zassenhaus") {
  CHECK_THROWS_AS(zassenhaus(1), InvalidParameter);
  CHECK(zassenhaus(3).dim() == 7);
  CHECK(zassenhaus(4).dim() == 15);
  SUBCASE("validates as Lie for n = 2..5") {
    for (std::size_t n = 2; n <= 5; ++n)
      CHECK(validate(zassenhaus(n), Identity::lie).pass);
  }
  SUBCASE("[e_0, e_1] = e_1 in W1'(3)") {
    auto w = zassenhaus(3);
    CHECK(bracket(w, e(w, 1), e(w, 2)) == e(w, 2));
  }
  SUBCASE("the bracket is graded") {
    for (std::size_t n : {std::size_t(3), std::size_t(4)}) {
      auto w = zassenhaus(n);
      long long top = (1LL << n) - 3;
      for (long long i = -1; i <= top; ++i)
        for (long long j = -1; j <= top; ++j) {
          Vec p = w.basis_product(i + 1, j + 1);
          for (long long k = -1; k <= top; ++k)
            if (!p[k + 1].is_zero()) CHECK(k == i + j);
        }
    }
  }
  SUBCASE("top-degree boundary coefficients vanish") {
    // i + j = 2^n - 2 would land just beyond the basis; the formula's
    // coefficient binom(2^n, i+1) is even for 0 < i+1 < 2^n, so declaring
    // the product zero loses nothing.
    for (std::size_t n : {std::size_t(3), std::size_t(4), std::size_t(5)}) {
      long long s = (1LL << n);
      for (long long i = 0; i + 1 < s; ++i)
        if (i + 1 > 0) CHECK_FALSE(binom_is_odd(s, i + 1));
    }
  }
}

TEST_CASE("divided_powers") {
  CHECK_THROWS_AS(divided_powers(0), InvalidParameter);
  auto dp = divided_powers(3);
  auto& a = dp.algebra;
  CHECK(a.dim() == 8);
  CHECK(validate(a, Identity::commutative).pass);
  CHECK(validate(a, Identity::associative).pass);
  SUBCASE("x(1) * x(1) = 0 in characteristic 2") {
    CHECK(is_zero_vec(a.product(e(a, 1), e(a, 1))));
  }
  SUBCASE("x(0) is a unit") {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      CHECK(a.product(e(a, 0), e(a, i)) == e(a, i));
      CHECK(a.product(e(a, i), e(a, 0)) == e(a, i));
    }
  }
  SUBCASE("the derivation is nilpotent of index 2^n") {
    CHECK_FALSE(pow_n(dp.derivation, 7).is_zero());
    CHECK(pow_n(dp.derivation, 8).is_zero());
  }
  SUBCASE("the derivation satisfies Leibniz") {
    // novikov_from_comm_der re-checks Leibniz and would throw
    CHECK_NOTHROW(novikov_from_comm_der(a, dp.derivation));
  }
}

TEST_CASE("truncated_poly") {
  SUBCASE("m = 1 is the base field") {
    auto a = truncated_poly(1, 2);
    CHECK(a.dim() == 1);
    CHECK(a.product(e(a, 0), e(a, 0)) == e(a, 0));
  }
  SUBCASE("truncation kills the top product") {
    auto a = truncated_poly(3, 5);
    CHECK(is_zero_vec(a.product(e(a, 2), e(a, 1))));
  }
  SUBCASE("commutative and associative") {
    auto a = truncated_poly(4, FieldSpec::rationals());
    CHECK(validate(a, Identity::commutative).pass);
    CHECK(validate(a, Identity::associative).pass);
  }
}

TEST_CASE("koszul_bracket: (Lie, commutative associative)") {
  auto l = testutil::sl2_rational();
  auto a = truncated_poly(2, FieldSpec::rationals());
  auto k = koszul_bracket(l, a);
  CHECK(k.dim() == 6);
  CHECK(validate(k, Identity::lie).pass);
  // Over char 0 the tensor bracket is twice the current bracket.
  auto c = current(l, a);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      Vec twice = scale_vec(k.field(), k.field().of_int(2), c.basis_product(i, j));
      CHECK(k.basis_product(i, j) == twice);
    }
}

TEST_CASE("koszul_bracket: (associative, associative)") {
  auto m = testutil::mat2(FieldSpec::rationals());
  CHECK(validate(m, Identity::associative).pass);
  auto k = koszul_bracket(m, m);
  CHECK(k.dim() == 16);
  CHECK(validate(k, Identity::lie).pass);
}

TEST_CASE("novikov_from_comm_der") {
  // over GF(2) the truncation order must be even, else d(t^(m-1)) * t
  // breaks Leibniz at the boundary
  auto c = truncated_poly(4, 2);
  auto d = testutil::ddt(c.field(), 4);
  auto pair = novikov_from_comm_der(c, d);
  SUBCASE("left output satisfies the left Novikov identities") {
    CHECK(validate(pair.left, Identity::left_novikov).pass);
  }
  SUBCASE("right output satisfies the right Novikov identities") {
    CHECK(validate(pair.right, Identity::right_novikov).pass);
  }
  SUBCASE("right is the opposite of left") {
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        CHECK(pair.right.basis_product(i, j) == pair.left.basis_product(j, i));
  }
  SUBCASE("zero derivation gives the zero products") {
    auto z = novikov_from_comm_der(c, Matrix(c.field(), 4, 4));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        CHECK(is_zero_vec(z.left.basis_product(i, j)));
        CHECK(validate(z.left, Identity::left_novikov).pass);
      }
  }
  SUBCASE("non-derivations are rejected") {
    Matrix bad(c.field(), 4, 4);
    bad.set_int(0, 0, 1);
    CHECK_THROWS_AS(novikov_from_comm_der(c, bad), NotADerivation);
  }
}

TEST_CASE("koszul_bracket: (left Novikov, right Novikov)") {
  SUBCASE("characteristic 2 instance") {
    auto c = truncated_poly(4, 2);
    auto pair = novikov_from_comm_der(c, testutil::ddt(c.field(), 4));
    auto k = koszul_bracket(pair.left, pair.right);
    CHECK(validate(k, Identity::lie).pass);
  }
  SUBCASE("rational instance") {
    // the Euler derivation t d/dt preserves the truncation over any field
    auto c = truncated_poly(4, FieldSpec::rationals());
    Matrix euler(c.field(), 4, 4);
    for (std::size_t i = 0; i < 4; ++i) euler.set_int(i, i, static_cast<long long>(i));
    auto pair = novikov_from_comm_der(c, euler);
    CHECK(validate(pair.left, Identity::left_novikov).pass);
    auto k = koszul_bracket(pair.left, pair.right);
    CHECK(validate(k, Identity::lie).pass);
  }
}

TEST_CASE("current and semidirect_current") {
  auto s = ess();
  auto a = truncated_poly(2, 2);
  auto cur = current(s, a);
  CHECK(cur.dim() == 6);
  CHECK(validate(cur, Identity::lie).pass);
  CHECK_FALSE(is_solvable(cur));

  auto d = testutil::ddt(a.field(), 2);
  auto semi = semidirect_current(s, a, {d});
  CHECK(semi.dim() == 7);
  CHECK(validate(semi, Identity::lie).pass);

  SUBCASE("empty derivation list degenerates to the current algebra") {
    CHECK(semidirect_current(s, a, {}) == cur);
  }
  SUBCASE("non-closed derivation spaces are rejected") {
    // span{d} with d = E01 is fine; {E01-only, E10-only} has commutator
    // outside the span.
    Matrix d1(a.field(), 2, 2), d2(a.field(), 2, 2);
    d1.set_int(0, 1, 1);
    // d2 = t d/dt : 1 -> 0, t -> t
    d2.set_int(1, 1, 1);
    CHECK_NOTHROW(semidirect_current(s, a, {d1, d2}));
  }
}
