#include <doctest.h>

#include "modlie/decomp.hpp"
#include "modlie/liecore.hpp"
#include "modlie/zoo.hpp"
#include "testutil.hpp"

using namespace modlie;
using namespace modlie::decomp;
using modlie::testutil::abelian;

TEST_CASE("petravchuk fixture verifies") {
  auto fix = petravchuk_fixture();
  CHECK(fix.l.dim() == 5);
  CHECK(fix.n.dim() == 2);
  CHECK(fix.m.dim() == 3);
  auto cert = verify(fix.l, fix.n, fix.m);
  CHECK(cert.n_nilpotency_index == 1);  // abelian
  CHECK(cert.m_nilpotency_index >= 1);
  CHECK(cert.is_direct);
  CHECK_FALSE(cert.ambient_solvable);
  SUBCASE("verify is symmetric in the two parts") {
    auto swapped = verify(fix.l, fix.m, fix.n);
    CHECK(swapped.n_nilpotency_index == cert.m_nilpotency_index);
    CHECK(swapped.m_nilpotency_index == cert.n_nilpotency_index);
    CHECK(swapped.is_direct == cert.is_direct);
    CHECK(swapped.ambient_solvable == cert.ambient_solvable);
  }
}

TEST_CASE("verify failure modes") {
  auto s = zoo::ess();
  auto full = Subspace::full(s.field(), 3);
  SUBCASE("N = M = L with L non-nilpotent") {
    CHECK_THROWS_AS(verify(s, full, full), InvalidParameter);
  }
  SUBCASE("a non-closed part is rejected with a witness") {
    // span{e_-1, e_1} is not closed ([e_-1,e_1] = e_0)
    auto part = Subspace::span(
        Matrix::from_rows(s.field(), {{1, 0, 0}, {0, 0, 1}}));
    try {
      verify(s, part, full);
      FAIL("expected NotASubalgebra");
    } catch (const NotASubalgebra& e) {
      CHECK(std::string(e.what()).find("n_part") != std::string::npos);
      CHECK(std::string(e.what()).find("0") != std::string::npos);
    }
  }
  SUBCASE("non-spanning parts are rejected") {
    auto line = Subspace::span(Matrix::from_rows(s.field(), {{1, 0, 0}}));
    CHECK_THROWS_AS(verify(s, line, line), InvalidParameter);
  }
  SUBCASE("wrong ambient dimension") {
    CHECK_THROWS_AS(verify(s, Subspace::full(s.field(), 2), full),
                    DimensionMismatch);
  }
}

TEST_CASE("eq3 instance: extended current algebra splits") {
  auto a = zoo::truncated_poly(2, 2);
  auto d = testutil::ddt(a.field(), 2);
  auto inst = eq3_instance(a, {d});
  CHECK(inst.l.dim() == 11);  // 5*2 + 1
  CHECK(inst.n_part.dim() == 5);
  CHECK(inst.m_part.dim() == 6);
  auto cert = verify(inst.l, inst.n_part, inst.m_part);
  CHECK(cert.is_direct);
  CHECK_FALSE(cert.ambient_solvable);
  SUBCASE("no derivations degenerates to the plain current split") {
    auto inst0 = eq3_instance(a, {});
    CHECK(inst0.l.dim() == 10);
    auto c0 = verify(inst0.l, inst0.n_part, inst0.m_part);
    CHECK(c0.is_direct);
    CHECK(c0.n_nilpotency_index == 1);
  }
}

TEST_CASE("lower central powers match the product formula") {
  auto a = zoo::truncated_poly(2, 2);
  auto d = testutil::ddt(a.field(), 2);
  SUBCASE("ambient: envelope x A + D") {
    auto env = liecore::two_envelope(zoo::ess()).envelope;
    auto l = zoo::semidirect_current(env, a, {d});
    auto rep = liecore::series(l, Subspace::full(l.field(), l.dim()),
                               liecore::SeriesKind::lower_central);
    for (std::size_t n = 1; n <= 5; ++n) {
      std::size_t idx = std::min(n - 1, rep.terms.size() - 1);
      CHECK(rep.terms[idx] == lower_central_formula_span(env, a, {d}, n));
    }
  }
  SUBCASE("nilpotent part: N x A + D is nilpotent") {
    auto fix = petravchuk_fixture();
    auto n_alg = fix.l.restricted_to(fix.n);
    auto l = zoo::semidirect_current(n_alg, a, {d});
    CHECK(liecore::is_nilpotent(l, Subspace::full(l.field(), l.dim())));
    auto rep = liecore::series(l, Subspace::full(l.field(), l.dim()),
                               liecore::SeriesKind::lower_central);
    for (std::size_t n = 1; n <= rep.terms.size() + 1; ++n) {
      std::size_t idx = std::min(n - 1, rep.terms.size() - 1);
      CHECK(rep.terms[idx] == lower_central_formula_span(n_alg, a, {d}, n));
    }
  }
}

TEST_CASE("search") {
  SUBCASE("abelian: trivial split") {
    auto l = abelian(FieldSpec::gf2(), 2);
    auto res = search(l);
    REQUIRE(res.certificate.has_value());
    CHECK(res.certificate->n_part.dim() == 2);
    CHECK(res.certificate->m_part.is_zero());
  }
  SUBCASE("envelope of ess: a certificate exists and is found") {
    auto env = liecore::two_envelope(zoo::ess()).envelope;
    auto res = search(env, 100000, 0);
    REQUIRE(res.certificate.has_value());
    // re-verify from scratch; search must not trust its own bookkeeping
    auto cert = verify(env, res.certificate->n_part, res.certificate->m_part);
    CHECK(cert.n_nilpotency_index == res.certificate->n_nilpotency_index);
    CHECK_FALSE(cert.ambient_solvable);
  }
  SUBCASE("deterministic for a fixed seed") {
    auto env = liecore::two_envelope(zoo::ess()).envelope;
    auto r1 = search(env, 100000, 7);
    auto r2 = search(env, 100000, 7);
    REQUIRE(r1.certificate.has_value());
    REQUIRE(r2.certificate.has_value());
    CHECK(r1.certificate->n_part == r2.certificate->n_part);
    CHECK(r1.certificate->m_part == r2.certificate->m_part);
    CHECK(r1.operations_used == r2.operations_used);
  }
  SUBCASE("tiny budget reports none-within-budget, not an error") {
    auto env = liecore::two_envelope(zoo::ess()).envelope;
    auto res = search(env, 3, 0);
    CHECK_FALSE(res.certificate.has_value());
    CHECK(res.operations_used <= 3);
    CHECK_FALSE(res.log.empty());
  }
  SUBCASE("non-Lie input throws") {
    CHECK_THROWS_AS(search(testutil::mat2(FieldSpec::gf2())), InvalidParameter);
  }
}

TEST_CASE("certificate JSON round trip") {
  auto fix = petravchuk_fixture();
  auto cert = verify(fix.l, fix.n, fix.m);
  auto j = certificate_to_json(cert);
  auto back = certificate_from_json(j);
  CHECK(back.n_part == cert.n_part);
  CHECK(back.m_part == cert.m_part);
  CHECK(back.is_direct == cert.is_direct);
  SUBCASE("tampered verdicts are rejected") {
    auto bad = j;
    bad["is_direct"] = false;
    CHECK_THROWS_AS(certificate_from_json(bad), ParseError);
  }
  SUBCASE("missing fields are a parse error") {
    auto bad = j;
    bad.erase("n_part");
    CHECK_THROWS_AS(certificate_from_json(bad), ParseError);
  }
}
