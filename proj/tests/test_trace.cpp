#include "fixture_util.hpp"

#include "hstrace/random.hpp"
#include "hstrace/trace.hpp"

#include <doctest.h>

using namespace hstrace;

namespace {

Vector element(const LoadedAlgebra& la, const std::string& path) {
  ProjectiveSum a = ProjectiveSum::free(la.algebra, 1);
  return parse_matrix(la, "[" + path + "]", a, a).at(0, 0);
}

}  // namespace

TEST_CASE("trace of left multiplication on k[x]/(x^2)") {
  auto lp = fixture("loop");
  const Algebra& a = *lp.algebra;
  REQUIRE(a.hh0().dim() == 2);  // commutative, so HH_0 = A
  ProjectiveSum reg = ProjectiveSum::free(lp.algebra, 1);
  AlgMatrix lx(1, 1, a.dim());
  lx.at(0, 0) = element(lp, "x");
  CHECK(matrix_trace(a, lx) == a.hh0_class(element(lp, "x")));
  CHECK(matrix_trace(a, lx).to_string() == "[0,1]");
  CHECK(matrix_trace(a, identity_matrix(reg)) == a.hh0_class(a.unit()));
}

TEST_CASE("trace of the identity on A^n is n times the class of 1") {
  for (const char* name : kFixtures) {
    CAPTURE(name);
    auto la = fixture(name);
    const Algebra& a = *la.algebra;
    TraceClass one = a.hh0_class(a.unit());
    TraceClass sum = one - one;
    for (std::size_t n = 1; n <= 3; ++n) {
      sum += one;
      CHECK(matrix_trace(a, identity_matrix(ProjectiveSum::free(la.algebra, n))) == sum);
    }
  }
}

TEST_CASE("arrows between distinct vertices are commutators") {
  auto sq = fixture("square");
  const Algebra& a = *sq.algebra;
  CHECK(a.hh0().dim() == 4);
  for (const char* arrow : {"a", "b", "c", "d", "a*b"}) CHECK(a.hh0_class(element(sq, arrow)).is_zero());
  // tr(id on e1A + e2A) = [e1] + [e2]
  ProjectiveSum p = ProjectiveSum::of_vertices(sq.algebra, {0, 1});
  CHECK(matrix_trace(a, identity_matrix(p)) == a.hh0_class(a.idempotent(0)) + a.hh0_class(a.idempotent(1)));
}

TEST_CASE("realizations agree with the matrix trace") {
  for (const char* name : kFixtures) {
    CAPTURE(name);
    auto la = fixture(name);
    Rng rng(5);
    for (int k = 0; k < 5; ++k) {
      ProjectiveSum p = random_projective(la.algebra, rng, 3);
      ProjectiveRealization direct = realize(p);
      ProjectiveRealization via_cover = realize(p.module());
      CHECK(direct.is_consistent());
      CHECK(via_cover.is_consistent());
      AlgMatrix f = random_map(p, p, rng);
      ModuleMap fm = p.map_from_matrix(p, f);
      TraceClass expected = matrix_trace(*la.algebra, f);
      CHECK(hs_trace(direct, fm) == expected);
      CHECK(hs_trace(via_cover, fm) == expected);
    }
  }
}

TEST_CASE("non-projective modules cannot be realized") {
  auto a2 = fixture("a2");
  CHECK_THROWS_AS(realize(simple_module(a2.algebra, 0)), std::invalid_argument);
  CHECK_NOTHROW(realize(simple_module(a2.algebra, 1)));  // S2 = e2A
}

TEST_CASE("trace axioms hold on every fixture") {
  for (const char* name : kFixtures) {
    CAPTURE(name);
    auto la = fixture(name);
    auto reports = verify_hs_axioms(la.algebra, 10, 3);
    CHECK(reports.size() == 7);
    for (const auto& r : reports) {
      CAPTURE(r.id);
      CHECK(r.outcome == Outcome::Verified);
    }
  }
}
