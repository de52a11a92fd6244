#include "fixture_util.hpp"

#include "hstrace/random.hpp"

#include <doctest.h>

using namespace hstrace;

namespace {

// Projective resolution of S1 over A2: e2A -> e1A in degrees -1, 0.
constexpr const char* kS1Resolution = "-1: 2 | 1 ; d: [a]";

}  // namespace

TEST_CASE("complexes must square to zero") {
  auto a2 = fixture("a2");
  CHECK_NOTHROW(parse_complex_endo(a2, kS1Resolution));
  auto lp = fixture("loop");
  CHECK_NOTHROW(parse_complex_endo(lp, "0: 1 | 1 | 1 ; d: [x] | [x]"));
  CHECK_THROWS_AS(parse_complex_endo(lp, "0: 1 | 1 | 1 ; d: [1] | [x]"), std::invalid_argument);
  // f must commute with d
  CHECK_THROWS(parse_complex_endo(lp, "0: 1 | 1 ; d: [x] ; f: [1] | [0]"));
}

TEST_CASE("Euler characteristic of a resolution is the alternating sum of its terms") {
  auto a2 = fixture("a2");
  const Algebra& a = *a2.algebra;
  ChainMap id = parse_complex_endo(a2, kS1Resolution);
  CHECK(hs_character(id) == a.hh0_class(a.idempotent(0)) - a.hh0_class(a.idempotent(1)));
  CHECK(hs_character_via_realizations(id) == hs_character(id));
  // A contractible complex has character zero.
  CHECK(hs_character(parse_complex_endo(a2, "0: 1 | 1 ; d: [1]")).is_zero());
}

TEST_CASE("identity on a nonzero single term is not null-homotopic") {
  auto a2 = fixture("a2");
  ChainMap id = parse_complex_endo(a2, "0: 1,2");
  CHECK_FALSE(is_null_homotopic(id));
  CHECK(is_null_homotopic(zero_chain(id.source, id.source)));
  CHECK(is_null_homotopic(parse_complex_endo(a2, "0: 1 | 1 ; d: [1]")));
}

TEST_CASE("cones of isomorphisms are contractible; cylinders have the character of the target") {
  for (const char* name : kFixtures) {
    CAPTURE(name);
    auto la = fixture(name);
    Rng rng(17);
    for (int k = 0; k < 4; ++k) {
      ComplexPtr p = random_complex(la.algebra, rng, 3, 2);
      ChainMap id = identity_chain(p);
      ComplexPtr c = cone(id);
      CHECK(c->squares_to_zero());
      ChainMap idc = identity_chain(c);
      CHECK(hs_character(idc).is_zero());
      auto h = is_null_homotopic(idc);
      REQUIRE(h);
      CHECK((boundary(*h) - idc).f == zero_chain(c, c).f);

      ChainMap u = random_chain_map(random_complex(la.algebra, rng, 3, 2), p, rng);
      ComplexPtr cyl = cylinder(u);
      CHECK(cyl->squares_to_zero());
      CHECK(hs_character(identity_chain(cyl)) == hs_character(id));
    }
  }
}

TEST_CASE("a cone with the wrong sign on the shifted differential is not a complex") {
  auto a2 = fixture("a2");
  ChainMap id = parse_complex_endo(a2, kS1Resolution);
  ComplexPtr c = cone(id);
  ComplexPtr p = id.source;
  std::vector<AlgMatrix> flipped = c->d;
  for (std::size_t k = 0; k < flipped.size(); ++k) {
    const int i = c->lo + static_cast<int>(k);
    const std::size_t rows = p->term(i + 2).rank(), cols = p->term(i + 1).rank();
    AlgMatrix block = flipped[k].block(0, 0, rows, cols);
    flipped[k].set_block(0, 0, Scalar(-1) * block);
  }
  CHECK_NOTHROW(make_complex(c->algebra, c->lo, c->terms, c->d));
  CHECK_THROWS_AS(make_complex(c->algebra, c->lo, c->terms, flipped), std::invalid_argument);
}

TEST_CASE("both character computations agree on random endomorphisms") {
  for (const char* name : kFixtures) {
    CAPTURE(name);
    auto la = fixture(name);
    Rng rng(23);
    for (int k = 0; k < 5; ++k) {
      ComplexPtr p = random_complex(la.algebra, rng);
      ChainMap f = random_chain_map(p, p, rng);
      REQUIRE(f.commutes());
      CHECK(hs_character(f) == hs_character_via_realizations(f));
    }
  }
}

TEST_CASE("character checks pass on every fixture") {
  for (const char* name : kFixtures) {
    CAPTURE(name);
    auto la = fixture(name);
    auto reports = verify_character(la.algebra, 5, 2);
    CHECK(reports.size() == 8);
    for (const auto& r : reports) {
      CAPTURE(r.id);
      CHECK(r.outcome == Outcome::Verified);
    }
  }
}
