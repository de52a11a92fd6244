#include "fixture_util.hpp"

#include "hstrace/bimodule.hpp"
#include "hstrace/random.hpp"
#include "hstrace/resolution.hpp"

#include <doctest.h>

using namespace hstrace;

TEST_CASE("indecomposable projectives have the dimensions of the paths leaving each vertex") {
  auto sq = fixture("square");
  const std::size_t expected[] = {4, 2, 2, 1};  // {e1,a,c,ab}, {e2,b}, {e3,d}, {e4}
  for (std::size_t i = 0; i < 4; ++i) {
    ModulePtr p = indecomposable_projective(sq.algebra, i);
    CHECK(p->dim() == expected[i]);
    CHECK(p->is_valid());
    CHECK(simple_module(sq.algebra, i)->dim() == 1);
  }
  CHECK(regular_module(sq.algebra)->dim() == 9);
}

TEST_CASE("Hom between projectives is a corner of A") {
  auto sq = fixture("square");
  const Algebra& a = *sq.algebra;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      const std::size_t corner = corner_basis(a, a.idempotent(j), a.idempotent(i)).size();
      auto direct = hom_space(indecomposable_projective(sq.algebra, i), indecomposable_projective(sq.algebra, j));
      CHECK(direct.size() == corner);
      for (const auto& f : direct) CHECK(f.is_homomorphism());
    }
  // e1 A e4 is spanned by the long path alone.
  CHECK(corner_basis(a, a.idempotent(0), a.idempotent(3)).size() == 1);
}

TEST_CASE("projective dimensions of simples") {
  struct Case {
    const char* name;
    std::vector<ProjDim> pd;
  };
  // Hand-computed minimal resolutions, e.g. 0 -> e2A -> e1A -> S1 over A2 and
  // 0 -> e4A -> e2A + e3A -> e1A -> S1 over the commutative square.
  const Case cases[] = {
      {"a2", {ProjDim::exactly(1), ProjDim::exactly(0)}},
      {"a3rel", {ProjDim::exactly(2), ProjDim::exactly(1), ProjDim::exactly(0)}},
      {"square", {ProjDim::exactly(2), ProjDim::exactly(1), ProjDim::exactly(1), ProjDim::exactly(0)}},
      {"loop", {ProjDim::at_least(20)}},
      {"twoloop", {ProjDim::at_least(20)}},
  };
  for (const auto& c : cases) {
    auto la = fixture(c.name);
    for (std::size_t i = 0; i < c.pd.size(); ++i) {
      CAPTURE(c.name);
      CAPTURE(i);
      CHECK(proj_dim(simple_module(la.algebra, i), 20) == c.pd[i]);
    }
  }
  CHECK(ProjDim::exactly(1).to_string() == "Finite(1)");
  CHECK(ProjDim::at_least(20).to_string() == "AtLeast(20)");
}

TEST_CASE("minimal resolutions are minimal and exact") {
  for (const char* name : kFixtures) {
    CAPTURE(name);
    auto la = fixture(name);
    Rng rng(11);
    for (int k = 0; k < 6; ++k) {
      ModulePtr m = random_module(la.algebra, rng, 6);
      REQUIRE(m->is_valid());
      Resolution r = minimal_resolution(m, 5);
      CHECK(r.is_minimal());
      CHECK(r.is_exact());
    }
  }
}

TEST_CASE("Ext of simples: one class per degree for one loop, 2^n for two loops") {
  auto lp = fixture("loop");
  ModulePtr s = simple_module(lp.algebra, 0);
  CHECK(ext_dims(s, s, 6) == std::vector<std::size_t>(7, 1));
  auto two = fixture("twoloop");
  ModulePtr t = simple_module(two.algebra, 0);
  CHECK(ext_dims(t, t, 4) == std::vector<std::size_t>{1, 2, 4, 8, 16});
  CHECK(tor_dims(t, simple_module(opposite(*two.algebra), 0), 4) == std::vector<std::size_t>{1, 2, 4, 8, 16});
  // Ext^1(S1, S2) over A2 is the arrow; Ext^1(S2, S1) vanishes.
  auto a2 = fixture("a2");
  CHECK(ext_dims(simple_module(a2.algebra, 0), simple_module(a2.algebra, 1), 1) == std::vector<std::size_t>{0, 1});
  CHECK(ext_dims(simple_module(a2.algebra, 1), simple_module(a2.algebra, 0), 1) == std::vector<std::size_t>{0, 0});
}

TEST_CASE("syzygies and isomorphism") {
  auto a2 = fixture("a2");
  ModulePtr omega = syzygy(simple_module(a2.algebra, 0), 1);
  CHECK(is_isomorphic(omega, simple_module(a2.algebra, 1)));
  CHECK(is_isomorphic(omega, indecomposable_projective(a2.algebra, 1)));
  CHECK_FALSE(is_isomorphic(simple_module(a2.algebra, 0), simple_module(a2.algebra, 1)));
  auto two = fixture("twoloop");
  ModulePtr j = syzygy(simple_module(two.algebra, 0), 1);
  CHECK(j->dim() == 2);
  CHECK(has_simple_summand(*j, 0));
  CHECK_FALSE(has_simple_summand(*indecomposable_projective(two.algebra, 0), 0));
}

TEST_CASE("kernels, quotients and sums") {
  auto sq = fixture("square");
  ModulePtr p = indecomposable_projective(sq.algebra, 0);
  Cover c = top_and_cover(simple_module(sq.algebra, 0));
  CHECK(c.projective.rank() == 1);
  Embedded j = submodule(p, radical_submodule(*p));
  CHECK(j.module->dim() == 3);
  CHECK(top_dimension_vector(*j.module) == std::vector<std::size_t>{0, 1, 1, 0});
  DirectSum ds = direct_sum({p, j.module});
  CHECK(ds.module->dim() == 7);
  CHECK(compose(ds.projections[1], ds.injections[1]).matrix == Matrix::identity(3));
  CHECK(kernel(ds.projections[0]).module->dim() == 3);
}

TEST_CASE("pd of A over its envelope is the global dimension") {
  const std::pair<const char*, std::size_t> cases[] = {{"a2", 1}, {"a3rel", 2}, {"square", 2}};
  for (const auto& [name, gldim] : cases) {
    CAPTURE(name);
    auto la = fixture(name);
    Envelope e = make_envelope(la.algebra, la.algebra);
    ModulePtr reg = regular_bimodule(e);
    CHECK(reg->is_valid());
    CHECK(is_isomorphic(underlying_right(e, reg), regular_module(la.algebra)));
    CHECK(proj_dim(reg, 10) == ProjDim::exactly(gldim));
  }
}
