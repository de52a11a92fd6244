#include "fixture_util.hpp"

#include <doctest.h>

using namespace hstrace;

namespace {

struct Expected {
  const char* name;
  std::size_t dim, loewy, hh0;
  std::vector<std::size_t> layers, loops;
};

// Path counts by hand: nontrivial paths modulo relations, plus one idempotent per vertex.
// HH0 of an acyclic quiver algebra is spanned by the vertices; local commutative algebras
// have [A,A] = 0.
const Expected kExpected[] = {
    {"a2", 3, 2, 2, {2, 1}, {0, 0}},
    {"a3rel", 5, 2, 3, {3, 2}, {0, 0, 0}},
    {"loop", 2, 2, 2, {1, 1}, {1}},
    {"square", 9, 3, 4, {4, 4, 1}, {0, 0, 0, 0}},
    {"twoloop", 3, 2, 3, {1, 2}, {2}},
};

}  // namespace

TEST_CASE("fixture algebras: dimensions, radical layers, HH0, loops") {
  for (const auto& e : kExpected) {
    CAPTURE(e.name);
    auto a_holder = fixture(e.name);
    const Algebra& a = *a_holder.algebra;
    CHECK(a.dim() == e.dim);
    CHECK(a.loewy_length() == e.loewy);
    CHECK(a.hh0().dim() == e.hh0);
    for (std::size_t j = 0; j < e.layers.size(); ++j)
      CHECK(a.radical_power(j).dim() - a.radical_power(j + 1).dim() == e.layers[j]);
    for (std::size_t i = 0; i < e.loops.size(); ++i) CHECK(a.loops_at(i) == e.loops[i]);
    CHECK(a.is_associative());
    CHECK(a.unit_laws_hold());
    CHECK(a.idempotents_are_orthogonal());
  }
}

TEST_CASE("path conventions: a*b is a then b") {
  LoadedAlgebra la = fixture("a3rel");
  const Algebra& a = *la.algebra;
  Vector x = evaluate_terms(a, la.presentation, parse_linear_combination("a", la.presentation));
  Vector e1 = a.idempotent(0), e2 = a.idempotent(1);
  CHECK(a.multiply(e1, x) == x);
  CHECK(a.multiply(x, e2) == x);
  CHECK(is_zero(a.multiply(x, e1)));
  Vector ab = evaluate_terms(a, la.presentation, parse_linear_combination("a*b", la.presentation));
  CHECK(is_zero(ab));
}

TEST_CASE("commutative square relation") {
  LoadedAlgebra la = fixture("square");
  const Algebra& a = *la.algebra;
  auto ev = [&](const char* s) { return evaluate_terms(a, la.presentation, parse_linear_combination(s, la.presentation)); };
  CHECK(ev("a*b") == ev("c*d"));
  CHECK_FALSE(is_zero(ev("a*b")));
  // The long path is a commutator: [e1, ab] = ab.
  CHECK(a.hh0_class(ev("a*b")).is_zero());
  CHECK_FALSE(a.hh0_class(ev("1")).is_zero());
}

TEST_CASE("opposite and tensor algebras") {
  auto a_holder = fixture("a3rel");
    const Algebra& a = *a_holder.algebra;
  AlgebraPtr op = opposite(a);
  CHECK(op->dim() == a.dim());
  CHECK(op->is_associative());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      CHECK(op->multiply(a.basis_element(i), a.basis_element(j)) == a.multiply(a.basis_element(j), a.basis_element(i)));
  auto l_holder = fixture("loop");
    const Algebra& l = *l_holder.algebra;
  AlgebraPtr t = tensor(a, l);
  CHECK(t->dim() == a.dim() * l.dim());
  CHECK(t->num_vertices() == a.num_vertices() * l.num_vertices());
  CHECK(t->is_associative());
  CHECK(t->unit_laws_hold());
}

TEST_CASE("corner and ideal quotients") {
  auto lp_holder = fixture("loop");
    const Algebra& lp = *lp_holder.algebra;
  Quotient q = corner_quotient(lp, 0);
  CHECK(q.algebra->dim() == 2);
  auto a2_holder = fixture("a2");
    const Algebra& a2 = *a2_holder.algebra;
  for (std::size_t i = 0; i < 2; ++i) CHECK(corner_quotient(a2, i).algebra->dim() == 1);
  auto two_holder = fixture("twoloop");
    const Algebra& two = *two_holder.algebra;
  Quotient top = ideal_quotient(two, two.radical());
  CHECK(top.algebra->dim() == 1);
  CHECK_THROWS_AS(ideal_quotient(a2, Subspace::span(3, {a2.idempotent(0)})), std::invalid_argument);
}

TEST_CASE("non-admissible cap is reported") {
  // A cycle without relations is infinite dimensional.
  CHECK_THROWS(load_algebra_text("vertices 1 2; arrows a: 1 -> 2; b: 2 -> 1; cap 6;"));
}
