#include "fixture_util.hpp"

#include <doctest.h>

using namespace hstrace;

TEST_CASE("parsing a quiver with relations") {
  Presentation p = parse_presentation(
      "field Q;\n"
      "vertices 1 2 3;\n"
      "arrows a: 1 -> 2; b: 2 -> 3;\n"
      "relations a*b;\n");
  CHECK(p.field == FieldSpec::rationals());
  CHECK(p.quiver.vertices == std::vector<std::string>{"1", "2", "3"});
  REQUIRE(p.quiver.arrows.size() == 2);
  CHECK(p.quiver.arrows[0] == Arrow{"a", 0, 1});
  REQUIRE(p.relations.size() == 1);
  REQUIRE(p.relations[0].terms.size() == 1);
  CHECK(p.relations[0].terms[0].path.arrows == std::vector<std::size_t>{0, 1});
  CHECK(path_source(p.quiver, p.relations[0].terms[0].path) == 0);
  CHECK(path_target(p.quiver, p.relations[0].terms[0].path) == 2);
  CHECK(validate(p).ok());
}

TEST_CASE("printing round-trips") {
  for (const char* name : kFixtures) {
    CAPTURE(name);
    Presentation p = fixture(name).presentation;
    CHECK(parse_presentation(print_presentation(p)) == p);
  }
}

TEST_CASE("prime fields and coefficients") {
  Presentation p = parse_presentation("field F 5; vertices 1; arrows x: 1 -> 1; relations x*x*x;");
  CHECK(p.field.modulus() == 5);
  auto terms = parse_linear_combination("2 x*x - 1/3 x + 1", p);
  REQUIRE(terms.size() == 3);
  CHECK(terms[0].coefficient == Scalar(2));
  CHECK(terms[1].path.length() == 1);
  CHECK(terms[2].path.length() == 0);
}

TEST_CASE("diagnostics carry line and column") {
  try {
    parse_presentation("vertices 1 2;\narrows a: 1 -> 9;\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 16);
  }
  CHECK_THROWS_AS(parse_presentation("vertices 1; arrows x 1 -> 1;"), ParseError);
  CHECK_THROWS_AS(parse_presentation("field R;"), ParseError);
  CHECK_THROWS_AS(parse_presentation("vertices 1 1;"), ParseError);
}

TEST_CASE("non-admissible and non-parallel relations are rejected") {
  auto rejected = [](const char* text) {
    try {
      return !validate(parse_presentation(text)).ok();
    } catch (const ParseError&) {
      return true;
    }
  };
  CHECK(rejected("vertices 1 2 3; arrows a: 1 -> 2; b: 2 -> 3; c: 1 -> 3; relations a*b - c;"));
  CHECK(rejected("vertices 1 2 3; arrows a: 1 -> 2; b: 2 -> 3; c: 1 -> 2; relations a*b - c*c;"));
  CHECK_FALSE(rejected("vertices 1 2 3; arrows a: 1 -> 2; b: 2 -> 3; relations a*b;"));
}

TEST_CASE("loop counts of the quiver") {
  CHECK(fixture("loop").presentation.quiver.loops_at(0) == 1);
  CHECK(fixture("twoloop").presentation.quiver.loops_at(0) == 2);
  CHECK(fixture("square").presentation.quiver.loops_at(0) == 0);
}
