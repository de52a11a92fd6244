#pragma once

#include "hstrace/scalar.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hstrace {

/// Diagnostic raised by the presentation parser; line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  std::optional<std::size_t> vertex_index(std::string_view name) const;
  std::optional<std::size_t> arrow_index(std::string_view name) const;
  std::size_t loops_at(std::size_t vertex) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;
};

/// A path in the quiver. `a*b` means "a then b": a path from i to j
/// satisfies e_i p = p = p e_j. A length-0 path is the idempotent of `vertex`.
struct PathExpr {
  std::vector<std::size_t> arrows;
  std::size_t vertex = 0;  // used only when arrows is empty

  std::size_t length() const { return arrows.size(); }
  friend bool operator==(const PathExpr&, const PathExpr&) = default;
};

struct RelationTerm {
  Scalar coefficient;
  PathExpr path;
  friend bool operator==(const RelationTerm&, const RelationTerm&) = default;
};

struct Relation {
  std::vector<RelationTerm> terms;
  friend bool operator==(const Relation&, const Relation&) = default;
};

struct Presentation {
  static constexpr std::size_t kDefaultCap = 30;

  FieldSpec field;
  Quiver quiver;
  std::vector<Relation> relations;
  std::size_t cap = kDefaultCap;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

struct ValidationReport {
  std::vector<std::string> errors;
  bool ok() const { return errors.empty(); }
};

/// Source vertex of a composable path; throws if arrows do not compose.
std::size_t path_source(const Quiver& q, const PathExpr& p);
std::size_t path_target(const Quiver& q, const PathExpr& p);
bool is_composable(const Quiver& q, const PathExpr& p);
std::string path_to_string(const Quiver& q, const PathExpr& p);

Presentation parse_presentation(std::string_view text);
ValidationReport validate(const Presentation& p);
std::string print_presentation(const Presentation& p);

/// Parses a linear combination of paths (vertex names allowed) such as
/// `2 a*b - 1/3 c + 1`, using the same term syntax as relations.
std::vector<RelationTerm> parse_linear_combination(std::string_view text, const Presentation& p);

}  // namespace hstrace
