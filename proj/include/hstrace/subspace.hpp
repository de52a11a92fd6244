#pragma once

#include "hstrace/matrix.hpp"

#include <vector>

namespace hstrace {

/// A subspace of k^n kept as a reduced row echelon basis. Basis vectors are
/// ordered by pivot column, each has a 1 at its pivot and zeros at all other
/// pivots, so coordinates of a member are read off at the pivot positions.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vector>& generators);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Adds v to the span; returns false when v was already a member.
  bool add(const Vector& v);

  /// Remainder of v modulo the subspace; zero at every pivot position.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of a member in basis(). Undefined for non-members.
  Vector coordinates(const Vector& v) const;

  /// Non-pivot positions, ascending. They index a canonical complement.
  std::vector<std::size_t> complement() const;
  /// Coordinates of v + U in the quotient k^n / U, read at complement().
  Vector quotient_coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace hstrace
