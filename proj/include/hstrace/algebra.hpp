#pragma once

#include "hstrace/matrix.hpp"
#include "hstrace/presentation.hpp"
#include "hstrace/subspace.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace hstrace {

using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

/// Canonical coordinates of a coset x + [A,A] in A/[A,A] = HH_0(A).
struct TraceClass {
  Vector coordinates;

  bool is_zero() const { return hstrace::is_zero(coordinates); }
  TraceClass& operator+=(const TraceClass& o);
  TraceClass& operator-=(const TraceClass& o);
  friend TraceClass operator+(TraceClass a, const TraceClass& b) { return a += b; }
  friend TraceClass operator-(TraceClass a, const TraceClass& b) { return a -= b; }
  TraceClass operator-() const;
  friend bool operator==(const TraceClass& a, const TraceClass& b) { return a.coordinates == b.coordinates; }
  std::string to_string() const { return hstrace::to_string(coordinates); }
};

/// The commutator subspace [A,A] and the complement positions that give
/// canonical coordinates on HH_0(A).
class Hh0Basis {
 public:
  Hh0Basis() = default;
  explicit Hh0Basis(Subspace commutators) : commutators_(std::move(commutators)) {}

  const Subspace& commutators() const { return commutators_; }
  std::size_t dim() const { return commutators_.ambient() - commutators_.dim(); }
  std::vector<std::size_t> complement() const { return commutators_.complement(); }
  TraceClass class_of(const Vector& x) const { return {commutators_.quotient_coordinates(x)}; }

 private:
  Subspace commutators_;
};

/// A finite-dimensional algebra with an explicit multiplication table.
/// Immutable once constructed.
class Algebra {
 public:
  struct Parts {
    FieldSpec field;
    std::vector<std::string> labels;
    std::vector<SparseVector> table;  // entry i*dim + j holds b_i * b_j
    Vector unit;
    std::vector<Vector> idempotents;  // complete set of primitive orthogonal idempotents
    std::vector<std::string> vertex_names;
    std::vector<Vector> generators;          // generate A as a unital algebra
    std::vector<Vector> radical_generators;  // generate J as a two-sided ideal
  };

  explicit Algebra(Parts parts);

  const FieldSpec& field() const { return parts_.field; }
  std::size_t dim() const { return parts_.labels.size(); }
  const std::vector<std::string>& labels() const { return parts_.labels; }
  const SparseVector& product(std::size_t i, std::size_t j) const { return parts_.table[i * dim() + j]; }

  Vector zero() const { return Vector(dim()); }
  Vector basis_element(std::size_t i) const { return unit_vector(dim(), i); }
  const Vector& unit() const { return parts_.unit; }
  Vector multiply(const Vector& x, const Vector& y) const;
  Vector commutator(const Vector& x, const Vector& y) const;

  std::size_t num_vertices() const { return parts_.idempotents.size(); }
  const Vector& idempotent(std::size_t i) const { return parts_.idempotents.at(i); }
  const std::vector<Vector>& idempotents() const { return parts_.idempotents; }
  const std::vector<std::string>& vertex_names() const { return parts_.vertex_names; }
  const std::vector<Vector>& generators() const { return parts_.generators; }
  const std::vector<Vector>& radical_generators() const { return parts_.radical_generators; }

  /// J^j for any j >= 0; the zero subspace for j >= loewy_length().
  const Subspace& radical_power(std::size_t j) const;
  const Subspace& radical() const { return radical_power(1); }
  std::size_t loewy_length() const { return radical_layers_.size() - 1; }

  const Hh0Basis& hh0() const { return hh0_; }
  TraceClass hh0_class(const Vector& x) const { return hh0_.class_of(x); }

  /// Column k is x * b_k (resp. b_k * x).
  Matrix left_multiplication(const Vector& x) const;
  Matrix right_multiplication(const Vector& x) const;

  /// dim e_i J e_i / e_i J^2 e_i.
  std::size_t loops_at(std::size_t vertex) const;

  bool is_associative() const;
  bool unit_laws_hold() const;
  bool idempotents_are_orthogonal() const;

 private:
  Parts parts_;
  std::vector<Subspace> radical_layers_;  // J^0, ..., J^t with J^t = 0
  Hh0Basis hh0_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Smallest two-sided ideal containing the given elements.
Subspace two_sided_ideal(const Algebra& a, const std::vector<Vector>& elements);

/// kQ/I with basis the normal-form paths. Throws when the arrow ideal is not
/// nilpotent modulo I within the presentation's cap.
AlgebraPtr build_algebra(const Presentation& p);

/// The element of A represented by a path or a linear combination of paths.
/// `a` must have been built from `p`.
Vector evaluate_path(const Algebra& a, const Presentation& p, const PathExpr& path);
Vector evaluate_terms(const Algebra& a, const Presentation& p, const std::vector<RelationTerm>& terms);

AlgebraPtr opposite(const Algebra& a);

/// A tensor B over the ground field; basis b_u (x) c_v at index u * dim(B) + v.
AlgebraPtr tensor(const Algebra& a, const Algebra& b);
Vector tensor_element(const Algebra& a, const Vector& x, const Algebra& b, const Vector& y);

struct Quotient {
  AlgebraPtr algebra;
  Subspace ideal;
  Matrix projection;  // dim(quotient) x dim(A)

  Vector project(const Vector& x) const { return projection * x; }
};

/// A / I for a two-sided ideal I; throws std::invalid_argument otherwise.
Quotient ideal_quotient(const Algebra& a, const Subspace& ideal);

/// A / A(1 - e_i)A.
Quotient corner_quotient(const Algebra& a, std::size_t vertex);

}  // namespace hstrace
