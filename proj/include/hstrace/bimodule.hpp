#pragma once

#include "hstrace/module.hpp"

#include <utility>
#include <vector>

namespace hstrace {

/// A-B-bimodules are right modules over  A^op (x) B : a bimodule element m
/// times (a (x) b) is a m b.
struct Envelope {
  AlgebraPtr left;     // A
  AlgebraPtr right;    // B
  AlgebraPtr left_op;  // A^op
  AlgebraPtr env;      // A^op (x) B

  Vector left_element(const Vector& a) const;   // a (x) 1
  Vector right_element(const Vector& b) const;  // 1 (x) b
  /// Index of the envelope idempotent e_i (x) f_j.
  std::size_t vertex(std::size_t i, std::size_t j) const { return i * right->num_vertices() + j; }
};

Envelope make_envelope(const AlgebraPtr& a, const AlgebraPtr& b);

/// Packs commuting one-sided actions (matrices of m -> b_u m and m -> m b_v on
/// basis elements) into a right envelope module. Throws if they do not commute.
ModulePtr bimodule_as_right_module(const Envelope& e, std::size_t dim, const std::vector<Matrix>& left,
                                   const std::vector<Matrix>& right);

/// Matrices of m -> a m and m -> m b on a right envelope module.
Matrix left_action(const Envelope& e, const RightModule& m, const Vector& a);
Matrix right_action(const Envelope& e, const RightModule& m, const Vector& b);

/// A as an A-A-bimodule; requires e.left == e.right.
ModulePtr regular_bimodule(const Envelope& e);
/// A quotient algebra Abar = A/I as an A-Abar-bimodule; e must be
/// make_envelope(A, q.algebra).
ModulePtr quotient_bimodule(const Envelope& e, const Matrix& projection);

/// The underlying right B-module (resp. right module over A^op, i.e. the left A-module).
ModulePtr underlying_right(const Envelope& e, const ModulePtr& m);
ModulePtr underlying_left(const Envelope& e, const ModulePtr& m);

/// Sum of projective bimodules  A e_i (x) f_j B.
ProjectiveSum projective_bimodule(const Envelope& e, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

}  // namespace hstrace
