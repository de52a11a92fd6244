#include "hstrace/bimodule.hpp"

#include <stdexcept>

namespace hstrace {

Vector Envelope::left_element(const Vector& a) const { return tensor_element(*left_op, a, *right, right->unit()); }

Vector Envelope::right_element(const Vector& b) const { return tensor_element(*left_op, left_op->unit(), *right, b); }

Envelope make_envelope(const AlgebraPtr& a, const AlgebraPtr& b) {
  Envelope e;
  e.left = a;
  e.right = b;
  e.left_op = opposite(*a);
  e.env = tensor(*e.left_op, *b);
  return e;
}

ModulePtr bimodule_as_right_module(const Envelope& e, std::size_t dim, const std::vector<Matrix>& left,
                                   const std::vector<Matrix>& right) {
  const std::size_t na = e.left->dim(), nb = e.right->dim();
  if (left.size() != na || right.size() != nb) throw std::invalid_argument("bimodule: one action matrix per basis element");
  for (std::size_t u = 0; u < na; ++u)
    for (std::size_t v = 0; v < nb; ++v)
      if (!(left[u] * right[v] == right[v] * left[u])) throw std::invalid_argument("bimodule: actions do not commute");
  std::vector<Matrix> action;
  action.reserve(na * nb);
  for (std::size_t u = 0; u < na; ++u)
    for (std::size_t v = 0; v < nb; ++v) action.push_back(left[u] * right[v]);
  return std::make_shared<RightModule>(e.env, dim, std::move(action));
}

Matrix left_action(const Envelope& e, const RightModule& m, const Vector& a) { return m.act(e.left_element(a)); }

Matrix right_action(const Envelope& e, const RightModule& m, const Vector& b) { return m.act(e.right_element(b)); }

ModulePtr regular_bimodule(const Envelope& e) {
  if (e.left != e.right) throw std::invalid_argument("regular_bimodule: envelope of two different algebras");
  const Algebra& a = *e.left;
  std::vector<Matrix> left, right;
  for (std::size_t u = 0; u < a.dim(); ++u) {
    left.push_back(a.left_multiplication(a.basis_element(u)));
    right.push_back(a.right_multiplication(a.basis_element(u)));
  }
  return bimodule_as_right_module(e, a.dim(), left, right);
}

ModulePtr quotient_bimodule(const Envelope& e, const Matrix& projection) {
  const Algebra& a = *e.left;
  const Algebra& q = *e.right;
  if (projection.rows() != q.dim() || projection.cols() != a.dim())
    throw std::invalid_argument("quotient_bimodule: projection has wrong shape");
  std::vector<Matrix> left, right;
  for (std::size_t u = 0; u < a.dim(); ++u) left.push_back(q.left_multiplication(projection.column(u)));
  for (std::size_t v = 0; v < q.dim(); ++v) right.push_back(q.right_multiplication(q.basis_element(v)));
  return bimodule_as_right_module(e, q.dim(), left, right);
}

ModulePtr underlying_right(const Envelope& e, const ModulePtr& m) {
  std::vector<Vector> images;
  for (std::size_t v = 0; v < e.right->dim(); ++v) images.push_back(e.right_element(e.right->basis_element(v)));
  return restrict_scalars(m, e.right, images);
}

ModulePtr underlying_left(const Envelope& e, const ModulePtr& m) {
  std::vector<Vector> images;
  for (std::size_t u = 0; u < e.left->dim(); ++u) images.push_back(e.left_element(e.left->basis_element(u)));
  return restrict_scalars(m, e.left_op, images);
}

ProjectiveSum projective_bimodule(const Envelope& e, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<std::size_t> vertices;
  for (const auto& [i, j] : pairs) vertices.push_back(e.vertex(i, j));
  return ProjectiveSum::of_vertices(e.env, vertices);
}

}  // namespace hstrace
