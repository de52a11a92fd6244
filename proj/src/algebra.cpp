#include "hstrace/algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace hstrace {

TraceClass& TraceClass::operator+=(const TraceClass& o) {
  if (coordinates.size() != o.coordinates.size()) throw std::invalid_argument("trace classes of different algebras");
  for (std::size_t i = 0; i < coordinates.size(); ++i) coordinates[i] += o.coordinates[i];
  return *this;
}

TraceClass& TraceClass::operator-=(const TraceClass& o) {
  if (coordinates.size() != o.coordinates.size()) throw std::invalid_argument("trace classes of different algebras");
  for (std::size_t i = 0; i < coordinates.size(); ++i) coordinates[i] -= o.coordinates[i];
  return *this;
}

TraceClass TraceClass::operator-() const { return {scale(coordinates, Scalar(-1))}; }

namespace {

SparseVector to_sparse(const Vector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

/// Closes `s` under x -> g x (left) and/or x -> x g (right) for generators g.
void close_under(const Algebra& a, Subspace& s, bool left, bool right) {
  std::deque<Vector> work(s.basis().begin(), s.basis().end());
  while (!work.empty()) {
    Vector v = std::move(work.front());
    work.pop_front();
    for (const auto& g : a.generators()) {
      if (left) {
        Vector w = a.multiply(g, v);
        if (s.add(w)) work.push_back(std::move(w));
      }
      if (right) {
        Vector w = a.multiply(v, g);
        if (s.add(w)) work.push_back(std::move(w));
      }
    }
  }
}

}  // namespace

Algebra::Algebra(Parts parts) : parts_(std::move(parts)) {
  const std::size_t n = dim();
  if (parts_.table.size() != n * n) throw std::invalid_argument("multiplication table has wrong size");
  if (parts_.unit.size() != n) throw std::invalid_argument("unit has wrong length");
  if (parts_.vertex_names.size() != parts_.idempotents.size())
    throw std::invalid_argument("one vertex name per idempotent required");

  radical_layers_.push_back(Subspace::whole(n));
  Subspace j1 = two_sided_ideal(*this, parts_.radical_generators);
  while (true) {
    const Subspace& prev = radical_layers_.back();
    if (prev.dim() == 0) break;
    if (radical_layers_.size() > n + 1) throw std::runtime_error("radical is not nilpotent");
    Subspace next(n);
    if (radical_layers_.size() == 1) {
      next = j1;
    } else {
      for (const auto& x : prev.basis())
        for (const auto& r : parts_.radical_generators) next.add(multiply(x, r));
      close_under(*this, next, false, true);
    }
    radical_layers_.push_back(std::move(next));
  }

  Subspace comm(n);
  for (const auto& g : parts_.generators)
    for (std::size_t j = 0; j < n; ++j) comm.add(commutator(g, basis_element(j)));
  hh0_ = Hh0Basis(std::move(comm));
}

Vector Algebra::multiply(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("multiply: element of another algebra");
  Vector r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const SparseVector& p = product(i, j);
      if (p.empty()) continue;
      Scalar c = x[i] * y[j];
      for (const auto& [k, v] : p) r[k] += c * v;
    }
  }
  return r;
}

Vector Algebra::commutator(const Vector& x, const Vector& y) const { return sub(multiply(x, y), multiply(y, x)); }

const Subspace& Algebra::radical_power(std::size_t j) const {
  return radical_layers_[std::min(j, radical_layers_.size() - 1)];
}

Matrix Algebra::left_multiplication(const Vector& x) const {
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < dim(); ++k) cols.push_back(multiply(x, basis_element(k)));
  return Matrix::from_columns(dim(), cols);
}

Matrix Algebra::right_multiplication(const Vector& x) const {
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < dim(); ++k) cols.push_back(multiply(basis_element(k), x));
  return Matrix::from_columns(dim(), cols);
}

std::size_t Algebra::loops_at(std::size_t vertex) const {
  const Vector& e = idempotent(vertex);
  auto corner_dim = [&](const Subspace& s) {
    Subspace c(dim());
    for (const auto& x : s.basis()) c.add(multiply(multiply(e, x), e));
    return c.dim();
  };
  return corner_dim(radical_power(1)) - corner_dim(radical_power(2));
}

bool Algebra::is_associative() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector bi = basis_element(i), bj = basis_element(j), bk = basis_element(k);
        if (multiply(multiply(bi, bj), bk) != multiply(bi, multiply(bj, bk))) return false;
      }
  return true;
}

bool Algebra::unit_laws_hold() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    Vector b = basis_element(i);
    if (multiply(unit(), b) != b || multiply(b, unit()) != b) return false;
  }
  return true;
}

bool Algebra::idempotents_are_orthogonal() const {
  Vector sum = zero();
  for (std::size_t i = 0; i < num_vertices(); ++i) {
    sum = add(sum, idempotent(i));
    for (std::size_t j = 0; j < num_vertices(); ++j) {
      Vector p = multiply(idempotent(i), idempotent(j));
      if (i == j ? p != idempotent(i) : !hstrace::is_zero(p)) return false;
    }
  }
  return sum == unit();
}

Subspace two_sided_ideal(const Algebra& a, const std::vector<Vector>& elements) {
  Subspace s = Subspace::span(a.dim(), elements);
  close_under(a, s, true, true);
  return s;
}

// ---------------------------------------------------------------------------
// Path algebra modulo relations

namespace {

struct PathSpace {
  std::vector<PathExpr> paths;  // ordered by (length, arrow sequence)
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;

  static std::pair<std::size_t, std::vector<std::size_t>> key(const PathExpr& p) {
    return {p.arrows.empty() ? p.vertex : 0, p.arrows};
  }

  PathSpace(const Quiver& q, std::size_t max_len) {
    std::vector<PathExpr> layer;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) layer.push_back({{}, v});
    for (std::size_t len = 0;; ++len) {
      for (const auto& p : layer) {
        index[key(p)] = paths.size();
        paths.push_back(p);
      }
      if (len == max_len) break;
      std::vector<PathExpr> next;
      for (const auto& p : layer) {
        std::size_t end = len == 0 ? p.vertex : q.arrows[p.arrows.back()].target;
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
          if (q.arrows[a].source != end) continue;
          PathExpr np{p.arrows, 0};
          np.arrows.push_back(a);
          np.vertex = q.arrows[np.arrows.front()].source;
          next.push_back(std::move(np));
        }
      }
      layer = std::move(next);
    }
  }

  std::size_t size() const { return paths.size(); }

  std::optional<std::size_t> find(const PathExpr& p) const {
    auto it = index.find(key(p));
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

std::optional<PathExpr> concat(const Quiver& q, const PathExpr& x, const PathExpr& y) {
  std::size_t xt = x.arrows.empty() ? x.vertex : q.arrows[x.arrows.back()].target;
  std::size_t ys = y.arrows.empty() ? y.vertex : q.arrows[y.arrows.front()].source;
  if (xt != ys) return std::nullopt;
  if (x.arrows.empty()) return y;
  if (y.arrows.empty()) return x;
  PathExpr r = x;
  r.arrows.insert(r.arrows.end(), y.arrows.begin(), y.arrows.end());
  return r;
}

/// Multiplies a vector over paths of length <= max by a single path on the
/// left or right, discarding paths longer than the truncation.
Vector multiply_path(const Quiver& q, const PathSpace& space, const Vector& v, const PathExpr& by, bool on_left) {
  Vector r(space.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    auto prod = on_left ? concat(q, by, space.paths[i]) : concat(q, space.paths[i], by);
    if (!prod) continue;
    if (auto idx = space.find(*prod)) r[*idx] += v[i];
  }
  return r;
}

// Positions inside the ideal subspace are reversed so that RREF pivots land
// on the largest paths and the surviving normal forms are the smallest ones.
Vector reversed(const Vector& v) { return Vector(v.rbegin(), v.rend()); }

}  // namespace

AlgebraPtr build_algebra(const Presentation& pres) {
  auto report = validate(pres);
  if (!report.ok()) throw std::invalid_argument("invalid presentation: " + report.errors.front());
  const Quiver& q = pres.quiver;
  const FieldSpec& field = pres.field;

  for (std::size_t n = 1; n <= pres.cap; ++n) {
    PathSpace space(q, n);
    const std::size_t np = space.size();

    std::vector<PathExpr> multipliers;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) multipliers.push_back({{}, v});
    for (std::size_t a = 0; a < q.arrows.size(); ++a) multipliers.push_back({{a}, q.arrows[a].source});

    Subspace ideal(np);
    std::deque<Vector> work;
    for (const auto& rel : pres.relations) {
      Vector v(np);
      for (const auto& t : rel.terms)
        if (auto idx = space.find(t.path)) v[*idx] += field.normalize(t.coefficient);
      Vector rv = reversed(v);
      if (ideal.add(rv)) work.push_back(rv);
    }
    while (!work.empty()) {
      Vector rv = std::move(work.front());
      work.pop_front();
      Vector v = reversed(rv);
      for (const auto& m : multipliers)
        for (bool left : {true, false}) {
          Vector w = reversed(multiply_path(q, space, v, m, left));
          if (ideal.add(w)) work.push_back(std::move(w));
        }
    }

    bool top_layer_killed = true;
    for (std::size_t i = 0; i < np && top_layer_killed; ++i)
      if (space.paths[i].length() == n) top_layer_killed = ideal.contains(reversed(unit_vector(np, i)));
    if (!top_layer_killed) continue;

    // Normal-form basis: paths whose reversed position is not a pivot.
    std::vector<std::size_t> basis_paths;
    for (std::size_t pos : ideal.complement()) basis_paths.push_back(np - 1 - pos);
    std::sort(basis_paths.begin(), basis_paths.end());
    const std::size_t dim = basis_paths.size();
    std::vector<std::size_t> path_to_basis(np, dim);
    for (std::size_t k = 0; k < dim; ++k) path_to_basis[basis_paths[k]] = k;

    auto normal_form = [&](const Vector& v) {
      Vector red = reversed(ideal.reduce(reversed(v)));
      Vector out(dim);
      for (std::size_t i = 0; i < np; ++i)
        if (!red[i].is_zero()) out[path_to_basis[i]] = red[i];
      return out;
    };

    Algebra::Parts parts;
    parts.field = field;
    for (auto idx : basis_paths) parts.labels.push_back(path_to_string(q, space.paths[idx]));
    parts.table.resize(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        auto prod = concat(q, space.paths[basis_paths[i]], space.paths[basis_paths[j]]);
        if (!prod || prod->length() >= n) continue;
        Vector nf = normal_form(unit_vector(np, *space.find(*prod)));
        parts.table[i * dim + j] = to_sparse(nf);
      }
    parts.unit = Vector(dim);
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
      Vector e = normal_form(unit_vector(np, *space.find(PathExpr{{}, v})));
      parts.unit = add(parts.unit, e);
      parts.idempotents.push_back(e);
      parts.vertex_names.push_back(q.vertices[v]);
      parts.generators.push_back(e);
    }
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      Vector x = normal_form(unit_vector(np, *space.find(PathExpr{{a}, q.arrows[a].source})));
      parts.generators.push_back(x);
      parts.radical_generators.push_back(x);
    }
    for (auto& s : parts.unit) s = field.normalize(s);
    return std::make_shared<Algebra>(std::move(parts));
  }
  throw std::runtime_error("not admissible within cap " + std::to_string(pres.cap) +
                           ": arrow ideal powers do not vanish modulo the relations");
}

Vector evaluate_path(const Algebra& a, const Presentation& p, const PathExpr& path) {
  const std::size_t nv = p.quiver.vertices.size();
  if (a.generators().size() != nv + p.quiver.arrows.size())
    throw std::invalid_argument("algebra was not built from this presentation");
  if (path.arrows.empty()) return a.generators().at(path.vertex);
  if (!is_composable(p.quiver, path)) throw std::invalid_argument("path is not composable");
  Vector x = a.generators().at(nv + path.arrows.front());
  for (std::size_t i = 1; i < path.arrows.size(); ++i) x = a.multiply(x, a.generators().at(nv + path.arrows[i]));
  return x;
}

Vector evaluate_terms(const Algebra& a, const Presentation& p, const std::vector<RelationTerm>& terms) {
  Vector x = a.zero();
  for (const auto& t : terms) axpy(x, a.field().normalize(t.coefficient), evaluate_path(a, p, t.path));
  return x;
}

AlgebraPtr opposite(const Algebra& a) {
  Algebra::Parts parts;
  parts.field = a.field();
  parts.labels = a.labels();
  const std::size_t n = a.dim();
  parts.table.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) parts.table[i * n + j] = a.product(j, i);
  parts.unit = a.unit();
  parts.idempotents = a.idempotents();
  parts.vertex_names = a.vertex_names();
  parts.generators = a.generators();
  parts.radical_generators = a.radical_generators();
  return std::make_shared<Algebra>(std::move(parts));
}

Vector tensor_element(const Algebra& a, const Vector& x, const Algebra& b, const Vector& y) {
  Vector r(a.dim() * b.dim());
  for (std::size_t u = 0; u < a.dim(); ++u) {
    if (x[u].is_zero()) continue;
    for (std::size_t v = 0; v < b.dim(); ++v)
      if (!y[v].is_zero()) r[u * b.dim() + v] = x[u] * y[v];
  }
  return r;
}

AlgebraPtr tensor(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("tensor: field mismatch");
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  Algebra::Parts parts;
  parts.field = a.field();
  for (std::size_t u = 0; u < na; ++u)
    for (std::size_t v = 0; v < nb; ++v) parts.labels.push_back(a.labels()[u] + "⊗" + b.labels()[v]);
  parts.table.resize(n * n);
  for (std::size_t u = 0; u < na; ++u)
    for (std::size_t v = 0; v < nb; ++v)
      for (std::size_t u2 = 0; u2 < na; ++u2) {
        const SparseVector& pa = a.product(u, u2);
        if (pa.empty()) continue;
        for (std::size_t v2 = 0; v2 < nb; ++v2) {
          const SparseVector& pb = b.product(v, v2);
          if (pb.empty()) continue;
          SparseVector& out = parts.table[(u * nb + v) * n + (u2 * nb + v2)];
          for (const auto& [i, ci] : pa)
            for (const auto& [j, cj] : pb) out.emplace_back(i * nb + j, ci * cj);
          std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
        }
      }
  parts.unit = tensor_element(a, a.unit(), b, b.unit());
  for (std::size_t i = 0; i < a.num_vertices(); ++i)
    for (std::size_t j = 0; j < b.num_vertices(); ++j) {
      parts.idempotents.push_back(tensor_element(a, a.idempotent(i), b, b.idempotent(j)));
      parts.vertex_names.push_back(a.vertex_names()[i] + "|" + b.vertex_names()[j]);
    }
  for (const auto& g : a.generators()) parts.generators.push_back(tensor_element(a, g, b, b.unit()));
  for (const auto& g : b.generators()) parts.generators.push_back(tensor_element(a, a.unit(), b, g));
  for (const auto& r : a.radical_generators()) parts.radical_generators.push_back(tensor_element(a, r, b, b.unit()));
  for (const auto& r : b.radical_generators()) parts.radical_generators.push_back(tensor_element(a, a.unit(), b, r));
  return std::make_shared<Algebra>(std::move(parts));
}

Quotient ideal_quotient(const Algebra& a, const Subspace& ideal) {
  if (ideal.ambient() != a.dim()) throw std::invalid_argument("ideal_quotient: subspace of another space");
  if (two_sided_ideal(a, ideal.basis()).dim() != ideal.dim())
    throw std::invalid_argument("ideal_quotient: subspace is not a two-sided ideal");
  const std::vector<std::size_t> keep = ideal.complement();
  const std::size_t n = keep.size();

  Quotient q;
  q.ideal = ideal;
  q.projection = Matrix(n, a.dim());
  for (std::size_t b = 0; b < a.dim(); ++b) {
    Vector c = ideal.quotient_coordinates(a.basis_element(b));
    for (std::size_t i = 0; i < n; ++i) q.projection(i, b) = c[i];
  }
  auto project = [&](const Vector& x) { return ideal.quotient_coordinates(x); };

  Algebra::Parts parts;
  parts.field = a.field();
  for (auto k : keep) parts.labels.push_back(a.labels()[k]);
  parts.table.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVector& p = a.product(keep[i], keep[j]);
      if (p.empty()) continue;
      Vector full(a.dim());
      for (const auto& [k, c] : p) full[k] = c;
      parts.table[i * n + j] = to_sparse(project(full));
    }
  parts.unit = project(a.unit());
  for (std::size_t i = 0; i < a.num_vertices(); ++i) {
    Vector e = project(a.idempotent(i));
    if (hstrace::is_zero(e)) continue;
    parts.idempotents.push_back(e);
    parts.vertex_names.push_back(a.vertex_names()[i]);
  }
  for (const auto& g : a.generators()) {
    Vector x = project(g);
    if (!hstrace::is_zero(x)) parts.generators.push_back(x);
  }
  for (const auto& r : a.radical_generators()) {
    Vector x = project(r);
    if (!hstrace::is_zero(x)) parts.radical_generators.push_back(x);
  }
  q.algebra = std::make_shared<Algebra>(std::move(parts));
  return q;
}

Quotient corner_quotient(const Algebra& a, std::size_t vertex) {
  if (vertex >= a.num_vertices()) throw std::out_of_range("corner_quotient: no such idempotent");
  Vector complement = sub(a.unit(), a.idempotent(vertex));
  return ideal_quotient(a, two_sided_ideal(a, {complement}));
}

}  // namespace hstrace
