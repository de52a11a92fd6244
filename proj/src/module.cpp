#include "hstrace/module.hpp"

#include <deque>
#include <random>
#include <stdexcept>

namespace hstrace {

namespace {

/// v * b_j using the sparse multiplication table.
Vector times_basis(const Algebra& a, const Vector& v, std::size_t j) {
  Vector r(a.dim());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (const auto& [k, c] : a.product(i, j)) r[k] += v[i] * c;
  }
  return r;
}

void require_same_algebra(const RightModule& m, const RightModule& n) {
  if (m.algebra_ptr() != n.algebra_ptr() && !(m.algebra().dim() == n.algebra().dim()))
    throw std::invalid_argument("modules over different algebras");
}

/// Action matrices of the module induced on a subspace basis.
std::vector<Matrix> restricted_action(const RightModule& m, const Subspace& u) {
  const std::size_t d = u.dim();
  std::vector<Matrix> action;
  action.reserve(m.algebra().dim());
  for (std::size_t b = 0; b < m.algebra().dim(); ++b) {
    Matrix r(d, d);
    for (std::size_t c = 0; c < d; ++c) {
      Vector img = m.action(b) * u.basis()[c];
      if (!u.contains(img)) throw std::invalid_argument("subspace is not a submodule");
      Vector coords = u.coordinates(img);
      for (std::size_t i = 0; i < d; ++i) r(i, c) = coords[i];
    }
    action.push_back(std::move(r));
  }
  return action;
}

}  // namespace

RightModule::RightModule(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), dim_(dim), action_(std::move(action)) {
  if (action_.size() != algebra_->dim()) throw std::invalid_argument("one action matrix per basis element required");
  for (const auto& m : action_)
    if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("action matrix has wrong shape");
}

Matrix RightModule::act(const Vector& x) const {
  Matrix r(dim_, dim_);
  for (std::size_t b = 0; b < x.size(); ++b) {
    if (x[b].is_zero()) continue;
    if (x[b].is_one()) r += action_[b];
    else r += x[b] * action_[b];
  }
  return r;
}

Vector RightModule::act(const Vector& x, const Vector& m) const {
  Vector r(dim_);
  for (std::size_t b = 0; b < x.size(); ++b) {
    if (x[b].is_zero()) continue;
    axpy(r, x[b], action_[b] * m);
  }
  return r;
}

bool RightModule::is_valid() const {
  const Algebra& a = *algebra_;
  if (!(act(a.unit()) == Matrix::identity(dim_, a.field()))) return false;
  for (const auto& g : a.generators()) {
    Matrix ag = act(g);
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!(act(a.multiply(g, a.basis_element(j))) == action_[j] * ag)) return false;
  }
  return true;
}

bool ModuleMap::is_homomorphism() const {
  if (matrix.rows() != target->dim() || matrix.cols() != source->dim()) return false;
  for (const auto& g : source->algebra().generators())
    if (!(matrix * source->act(g) == target->act(g) * matrix)) return false;
  return true;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (g.source->dim() != f.target->dim()) throw std::invalid_argument("compose: dimension mismatch");
  return {f.source, g.target, g.matrix * f.matrix};
}

ModuleMap operator+(const ModuleMap& f, const ModuleMap& g) { return {f.source, f.target, f.matrix + g.matrix}; }
ModuleMap operator-(const ModuleMap& f, const ModuleMap& g) { return {f.source, f.target, f.matrix - g.matrix}; }
ModuleMap operator*(const Scalar& c, const ModuleMap& f) { return {f.source, f.target, c * f.matrix}; }

ModuleMap identity_map(const ModulePtr& m) {
  return {m, m, Matrix::identity(m->dim(), m->algebra().field())};
}

ModuleMap zero_map(const ModulePtr& source, const ModulePtr& target) {
  return {source, target, Matrix(target->dim(), source->dim())};
}

std::optional<ModuleMap> invert(const ModuleMap& f) {
  auto inv = inverse(f.matrix);
  if (!inv) return std::nullopt;
  return ModuleMap{f.target, f.source, *inv};
}

ModulePtr zero_module(const AlgebraPtr& a) {
  return std::make_shared<RightModule>(a, 0, std::vector<Matrix>(a->dim(), Matrix(0, 0)));
}

ModulePtr regular_module(const AlgebraPtr& a) {
  std::vector<Matrix> action;
  for (std::size_t b = 0; b < a->dim(); ++b) action.push_back(a->right_multiplication(a->basis_element(b)));
  return std::make_shared<RightModule>(a, a->dim(), std::move(action));
}

Subspace generated_submodule(const RightModule& m, const std::vector<Vector>& vectors) {
  Subspace s = Subspace::span(m.dim(), vectors);
  std::vector<Matrix> gens;
  for (const auto& g : m.algebra().generators()) gens.push_back(m.act(g));
  std::deque<Vector> work(s.basis().begin(), s.basis().end());
  while (!work.empty()) {
    Vector v = std::move(work.front());
    work.pop_front();
    for (const auto& g : gens) {
      Vector w = g * v;
      if (s.add(w)) work.push_back(std::move(w));
    }
  }
  return s;
}

Embedded submodule(const ModulePtr& m, const Subspace& u) {
  auto sub = std::make_shared<RightModule>(m->algebra_ptr(), u.dim(), restricted_action(*m, u));
  Matrix incl = Matrix::from_columns(m->dim(), u.basis());
  return {sub, ModuleMap{sub, m, std::move(incl)}};
}

Embedded quotient_module(const ModulePtr& m, const Subspace& u) {
  const std::vector<std::size_t> keep = u.complement();
  const std::size_t q = keep.size();
  Matrix proj(q, m->dim());
  for (std::size_t c = 0; c < m->dim(); ++c) {
    Vector coords = u.quotient_coordinates(unit_vector(m->dim(), c));
    for (std::size_t i = 0; i < q; ++i) proj(i, c) = coords[i];
  }
  std::vector<Matrix> action;
  for (std::size_t b = 0; b < m->algebra().dim(); ++b) {
    Matrix r(q, q);
    for (std::size_t c = 0; c < q; ++c) {
      Vector coords = u.quotient_coordinates(m->action(b).column(keep[c]));
      for (std::size_t i = 0; i < q; ++i) r(i, c) = coords[i];
    }
    action.push_back(std::move(r));
  }
  auto quo = std::make_shared<RightModule>(m->algebra_ptr(), q, std::move(action));
  return {quo, ModuleMap{m, quo, std::move(proj)}};
}

Embedded kernel(const ModuleMap& f) {
  return submodule(f.source, Subspace::span(f.source->dim(), kernel_basis(f.matrix)));
}

Subspace image(const ModuleMap& f) {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < f.matrix.cols(); ++c) cols.push_back(f.matrix.column(c));
  return Subspace::span(f.target->dim(), cols);
}

Subspace radical_submodule(const RightModule& m) {
  std::vector<Vector> seeds;
  for (const auto& r : m.algebra().radical_generators()) {
    Matrix ar = m.act(r);
    for (std::size_t c = 0; c < m.dim(); ++c) seeds.push_back(ar.column(c));
  }
  return generated_submodule(m, seeds);
}

DirectSum direct_sum(const std::vector<ModulePtr>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of no modules");
  const AlgebraPtr& a = parts.front()->algebra_ptr();
  std::size_t total = 0;
  for (const auto& p : parts) total += p->dim();
  std::vector<Matrix> action;
  for (std::size_t b = 0; b < a->dim(); ++b) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p->action(b));
    action.push_back(block_diagonal(blocks));
  }
  DirectSum ds;
  ds.module = std::make_shared<RightModule>(a, total, std::move(action));
  std::size_t off = 0;
  for (const auto& p : parts) {
    Matrix inj(total, p->dim()), proj(p->dim(), total);
    for (std::size_t i = 0; i < p->dim(); ++i) {
      inj(off + i, i) = Scalar(1);
      proj(i, off + i) = Scalar(1);
    }
    ds.injections.push_back({p, ds.module, std::move(inj)});
    ds.projections.push_back({ds.module, p, std::move(proj)});
    off += p->dim();
  }
  return ds;
}

ModulePtr restrict_scalars(const ModulePtr& m, const AlgebraPtr& b, const std::vector<Vector>& images) {
  if (images.size() != b->dim()) throw std::invalid_argument("restrict_scalars: one image per basis element");
  std::vector<Matrix> action;
  for (const auto& x : images) action.push_back(m->act(x));
  return std::make_shared<RightModule>(b, m->dim(), std::move(action));
}

// ---------------------------------------------------------------------------
// Sums of projectives eA

ProjectiveSum::ProjectiveSum(AlgebraPtr a, std::vector<Vector> blocks) : algebra_(std::move(a)), blocks_(std::move(blocks)) {
  const Algebra& alg = *algebra_;
  std::size_t total = 0;
  for (const auto& e : blocks_) {
    if (alg.multiply(e, e) != e) throw std::invalid_argument("projective block is not idempotent");
    std::vector<Vector> gens;
    for (std::size_t j = 0; j < alg.dim(); ++j) gens.push_back(alg.multiply(e, alg.basis_element(j)));
    spaces_.push_back(Subspace::span(alg.dim(), gens));
    offsets_.push_back(total);
    total += spaces_.back().dim();
  }
  std::vector<Matrix> action;
  for (std::size_t b = 0; b < alg.dim(); ++b) {
    Matrix r(total, total);
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      const Subspace& s = spaces_[k];
      for (std::size_t c = 0; c < s.dim(); ++c) {
        Vector coords = s.coordinates(times_basis(alg, s.basis()[c], b));
        for (std::size_t i = 0; i < s.dim(); ++i) r(offsets_[k] + i, offsets_[k] + c) = coords[i];
      }
    }
    action.push_back(std::move(r));
  }
  module_ = std::make_shared<RightModule>(algebra_, total, std::move(action));
}

ProjectiveSum ProjectiveSum::of_vertices(const AlgebraPtr& a, const std::vector<std::size_t>& vertices) {
  std::vector<Vector> blocks;
  for (auto v : vertices) blocks.push_back(a->idempotent(v));
  return ProjectiveSum(a, std::move(blocks));
}

ProjectiveSum ProjectiveSum::free(const AlgebraPtr& a, std::size_t rank) {
  return ProjectiveSum(a, std::vector<Vector>(rank, a->unit()));
}

Vector ProjectiveSum::element(const std::vector<Vector>& components) const {
  if (components.size() != rank()) throw std::invalid_argument("element: wrong number of components");
  Vector m(module_->dim());
  for (std::size_t k = 0; k < rank(); ++k) {
    if (!spaces_[k].contains(components[k])) throw std::invalid_argument("element: component outside its block");
    Vector c = spaces_[k].coordinates(components[k]);
    for (std::size_t i = 0; i < c.size(); ++i) m[offsets_[k] + i] = c[i];
  }
  return m;
}

std::vector<Vector> ProjectiveSum::components(const Vector& m) const {
  std::vector<Vector> out;
  for (std::size_t k = 0; k < rank(); ++k) {
    Vector x = algebra_->zero();
    const Subspace& s = spaces_[k];
    for (std::size_t i = 0; i < s.dim(); ++i)
      if (!m[offsets_[k] + i].is_zero()) axpy(x, m[offsets_[k] + i], s.basis()[i]);
    out.push_back(std::move(x));
  }
  return out;
}

Vector ProjectiveSum::generator(std::size_t k) const {
  std::vector<Vector> comps(rank(), algebra_->zero());
  comps[k] = blocks_[k];
  return element(comps);
}

ModuleMap ProjectiveSum::map_to(const ModulePtr& n, const std::vector<Vector>& images) const {
  if (images.size() != rank()) throw std::invalid_argument("map_to: one image per generator required");
  Matrix f(n->dim(), module_->dim());
  for (std::size_t k = 0; k < rank(); ++k) {
    if (n->act(blocks_[k], images[k]) != images[k])
      throw std::invalid_argument("map_to: image does not lie in N e");
    const Subspace& s = spaces_[k];
    for (std::size_t c = 0; c < s.dim(); ++c) {
      Vector col = n->act(s.basis()[c], images[k]);
      for (std::size_t i = 0; i < n->dim(); ++i) f(i, offsets_[k] + c) = col[i];
    }
  }
  return {module_, n, std::move(f)};
}

ModuleMap ProjectiveSum::map_from_matrix(const ProjectiveSum& target, const AlgMatrix& m) const {
  if (m.rows != target.rank() || m.cols != rank()) throw std::invalid_argument("map_from_matrix: shape mismatch");
  std::vector<Vector> images;
  for (std::size_t l = 0; l < rank(); ++l) {
    std::vector<Vector> comps;
    for (std::size_t k = 0; k < target.rank(); ++k) comps.push_back(m.at(k, l));
    images.push_back(target.element(comps));
  }
  return map_to(target.module(), images);
}

AlgMatrix ProjectiveSum::matrix_of(const ModuleMap& f, const ProjectiveSum& target) const {
  AlgMatrix m(target.rank(), rank(), algebra_->dim());
  for (std::size_t l = 0; l < rank(); ++l) {
    auto comps = target.components(f.matrix * generator(l));
    for (std::size_t k = 0; k < target.rank(); ++k) m.at(k, l) = std::move(comps[k]);
  }
  return m;
}

std::vector<ModuleMap> ProjectiveSum::hom_basis(const ProjectiveSum& target, bool radical_only) const {
  std::vector<ModuleMap> out;
  for (const auto& m : hom_matrices(*this, target, radical_only)) out.push_back(map_from_matrix(target, m));
  return out;
}

ProjectiveSum ProjectiveSum::permuted(const std::vector<std::size_t>& order) const {
  std::vector<Vector> blocks;
  for (auto k : order) blocks.push_back(blocks_.at(k));
  return ProjectiveSum(algebra_, std::move(blocks));
}

ProjectiveSum concat(const ProjectiveSum& a, const ProjectiveSum& b) {
  std::vector<Vector> blocks = a.blocks();
  blocks.insert(blocks.end(), b.blocks().begin(), b.blocks().end());
  return ProjectiveSum(a.algebra_ptr(), std::move(blocks));
}

AlgMatrix identity_matrix(const ProjectiveSum& p) {
  AlgMatrix m(p.rank(), p.rank(), p.algebra_ptr()->dim());
  for (std::size_t k = 0; k < p.rank(); ++k) m.at(k, k) = p.block(k);
  return m;
}

AlgMatrix zero_matrix(const ProjectiveSum& from, const ProjectiveSum& to) {
  return AlgMatrix(to.rank(), from.rank(), from.algebra_ptr()->dim());
}

std::vector<AlgMatrix> hom_matrices(const ProjectiveSum& from, const ProjectiveSum& to, bool radical_only) {
  const Algebra& a = *from.algebra_ptr();
  std::vector<AlgMatrix> out;
  for (std::size_t l = 0; l < from.rank(); ++l)
    for (std::size_t k = 0; k < to.rank(); ++k)
      for (auto& x : corner_basis(a, to.block(k), from.block(l), radical_only)) {
        AlgMatrix m(to.rank(), from.rank(), a.dim());
        m.at(k, l) = std::move(x);
        out.push_back(std::move(m));
      }
  return out;
}

bool AlgMatrix::is_zero() const {
  for (const auto& e : entries)
    if (!hstrace::is_zero(e)) return false;
  return true;
}

AlgMatrix AlgMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows || c0 + nc > cols) throw std::out_of_range("AlgMatrix::block");
  AlgMatrix b;
  b.rows = nr;
  b.cols = nc;
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b.entries.push_back(at(r0 + r, c0 + c));
  return b;
}

void AlgMatrix::set_block(std::size_t r0, std::size_t c0, const AlgMatrix& m) {
  if (r0 + m.rows > rows || c0 + m.cols > cols) throw std::out_of_range("AlgMatrix::set_block");
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) at(r0 + r, c0 + c) = m.at(r, c);
}

AlgMatrix& AlgMatrix::operator+=(const AlgMatrix& o) {
  if (rows != o.rows || cols != o.cols) throw std::invalid_argument("AlgMatrix: shape mismatch");
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = add(entries[i], o.entries[i]);
  return *this;
}

AlgMatrix& AlgMatrix::operator-=(const AlgMatrix& o) {
  if (rows != o.rows || cols != o.cols) throw std::invalid_argument("AlgMatrix: shape mismatch");
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = sub(entries[i], o.entries[i]);
  return *this;
}

AlgMatrix operator*(const Scalar& c, AlgMatrix m) {
  for (auto& e : m.entries) e = scale(e, c);
  return m;
}

AlgMatrix compose(const Algebra& a, const AlgMatrix& g, const AlgMatrix& f) {
  if (g.cols != f.rows) throw std::invalid_argument("compose: shape mismatch");
  AlgMatrix r(g.rows, f.cols, a.dim());
  for (std::size_t k = 0; k < g.rows; ++k)
    for (std::size_t l = 0; l < g.cols; ++l) {
      const Vector& x = g.at(k, l);
      if (is_zero(x)) continue;
      for (std::size_t m = 0; m < f.cols; ++m) {
        const Vector& y = f.at(l, m);
        if (is_zero(y)) continue;
        r.at(k, m) = add(r.at(k, m), a.multiply(x, y));
      }
    }
  return r;
}

Vector diagonal_sum(const Algebra& a, const AlgMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("diagonal_sum: matrix is not square");
  Vector s = a.zero();
  for (std::size_t k = 0; k < m.rows; ++k) s = add(s, m.at(k, k));
  return s;
}

Vector flatten(const AlgMatrix& m) {
  Vector v;
  for (const auto& e : m.entries) v.insert(v.end(), e.begin(), e.end());
  return v;
}

std::vector<Vector> corner_basis(const Algebra& a, const Vector& e, const Vector& f, bool radical_only) {
  const Subspace& from = radical_only ? a.radical() : a.radical_power(0);
  std::vector<Vector> corner;
  for (const auto& x : from.basis()) corner.push_back(a.multiply(a.multiply(e, x), f));
  return Subspace::span(a.dim(), corner).basis();
}

ModulePtr indecomposable_projective(const AlgebraPtr& a, std::size_t vertex) {
  return ProjectiveSum::of_vertices(a, {vertex}).module();
}

ModulePtr simple_module(const AlgebraPtr& a, std::size_t vertex) {
  ModulePtr p = indecomposable_projective(a, vertex);
  return quotient_module(p, radical_submodule(*p)).module;
}

std::vector<ModuleMap> hom_space(const ModulePtr& m, const ModulePtr& n) {
  require_same_algebra(*m, *n);
  const std::size_t dm = m->dim(), dn = n->dim(), unknowns = dm * dn;
  std::vector<ModuleMap> out;
  if (unknowns == 0) return out;
  const auto& gens = m->algebra().generators();
  // Unknown F(r, c) sits at index r * dm + c; one block of rows per generator.
  Matrix sys(gens.size() * unknowns, unknowns);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    Matrix am = m->act(gens[g]), an = n->act(gens[g]);
    const std::size_t base = g * unknowns;
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dm; ++c) {
        const std::size_t row = base + r * dm + c;
        for (std::size_t s = 0; s < dm; ++s)
          if (!am(s, c).is_zero()) sys(row, r * dm + s) += am(s, c);
        for (std::size_t s = 0; s < dn; ++s)
          if (!an(r, s).is_zero()) sys(row, s * dm + c) -= an(r, s);
      }
  }
  for (const auto& v : kernel_basis(sys)) {
    Matrix f(dn, dm);
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dm; ++c) f(r, c) = v[r * dm + c];
    out.push_back({m, n, std::move(f)});
  }
  return out;
}

Cover top_and_cover(const ModulePtr& m) {
  const AlgebraPtr& a = m->algebra_ptr();
  Subspace mj = radical_submodule(*m);
  Subspace seen = mj;
  std::vector<std::size_t> vertices;
  std::vector<Vector> images;
  for (std::size_t i = 0; i < a->num_vertices(); ++i) {
    Matrix ei = m->act(a->idempotent(i));
    for (std::size_t c = 0; c < m->dim(); ++c) {
      Vector v = ei.column(c);
      if (seen.add(v)) {
        vertices.push_back(i);
        images.push_back(std::move(v));
      }
    }
  }
  if (seen.dim() != m->dim()) throw std::logic_error("top_and_cover: idempotents do not sum to the unit");
  Cover cov;
  cov.top = quotient_module(m, mj).module;
  cov.projective = ProjectiveSum::of_vertices(a, vertices);
  cov.map = cov.projective.map_to(m, images);
  return cov;
}

std::vector<std::size_t> top_dimension_vector(const RightModule& m) {
  const Algebra& a = m.algebra();
  Subspace seen = radical_submodule(m);
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < a.num_vertices(); ++i) {
    Matrix ei = m.act(a.idempotent(i));
    std::size_t count = 0;
    for (std::size_t c = 0; c < m.dim(); ++c)
      if (seen.add(ei.column(c))) ++count;
    dims.push_back(count);
  }
  return dims;
}

bool is_isomorphic(const ModulePtr& m, const ModulePtr& n) {
  if (m->dim() != n->dim()) return false;
  if (m->dim() == 0) return true;
  if (top_dimension_vector(*m) != top_dimension_vector(*n)) return false;
  auto homs = hom_space(m, n);
  if (homs.empty()) return false;
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long long> coeff(-50, 50);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Matrix f(n->dim(), m->dim());
    for (const auto& h : homs) f += Scalar(coeff(rng)) * h.matrix;
    if (rank(f) == m->dim()) return true;
  }
  return false;
}

bool has_simple_summand(const RightModule& m, std::size_t vertex) {
  const Algebra& a = m.algebra();
  if (m.dim() == 0) return false;
  // Socle vectors of M e_i: killed by the radical and by 1 - e_i.
  std::vector<Matrix> rows;
  for (const auto& r : a.radical_generators()) rows.push_back(m.act(r));
  rows.push_back(m.act(sub(a.unit(), a.idempotent(vertex))));
  Subspace mj = radical_submodule(m);
  for (const auto& v : kernel_basis(vstack(rows)))
    if (!mj.contains(v)) return true;
  return false;
}

}  // namespace hstrace
