#include "hstrace/complex.hpp"

#include "hstrace/random.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hstrace {

ProjectiveSum ProjComplex::term(int degree) const {
  if (degree < lo || degree > hi()) return ProjectiveSum(algebra, {});
  return terms[static_cast<std::size_t>(degree - lo)];
}

AlgMatrix ProjComplex::differential(int degree) const {
  if (degree >= lo && degree < hi()) return d[static_cast<std::size_t>(degree - lo)];
  return AlgMatrix(term(degree + 1).rank(), term(degree).rank(), algebra->dim());
}

ModuleMap ProjComplex::differential_map(int degree) const {
  return term(degree).map_from_matrix(term(degree + 1), differential(degree));
}

ProjectiveRealization ProjComplex::component(int degree) const { return realize(term(degree)); }

bool ProjComplex::squares_to_zero() const {
  for (int i = lo; i + 1 < hi(); ++i)
    if (!compose(*algebra, differential(i + 1), differential(i)).is_zero()) return false;
  return true;
}

ComplexPtr make_complex(const AlgebraPtr& a, int lo, std::vector<ProjectiveSum> terms, std::vector<AlgMatrix> d) {
  if (terms.empty() ? !d.empty() : d.size() + 1 != terms.size())
    throw std::invalid_argument("make_complex: need one differential between consecutive terms");
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i].rows != terms[i + 1].rank() || d[i].cols != terms[i].rank())
      throw std::invalid_argument("make_complex: differential shape mismatch in degree " +
                                  std::to_string(lo + static_cast<int>(i)));
  auto c = std::make_shared<ProjComplex>();
  c->algebra = a;
  c->lo = lo;
  c->terms = std::move(terms);
  c->d = std::move(d);
  if (!c->squares_to_zero()) throw std::invalid_argument("make_complex: d o d != 0");
  return c;
}

// ---------------------------------------------------------------------------
// Chain maps

namespace {

std::pair<int, int> joint_range(const ComplexPtr& p, const ComplexPtr& q) {
  return {std::min(p->lo, q->lo), std::max(p->hi(), q->hi())};
}

ChainMap build_chain(const ComplexPtr& p, const ComplexPtr& q, const std::function<AlgMatrix(int)>& at) {
  auto [lo, hi] = joint_range(p, q);
  ChainMap f;
  f.source = p;
  f.target = q;
  f.lo = lo;
  for (int i = lo; i <= hi; ++i) f.f.push_back(at(i));
  return f;
}

void require_same_ends(const ChainMap& f, const ChainMap& g) {
  if (f.source != g.source || f.target != g.target)
    throw std::invalid_argument("chain maps between different complexes");
}

}  // namespace

AlgMatrix ChainMap::at(int degree) const {
  const int k = degree - lo;
  if (k >= 0 && k < static_cast<int>(f.size())) return f[static_cast<std::size_t>(k)];
  return zero_matrix(source->term(degree), target->term(degree));
}

bool ChainMap::commutes() const {
  const Algebra& a = *source->algebra;
  auto [lo_, hi_] = joint_range(source, target);
  for (int i = lo_ - 1; i <= hi_; ++i)
    if (!(compose(a, target->differential(i), at(i)) == compose(a, at(i + 1), source->differential(i)))) return false;
  return true;
}

AlgMatrix Homotopy::at(int degree) const {
  const int k = degree - lo;
  if (k >= 0 && k < static_cast<int>(s.size())) return s[static_cast<std::size_t>(k)];
  return zero_matrix(source->term(degree), target->term(degree - 1));
}

ChainMap make_chain_map(const ComplexPtr& p, const ComplexPtr& q, const std::vector<AlgMatrix>& components) {
  auto [lo, hi] = joint_range(p, q);
  if (components.size() != static_cast<std::size_t>(hi - lo + 1))
    throw std::invalid_argument("make_chain_map: one component per degree of the joint support expected");
  for (int i = lo; i <= hi; ++i) {
    const auto& m = components[static_cast<std::size_t>(i - lo)];
    if (m.rows != q->term(i).rank() || m.cols != p->term(i).rank())
      throw std::invalid_argument("make_chain_map: component shape mismatch in degree " + std::to_string(i));
  }
  ChainMap f;
  f.source = p;
  f.target = q;
  f.lo = lo;
  f.f = components;
  return f;
}

ChainMap identity_chain(const ComplexPtr& p) {
  return build_chain(p, p, [&](int i) { return identity_matrix(p->term(i)); });
}

ChainMap zero_chain(const ComplexPtr& p, const ComplexPtr& q) {
  return build_chain(p, q, [&](int i) { return zero_matrix(p->term(i), q->term(i)); });
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (g.source != f.target) throw std::invalid_argument("compose: chain maps do not match");
  const Algebra& a = *f.source->algebra;
  return build_chain(f.source, g.target, [&](int i) { return compose(a, g.at(i), f.at(i)); });
}

ChainMap operator+(const ChainMap& f, const ChainMap& g) {
  require_same_ends(f, g);
  return build_chain(f.source, f.target, [&](int i) { return f.at(i) + g.at(i); });
}

ChainMap operator-(const ChainMap& f, const ChainMap& g) {
  require_same_ends(f, g);
  return build_chain(f.source, f.target, [&](int i) { return f.at(i) - g.at(i); });
}

ChainMap operator*(const Scalar& c, const ChainMap& f) {
  return build_chain(f.source, f.target, [&](int i) { return c * f.at(i); });
}

ChainMap boundary(const Homotopy& h) {
  const Algebra& a = *h.source->algebra;
  return build_chain(h.source, h.target, [&](int i) {
    return compose(a, h.at(i + 1), h.source->differential(i)) + compose(a, h.target->differential(i - 1), h.at(i));
  });
}

std::optional<Homotopy> is_null_homotopic(const ChainMap& f) {
  const ComplexPtr& p = f.source;
  const ComplexPtr& q = f.target;
  MapSystem sys(p->algebra);
  // s^i is nonzero only when both P^i and Q^{i-1} are.
  const int slo = std::max(p->lo, q->lo + 1), shi = std::min(p->hi(), q->hi() + 1);
  std::vector<std::size_t> ids;
  for (int i = slo; i <= shi; ++i)
    ids.push_back(sys.add_unknown(hom_matrices(p->term(i), q->term(i - 1)), q->term(i - 1).rank(), p->term(i).rank()));
  auto id_at = [&](int i) -> std::optional<std::size_t> {
    if (i < slo || i > shi) return std::nullopt;
    return ids[static_cast<std::size_t>(i - slo)];
  };
  auto [lo, hi] = joint_range(p, q);
  for (int i = lo; i <= hi; ++i) {
    std::vector<MapSystem::Term> terms;
    if (auto s = id_at(i + 1)) terms.push_back({*s, std::nullopt, p->differential(i)});
    if (auto s = id_at(i)) terms.push_back({*s, q->differential(i - 1), std::nullopt});
    AlgMatrix rhs = f.at(i);
    if (terms.empty()) {
      if (!rhs.is_zero()) return std::nullopt;
      continue;
    }
    sys.add_equation(terms, rhs.rows, rhs.cols, rhs);
  }
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  Homotopy h;
  h.source = p;
  h.target = q;
  h.lo = slo;
  for (int i = slo; i <= shi; ++i) h.s.push_back(sys.value(*id_at(i), *sol));
  return h;
}

// ---------------------------------------------------------------------------
// Cone, cylinder, sums

ComplexPtr cone(const ChainMap& u) {
  const ComplexPtr& pp = u.source;
  const ComplexPtr& p = u.target;
  const Algebra& a = *p->algebra;
  const int lo = std::min(pp->lo - 1, p->lo), hi = std::max(pp->hi() - 1, p->hi());
  std::vector<ProjectiveSum> terms;
  for (int i = lo; i <= hi; ++i) terms.push_back(concat(pp->term(i + 1), p->term(i)));
  std::vector<AlgMatrix> d;
  for (int i = lo; i < hi; ++i) {
    const std::size_t b1 = pp->term(i + 2).rank(), c1 = p->term(i + 1).rank();
    const std::size_t b0 = pp->term(i + 1).rank(), c0 = p->term(i).rank();
    AlgMatrix m(b1 + c1, b0 + c0, a.dim());
    m.set_block(0, 0, Scalar(-1) * pp->differential(i + 1));
    m.set_block(b1, 0, u.at(i + 1));
    m.set_block(b1, b0, p->differential(i));
    d.push_back(std::move(m));
  }
  return make_complex(p->algebra, lo, std::move(terms), std::move(d));
}

ComplexPtr cylinder(const ChainMap& u) {
  const ComplexPtr& pp = u.source;
  const ComplexPtr& p = u.target;
  const Algebra& a = *p->algebra;
  const int lo = std::min(pp->lo - 1, p->lo), hi = std::max(pp->hi(), p->hi());
  std::vector<ProjectiveSum> terms;
  for (int i = lo; i <= hi; ++i) terms.push_back(concat(concat(pp->term(i), pp->term(i + 1)), p->term(i)));
  std::vector<AlgMatrix> d;
  for (int i = lo; i < hi; ++i) {
    const std::size_t a0 = pp->term(i).rank(), b0 = pp->term(i + 1).rank(), c0 = p->term(i).rank();
    const std::size_t a1 = pp->term(i + 1).rank(), b1 = pp->term(i + 2).rank(), c1 = p->term(i + 1).rank();
    AlgMatrix m(a1 + b1 + c1, a0 + b0 + c0, a.dim());
    m.set_block(0, 0, pp->differential(i));
    m.set_block(0, a0, Scalar(-1) * identity_matrix(pp->term(i + 1)));
    m.set_block(a1, a0, Scalar(-1) * pp->differential(i + 1));
    m.set_block(a1 + b1, a0, u.at(i + 1));
    m.set_block(a1 + b1, a0 + b0, p->differential(i));
    d.push_back(std::move(m));
  }
  return make_complex(p->algebra, lo, std::move(terms), std::move(d));
}

namespace {

AlgMatrix block_diag(const Algebra& a, const std::vector<AlgMatrix>& parts) {
  std::size_t r = 0, c = 0;
  for (const auto& m : parts) {
    r += m.rows;
    c += m.cols;
  }
  AlgMatrix out(r, c, a.dim());
  r = c = 0;
  for (const auto& m : parts) {
    out.set_block(r, c, m);
    r += m.rows;
    c += m.cols;
  }
  return out;
}

}  // namespace

ChainMap cone_endomorphism(const ComplexPtr& cn, const ChainMap& u, const ChainMap& f_prime, const ChainMap& f) {
  const Algebra& a = *cn->algebra;
  (void)u;
  return build_chain(cn, cn, [&](int i) { return block_diag(a, {f_prime.at(i + 1), f.at(i)}); });
}

ChainMap cylinder_endomorphism(const ComplexPtr& cyl, const ChainMap& u, const ChainMap& f_prime, const ChainMap& f) {
  const Algebra& a = *cyl->algebra;
  (void)u;
  return build_chain(cyl, cyl, [&](int i) { return block_diag(a, {f_prime.at(i), f_prime.at(i + 1), f.at(i)}); });
}

ComplexPtr direct_sum(const ComplexPtr& p, const ComplexPtr& q) {
  const Algebra& a = *p->algebra;
  auto [lo, hi] = joint_range(p, q);
  std::vector<ProjectiveSum> terms;
  for (int i = lo; i <= hi; ++i) terms.push_back(concat(p->term(i), q->term(i)));
  std::vector<AlgMatrix> d;
  for (int i = lo; i < hi; ++i) d.push_back(block_diag(a, {p->differential(i), q->differential(i)}));
  return make_complex(p->algebra, lo, std::move(terms), std::move(d));
}

// ---------------------------------------------------------------------------
// Characters

TraceClass hs_character(const ChainMap& f) {
  if (f.source != f.target) throw std::invalid_argument("hs_character: not an endomorphism");
  const Algebra& a = *f.source->algebra;
  TraceClass sum = a.hh0_class(a.zero());
  for (int i = f.source->lo; i <= f.source->hi(); ++i) {
    TraceClass t = matrix_trace(a, f.at(i));
    if (i % 2 == 0) sum += t;
    else sum -= t;
  }
  return sum;
}

TraceClass hs_character_via_realizations(const ChainMap& f) {
  if (f.source != f.target) throw std::invalid_argument("hs_character: not an endomorphism");
  const Algebra& a = *f.source->algebra;
  TraceClass sum = a.hh0_class(a.zero());
  for (int i = f.source->lo; i <= f.source->hi(); ++i) {
    ProjectiveSum t = f.source->term(i);
    TraceClass x = hs_trace(f.source->component(i), t.map_from_matrix(t, f.at(i)));
    if (i % 2 == 0) sum += x;
    else sum -= x;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Linear systems in maps

std::size_t MapSystem::add_unknown(std::vector<AlgMatrix> basis, std::size_t rows, std::size_t cols) {
  offsets_.push_back(total_);
  total_ += basis.size();
  bases_.push_back(std::move(basis));
  shapes_.emplace_back(rows, cols);
  return bases_.size() - 1;
}

void MapSystem::add_equation(const std::vector<Term>& terms, std::size_t rows, std::size_t cols,
                             const std::optional<AlgMatrix>& rhs) {
  const Algebra& a = *algebra_;
  const std::size_t n = rows * cols * a.dim();
  std::vector<Row> block(n);
  for (const auto& t : terms) {
    const auto& basis = bases_.at(t.unknown);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      AlgMatrix m = basis[j];
      if (t.left) m = compose(a, *t.left, m);
      if (t.right) m = compose(a, m, *t.right);
      if (m.rows != rows || m.cols != cols) throw std::invalid_argument("MapSystem: term shape mismatch");
      Vector flat = flatten(m);
      const std::size_t col = offsets_[t.unknown] + j;
      for (std::size_t r = 0; r < n; ++r)
        if (!flat[r].is_zero()) block[r].entries.emplace_back(col, t.sign * flat[r]);
    }
  }
  if (rhs) {
    if (rhs->rows != rows || rhs->cols != cols) throw std::invalid_argument("MapSystem: rhs shape mismatch");
    Vector flat = flatten(*rhs);
    for (std::size_t r = 0; r < n; ++r) block[r].rhs = flat[r];
  }
  for (auto& row : block)
    if (!row.entries.empty() || !row.rhs.is_zero()) rows_.push_back(std::move(row));
}

Matrix MapSystem::assemble(bool with_rhs) const {
  Matrix m(rows_.size(), with_rhs ? 1 : total_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (with_rhs) m(r, 0) = rows_[r].rhs;
    else
      for (const auto& [c, v] : rows_[r].entries) m(r, c) += v;
  }
  return m;
}

std::vector<Vector> MapSystem::kernel() const { return kernel_basis(assemble(false)); }

std::optional<Vector> MapSystem::solve() const {
  if (rows_.empty()) return Vector(total_);
  auto x = hstrace::solve(assemble(false), assemble(true));
  if (!x) return std::nullopt;
  return x->column(0);
}

AlgMatrix MapSystem::value(std::size_t id, const Vector& coefficients) const {
  const Algebra& a = *algebra_;
  AlgMatrix m(shapes_.at(id).first, shapes_.at(id).second, a.dim());
  const auto& basis = bases_[id];
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Scalar& c = coefficients.at(offsets_[id] + j);
    if (!c.is_zero()) m += c * basis[j];
  }
  return m;
}

std::vector<std::size_t> add_chain_unknowns(MapSystem& sys, const ComplexPtr& p, const ComplexPtr& q, int lo, int hi) {
  std::vector<std::size_t> ids;
  for (int i = lo; i <= hi; ++i)
    ids.push_back(sys.add_unknown(hom_matrices(p->term(i), q->term(i)), q->term(i).rank(), p->term(i).rank()));
  for (int i = lo; i < hi; ++i) {
    const auto x = ids[static_cast<std::size_t>(i - lo)], y = ids[static_cast<std::size_t>(i + 1 - lo)];
    sys.add_equation({{x, q->differential(i), std::nullopt}, {y, std::nullopt, p->differential(i), Scalar(-1)}},
                     q->term(i + 1).rank(), p->term(i).rank());
  }
  return ids;
}

// ---------------------------------------------------------------------------
// Character suite

namespace {

struct Tally {
  TheoremReport report;
  std::size_t checked = 0;

  void record(bool ok, std::size_t trial, const std::function<std::string()>& describe) {
    ++checked;
    if (!ok && report.outcome != Outcome::Refuted) report.refute("trial " + std::to_string(trial), describe());
  }
  TheoremReport finish() {
    report.witnesses.insert(report.witnesses.begin(), {"instances", std::to_string(checked)});
    return report;
  }
};

std::string pair_text(const TraceClass& l, const TraceClass& r) { return l.to_string() + " vs " + r.to_string(); }

Vector random_kernel_vector(const MapSystem& sys, const FieldSpec& field, Rng& rng) {
  Vector v(sys.num_unknown_coordinates());
  for (const auto& k : sys.kernel()) {
    const long long c = rng.uniform(-2, 2);
    if (c != 0) axpy(v, field.make(c), k);
  }
  return v;
}

/// A random pair (f', f) of endomorphisms of P' and P with f u = u f'.
std::pair<ChainMap, ChainMap> random_compatible_pair(const ChainMap& u, Rng& rng) {
  const ComplexPtr& pp = u.source;
  const ComplexPtr& p = u.target;
  MapSystem sys(p->algebra);
  auto a_ids = add_chain_unknowns(sys, pp, pp, pp->lo, pp->hi());
  auto b_ids = add_chain_unknowns(sys, p, p, p->lo, p->hi());
  const int lo = std::max(pp->lo, p->lo), hi = std::min(pp->hi(), p->hi());
  for (int i = lo; i <= hi; ++i) {
    const auto x = a_ids[static_cast<std::size_t>(i - pp->lo)];
    const auto y = b_ids[static_cast<std::size_t>(i - p->lo)];
    sys.add_equation({{y, std::nullopt, u.at(i)}, {x, u.at(i), std::nullopt, Scalar(-1)}}, p->term(i).rank(),
                     pp->term(i).rank());
  }
  Vector v = random_kernel_vector(sys, p->algebra->field(), rng);
  std::vector<AlgMatrix> fa, fb;
  for (auto id : a_ids) fa.push_back(sys.value(id, v));
  for (auto id : b_ids) fb.push_back(sys.value(id, v));
  return {make_chain_map(pp, pp, fa), make_chain_map(p, p, fb)};
}

}  // namespace

std::vector<TheoremReport> verify_character(const AlgebraPtr& a, std::size_t trials, std::uint64_t seed) {
  const Algebra& alg = *a;
  Rng rng(seed);
  std::vector<Tally> t(8);
  const char* ids[] = {"homotopy-invariance", "null-homotopic",         "isomorphism-invariance", "additivity",
                       "split-triangle",      "cylinder-cone-triangle", "trace-property",         "realization"};
  const char* what[] = {"homotopic endomorphisms",
                        "null-homotopic endomorphisms",
                        "transport along complex isomorphisms",
                        "additivity",
                        "split triangles",
                        "cylinder and cone of a map",
                        "chi(gf) = chi(fg)",
                        "termwise realizations agree with matrix traces"};
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i].report.id = ids[i];
    t[i].report.instance = what[i];
  }

  for (std::size_t trial = 0; trial < trials; ++trial) {
    ComplexPtr p = random_complex(a, rng);
    ChainMap f = random_chain_map(p, p, rng), g = random_chain_map(p, p, rng);
    const TraceClass cf = hs_character(f);

    // Homotopy invariance.
    {
      Homotopy h = random_homotopy(p, p, rng);
      ChainMap b = boundary(h);
      TraceClass moved = hs_character(f + b), cb = hs_character(b);
      t[0].record(b.commutes() && moved == cf, trial, [&] { return pair_text(cf, moved); });
      auto witness = is_null_homotopic(b);
      bool ok = cb.is_zero() && witness && boundary(*witness).f == b.f;
      t[1].record(ok, trial, [&] { return witness ? "chi = " + cb.to_string() : std::string("no homotopy found"); });
    }
    // Isomorphism invariance.
    {
      ComplexIsomorphism iso = random_complex_isomorphism(p, rng);
      ChainMap moved = compose(iso.forward, compose(f, iso.backward));
      TraceClass cm = hs_character(moved);
      bool inverse_ok = compose(iso.backward, iso.forward).f == identity_chain(p).f;
      t[2].record(inverse_ok && moved.commutes() && cm == cf, trial, [&] { return pair_text(cf, cm); });
    }
    // Additivity.
    {
      TraceClass lhs = hs_character(f + g), rhs = cf + hs_character(g);
      t[3].record(lhs == rhs, trial, [&] { return pair_text(lhs, rhs); });
    }
    // Split triangle P'' -> P' (+) P'' with an upper-triangular endomorphism,
    // then moved by an isomorphism of the middle term.
    {
      ComplexPtr q = random_complex(a, rng);
      ChainMap fq = random_chain_map(q, q, rng), off = random_chain_map(q, p, rng);
      ComplexPtr mid = direct_sum(p, q);
      ChainMap m = build_chain(mid, mid, [&](int i) {
        const std::size_t np = p->term(i).rank(), nq = q->term(i).rank();
        AlgMatrix x(np + nq, np + nq, alg.dim());
        x.set_block(0, 0, f.at(i));
        x.set_block(0, np, off.at(i));
        x.set_block(np, np, fq.at(i));
        return x;
      });
      ComplexIsomorphism iso = random_complex_isomorphism(mid, rng);
      ChainMap moved = compose(iso.forward, compose(m, iso.backward));
      TraceClass lhs = hs_character(moved), rhs = cf + hs_character(fq);
      t[4].record(m.commutes() && moved.commutes() && lhs == rhs, trial, [&] { return pair_text(lhs, rhs); });
    }
    // Cylinder/cone triangle P' -> Cyl(u) -> Cone(u) with Cyl(u) ~ P.
    {
      ComplexPtr pp = random_complex(a, rng, 3, 2), p2 = random_complex(a, rng, 3, 2);
      ChainMap u = random_chain_map(pp, p2, rng);
      auto [fp, f2] = random_compatible_pair(u, rng);
      ComplexPtr cyl = cylinder(u), cn = cone(u);
      ChainMap ecyl = cylinder_endomorphism(cyl, u, fp, f2), econe = cone_endomorphism(cn, u, fp, f2);
      TraceClass ccyl = hs_character(ecyl), cp = hs_character(fp), ccone = hs_character(econe),
                 c2 = hs_character(f2);
      bool maps_ok = ecyl.commutes() && econe.commutes() && fp.commutes() && f2.commutes();
      t[5].record(maps_ok && ccyl == cp + ccone && ccyl == c2, trial, [&] {
        if (!maps_ok) return std::string("induced endomorphisms are not chain maps");
        return "cyl " + ccyl.to_string() + ", P' + cone " + (cp + ccone).to_string() + ", P " + c2.to_string();
      });
    }
    // Trace property.
    {
      ComplexPtr q = random_complex(a, rng);
      ChainMap x = random_chain_map(p, q, rng), y = random_chain_map(q, p, rng);
      TraceClass lhs = hs_character(compose(y, x)), rhs = hs_character(compose(x, y));
      t[6].record(lhs == rhs, trial, [&] { return pair_text(lhs, rhs); });
    }
    // Fast path against generic realizations.
    {
      TraceClass slow = hs_character_via_realizations(f);
      t[7].record(slow == cf, trial, [&] { return pair_text(cf, slow); });
    }
  }
  std::vector<TheoremReport> out;
  for (auto& x : t) out.push_back(x.finish());
  return out;
}

}  // namespace hstrace
