#include "hstrace/random.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hstrace {

long long Rng::uniform(long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(engine_);
}

std::size_t Rng::below(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  return static_cast<std::size_t>(uniform(0, static_cast<long long>(n) - 1));
}

bool Rng::chance(unsigned num, unsigned den) { return below(den) < num; }

Scalar Rng::unit_scalar(const FieldSpec& field) {
  static const long long choices[] = {1, -1, 2, -2, 3};
  Scalar s = field.make(choices[below(5)]);
  return s.is_zero() ? field.one() : s;
}

ProjectiveSum random_projective(const AlgebraPtr& a, Rng& rng, std::size_t max_rank, std::size_t min_rank) {
  const std::size_t r = static_cast<std::size_t>(rng.uniform(static_cast<long long>(min_rank), static_cast<long long>(max_rank)));
  std::vector<std::size_t> vertices;
  for (std::size_t i = 0; i < r; ++i) vertices.push_back(rng.below(a->num_vertices()));
  return ProjectiveSum::of_vertices(a, vertices);
}

AlgMatrix random_combination(const std::vector<AlgMatrix>& basis, std::size_t rows, std::size_t cols,
                             std::size_t algebra_dim, Rng& rng) {
  AlgMatrix m(rows, cols, algebra_dim);
  for (const auto& b : basis) {
    const long long c = rng.uniform(-2, 2);
    if (c != 0) m += Scalar(c) * b;
  }
  return m;
}

AlgMatrix random_map(const ProjectiveSum& from, const ProjectiveSum& to, Rng& rng, bool radical_only) {
  const Algebra& a = *from.algebra_ptr();
  AlgMatrix m(to.rank(), from.rank(), a.dim());
  for (std::size_t k = 0; k < to.rank(); ++k)
    for (std::size_t l = 0; l < from.rank(); ++l)
      for (const auto& x : corner_basis(a, to.block(k), from.block(l), radical_only)) {
        const long long c = rng.uniform(-2, 2);
        if (c != 0) axpy(m.at(k, l), a.field().make(c), x);
      }
  return m;
}

Vector random_element(const Algebra& a, const Subspace& within, Rng& rng) {
  Vector x = a.zero();
  for (const auto& b : within.basis()) {
    const long long c = rng.uniform(-2, 2);
    if (c != 0) axpy(x, a.field().make(c), b);
  }
  return x;
}

AlgMatrix unipotent_inverse(const Algebra& a, const AlgMatrix& u, const AlgMatrix& one) {
  // u = 1 + n with n nilpotent: u^{-1} = sum_m (-n)^m.
  AlgMatrix neg = one - u;
  AlgMatrix term = one, sum = one;
  for (std::size_t m = 0; m <= a.loewy_length() * std::max<std::size_t>(u.rows, 1); ++m) {
    term = compose(a, term, neg);
    if (term.is_zero()) return sum;
    sum += term;
  }
  throw std::logic_error("unipotent_inverse: radical part is not nilpotent");
}

SumIsomorphism random_isomorphism(const ProjectiveSum& p, Rng& rng) {
  const Algebra& a = *p.algebra_ptr();
  const std::size_t n = p.rank();
  // Unipotent part 1 + N with N having radical entries.
  const AlgMatrix one = identity_matrix(p);
  AlgMatrix u = one + random_map(p, p, rng, true);
  AlgMatrix u_inv = unipotent_inverse(a, u, one);
  // Scaling.
  AlgMatrix s(n, n, a.dim()), s_inv(n, n, a.dim());
  for (std::size_t k = 0; k < n; ++k) {
    Scalar c = rng.unit_scalar(a.field());
    s.at(k, k) = scale(p.block(k), c);
    s_inv.at(k, k) = scale(p.block(k), c.inverse());
  }
  // Permutation: target block k is source block order[k].
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  SumIsomorphism iso;
  iso.target = p.permuted(order);
  AlgMatrix perm(n, n, a.dim()), perm_inv(n, n, a.dim());
  for (std::size_t k = 0; k < n; ++k) {
    perm.at(k, order[k]) = p.block(order[k]);
    perm_inv.at(order[k], k) = p.block(order[k]);
  }
  iso.forward = compose(a, perm, compose(a, s, u));
  iso.backward = compose(a, u_inv, compose(a, s_inv, perm_inv));
  return iso;
}

ModulePtr random_module(const AlgebraPtr& a, Rng& rng, std::size_t max_dim) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    ProjectiveSum p = random_projective(a, rng, 2);
    ModulePtr pm = p.module();
    if (rng.chance(1, 3)) {
      if (pm->dim() <= max_dim) return pm;
      continue;
    }
    std::vector<Vector> seeds;
    const std::size_t count = 1 + rng.below(2);
    for (std::size_t i = 0; i < count; ++i) {
      Vector v(pm->dim());
      for (auto& x : v) x = a->field().make(rng.uniform(-1, 1));
      seeds.push_back(std::move(v));
    }
    Subspace u = generated_submodule(*pm, seeds);
    const std::size_t d = pm->dim() - u.dim();
    if (d >= 1 && d <= max_dim) return quotient_module(pm, u).module;
  }
  throw std::runtime_error("random_module: no module of the requested size found");
}

ComplexPtr random_complex(const AlgebraPtr& a, Rng& rng, std::size_t max_length, std::size_t max_rank) {
  const Algebra& alg = *a;
  const int lo = static_cast<int>(rng.uniform(-1, 1));
  const std::size_t len = 1 + rng.below(max_length);
  std::vector<ProjectiveSum> terms;
  for (std::size_t i = 0; i < len; ++i) terms.push_back(random_projective(a, rng, max_rank));
  std::vector<AlgMatrix> d;
  for (std::size_t i = 0; i + 1 < len; ++i) {
    const bool radical = rng.chance(1, 2);
    auto basis = hom_matrices(terms[i], terms[i + 1], radical);
    if (i == 0) {
      d.push_back(random_combination(basis, terms[1].rank(), terms[0].rank(), alg.dim(), rng));
      continue;
    }
    MapSystem sys(a);
    std::size_t x = sys.add_unknown(basis, terms[i + 1].rank(), terms[i].rank());
    sys.add_equation({{x, std::nullopt, d.back()}}, terms[i + 1].rank(), terms[i - 1].rank());
    AlgMatrix next(terms[i + 1].rank(), terms[i].rank(), alg.dim());
    for (const auto& v : sys.kernel()) {
      const long long c = rng.uniform(-2, 2);
      if (c != 0) next += Scalar(c) * sys.value(x, v);
    }
    d.push_back(std::move(next));
  }
  return make_complex(a, lo, std::move(terms), std::move(d));
}

ChainMap random_chain_map(const ComplexPtr& p, const ComplexPtr& q, Rng& rng) {
  const int lo = std::min(p->lo, q->lo), hi = std::max(p->hi(), q->hi());
  MapSystem sys(p->algebra);
  auto ids = add_chain_unknowns(sys, p, q, lo, hi);
  Vector coeffs(sys.num_unknown_coordinates());
  for (const auto& v : sys.kernel()) {
    const long long c = rng.uniform(-2, 2);
    if (c != 0) axpy(coeffs, p->algebra->field().make(c), v);
  }
  std::vector<AlgMatrix> comps;
  for (auto id : ids) comps.push_back(sys.value(id, coeffs));
  ChainMap f;
  f.source = p;
  f.target = q;
  f.lo = lo;
  f.f = std::move(comps);
  return f;
}

Homotopy random_homotopy(const ComplexPtr& p, const ComplexPtr& q, Rng& rng) {
  Homotopy h;
  h.source = p;
  h.target = q;
  h.lo = std::min(p->lo, q->lo + 1);
  const int hi = std::max(p->hi(), q->hi() + 1);
  for (int i = h.lo; i <= hi; ++i) h.s.push_back(random_map(p->term(i), q->term(i - 1), rng));
  return h;
}

ComplexIsomorphism random_complex_isomorphism(const ComplexPtr& p, Rng& rng) {
  const Algebra& a = *p->algebra;
  std::vector<SumIsomorphism> isos;
  std::vector<ProjectiveSum> terms;
  for (const auto& t : p->terms) {
    isos.push_back(random_isomorphism(t, rng));
    terms.push_back(isos.back().target);
  }
  std::vector<AlgMatrix> d;
  for (std::size_t i = 0; i < p->d.size(); ++i)
    d.push_back(compose(a, isos[i + 1].forward, compose(a, p->d[i], isos[i].backward)));
  ComplexIsomorphism out;
  out.target = make_complex(p->algebra, p->lo, std::move(terms), std::move(d));
  std::vector<AlgMatrix> fwd, bwd;
  for (const auto& iso : isos) {
    fwd.push_back(iso.forward);
    bwd.push_back(iso.backward);
  }
  out.forward = make_chain_map(p, out.target, fwd);
  out.backward = make_chain_map(out.target, p, bwd);
  return out;
}

}  // namespace hstrace
