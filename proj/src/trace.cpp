#include "hstrace/trace.hpp"

#include "hstrace/random.hpp"

#include <functional>
#include <stdexcept>

namespace hstrace {

AlgMatrix ProjectiveRealization::idempotent() const {
  return free.matrix_of(compose(include, retract), free);
}

bool ProjectiveRealization::is_consistent() const {
  const Algebra& a = *free.algebra_ptr();
  AlgMatrix e = idempotent();
  if (!(compose(a, e, e) == e)) return false;
  if (!(compose(retract, include).matrix == Matrix::identity(module->dim(), a.field()))) return false;
  if (!(compose(from_sum, to_sum).matrix == Matrix::identity(module->dim(), a.field()))) return false;
  return include.is_homomorphism() && retract.is_homomorphism();
}

ProjectiveRealization realize(const ProjectiveSum& p) {
  const AlgebraPtr& a = p.algebra_ptr();
  ProjectiveRealization r;
  r.module = p.module();
  r.sum = p;
  r.to_sum = identity_map(p.module());
  r.from_sum = r.to_sum;
  r.free = ProjectiveSum::free(a, p.rank());
  AlgMatrix diag = identity_matrix(p);
  r.include = p.map_from_matrix(r.free, diag);
  r.retract = r.free.map_from_matrix(p, diag);
  return r;
}

ProjectiveRealization realize(const ModulePtr& p) {
  Cover cov = top_and_cover(p);
  if (cov.projective.module()->dim() != p->dim())
    throw std::invalid_argument("realize: module is not projective (cover has a nonzero kernel)");
  auto back = invert(cov.map);
  if (!back) throw std::invalid_argument("realize: projective cover is not invertible");
  ProjectiveRealization base = realize(cov.projective);
  ProjectiveRealization r;
  r.module = p;
  r.sum = cov.projective;
  r.to_sum = *back;
  r.from_sum = cov.map;
  r.free = base.free;
  r.include = compose(base.include, r.to_sum);
  r.retract = compose(r.from_sum, base.retract);
  return r;
}

ProjectiveRealization twisted(const ProjectiveRealization& r, const AlgMatrix& u, const AlgMatrix& u_inverse,
                              std::size_t extra) {
  const AlgebraPtr& a = r.free.algebra_ptr();
  const std::size_t n = r.rank();
  ProjectiveSum big = ProjectiveSum::free(a, n + extra);
  AlgMatrix up(n + extra, n, a->dim());
  up.set_block(0, 0, u);
  AlgMatrix down(n, n + extra, a->dim());
  down.set_block(0, 0, u_inverse);
  ProjectiveRealization t = r;
  t.free = big;
  t.include = compose(r.free.map_from_matrix(big, up), r.include);
  t.retract = compose(r.retract, big.map_from_matrix(r.free, down));
  return t;
}

TraceClass hs_trace(const ProjectiveRealization& r, const ModuleMap& f) {
  if (f.source->dim() != r.module->dim() || f.target->dim() != r.module->dim())
    throw std::invalid_argument("hs_trace: not an endomorphism of the realized module");
  const Algebra& a = *r.free.algebra_ptr();
  ModuleMap lift = compose(r.include, compose(f, r.retract));
  return a.hh0_class(diagonal_sum(a, r.free.matrix_of(lift, r.free)));
}

TraceClass matrix_trace(const Algebra& a, const AlgMatrix& f) { return a.hh0_class(diagonal_sum(a, f)); }

AlgMatrix transport(const ProjectiveRealization& from, const ModuleMap& f, const ProjectiveRealization& to) {
  return from.sum.matrix_of(compose(to.to_sum, compose(f, from.from_sum)), to.sum);
}

// ---------------------------------------------------------------------------
// Axiom suite

namespace {

/// Counts instances of one axiom and keeps the first failure as witness.
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

Matrix random_invertible(std::size_t n, const FieldSpec& field, Rng& rng) {
  Matrix upper = Matrix::identity(n, field), lower = Matrix::identity(n, field);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      upper(i, j) = field.make(rng.uniform(-2, 2));
      lower(j, i) = field.make(rng.uniform(-2, 2));
    }
  return upper * lower;
}

/// The module with the same action seen through the basis change T.
ModulePtr conjugate_module(const RightModule& m, const Matrix& t, const Matrix& t_inv) {
  std::vector<Matrix> action;
  for (std::size_t b = 0; b < m.algebra().dim(); ++b) action.push_back(t * m.action(b) * t_inv);
  return std::make_shared<RightModule>(m.algebra_ptr(), m.dim(), std::move(action));
}

}  // namespace

std::vector<TheoremReport> verify_hs_axioms(const AlgebraPtr& a, std::size_t trials, std::uint64_t seed) {
  const Algebra& alg = *a;
  Rng rng(seed);
  std::vector<Tally> t(7);
  const char* ids[] = {"HS1", "HS2", "HS3", "HS4", "HS5", "HS6", "HS-realization"};
  const char* what[] = {"conjugation by an isomorphism", "additivity", "block sums", "tr(gf) = tr(fg)",
                        "exact rows", "left multiplication", "independence of the realization"};
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i].report.id = ids[i];
    t[i].report.instance = what[i];
  }

  for (std::size_t trial = 0; trial < trials; ++trial) {
    ProjectiveSum p = random_projective(a, rng);
    ProjectiveSum q = random_projective(a, rng);
    ProjectiveRealization rp = realize(p), rq = realize(q);
    AlgMatrix f = random_map(p, p, rng), f2 = random_map(p, p, rng);
    auto as_map = [](const ProjectiveSum& from, const ProjectiveSum& to, const AlgMatrix& m) {
      return from.map_from_matrix(to, m);
    };
    const TraceClass tf = hs_trace(rp, as_map(p, p, f));

    // HS1: along a permutation/scaling/unipotent isomorphism, and along a
    // change of basis whose target is realized through its cover.
    {
      SumIsomorphism g = random_isomorphism(p, rng);
      AlgMatrix conj = compose(alg, g.forward, compose(alg, f, g.backward));
      TraceClass other = hs_trace(realize(g.target), as_map(g.target, g.target, conj));
      t[0].record(tf == other, trial, [&] { return pair_text(tf, other); });

      Matrix tm = random_invertible(p.module()->dim(), alg.field(), rng);
      Matrix tm_inv = *inverse(tm);
      ModulePtr moved = conjugate_module(*p.module(), tm, tm_inv);
      ModuleMap fm = as_map(p, p, f);
      ModuleMap fmoved{moved, moved, tm * fm.matrix * tm_inv};
      TraceClass via_cover = hs_trace(realize(moved), fmoved);
      t[0].record(tf == via_cover, trial, [&] { return pair_text(tf, via_cover); });
    }
    // HS2
    {
      TraceClass lhs = hs_trace(rp, as_map(p, p, f + f2));
      TraceClass rhs = tf + hs_trace(rp, as_map(p, p, f2));
      t[1].record(lhs == rhs, trial, [&] { return pair_text(lhs, rhs); });
    }
    // HS3
    {
      ProjectiveSum s = concat(p, q);
      AlgMatrix m = random_map(s, s, rng);
      TraceClass lhs = hs_trace(realize(s), as_map(s, s, m));
      TraceClass rhs = hs_trace(rp, as_map(p, p, m.block(0, 0, p.rank(), p.rank()))) +
                       hs_trace(rq, as_map(q, q, m.block(p.rank(), p.rank(), q.rank(), q.rank())));
      t[2].record(lhs == rhs, trial, [&] { return pair_text(lhs, rhs); });
    }
    // HS4
    {
      AlgMatrix u = random_map(p, q, rng), v = random_map(q, p, rng);
      TraceClass lhs = hs_trace(rp, as_map(p, p, compose(alg, v, u)));
      TraceClass rhs = hs_trace(rq, as_map(q, q, compose(alg, u, v)));
      t[3].record(lhs == rhs, trial, [&] { return pair_text(lhs, rhs); });
    }
    // HS5: 0 -> P -> T -> Q -> 0 with T = P (+) Q moved by a random isomorphism.
    {
      ProjectiveSum s = concat(p, q);
      AlgMatrix fq = random_map(q, q, rng), h = random_map(q, p, rng);
      AlgMatrix mid(s.rank(), s.rank(), alg.dim());
      mid.set_block(0, 0, f);
      mid.set_block(0, p.rank(), h);
      mid.set_block(p.rank(), p.rank(), fq);
      SumIsomorphism g = random_isomorphism(s, rng);
      AlgMatrix incl(s.rank(), p.rank(), alg.dim()), proj(q.rank(), s.rank(), alg.dim());
      incl.set_block(0, 0, identity_matrix(p));
      proj.set_block(0, p.rank(), identity_matrix(q));
      AlgMatrix u = compose(alg, g.forward, incl), v = compose(alg, proj, g.backward);
      AlgMatrix moved = compose(alg, g.forward, compose(alg, mid, g.backward));
      ModuleMap um = as_map(p, g.target, u), vm = as_map(g.target, q, v);
      bool rows_exact = compose(vm, um).matrix.is_zero() && rank(um.matrix) == p.module()->dim() &&
                        rank(vm.matrix) == q.module()->dim() &&
                        p.module()->dim() + q.module()->dim() == g.target.module()->dim();
      bool commutes = compose(alg, moved, u) == compose(alg, u, f) && compose(alg, v, moved) == compose(alg, fq, v);
      TraceClass lhs = hs_trace(realize(g.target), as_map(g.target, g.target, moved));
      TraceClass rhs = tf + hs_trace(rq, as_map(q, q, fq));
      t[4].record(rows_exact && commutes && lhs == rhs, trial, [&] {
        if (!rows_exact) return std::string("rows not exact");
        if (!commutes) return std::string("diagram does not commute");
        return pair_text(lhs, rhs);
      });
    }
    // HS6: on A realized as a sum of e_i A (cover) and as A^1.
    {
      Vector x = random_element(alg, alg.radical_power(0), rng);
      ModulePtr reg = regular_module(a);
      TraceClass via_cover = hs_trace(realize(reg), ModuleMap{reg, reg, alg.left_multiplication(x)});
      ProjectiveSum one = ProjectiveSum::free(a, 1);
      AlgMatrix lx(1, 1, alg.dim());
      lx.at(0, 0) = x;
      TraceClass via_free = hs_trace(realize(one), as_map(one, one, lx));
      TraceClass expected = alg.hh0_class(x);
      t[5].record(via_cover == expected && via_free == expected, trial,
                  [&] { return via_cover.to_string() + ", " + via_free.to_string() + " vs " + expected.to_string(); });
    }
    // Realization independence.
    {
      SumIsomorphism u = random_isomorphism(rp.free, rng);
      ProjectiveRealization other = twisted(rp, u.forward, u.backward, rng.below(3));
      TraceClass tw = hs_trace(other, as_map(p, p, f));
      bool ok = other.is_consistent() && tw == tf;
      t[6].record(ok, trial, [&] { return pair_text(tf, tw); });
    }
  }
  std::vector<TheoremReport> out;
  for (auto& x : t) out.push_back(x.finish());
  return out;
}

}  // namespace hstrace
