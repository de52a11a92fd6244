#include "hstrace/verify.hpp"

#include "hstrace/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace hstrace {

namespace {

std::string list_text(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

/// Index of the last nonzero entry, if any.
std::optional<std::size_t> last_nonzero(const std::vector<std::size_t>& v) {
  for (std::size_t i = v.size(); i > 0; --i)
    if (v[i - 1] != 0) return i - 1;
  return std::nullopt;
}

std::string sup_text(const std::optional<std::size_t>& s) { return s ? std::to_string(*s) : "none"; }

/// Basis elements of A lying in J, with their labels.
std::vector<std::pair<std::string, Vector>> radical_basis(const Algebra& a) {
  std::vector<std::pair<std::string, Vector>> out;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    Vector x = a.basis_element(k);
    if (a.radical().contains(x)) out.emplace_back(a.labels()[k], std::move(x));
  }
  return out;
}

TraceClass trace_on(const ModulePtr& m, const Matrix& endo) {
  const Algebra& b = m->algebra();
  if (m->dim() == 0) return b.hh0_class(b.zero());
  return hs_trace(realize(m), ModuleMap{m, m, endo});
}

/// Span of x v for x in J^j and v in the module.
Subspace left_layer(const Envelope& e, const RightModule& p, std::size_t power) {
  if (power == 0) return Subspace::whole(p.dim());
  Subspace s(p.dim());
  for (const auto& x : e.left->radical_power(power).basis()) {
    Matrix l = left_action(e, p, x);
    for (std::size_t c = 0; c < p.dim(); ++c) s.add(l.column(c));
  }
  return s;
}

/// Restriction of an ambient endomorphism-like matrix to layers: source
/// layer basis is mapped and read in the target layer's coordinates.
Matrix restrict_matrix(const Matrix& m, const Subspace& from, const Subspace& to) {
  Matrix out(to.dim(), from.dim());
  for (std::size_t c = 0; c < from.dim(); ++c) {
    Vector image = m * from.basis()[c];
    if (!to.contains(image)) throw std::logic_error("restrict_matrix: image leaves the target layer");
    Vector coords = to.coordinates(image);
    for (std::size_t r = 0; r < to.dim(); ++r) out(r, c) = coords[r];
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Testing-module characterization of pd

TheoremReport check_lemma1(const AlgebraPtr& a, const ModulePtr& m, std::size_t bound, const std::string& instance) {
  TheoremReport rep;
  rep.id = "lemma1";
  rep.instance = instance;
  if (m->dim() == 0) throw std::invalid_argument("check_lemma1: zero module");
  Resolution r = minimal_resolution(m, bound);
  const ProjDim pd = proj_dim(r);
  InducedComplex hc = hom_complex(r, *semisimple_top(a));
  InducedComplex tc = tensor_complex(r, *semisimple_top(opposite(*a)));
  const auto ext = hc.homology_dims(), tor = tc.homology_dims();
  rep.witness("dim", std::to_string(m->dim()));
  rep.witness("pd", pd.to_string());
  rep.witness("ext", list_text(ext));
  rep.witness("tor", list_text(tor));
  if (!hc.differentials_vanish() || !tc.differentials_vanish()) {
    rep.refute("differentials", "Hom(P, A/J) or A/J (x) P has a nonzero differential on a minimal resolution");
    return rep;
  }
  if (r.terminated) {
    const auto se = last_nonzero(ext), st = last_nonzero(tor);
    rep.witness("sup ext", sup_text(se));
    rep.witness("sup tor", sup_text(st));
    if (se != pd.value || st != pd.value) rep.refute("mismatch", pd.to_string() + ", ext " + sup_text(se) + ", tor " + sup_text(st));
    return rep;
  }
  // Unterminated: every computed degree must still be nonzero on both sides.
  const bool all_nonzero = std::none_of(ext.begin(), ext.end(), [](std::size_t d) { return d == 0; }) &&
                           std::none_of(tor.begin(), tor.end(), [](std::size_t d) { return d == 0; });
  if (!all_nonzero) {
    rep.refute("mismatch", "resolution continues but Ext or Tor vanished in a computed degree");
    return rep;
  }
  rep.outcome = Outcome::Inconclusive;
  rep.bound = pd.value;
  return rep;
}

TheoremReport check_lemma2(const AlgebraPtr& a, std::size_t vertex, std::size_t bound) {
  TheoremReport rep;
  rep.id = "lemma2";
  rep.instance = "vertex " + a->vertex_names().at(vertex);
  const ProjDim left = proj_dim(simple_module(opposite(*a), vertex), bound);
  Quotient q = corner_quotient(*a, vertex);
  Envelope e = make_envelope(a, q.algebra);
  const ProjDim bimod = proj_dim(quotient_bimodule(e, q.projection), bound);
  rep.witness("pd left simple", left.to_string());
  rep.witness("pd Abar over envelope", bimod.to_string());
  if (left.finite && bimod.finite) {
    if (left.value != bimod.value) rep.refute("mismatch", left.to_string() + " vs " + bimod.to_string());
    return rep;
  }
  // With one side only bounded below, a contradiction needs the bound to pass the finite value.
  const ProjDim& fin = left.finite ? left : bimod;
  const ProjDim& inf = left.finite ? bimod : left;
  if (fin.finite && inf.value > fin.value) {
    rep.refute("mismatch", left.to_string() + " vs " + bimod.to_string());
    return rep;
  }
  rep.outcome = Outcome::Inconclusive;
  rep.bound = std::min(left.finite ? bound : left.value, bimod.finite ? bound : bimod.value);
  return rep;
}

// ---------------------------------------------------------------------------
// Bimodule trace propositions

TheoremReport check_prop_projective_bimodule_trace(const AlgebraPtr& a,
                                                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  TheoremReport rep;
  rep.id = "projective-bimodule-trace";
  std::string desc;
  for (const auto& [i, j] : pairs)
    desc += (desc.empty() ? "" : " + ") + ("A e" + a->vertex_names()[i] + " (x) e" + a->vertex_names()[j] + " A");
  rep.instance = desc;
  Envelope e = make_envelope(a, a);
  ProjectiveSum p = projective_bimodule(e, pairs);
  ModulePtr u = underlying_right(e, p.module());
  ProjectiveRealization real = realize(u);
  std::size_t checked = 0;
  for (const auto& [label, x] : radical_basis(*a)) {
    ModuleMap l{u, u, left_action(e, *p.module(), x)};
    if (!l.is_homomorphism()) {
      rep.refute("l_" + label, "not right-linear");
      return rep;
    }
    TraceClass t = hs_trace(real, l);
    ++checked;
    if (!t.is_zero()) {
      rep.refute("tr(l_" + label + ")", t.to_string());
      return rep;
    }
  }
  rep.witnesses.insert(rep.witnesses.begin(), {"elements", std::to_string(checked)});
  rep.witnesses.insert(rep.witnesses.begin(), {"dim", std::to_string(u->dim())});
  return rep;
}

TheoremReport check_prop_syzygy_trace(const AlgebraPtr& a, std::size_t max_degree) {
  TheoremReport rep;
  rep.id = "syzygy-trace";
  rep.instance = "regular bimodule, degrees 0.." + std::to_string(max_degree);
  Envelope e = make_envelope(a, a);
  ModulePtr m = regular_bimodule(e);
  Resolution r = minimal_resolution(m, max_degree);
  ModulePtr mr = underlying_right(e, m);
  for (const auto& [label, x] : radical_basis(*a)) {
    const TraceClass lhs = trace_on(mr, left_action(e, *m, x));
    std::string chain = lhs.to_string();
    for (std::size_t i = 1; i <= max_degree; ++i) {
      TraceClass rhs = a->hh0_class(a->zero());
      if (i < r.syzygies.size() && r.syzygies[i].module->dim() > 0) {
        const ModulePtr& omega = r.syzygies[i].module;
        ModulePtr ur = underlying_right(e, omega);
        try {
          rhs = trace_on(ur, left_action(e, *omega, x));
        } catch (const std::invalid_argument&) {
          rep.refute("Omega_" + std::to_string(i), "not projective as a right module");
          return rep;
        }
      }
      chain += ", tr_Omega" + std::to_string(i) + " " + rhs.to_string();
      if (i % 2 == 1) rhs = -rhs;
      if (!(rhs == lhs)) {
        rep.refute("l_" + label + " degree " + std::to_string(i), chain);
        return rep;
      }
    }
    rep.witness("l_" + label, chain);
  }
  rep.witness("syzygies computed", std::to_string(r.syzygies.size() - 1));
  return rep;
}

// ---------------------------------------------------------------------------
// Radical filtration of a bimodule resolution

IdealTensorComplex ideal_tensor_complex(const Envelope& e, const Resolution& r, std::size_t power) {
  IdealTensorComplex out;
  out.envelope = e;
  out.power = power;
  const AlgebraPtr& b = e.right;
  const std::size_t n = r.depth();
  // Degree lo + idx holds P^{-(n-1-idx)}.
  std::vector<ProjectiveSum> terms;
  for (std::size_t idx = 0; idx < n; ++idx) {
    const ModulePtr& p = r.terms[n - 1 - idx].module();
    Subspace layer = left_layer(e, *p, power);
    ModulePtr sub = submodule(underlying_right(e, p), layer).module;
    ProjectiveRealization real;
    if (sub->dim() == 0) {
      real = realize(ProjectiveSum(b, {}));
      real.module = sub;
      real.to_sum.source = real.from_sum.target = real.include.source = real.retract.target = sub;
    } else {
      real = realize(sub);
    }
    out.ambient.push_back(p);
    out.layers.push_back(std::move(layer));
    out.modules.push_back(sub);
    terms.push_back(real.sum);
    out.components.push_back(std::move(real));
  }
  std::vector<AlgMatrix> d;
  for (std::size_t idx = 0; idx + 1 < n; ++idx) {
    const std::size_t k = n - 1 - idx;  // P^{-k} -> P^{-k+1}
    Matrix m = restrict_matrix(r.differentials[k - 1].matrix, out.layers[idx], out.layers[idx + 1]);
    ModuleMap f{out.modules[idx], out.modules[idx + 1], std::move(m)};
    d.push_back(transport(out.components[idx], f, out.components[idx + 1]));
  }
  out.complex = make_complex(b, -static_cast<int>(n) + 1, std::move(terms), std::move(d));
  return out;
}

ChainMap IdealTensorComplex::left_multiplication(const Vector& a) const {
  std::vector<AlgMatrix> comps;
  for (std::size_t idx = 0; idx < layers.size(); ++idx) {
    Matrix m = restrict_matrix(left_action(envelope, *ambient[idx], a), layers[idx], layers[idx]);
    comps.push_back(transport(components[idx], ModuleMap{modules[idx], modules[idx], std::move(m)}, components[idx]));
  }
  return make_chain_map(complex, complex, comps);
}

bool IdealTensorComplex::raises_layer(const Vector& a) const {
  for (std::size_t idx = 0; idx < layers.size(); ++idx) {
    Subspace next = left_layer(envelope, *ambient[idx], power + 1);
    Matrix l = left_action(envelope, *ambient[idx], a);
    for (const auto& v : layers[idx].basis())
      if (!next.contains(l * v)) return false;
  }
  return true;
}

TheoremReport check_theorem2_chain(const AlgebraPtr& a, std::size_t vertex, std::size_t bound) {
  TheoremReport rep;
  rep.id = "radical-chain";
  rep.instance = "vertex " + a->vertex_names().at(vertex);
  Quotient q = corner_quotient(*a, vertex);
  const Algebra& abar = *q.algebra;
  Envelope e = make_envelope(a, q.algebra);
  Resolution r = minimal_resolution(quotient_bimodule(e, q.projection), bound);
  const ProjDim pd = proj_dim(r);
  const bool contained = abar.hh0().commutators().contains(abar.radical());
  rep.witness("pd Abar over envelope", pd.to_string());
  rep.witness("dim Abar", std::to_string(abar.dim()));
  rep.witness("dim Jbar", std::to_string(abar.radical().dim()));
  rep.witness("Jbar in [Abar,Abar]", contained ? "yes" : "no");
  if (!r.terminated) {
    rep.outcome = Outcome::Inconclusive;
    rep.bound = pd.value;
    if (!contained) rep.witness("negative control", "Jbar is not inside [Abar,Abar] and pd is not finite within the bound");
    return rep;
  }
  const std::size_t t = a->loewy_length();
  std::vector<IdealTensorComplex> layers;
  for (std::size_t j = 0; j <= t; ++j) layers.push_back(ideal_tensor_complex(e, r, j));

  Subspace images(abar.dim());
  for (const auto& [label, x] : radical_basis(*a)) {
    const Vector xbar = q.project(x);
    images.add(xbar);
    std::vector<TraceClass> chi;
    for (std::size_t j = 0; j <= t; ++j) {
      ChainMap l = layers[j].left_multiplication(x);
      if (!l.commutes()) {
        rep.refute("l_" + label, "not a chain map on layer " + std::to_string(j));
        return rep;
      }
      if (j < t && !layers[j].raises_layer(x)) {
        rep.refute("l_" + label, "does not raise layer " + std::to_string(j));
        return rep;
      }
      chi.push_back(hs_character(l));
    }
    std::string text;
    for (const auto& c : chi) text += (text.empty() ? "" : " -> ") + c.to_string();
    const TraceClass cls = abar.hh0_class(xbar);
    bool ok = chi.front() == cls && chi.back().is_zero() && cls.is_zero();
    for (std::size_t j = 0; j + 1 < chi.size(); ++j) ok = ok && chi[j] == chi[j + 1];
    if (!ok) {
      rep.refute("chain l_" + label, text + " (class " + cls.to_string() + ")");
      return rep;
    }
    rep.witness("chain l_" + label, text);
  }
  if (!(images == abar.radical())) {
    rep.refute("spanning set", "images of J do not span Jbar");
    return rep;
  }
  if (!contained) rep.refute("containment", "every chain vanished but Jbar is not inside [Abar,Abar]");
  return rep;
}

// ---------------------------------------------------------------------------
// Strong no loop

TheoremReport check_strong_no_loop(const AlgebraPtr& a, const std::vector<std::size_t>& quiver_loops, std::size_t bound) {
  TheoremReport rep;
  rep.id = "strong-no-loop";
  rep.instance = "all vertices, bound " + std::to_string(bound);
  AlgebraPtr aop = opposite(*a);
  for (std::size_t i = 0; i < a->num_vertices(); ++i) {
    const std::string name = "S_" + a->vertex_names()[i];
    ModulePtr s = simple_module(aop, i);
    const ProjDim pd = proj_dim(s, bound);
    const auto ext = ext_dims(s, s, 1);
    const std::size_t ext1 = ext.size() > 1 ? ext[1] : 0;
    const std::size_t loops = a->loops_at(i);
    const std::size_t qloops = i < quiver_loops.size() ? quiver_loops[i] : 0;

    Quotient q = corner_quotient(*a, i);
    Quotient prime = ideal_quotient(*q.algebra, q.algebra->radical_power(2));
    const Algebra& ap = *prime.algebra;
    const bool local = ap.num_vertices() == 1 && ap.radical_power(2).dim() == 0;
    const bool commutative = ap.hh0().dim() == ap.dim();
    const std::size_t jprime = ap.radical().dim();
    const bool contained = q.algebra->hh0().commutators().contains(q.algebra->radical());

    rep.witness(name, "pd " + pd.to_string() + ", Ext1 " + std::to_string(ext1) + ", loops " + std::to_string(loops) +
                          ", dim J' " + std::to_string(jprime));
    std::string problem;
    if (ext1 != loops) problem = "Ext1 differs from dim eJe/eJ^2e";
    else if (loops != qloops) problem = "loop count differs from the quiver";
    else if (pd.finite && ext1 != 0) problem = "finite pd with a loop";
    else if (ext1 != 0 && !(pd == ProjDim::at_least(bound))) problem = "loop but pd not beyond the bound";
    else if (!local || !commutative) problem = "Abar/Jbar^2 is not local commutative with radical square zero";
    else if (jprime != loops) problem = "dim J' differs from the loop count";
    else if (contained && jprime != 0) problem = "Jbar inside [Abar,Abar] but J' nonzero";
    if (!problem.empty()) rep.refute(name + " contradiction", problem);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Suites

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"hs", "character", "lemma1", "lemma2", "props", "noloop", "all"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

namespace {

std::vector<TheoremReport> lemma1_suite(const AlgebraPtr& a, const SuiteOptions& o) {
  std::vector<TheoremReport> out;
  for (std::size_t i = 0; i < a->num_vertices(); ++i)
    out.push_back(check_lemma1(a, simple_module(a, i), o.bound, "S_" + a->vertex_names()[i]));
  out.push_back(check_lemma1(a, regular_module(a), o.bound, "A_A"));

  TheoremReport agg;
  agg.id = "lemma1";
  agg.instance = "random modules";
  Rng rng(o.seed);
  std::size_t terminated = 0, inconclusive = 0, attempts = 0;
  const std::size_t cap = 20 * o.lemma1_samples;
  while (terminated < o.lemma1_samples && attempts < cap) {
    ++attempts;
    ModulePtr m = random_module(a, rng, 6);
    TheoremReport one = check_lemma1(a, m, o.bound, "random");
    if (one.outcome == Outcome::Refuted) {
      agg.outcome = Outcome::Refuted;
      agg.witnesses = one.witnesses;
      agg.witness("attempt", std::to_string(attempts));
      out.push_back(agg);
      return out;
    }
    if (one.outcome == Outcome::Verified) ++terminated;
    else ++inconclusive;
  }
  agg.witness("terminated", std::to_string(terminated));
  agg.witness("unterminated", std::to_string(inconclusive));
  agg.witness("attempts", std::to_string(attempts));
  if (terminated < o.lemma1_samples) {
    agg.outcome = Outcome::Inconclusive;
    agg.bound = o.bound;
  }
  out.push_back(agg);
  return out;
}

std::vector<TheoremReport> props_suite(const AlgebraPtr& a) {
  std::vector<TheoremReport> out;
  const std::size_t n = a->num_vertices();
  std::vector<std::pair<std::size_t, std::size_t>> all;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out.push_back(check_prop_projective_bimodule_trace(a, {{i, j}}));
      all.emplace_back(i, j);
    }
  // A (x) A itself, the sum over all vertex pairs.
  TheoremReport free = check_prop_projective_bimodule_trace(a, all);
  free.instance = "A (x) A";
  out.push_back(std::move(free));
  out.push_back(check_prop_syzygy_trace(a, 3));
  return out;
}

}  // namespace

std::vector<TheoremReport> run_suite(const std::string& name, const AlgebraPtr& a,
                                     const std::vector<std::size_t>& quiver_loops, const SuiteOptions& o) {
  if (name == "all") {
    std::vector<TheoremReport> out;
    for (const auto& s : suite_names()) {
      if (s == "all") continue;
      auto part = run_suite(s, a, quiver_loops, o);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (name == "hs") return verify_hs_axioms(a, o.trials, o.seed);
  if (name == "character") return verify_character(a, o.trials, o.seed);
  if (name == "lemma1") return lemma1_suite(a, o);
  if (name == "lemma2") {
    std::vector<TheoremReport> out;
    for (std::size_t i = 0; i < a->num_vertices(); ++i) out.push_back(check_lemma2(a, i, o.bound));
    return out;
  }
  if (name == "props") return props_suite(a);
  if (name == "noloop") {
    std::vector<TheoremReport> out;
    for (std::size_t i = 0; i < a->num_vertices(); ++i) out.push_back(check_theorem2_chain(a, i, o.bound));
    out.push_back(check_strong_no_loop(a, quiver_loops, o.bound));
    return out;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace hstrace
