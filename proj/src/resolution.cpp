#include "hstrace/resolution.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace hstrace {

namespace {

std::optional<std::size_t> simple_vertex(const RightModule& m) {
  if (m.dim() != 1) return std::nullopt;
  const Algebra& a = m.algebra();
  for (std::size_t i = 0; i < a.num_vertices(); ++i)
    if (!m.act(a.idempotent(i)).is_zero()) return i;
  return std::nullopt;
}

Resolution resolve(const ModulePtr& m, std::size_t bound, const ResolutionLimits& limits, bool allow_recursion) {
  const AlgebraPtr& a = m->algebra_ptr();
  Resolution r;
  r.module = m;
  r.bound = bound;
  r.syzygies.push_back({m, identity_map(m)});
  const auto self_vertex = simple_vertex(*m);

  ModulePtr current = m;
  for (std::size_t k = 0; k <= bound; ++k) {
    if (current->dim() == 0) {
      r.terminated = true;
      break;
    }
    if (k > 0 && current->dim() > limits.certify_above) {
      for (std::size_t j = 0; j < a->num_vertices() && !r.certified_infinite; ++j) {
        if (!has_simple_summand(*current, j)) continue;
        if (self_vertex == j)
          r.certified_infinite = true;
        else if (allow_recursion)
          r.certified_infinite = resolve(simple_module(a, j), bound, limits, false).certified_infinite;
      }
      if (r.certified_infinite) break;
      if (current->dim() > limits.hard_limit) {
        r.size_limited = true;
        break;
      }
    }
    Cover cov = top_and_cover(current);
    r.terms.push_back(cov.projective);
    if (k == 0)
      r.augmentation = cov.map;
    else
      r.differentials.push_back(compose(r.syzygies[k].map, cov.map));
    Embedded ker = kernel(cov.map);
    current = ker.module;
    r.syzygies.push_back(std::move(ker));
  }
  if (!r.terminated && !r.certified_infinite && !r.size_limited && current->dim() == 0) r.terminated = true;
  return r;
}

/// Maps induced on sums of N e_k (hom) or e_k N (tensor) by the entries
/// x_kl of a differential P' -> P: component l of the image collects
/// act_N(x_kl) n_k (hom), component k collects act_N(x_kl) n'_l (tensor).
Matrix induced_map(const ProjectiveSum& from, const ProjectiveSum& to, const ModuleMap& d,
                   const RightModule& n, bool hom) {
  auto pieces = [&](const ProjectiveSum& p) {
    std::vector<Subspace> s;
    for (std::size_t k = 0; k < p.rank(); ++k) {
      Matrix e = n.act(p.block(k));
      std::vector<Vector> cols;
      for (std::size_t c = 0; c < n.dim(); ++c) cols.push_back(e.column(c));
      s.push_back(Subspace::span(n.dim(), cols));
    }
    return s;
  };
  auto offsets = [](const std::vector<Subspace>& s) {
    std::vector<std::size_t> off;
    std::size_t t = 0;
    for (const auto& x : s) {
      off.push_back(t);
      t += x.dim();
    }
    off.push_back(t);
    return off;
  };
  AlgMatrix x = from.matrix_of(d, to);  // x.at(k, l): k over `to`, l over `from`
  auto ns_to = pieces(to), ns_from = pieces(from);
  auto off_to = offsets(ns_to), off_from = offsets(ns_from);
  // hom: C(to) -> C(from); tensor: C(from) -> C(to)
  const auto& src = hom ? ns_to : ns_from;
  const auto& dst = hom ? ns_from : ns_to;
  const auto& off_src = hom ? off_to : off_from;
  const auto& off_dst = hom ? off_from : off_to;
  Matrix out(off_dst.back(), off_src.back());
  for (std::size_t s = 0; s < src.size(); ++s)
    for (std::size_t c = 0; c < src[s].dim(); ++c)
      for (std::size_t t = 0; t < dst.size(); ++t) {
        const Vector& entry = hom ? x.at(s, t) : x.at(t, s);
        if (is_zero(entry)) continue;
        Vector img = n.act(entry, src[s].basis()[c]);
        Vector coords = dst[t].coordinates(img);
        for (std::size_t i = 0; i < coords.size(); ++i) out(off_dst[t] + i, off_src[s] + c) = coords[i];
      }
  return out;
}

std::size_t piece_dim(const ProjectiveSum& p, const RightModule& n) {
  std::size_t total = 0;
  for (std::size_t k = 0; k < p.rank(); ++k) total += rank(n.act(p.block(k)));
  return total;
}

InducedComplex induced(const Resolution& r, const RightModule& n, bool hom) {
  InducedComplex c;
  c.closed = r.terminated;
  for (const auto& t : r.terms) c.dims.push_back(piece_dim(t, n));
  for (std::size_t k = 0; k < r.differentials.size(); ++k)
    c.maps.push_back(induced_map(r.terms[k + 1], r.terms[k], r.differentials[k], n, hom));
  return c;
}

}  // namespace

bool Resolution::is_minimal() const {
  for (std::size_t k = 0; k < differentials.size(); ++k) {
    Subspace pj = radical_submodule(*terms[k].module());
    if (!pj.contains(image(differentials[k]))) return false;
  }
  return true;
}

bool Resolution::is_exact() const {
  if (terms.empty()) return module->dim() == 0;
  if (hstrace::rank(augmentation.matrix) != module->dim()) return false;
  for (std::size_t k = 0; k < differentials.size(); ++k) {
    const Matrix& out = k == 0 ? augmentation.matrix : differentials[k - 1].matrix;
    if (!(out * differentials[k].matrix).is_zero()) return false;
    if (hstrace::rank(out) + hstrace::rank(differentials[k].matrix) != terms[k].module()->dim()) return false;
  }
  if (terminated) {
    const Matrix& last = differentials.empty() ? augmentation.matrix : differentials.back().matrix;
    if (hstrace::rank(last) != terms.back().module()->dim()) return false;
  }
  return true;
}

Resolution minimal_resolution(const ModulePtr& m, std::size_t bound, const ResolutionLimits& limits) {
  return resolve(m, bound, limits, true);
}

ModulePtr syzygy(const ModulePtr& m, std::size_t i) {
  if (i == 0) return m;
  Resolution r = minimal_resolution(m, i - 1);
  if (i < r.syzygies.size()) return r.syzygies[i].module;
  if (r.terminated) return zero_module(m->algebra_ptr());
  throw std::runtime_error("syzygy: resolution stopped before the requested degree");
}

std::string ProjDim::to_string() const {
  return (finite ? "Finite(" : "AtLeast(") + std::to_string(value) + ")";
}

ProjDim proj_dim(const Resolution& r) {
  if (r.terminated) return ProjDim::exactly(r.depth() == 0 ? 0 : r.depth() - 1);
  if (r.certified_infinite) return ProjDim::at_least(r.bound);
  return ProjDim::at_least(std::min(r.depth(), r.bound));
}

ProjDim proj_dim(const ModulePtr& m, std::size_t bound) { return proj_dim(minimal_resolution(m, bound)); }

std::vector<std::size_t> InducedComplex::homology_dims() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    std::size_t next = 0;
    if (i < maps.size()) next = hstrace::rank(maps[i]);
    else if (!closed) break;
    const std::size_t prev = i > 0 ? hstrace::rank(maps[i - 1]) : 0;
    out.push_back(dims[i] - prev - next);
  }
  return out;
}

bool InducedComplex::differentials_vanish() const {
  return std::all_of(maps.begin(), maps.end(), [](const Matrix& m) { return m.is_zero(); });
}

InducedComplex hom_complex(const Resolution& r, const RightModule& n) { return induced(r, n, true); }

InducedComplex tensor_complex(const Resolution& r, const RightModule& n_left) { return induced(r, n_left, false); }

std::vector<std::size_t> ext_dims(const ModulePtr& m, const ModulePtr& n, std::size_t range) {
  Resolution r = minimal_resolution(m, range + 1);
  auto dims = hom_complex(r, *n).homology_dims();
  dims.resize(std::min(dims.size(), range + 1));
  if (r.terminated) dims.resize(range + 1, 0);
  return dims;
}

std::vector<std::size_t> tor_dims(const ModulePtr& m, const ModulePtr& n_left, std::size_t range) {
  Resolution r = minimal_resolution(m, range + 1);
  auto dims = tensor_complex(r, *n_left).homology_dims();
  dims.resize(std::min(dims.size(), range + 1));
  if (r.terminated) dims.resize(range + 1, 0);
  return dims;
}

ModulePtr semisimple_top(const AlgebraPtr& a) {
  return quotient_module(regular_module(a), a->radical()).module;
}

}  // namespace hstrace
