#pragma once

#include "hstrace/bimodule.hpp"
#include "hstrace/complex.hpp"
#include "hstrace/resolution.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hstrace {

/// pd(M), the last nonzero Ext^n(M, A/J) and the last nonzero Tor_n(A/J, M)
/// agree; inconclusive when the resolution does not terminate within bound.
TheoremReport check_lemma1(const AlgebraPtr& a, const ModulePtr& m, std::size_t bound, const std::string& instance);

/// pd of the left simple at `vertex` equals pd of Abar = A / A(1-e)A as an
/// A-Abar-bimodule.
TheoremReport check_lemma2(const AlgebraPtr& a, std::size_t vertex, std::size_t bound);

/// tr(l_a) = 0 on the right B-module underlying a projective bimodule, for
/// every a in a basis of J. `pairs` lists the summands A e_i (x) e_j A.
TheoremReport check_prop_projective_bimodule_trace(const AlgebraPtr& a,
                                                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

/// tr_M(l_a) = (-1)^i tr_{Omega_i M}(l_a) on the regular bimodule for i <= max_degree.
TheoremReport check_prop_syzygy_trace(const AlgebraPtr& a, std::size_t max_degree);

/// J^j (x)_A P for the terms of a bimodule resolution, as a complex of right
/// B-projectives, with the left multiplications l_a as chain endomorphisms.
struct IdealTensorComplex {
  Envelope envelope;
  std::size_t power = 0;
  ComplexPtr complex;
  std::vector<ModulePtr> modules;                 // J^j P^i as right B-modules, by degree from complex->lo
  std::vector<Subspace> layers;                   // J^j P^i inside P^i
  std::vector<ProjectiveRealization> components;  // realizations matching complex->terms
  std::vector<ModulePtr> ambient;                 // P^i as envelope modules

  /// l_a restricted to J^j P; requires a in A.
  ChainMap left_multiplication(const Vector& a) const;
  /// l_a maps J^j P into J^{j+1} P.
  bool raises_layer(const Vector& a) const;
};

IdealTensorComplex ideal_tensor_complex(const Envelope& e, const Resolution& r, std::size_t power);

/// Telescoping chain chi(J^j (x) P, l_a), j = 0..t, for the bimodule
/// resolution of Abar at `vertex`, over a spanning set of Jbar.
TheoremReport check_theorem2_chain(const AlgebraPtr& a, std::size_t vertex, std::size_t bound);

/// Finite pd of a simple forces Ext^1(S, S) = 0 (no loop); a loop forces pd
/// beyond the bound; Ext^1 matches the loop count; the local quotient
/// Abar / Jbar^2 is commutative with radical of dimension the loop count.
TheoremReport check_strong_no_loop(const AlgebraPtr& a, const std::vector<std::size_t>& quiver_loops, std::size_t bound);

struct SuiteOptions {
  std::size_t trials = 50;
  std::uint64_t seed = 1;
  std::size_t bound = 20;
  std::size_t lemma1_samples = 20;  // terminated random modules required
};

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs one suite ("all" runs every suite in order).
std::vector<TheoremReport> run_suite(const std::string& name, const AlgebraPtr& a,
                                     const std::vector<std::size_t>& quiver_loops, const SuiteOptions& options);

}  // namespace hstrace
