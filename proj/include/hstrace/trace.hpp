#pragma once

#include "hstrace/module.hpp"
#include "hstrace/theorem.hpp"

#include <cstdint>
#include <vector>

namespace hstrace {

/// A finitely generated projective P presented as a summand of A^n:
/// retract o include = 1_P and include o retract is the idempotent E.
struct ProjectiveRealization {
  ModulePtr module;
  ProjectiveSum sum;   // a sum of e_k A isomorphic to P
  ModuleMap to_sum;    // P -> sum
  ModuleMap from_sum;  // sum -> P
  ProjectiveSum free;  // A^n
  ModuleMap include;   // P -> A^n
  ModuleMap retract;   // A^n -> P

  std::size_t rank() const { return free.rank(); }
  /// E as an n x n matrix over A.
  AlgMatrix idempotent() const;
  /// E^2 = E and both split identities, exactly.
  bool is_consistent() const;
};

ProjectiveRealization realize(const ProjectiveSum& p);
/// Realizes P through its projective cover; throws std::invalid_argument
/// when the cover is not an isomorphism (P not projective).
ProjectiveRealization realize(const ModulePtr& p);

/// Another realization of the same module: the embedding is twisted by an
/// automorphism u of A^n and padded with `extra` free summands.
ProjectiveRealization twisted(const ProjectiveRealization& r, const AlgMatrix& u, const AlgMatrix& u_inverse,
                              std::size_t extra);

/// tr_P(f) via the lift include o f o retract on A^n.
TraceClass hs_trace(const ProjectiveRealization& r, const ModuleMap& f);

/// Trace of an endomorphism of a sum of e_k A given by its matrix over A.
TraceClass matrix_trace(const Algebra& a, const AlgMatrix& f);

/// Endomorphism matrix, in the realization's sum, of a map P -> Q.
AlgMatrix transport(const ProjectiveRealization& from, const ModuleMap& f, const ProjectiveRealization& to);

/// One report per axiom HS1..HS6 plus realization independence.
std::vector<TheoremReport> verify_hs_axioms(const AlgebraPtr& a, std::size_t trials, std::uint64_t seed);

}  // namespace hstrace
