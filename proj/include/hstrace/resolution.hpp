#pragma once

#include "hstrace/module.hpp"

#include <string>
#include <vector>

namespace hstrace {

/// Minimal projective resolution  ... -> P^{-1} -> P^0 -> M -> 0.
struct Resolution {
  ModulePtr module;
  std::vector<ProjectiveSum> terms;      // terms[k] = P^{-k}
  ModuleMap augmentation;                // P^0 -> M
  std::vector<ModuleMap> differentials;  // differentials[k] : P^{-k-1} -> P^{-k}
  std::vector<Embedded> syzygies;        // syzygies[k] = Omega_k with its inclusion (k >= 1 into P^{-k+1})
  std::size_t bound = 0;
  bool terminated = false;          // some syzygy vanished within the bound
  bool certified_infinite = false;  // a syzygy has a simple summand of infinite projective dimension
  bool size_limited = false;        // stopped because syzygies outgrew the size budget

  /// Number of terms computed; equals pd + 1 when terminated.
  std::size_t depth() const { return terms.size(); }
  /// Every differential lands in (target) * J.
  bool is_minimal() const;
  /// im(d_k) = ker(d_{k-1}) and im(d_0) = ker(augmentation), augmentation onto M.
  bool is_exact() const;
};

struct ResolutionLimits {
  std::size_t certify_above = 64;  // syzygy dimension that triggers the simple-summand test
  std::size_t hard_limit = 160;    // syzygy dimension at which computation stops
};

/// Computes P^0 .. P^{-bound} and Omega_1 .. Omega_{bound+1}.
Resolution minimal_resolution(const ModulePtr& m, std::size_t bound, const ResolutionLimits& limits = {});

/// Omega_i(M) as a submodule of P^{-i+1}; Omega_0 = M.
ModulePtr syzygy(const ModulePtr& m, std::size_t i);

/// Either Finite(n) or AtLeast(n); infinity is never claimed.
struct ProjDim {
  bool finite = false;
  std::size_t value = 0;

  static ProjDim exactly(std::size_t n) { return {true, n}; }
  static ProjDim at_least(std::size_t n) { return {false, n}; }
  std::string to_string() const;
  friend bool operator==(const ProjDim&, const ProjDim&) = default;
};

ProjDim proj_dim(const Resolution& r);
ProjDim proj_dim(const ModulePtr& m, std::size_t bound = 20);

/// Complex induced from a resolution by Hom(-, N) or - (x)_A N, in
/// coordinates of the direct sums of N e_k (resp. e_k N). maps[i] joins
/// degree i and degree i+1 in whichever direction the functor gives.
struct InducedComplex {
  std::vector<std::size_t> dims;
  std::vector<Matrix> maps;
  bool closed = false;  // the resolution terminated; nothing beyond the last degree

  /// Dimensions in every degree whose neighbouring maps are known.
  std::vector<std::size_t> homology_dims() const;
  bool differentials_vanish() const;
};

InducedComplex hom_complex(const Resolution& r, const RightModule& n);
/// P (x)_A N for a left module N, given as a right module over opposite(A).
InducedComplex tensor_complex(const Resolution& r, const RightModule& n_left);

/// dim Ext^i(M, N) for i = 0..range, from the minimal resolution. Shorter
/// when the resolution stopped early without terminating.
std::vector<std::size_t> ext_dims(const ModulePtr& m, const ModulePtr& n, std::size_t range);
/// dim Tor_i(M, N) with N a left module (right module over opposite(A)).
std::vector<std::size_t> tor_dims(const ModulePtr& m, const ModulePtr& n_left, std::size_t range);

/// A/J as a right A-module; pass opposite(A) for the left module.
ModulePtr semisimple_top(const AlgebraPtr& a);

}  // namespace hstrace
