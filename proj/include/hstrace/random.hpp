#pragma once

#include "hstrace/complex.hpp"

#include <cstdint>
#include <random>

namespace hstrace {

/// Seeded source for all randomized checks; identical seeds give identical runs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long long uniform(long long lo, long long hi);
  std::size_t below(std::size_t n);
  bool chance(unsigned num, unsigned den);
  /// Nonzero small integer mapped into the field (falls back to 1).
  Scalar unit_scalar(const FieldSpec& field);

 private:
  std::mt19937_64 engine_;
};

ProjectiveSum random_projective(const AlgebraPtr& a, Rng& rng, std::size_t max_rank = 3, std::size_t min_rank = 1);

/// Integer combination (coefficients in [-2, 2]) of the given basis.
AlgMatrix random_combination(const std::vector<AlgMatrix>& basis, std::size_t rows, std::size_t cols,
                             std::size_t algebra_dim, Rng& rng);
AlgMatrix random_map(const ProjectiveSum& from, const ProjectiveSum& to, Rng& rng, bool radical_only = false);
Vector random_element(const Algebra& a, const Subspace& within, Rng& rng);

struct SumIsomorphism {
  ProjectiveSum target;
  AlgMatrix forward;   // source -> target
  AlgMatrix backward;  // target -> source
};
/// Permutation of summands times a diagonal scaling times a unipotent
/// (identity plus radical) automorphism.
SumIsomorphism random_isomorphism(const ProjectiveSum& p, Rng& rng);

/// Inverse of u = 1 + N for N with radical entries, `one` the identity of the sum.
AlgMatrix unipotent_inverse(const Algebra& a, const AlgMatrix& u, const AlgMatrix& one);

/// A quotient of a small projective by a random submodule, of dimension
/// 1..max_dim; projective (nothing factored out) about a third of the time.
ModulePtr random_module(const AlgebraPtr& a, Rng& rng, std::size_t max_dim = 6);

/// Support length <= max_length, ranks <= max_rank, differentials solved
/// degree by degree so that d o d = 0.
ComplexPtr random_complex(const AlgebraPtr& a, Rng& rng, std::size_t max_length = 4, std::size_t max_rank = 3);
ChainMap random_chain_map(const ComplexPtr& p, const ComplexPtr& q, Rng& rng);
Homotopy random_homotopy(const ComplexPtr& p, const ComplexPtr& q, Rng& rng);

struct ComplexIsomorphism {
  ComplexPtr target;
  ChainMap forward, backward;
};
ComplexIsomorphism random_complex_isomorphism(const ComplexPtr& p, Rng& rng);

}  // namespace hstrace
