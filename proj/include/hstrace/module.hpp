#pragma once

#include "hstrace/algebra.hpp"

#include <memory>
#include <vector>

namespace hstrace {

/// Finite-dimensional right A-module. Elements are column vectors and
/// m * x = act(x) m, so act(x y) = act(y) act(x) and act(1) = identity.
class RightModule {
 public:
  /// `action[b]` is the matrix of m -> m * b_b for each algebra basis element.
  RightModule(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action);

  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const Algebra& algebra() const { return *algebra_; }
  std::size_t dim() const { return dim_; }
  const Matrix& action(std::size_t basis_index) const { return action_.at(basis_index); }

  Matrix act(const Vector& x) const;
  Vector act(const Vector& x, const Vector& m) const;

  /// Checks act(b_i b_j) = act(b_j) act(b_i) for all basis pairs and act(1) = 1.
  bool is_valid() const;

 private:
  AlgebraPtr algebra_;
  std::size_t dim_;
  std::vector<Matrix> action_;
};

using ModulePtr = std::shared_ptr<const RightModule>;

/// Module homomorphism; `matrix` is dim(target) x dim(source).
struct ModuleMap {
  ModulePtr source;
  ModulePtr target;
  Matrix matrix;

  Vector operator()(const Vector& m) const { return matrix * m; }
  bool is_homomorphism() const;
};

ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
ModuleMap operator+(const ModuleMap& f, const ModuleMap& g);
ModuleMap operator-(const ModuleMap& f, const ModuleMap& g);
ModuleMap operator*(const Scalar& c, const ModuleMap& f);
ModuleMap identity_map(const ModulePtr& m);
ModuleMap zero_map(const ModulePtr& source, const ModulePtr& target);

/// Inverse of a bijective module map, or nullopt.
std::optional<ModuleMap> invert(const ModuleMap& f);

ModulePtr zero_module(const AlgebraPtr& a);
ModulePtr regular_module(const AlgebraPtr& a);

/// A module together with its structure map (inclusion or projection).
struct Embedded {
  ModulePtr module;
  ModuleMap map;
};

/// Smallest submodule containing the given vectors.
Subspace generated_submodule(const RightModule& m, const std::vector<Vector>& vectors);
/// Throws if `u` is not closed under the action.
Embedded submodule(const ModulePtr& m, const Subspace& u);
Embedded quotient_module(const ModulePtr& m, const Subspace& u);
Embedded kernel(const ModuleMap& f);
Subspace image(const ModuleMap& f);

/// M * J.
Subspace radical_submodule(const RightModule& m);

struct DirectSum {
  ModulePtr module;
  std::vector<ModuleMap> injections;
  std::vector<ModuleMap> projections;
};
DirectSum direct_sum(const std::vector<ModulePtr>& parts);

/// Restriction along an algebra map B -> A given by the images of B's basis.
ModulePtr restrict_scalars(const ModulePtr& m, const AlgebraPtr& b, const std::vector<Vector>& images);

/// Matrix with entries in the algebra; entry (k, l) is the k-th component
/// of the image of the l-th generator.
struct AlgMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Vector> entries;

  AlgMatrix() = default;
  AlgMatrix(std::size_t r, std::size_t c, std::size_t algebra_dim)
      : rows(r), cols(c), entries(r * c, Vector(algebra_dim)) {}
  Vector& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const Vector& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  bool is_zero() const;
  AlgMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const AlgMatrix& m);

  AlgMatrix& operator+=(const AlgMatrix& o);
  AlgMatrix& operator-=(const AlgMatrix& o);
  friend AlgMatrix operator+(AlgMatrix a, const AlgMatrix& b) { return a += b; }
  friend AlgMatrix operator-(AlgMatrix a, const AlgMatrix& b) { return a -= b; }
  friend AlgMatrix operator*(const Scalar& c, AlgMatrix m);
  friend bool operator==(const AlgMatrix& a, const AlgMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
  }
};

/// g after f, for maps between sums of projectives: (gf)(k, m) = sum_l g(k, l) f(l, m).
AlgMatrix compose(const Algebra& a, const AlgMatrix& g, const AlgMatrix& f);
/// Sum of the diagonal entries.
Vector diagonal_sum(const Algebra& a, const AlgMatrix& m);
/// Entries listed in row-major order, concatenated.
Vector flatten(const AlgMatrix& m);

/// Basis of e A f (or e J f).
std::vector<Vector> corner_basis(const Algebra& a, const Vector& e, const Vector& f, bool radical_only = false);

/// The projective module  e_1 A (+) ... (+) e_n A  for idempotents e_k
/// (primitive vertex idempotents or the unit).
class ProjectiveSum {
 public:
  ProjectiveSum() = default;
  ProjectiveSum(AlgebraPtr a, std::vector<Vector> blocks);
  static ProjectiveSum of_vertices(const AlgebraPtr& a, const std::vector<std::size_t>& vertices);
  static ProjectiveSum free(const AlgebraPtr& a, std::size_t rank);

  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const ModulePtr& module() const { return module_; }
  std::size_t rank() const { return blocks_.size(); }
  const Vector& block(std::size_t k) const { return blocks_.at(k); }
  const std::vector<Vector>& blocks() const { return blocks_; }
  const Subspace& block_space(std::size_t k) const { return spaces_.at(k); }
  std::size_t offset(std::size_t k) const { return offsets_.at(k); }

  /// Module coordinates of the element with the given algebra components.
  Vector element(const std::vector<Vector>& components) const;
  std::vector<Vector> components(const Vector& m) const;
  Vector generator(std::size_t k) const;

  /// Map sending generator k to images[k], which must lie in N * e_k.
  ModuleMap map_to(const ModulePtr& n, const std::vector<Vector>& images) const;
  ModuleMap map_from_matrix(const ProjectiveSum& target, const AlgMatrix& m) const;
  AlgMatrix matrix_of(const ModuleMap& f, const ProjectiveSum& target) const;

  /// Basis of Hom(this, target) from bases of e'_k A e_l (or e'_k J e_l).
  std::vector<ModuleMap> hom_basis(const ProjectiveSum& target, bool radical_only = false) const;

  ProjectiveSum permuted(const std::vector<std::size_t>& order) const;

 private:
  AlgebraPtr algebra_;
  std::vector<Vector> blocks_;
  std::vector<Subspace> spaces_;
  std::vector<std::size_t> offsets_;
  ModulePtr module_;
};

ProjectiveSum concat(const ProjectiveSum& a, const ProjectiveSum& b);

AlgMatrix identity_matrix(const ProjectiveSum& p);
AlgMatrix zero_matrix(const ProjectiveSum& from, const ProjectiveSum& to);
/// Basis of Hom(from, to) as single-entry matrices, ordered by (l, k, corner basis).
std::vector<AlgMatrix> hom_matrices(const ProjectiveSum& from, const ProjectiveSum& to, bool radical_only = false);

/// e_i A.
ModulePtr indecomposable_projective(const AlgebraPtr& a, std::size_t vertex);
/// e_i A / e_i J.
ModulePtr simple_module(const AlgebraPtr& a, std::size_t vertex);

/// Basis of Hom_A(M, N) from the kernel of the stacked intertwining
/// constraints over the algebra generators.
std::vector<ModuleMap> hom_space(const ModulePtr& m, const ModulePtr& n);

struct Cover {
  ModulePtr top;
  ProjectiveSum projective;
  ModuleMap map;  // projective -> M, surjective with kernel inside projective * J
};
Cover top_and_cover(const ModulePtr& m);

/// Dimension of each top summand: multiplicity of S_i in M / MJ.
std::vector<std::size_t> top_dimension_vector(const RightModule& m);

/// Exact isomorphism test used by the test suite: equal top dimension vectors
/// and an invertible element in a seeded sample of Hom(M, N).
bool is_isomorphic(const ModulePtr& m, const ModulePtr& n);

/// True when the simple S_i is isomorphic to a direct summand of M.
bool has_simple_summand(const RightModule& m, std::size_t vertex);

}  // namespace hstrace
