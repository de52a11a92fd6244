#pragma once

#include "hstrace/trace.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace hstrace {

/// Bounded cochain complex of sums of e_k A. Term i sits in degree lo + i;
/// d[i] : terms[i] -> terms[i+1] is a matrix over A.
struct ProjComplex {
  AlgebraPtr algebra;
  int lo = 0;
  std::vector<ProjectiveSum> terms;
  std::vector<AlgMatrix> d;

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  /// Zero sum outside the support.
  ProjectiveSum term(int degree) const;
  /// P^i -> P^{i+1}; zero outside the support.
  AlgMatrix differential(int degree) const;
  ModuleMap differential_map(int degree) const;
  ProjectiveRealization component(int degree) const;
  bool squares_to_zero() const;
};

using ComplexPtr = std::shared_ptr<const ProjComplex>;

ComplexPtr make_complex(const AlgebraPtr& a, int lo, std::vector<ProjectiveSum> terms, std::vector<AlgMatrix> d);

/// Degree-preserving map with components f^i : P^i -> Q^i, stored over the
/// union of the two supports.
struct ChainMap {
  ComplexPtr source, target;
  int lo = 0;
  std::vector<AlgMatrix> f;

  AlgMatrix at(int degree) const;
  bool commutes() const;
};

/// s^i : P^i -> Q^{i-1}.
struct Homotopy {
  ComplexPtr source, target;
  int lo = 0;
  std::vector<AlgMatrix> s;

  AlgMatrix at(int degree) const;
};

ChainMap make_chain_map(const ComplexPtr& p, const ComplexPtr& q, const std::vector<AlgMatrix>& components);
ChainMap identity_chain(const ComplexPtr& p);
ChainMap zero_chain(const ComplexPtr& p, const ComplexPtr& q);
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap operator+(const ChainMap& f, const ChainMap& g);
ChainMap operator-(const ChainMap& f, const ChainMap& g);
ChainMap operator*(const Scalar& c, const ChainMap& f);

/// s d + d s.
ChainMap boundary(const Homotopy& h);

/// A witness s with f = s d + d s, or nullopt when f is not null-homotopic.
std::optional<Homotopy> is_null_homotopic(const ChainMap& f);

/// Cone(u)^i = P'^{i+1} (+) P^i with d(b', c) = (-d'b', u b' + d c).
ComplexPtr cone(const ChainMap& u);
/// Cyl(u)^i = P'^i (+) P'^{i+1} (+) P^i with d(b, b', c) = (d'b - b', -d'b', u b' + d c).
ComplexPtr cylinder(const ChainMap& u);
/// Endomorphisms induced by a pair with f u = u f'.
ChainMap cone_endomorphism(const ComplexPtr& cone, const ChainMap& u, const ChainMap& f_prime, const ChainMap& f);
ChainMap cylinder_endomorphism(const ComplexPtr& cyl, const ChainMap& u, const ChainMap& f_prime, const ChainMap& f);

/// P (+) Q with the diagonal differential.
ComplexPtr direct_sum(const ComplexPtr& p, const ComplexPtr& q);

/// sum_i (-1)^i tr(f^i).
TraceClass hs_character(const ChainMap& f);
/// Same value computed through the generic realization of every component.
TraceClass hs_character_via_realizations(const ChainMap& f);

/// Linear systems whose unknowns are maps between sums of projectives, each a
/// combination of fixed basis matrices. Equations are sums of L o X o R.
class MapSystem {
 public:
  explicit MapSystem(AlgebraPtr a) : algebra_(std::move(a)) {}

  std::size_t add_unknown(std::vector<AlgMatrix> basis, std::size_t rows, std::size_t cols);
  struct Term {
    std::size_t unknown;
    std::optional<AlgMatrix> left, right;
    Scalar sign = Scalar(1);
  };
  /// sum of terms = rhs (zero when absent); all terms share the shape of rhs.
  void add_equation(const std::vector<Term>& terms, std::size_t rows, std::size_t cols,
                    const std::optional<AlgMatrix>& rhs = std::nullopt);

  std::size_t num_unknown_coordinates() const { return total_; }
  /// Coefficient vectors of a basis of solutions of the homogeneous system.
  std::vector<Vector> kernel() const;
  /// One solution of the inhomogeneous system.
  std::optional<Vector> solve() const;
  /// Value of unknown `id` for a coefficient vector.
  AlgMatrix value(std::size_t id, const Vector& coefficients) const;

 private:
  Matrix assemble(bool with_rhs) const;

  AlgebraPtr algebra_;
  std::vector<std::vector<AlgMatrix>> bases_;
  std::vector<std::pair<std::size_t, std::size_t>> shapes_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
  struct Row {
    std::vector<std::pair<std::size_t, Scalar>> entries;  // sparse coefficients
    Scalar rhs;
  };
  std::vector<Row> rows_;
};

/// Adds unknown chain-map components f^i : P^i -> Q^i for lo <= i <= hi
/// together with the equations d_Q f^i = f^{i+1} d_P; returns their ids.
std::vector<std::size_t> add_chain_unknowns(MapSystem& sys, const ComplexPtr& p, const ComplexPtr& q, int lo, int hi);

/// Randomized checks that the character is well defined on the homotopy
/// category and additive on triangles.
std::vector<TheoremReport> verify_character(const AlgebraPtr& a, std::size_t trials, std::uint64_t seed);

}  // namespace hstrace
