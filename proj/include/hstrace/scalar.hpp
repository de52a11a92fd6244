#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace hstrace {

class Scalar;

/// Ground field: the rationals, or a prime field F_p with p < 2^31.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec prime(std::uint32_t p);

  bool is_prime_field() const { return modulus_ != 0; }
  std::uint32_t modulus() const { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar make(long long value) const;
  Scalar make(const mpz_class& num, const mpz_class& den) const;

  /// Brings a scalar from any representation into this field.
  Scalar normalize(const Scalar& s) const;

  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint32_t p) : modulus_(p) {}
  std::uint32_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact field element. A scalar with modulus 0 is a rational number; a
/// scalar with modulus p is a residue in [0, p). Binary operations between a
/// rational and a residue promote the rational into F_p.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& q) : q_(q) { q_.canonicalize(); }  // NOLINT

  static Scalar residue(std::int64_t r, std::uint32_t p);

  bool is_zero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }
  bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }
  std::uint32_t modulus() const { return p_; }

  /// Rational value; only meaningful when modulus() == 0.
  const mpq_class& rational() const { return q_; }
  std::int64_t residue_value() const { return r_; }

  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  friend class FieldSpec;
  static std::int64_t to_residue(const mpq_class& q, std::uint32_t p);
  void promote(std::uint32_t p);

  std::uint32_t p_ = 0;
  std::int64_t r_ = 0;
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hstrace
