#include "hstrace/scalar.hpp"

#include <ostream>

namespace hstrace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 31)) throw std::invalid_argument("field modulus must be below 2^31");
  if (!is_prime(p)) throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
  return FieldSpec(p);
}

Scalar FieldSpec::zero() const { return make(0); }
Scalar FieldSpec::one() const { return make(1); }

Scalar FieldSpec::make(long long value) const {
  if (!modulus_) return Scalar(value);
  return Scalar::residue(static_cast<std::int64_t>(value % static_cast<long long>(modulus_)), modulus_);
}

Scalar FieldSpec::make(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw std::invalid_argument("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  if (!modulus_) return Scalar(q);
  return Scalar::residue(Scalar::to_residue(q, modulus_), modulus_);
}

Scalar FieldSpec::normalize(const Scalar& s) const {
  if (s.p_ == modulus_) return s;
  if (s.p_ != 0) throw std::invalid_argument("scalar belongs to a different prime field");
  return Scalar::residue(Scalar::to_residue(s.q_, modulus_), modulus_);
}

std::string FieldSpec::name() const {
  return modulus_ ? "F" + std::to_string(modulus_) : std::string("Q");
}

Scalar Scalar::residue(std::int64_t r, std::uint32_t p) {
  Scalar s;
  s.p_ = p;
  r %= static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  s.r_ = r;
  return s;
}

namespace {

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::int64_t>((__int128)result * base % p);
    base = static_cast<std::int64_t>((__int128)base * base % p);
    exp >>= 1;
  }
  return result;
}

}  // namespace

std::int64_t Scalar::to_residue(const mpq_class& q, std::uint32_t p) {
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  if (den == 0) throw std::domain_error("denominator divisible by the field characteristic");
  std::int64_t n = num.get_si();
  std::int64_t d = den.get_si();
  if (n < 0) n += p;
  return static_cast<std::int64_t>((__int128)n * pow_mod(d, p - 2, p) % p);
}

void Scalar::promote(std::uint32_t p) {
  if (p_ == p || p == 0) return;
  if (p_ != 0) throw std::invalid_argument("mixed prime fields in one operation");
  r_ = to_residue(q_, p);
  q_ = 0;
  p_ = p;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (p_) return residue(pow_mod(r_, p_ - 2, p_), p_);
  Scalar s;
  s.q_ = 1 / q_;
  return s;
}

Scalar Scalar::operator-() const {
  if (p_) return residue(r_ ? p_ - r_ : 0, p_);
  Scalar s;
  s.q_ = -q_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (p_ || o.p_) {
    promote(o.p_);
    Scalar b = o;
    b.promote(p_);
    r_ += b.r_;
    if (r_ >= p_) r_ -= p_;
  } else {
    q_ += o.q_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (p_ || o.p_) {
    promote(o.p_);
    Scalar b = o;
    b.promote(p_);
    r_ -= b.r_;
    if (r_ < 0) r_ += p_;
  } else {
    q_ -= o.q_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (p_ || o.p_) {
    promote(o.p_);
    Scalar b = o;
    b.promote(p_);
    r_ = static_cast<std::int64_t>((__int128)r_ * b.r_ % p_);
  } else {
    q_ *= o.q_;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) return a.p_ ? a.r_ == b.r_ : a.q_ == b.q_;
  if (a.p_ && b.p_) return false;
  if (a.p_) return a.r_ == Scalar::to_residue(b.q_, a.p_);
  return b.r_ == Scalar::to_residue(a.q_, b.p_);
}

std::string Scalar::to_string() const {
  if (p_) return std::to_string(r_);
  return q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace hstrace
