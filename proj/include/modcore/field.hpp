#ifndef MODCORE_FIELD_HPP
#define MODCORE_FIELD_HPP

#include <gmpxx.h>

#include <memory>
#include <string>

#include "modcore/rng.hpp"

namespace modcore {

// Default modulus: large enough that seeded "general" choices behave like
// general elements over an infinite field.
inline constexpr long kDefaultPrime = 32003;

// An element of the active coefficient field.  For a prime field the value is
// the representative in [0, p); for the rationals it is a canonical mpq
// (lowest terms, positive denominator) behind a shared immutable pointer.
// All arithmetic goes through Field, which knows which mode is live.
class Scalar {
 public:
  Scalar() = default;

  long fp() const { return fp_; }
  const mpq_class& rat() const { return *q_; }
  bool is_rat() const { return q_ != nullptr; }

  static Scalar make_fp(long v) {
    Scalar s;
    s.fp_ = v;
    return s;
  }
  static Scalar make_rat(mpq_class q) {
    Scalar s;
    s.q_ = std::make_shared<const mpq_class>(std::move(q));
    return s;
  }

 private:
  long fp_ = 0;
  std::shared_ptr<const mpq_class> q_;
};

// F_p (p prime) or Q.  Characteristic 0 means the rationals.
class Field {
 public:
  static Field prime(long p);  // throws MathError unless p is prime
  static Field rationals();

  bool is_prime_field() const { return p_ != 0; }
  long characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_long(long v) const;
  // Non-negative decimal literal of any length.
  Scalar from_decimal(const std::string& digits) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar div(const Scalar& a, const Scalar& b) const;  // throws on zero divisor
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;  // throws on zero

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool eq(const Scalar& a, const Scalar& b) const;

  // Canonical representation; parses back to the same element.
  std::string to_string(const Scalar& a) const;

  // Display helpers so polynomials can print "- 2*x" instead of "32001*x".
  bool display_negative(const Scalar& a) const;
  Scalar display_magnitude(const Scalar& a) const;

  // Uniform element.  Over Q draws an integer in [0, kDefaultPrime).
  Scalar sample(Rng& rng) const;

  bool operator==(const Field& other) const { return p_ == other.p_; }
  bool operator!=(const Field& other) const { return !(*this == other); }

 private:
  explicit Field(long p) : p_(p) {}
  long p_ = 0;  // 0 = rationals
};

}  // namespace modcore

#endif
