#include "modcore/field.hpp"

#include "modcore/errors.hpp"

namespace modcore {

namespace {

bool is_prime_long(long p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (long i = 3; i <= p / i; i += 2)
    if (p % i == 0) return false;
  return true;
}

long mod_inverse(long a, long p) {
  // extended Euclid; a in [1, p)
  long t = 0, new_t = 1;
  long r = p, new_r = a;
  while (new_r != 0) {
    long q = r / new_r;
    long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw MathError("element not invertible mod p");
  return t < 0 ? t + p : t;
}

}  // namespace

Field Field::prime(long p) {
  if (!is_prime_long(p)) throw MathError("characteristic must be prime: " + std::to_string(p));
  return Field(p);
}

Field Field::rationals() { return Field(0); }

Scalar Field::zero() const {
  return is_prime_field() ? Scalar::make_fp(0) : Scalar::make_rat(mpq_class(0));
}

Scalar Field::one() const {
  return is_prime_field() ? Scalar::make_fp(1) : Scalar::make_rat(mpq_class(1));
}

Scalar Field::from_long(long v) const {
  if (is_prime_field()) {
    long r = v % p_;
    if (r < 0) r += p_;
    return Scalar::make_fp(r);
  }
  return Scalar::make_rat(mpq_class(static_cast<signed long>(v)));
}

Scalar Field::from_decimal(const std::string& digits) const {
  if (digits.empty()) throw MathError("empty numeric literal");
  if (is_prime_field()) {
    long acc = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') throw MathError("bad digit in numeric literal");
      acc = (acc * 10 + (c - '0')) % p_;
    }
    return Scalar::make_fp(acc);
  }
  mpz_class z(digits, 10);
  return Scalar::make_rat(mpq_class(z));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) {
    long r = a.fp() + b.fp();
    if (r >= p_) r -= p_;
    return Scalar::make_fp(r);
  }
  return Scalar::make_rat(a.rat() + b.rat());
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) {
    long r = a.fp() - b.fp();
    if (r < 0) r += p_;
    return Scalar::make_fp(r);
  }
  return Scalar::make_rat(a.rat() - b.rat());
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) return Scalar::make_fp((a.fp() * b.fp()) % p_);
  return Scalar::make_rat(a.rat() * b.rat());
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::neg(const Scalar& a) const {
  if (is_prime_field()) return Scalar::make_fp(a.fp() == 0 ? 0 : p_ - a.fp());
  return Scalar::make_rat(-a.rat());
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw MathError("division by zero in coefficient field");
  if (is_prime_field()) return Scalar::make_fp(mod_inverse(a.fp(), p_));
  return Scalar::make_rat(1 / a.rat());
}

bool Field::is_zero(const Scalar& a) const {
  return is_prime_field() ? a.fp() == 0 : a.rat() == 0;
}

bool Field::is_one(const Scalar& a) const {
  return is_prime_field() ? a.fp() == 1 : a.rat() == 1;
}

bool Field::eq(const Scalar& a, const Scalar& b) const {
  return is_prime_field() ? a.fp() == b.fp() : a.rat() == b.rat();
}

std::string Field::to_string(const Scalar& a) const {
  return is_prime_field() ? std::to_string(a.fp()) : a.rat().get_str();
}

bool Field::display_negative(const Scalar& a) const {
  if (is_prime_field()) return 2 * a.fp() > p_;
  return sgn(a.rat()) < 0;
}

Scalar Field::display_magnitude(const Scalar& a) const {
  return display_negative(a) ? neg(a) : a;
}

Scalar Field::sample(Rng& rng) const {
  long bound = is_prime_field() ? p_ : kDefaultPrime;
  long v = static_cast<long>(rng.below(static_cast<std::uint64_t>(bound)));
  return from_long(v);
}

}  // namespace modcore
