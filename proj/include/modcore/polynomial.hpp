#ifndef MODCORE_POLYNOMIAL_HPP
#define MODCORE_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "modcore/ring.hpp"

namespace modcore {

// Sparse exact multivariate polynomial.  Terms are kept strictly descending
// in the ring's monomial order with no zero coefficients, so equality is a
// plain term-by-term comparison.
class Polynomial {
 public:
  struct Term {
    Expvec mon;
    Scalar coeff;
  };

  Polynomial() = default;  // detached zero; give it a ring before use

  static Polynomial zero(RingPtr ring);
  static Polynomial one(RingPtr ring);
  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial variable(RingPtr ring, int index);
  static Polynomial monomial(RingPtr ring, Expvec e, const Scalar& c);
  // Takes ownership of terms already sorted descending with no zeros.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& lead() const;  // throws on zero

  int total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;
  bool is_constant() const;  // zero or degree 0

  bool equals(const Polynomial& other) const;
  bool operator==(const Polynomial& o) const { return equals(o); }
  bool operator!=(const Polynomial& o) const { return !equals(o); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  Polynomial scaled(const Scalar& c) const;
  // this * c * x^m
  Polynomial term_scaled(const Scalar& c, const Expvec& m) const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

// a - c * x^m * b, the reduction-step primitive.
Polynomial axpy_sub(const Polynomial& a, const Scalar& c, const Expvec& m, const Polynomial& b);

Polynomial poly_pow(const Polynomial& base, int k);

// Re-expresses `p` in `target`, matching variables by name.  A variable with
// a nonzero exponent that is missing from `target` raises MathError; fields
// must agree.  Also used to re-sort a polynomial under a different order.
Polynomial transport(const Polynomial& p, const RingPtr& target);

// Drops every term with a positive exponent on a variable selected by `kill`
// (indices into p's ring).
Polynomial kill_variables(const Polynomial& p, const std::vector<int>& kill);

// Requires structurally equal rings; throws MismatchError otherwise.
void require_same_ring(const Polynomial& a, const Polynomial& b);

}  // namespace modcore

#endif
