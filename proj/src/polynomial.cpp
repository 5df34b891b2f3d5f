#include "modcore/polynomial.hpp"

#include <algorithm>

#include "modcore/errors.hpp"

namespace modcore {

namespace {

void check_ring(const RingPtr& r) {
  if (!r) throw MathError("polynomial has no ring");
}

}  // namespace

Polynomial Polynomial::zero(RingPtr ring) {
  check_ring(ring);
  Polynomial p;
  p.ring_ = std::move(ring);
  return p;
}

Polynomial Polynomial::one(RingPtr ring) {
  check_ring(ring);
  Scalar c = ring->field().one();
  return constant(std::move(ring), c);
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  check_ring(ring);
  Expvec e(ring->nvars(), 0);
  return monomial(std::move(ring), std::move(e), c);
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
  check_ring(ring);
  if (index < 0 || index >= ring->nvars()) throw MathError("variable index out of range");
  Expvec e(ring->nvars(), 0);
  e[index] = 1;
  return monomial(std::move(ring), std::move(e), ring->field().one());
}

Polynomial Polynomial::monomial(RingPtr ring, Expvec e, const Scalar& c) {
  check_ring(ring);
  if (static_cast<int>(e.size()) != ring->nvars())
    throw MismatchError("exponent vector length does not match ring");
  Polynomial p;
  p.ring_ = std::move(ring);
  if (!p.ring_->field().is_zero(c)) p.terms_.push_back({std::move(e), c});
  return p;
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  check_ring(ring);
  Polynomial p;
  p.ring_ = std::move(ring);
  p.terms_ = std::move(terms);
  return p;
}

const Polynomial::Term& Polynomial::lead() const {
  if (terms_.empty()) throw MathError("zero polynomial has no leading term");
  return terms_.front();
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, exp_degree(t.mon));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = exp_degree(terms_.front().mon);
  for (const auto& t : terms_)
    if (exp_degree(t.mon) != d) return false;
  return true;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && exp_degree(terms_.front().mon) == 0);
}

bool Polynomial::equals(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) return false;
  if (terms_.size() != other.terms_.size()) return false;
  const Field& f = ring_->field();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mon != other.terms_[i].mon) return false;
    if (!f.eq(terms_[i].coeff, other.terms_[i].coeff)) return false;
  }
  return true;
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring()))
    throw MismatchError("polynomials live in different rings");
}

namespace {

// Merge two descending term lists, adding coefficients of equal monomials.
// bsign = +1 for addition, applied as f.add / f.sub.
std::vector<Polynomial::Term> merge_terms(const PolyRing& ring,
                                          const std::vector<Polynomial::Term>& a,
                                          const std::vector<Polynomial::Term>& b,
                                          bool subtract) {
  const Field& f = ring.field();
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ring.cmp(a[i].mon, b[j].mon);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      Scalar s = subtract ? f.neg(b[j].coeff) : b[j].coeff;
      out.push_back({b[j].mon, s});
      ++j;
    } else {
      Scalar s = subtract ? f.sub(a[i].coeff, b[j].coeff) : f.add(a[i].coeff, b[j].coeff);
      if (!f.is_zero(s)) out.push_back({a[i].mon, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    Scalar s = subtract ? f.neg(b[j].coeff) : b[j].coeff;
    out.push_back({b[j].mon, s});
  }
  return out;
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  return Polynomial::from_sorted_terms(a.ring(), merge_terms(*a.ring(), a.terms(), b.terms(), false));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  return Polynomial::from_sorted_terms(a.ring(), merge_terms(*a.ring(), a.terms(), b.terms(), true));
}

Polynomial Polynomial::operator-() const {
  check_ring(ring_);
  const Field& f = ring_->field();
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = f.neg(t.coeff);
  return from_sorted_terms(ring_, std::move(out));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  check_ring(ring_);
  const Field& f = ring_->field();
  if (f.is_zero(c)) return zero(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = f.mul(t.coeff, c);
  return from_sorted_terms(ring_, std::move(out));
}

Polynomial Polynomial::term_scaled(const Scalar& c, const Expvec& m) const {
  check_ring(ring_);
  const Field& f = ring_->field();
  if (f.is_zero(c)) return zero(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({exp_mul(t.mon, m), f.mul(t.coeff, c)});
  return from_sorted_terms(ring_, std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  const RingPtr& ring = a.ring();
  const Field& f = ring->field();
  if (a.is_zero() || b.is_zero()) return Polynomial::zero(ring);
  // Accumulate all pairwise products, sort, then combine equal monomials.
  std::vector<Polynomial::Term> prod;
  prod.reserve(a.num_terms() * b.num_terms());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms())
      prod.push_back({exp_mul(ta.mon, tb.mon), f.mul(ta.coeff, tb.coeff)});
  std::sort(prod.begin(), prod.end(), [&](const auto& s, const auto& t) {
    return ring->cmp(s.mon, t.mon) > 0;
  });
  std::vector<Polynomial::Term> out;
  out.reserve(prod.size());
  for (auto& t : prod) {
    if (!out.empty() && out.back().mon == t.mon) {
      out.back().coeff = f.add(out.back().coeff, t.coeff);
      if (f.is_zero(out.back().coeff)) out.pop_back();
    } else {
      out.push_back(std::move(t));
    }
  }
  return Polynomial::from_sorted_terms(ring, std::move(out));
}

Polynomial axpy_sub(const Polynomial& a, const Scalar& c, const Expvec& m, const Polynomial& b) {
  require_same_ring(a, b);
  return a - b.term_scaled(c, m);
}

Polynomial poly_pow(const Polynomial& base, int k) {
  if (k < 0) throw MathError("negative power of a polynomial");
  Polynomial acc = Polynomial::monomial(base.ring(), Expvec(base.ring()->nvars(), 0),
                                        base.ring()->field().one());
  Polynomial sq = base;
  int e = k;
  while (e > 0) {
    if (e & 1) acc = acc * sq;
    e >>= 1;
    if (e > 0) sq = sq * sq;
  }
  return acc;
}

Polynomial transport(const Polynomial& p, const RingPtr& target) {
  if (!p.ring() || !target) throw MathError("transport needs two rings");
  if (p.ring()->field() != target->field())
    throw MismatchError("transport across different coefficient fields");
  if (same_ring(p.ring(), target)) return p;
  const auto& src_names = p.ring()->var_names();
  std::vector<int> map(src_names.size());
  for (std::size_t i = 0; i < src_names.size(); ++i) map[i] = target->var_index(src_names[i]);
  std::vector<Polynomial::Term> out;
  out.reserve(p.num_terms());
  for (const auto& t : p.terms()) {
    Expvec e(target->nvars(), 0);
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (t.mon[i] == 0) continue;
      if (map[i] < 0)
        throw MathError("variable '" + src_names[i] + "' is absent from the target ring");
      e[map[i]] = t.mon[i];
    }
    out.push_back({std::move(e), t.coeff});
  }
  std::sort(out.begin(), out.end(), [&](const auto& s, const auto& t) {
    return target->cmp(s.mon, t.mon) > 0;
  });
  return Polynomial::from_sorted_terms(target, std::move(out));
}

Polynomial kill_variables(const Polynomial& p, const std::vector<int>& kill) {
  std::vector<char> dead(p.ring()->nvars(), 0);
  for (int i : kill) dead.at(static_cast<std::size_t>(i)) = 1;
  std::vector<Polynomial::Term> out;
  for (const auto& t : p.terms()) {
    bool keep = true;
    for (int i = 0; i < p.ring()->nvars(); ++i)
      if (dead[i] && t.mon[i] > 0) {
        keep = false;
        break;
      }
    if (keep) out.push_back(t);
  }
  return Polynomial::from_sorted_terms(p.ring(), std::move(out));
}

}  // namespace modcore
