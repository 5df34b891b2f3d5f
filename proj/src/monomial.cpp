#include "modcore/monomial.hpp"

#include <algorithm>

#include "modcore/errors.hpp"

namespace modcore {

int exp_degree(const Expvec& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

Expvec exp_mul(const Expvec& a, const Expvec& b) {
  Expvec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool exp_divides(const Expvec& a, const Expvec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Expvec exp_div(const Expvec& b, const Expvec& a) {
  Expvec r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    r[i] = b[i] - a[i];
    if (r[i] < 0) throw MathError("monomial division with remainder");
  }
  return r;
}

Expvec exp_lcm(const Expvec& a, const Expvec& b) {
  Expvec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool exp_coprime(const Expvec& a, const Expvec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

std::string order_name(const MonomialOrder& o) {
  switch (o.kind) {
    case MonomialOrder::Kind::Grevlex:
      return "grevlex";
    case MonomialOrder::Kind::Lex:
      return "lex";
    case MonomialOrder::Kind::Elimination:
      return "elimination(" + std::to_string(o.block) + ")";
    case MonomialOrder::Kind::PositionOverTerm:
      return "position_over_term";
  }
  return "?";
}

namespace {

int cmp_grevlex(const Expvec& u, const Expvec& v) {
  int du = exp_degree(u), dv = exp_degree(v);
  if (du != dv) return du < dv ? -1 : 1;
  for (std::size_t i = u.size(); i-- > 0;) {
    if (u[i] != v[i]) return u[i] > v[i] ? -1 : 1;
  }
  return 0;
}

int cmp_lex(const Expvec& u, const Expvec& v) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != v[i]) return u[i] < v[i] ? -1 : 1;
  return 0;
}

}  // namespace

int compare_monomials(const MonomialOrder& order, const Expvec& u, const Expvec& v) {
  if (u.size() != v.size()) throw MismatchError("exponent vectors of different length");
  switch (order.kind) {
    case MonomialOrder::Kind::Lex:
      return cmp_lex(u, v);
    case MonomialOrder::Kind::Elimination: {
      int bu = 0, bv = 0;
      int b = std::min<int>(order.block, static_cast<int>(u.size()));
      for (int i = 0; i < b; ++i) {
        bu += u[i];
        bv += v[i];
      }
      if (bu != bv) return bu < bv ? -1 : 1;
      return cmp_grevlex(u, v);
    }
    case MonomialOrder::Kind::Grevlex:
    case MonomialOrder::Kind::PositionOverTerm:
      return cmp_grevlex(u, v);
  }
  return 0;
}

}  // namespace modcore
