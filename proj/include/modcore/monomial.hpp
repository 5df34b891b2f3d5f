#ifndef MODCORE_MONOMIAL_HPP
#define MODCORE_MONOMIAL_HPP

#include <string>
#include <vector>

namespace modcore {

// Exponent vector of a monomial; length = number of ring variables.
using Expvec = std::vector<int>;

int exp_degree(const Expvec& e);
Expvec exp_mul(const Expvec& a, const Expvec& b);
bool exp_divides(const Expvec& a, const Expvec& b);  // a | b
Expvec exp_div(const Expvec& b, const Expvec& a);    // b / a, requires a | b
Expvec exp_lcm(const Expvec& a, const Expvec& b);
bool exp_coprime(const Expvec& a, const Expvec& b);

struct MonomialOrder {
  enum class Kind { Grevlex, Lex, Elimination, PositionOverTerm };

  Kind kind = Kind::Grevlex;
  int block = 0;  // Elimination: the first `block` variables dominate the rest

  static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder elimination(int block) { return {Kind::Elimination, block}; }
  static MonomialOrder position_over_term() { return {Kind::PositionOverTerm, 0}; }

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && (kind != Kind::Elimination || block == o.block);
  }
  bool operator!=(const MonomialOrder& o) const { return !(*this == o); }
};

std::string order_name(const MonomialOrder& o);

// Total-order comparison: -1 (u < v), 0, +1 (u > v).  Elimination compares
// the degree in the leading block first, then falls back to grevlex on the
// full vector.  PositionOverTerm on bare exponent vectors compares like
// grevlex (the position component lives on module terms, not monomials).
// Throws MismatchError on length mismatch.
int compare_monomials(const MonomialOrder& order, const Expvec& u, const Expvec& v);

}  // namespace modcore

#endif
