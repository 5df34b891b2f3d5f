#include "modcore/ring.hpp"

#include <set>

#include "modcore/errors.hpp"

namespace modcore {

bool valid_var_name(const std::string& s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s[0])) return false;
  for (char c : s)
    if (!alpha(c) && !digit(c)) return false;
  return true;
}

RingPtr PolyRing::make(Field field, std::vector<std::string> var_names, MonomialOrder order) {
  if (var_names.empty()) throw MathError("a polynomial ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : var_names) {
    if (!valid_var_name(v)) throw MathError("invalid variable name: '" + v + "'");
    if (!seen.insert(v).second) throw MathError("duplicate variable name: '" + v + "'");
  }
  if (order.kind == MonomialOrder::Kind::PositionOverTerm)
    throw MathError("position_over_term orders module terms, not a ring");
  if (order.kind == MonomialOrder::Kind::Elimination &&
      (order.block <= 0 || order.block >= static_cast<int>(var_names.size())))
    throw MathError("elimination block must split the variables");
  return RingPtr(new PolyRing(field, std::move(var_names), order));
}

int PolyRing::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars_[i] == name) return i;
  return -1;
}

bool same_ring(const PolyRing& a, const PolyRing& b) {
  return a.field() == b.field() && a.var_names() == b.var_names() && a.order() == b.order();
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return same_ring(*a, *b);
}

}  // namespace modcore
