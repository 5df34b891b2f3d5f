#ifndef MODCORE_RING_HPP
#define MODCORE_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "modcore/field.hpp"
#include "modcore/monomial.hpp"

namespace modcore {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// The ambient ring k[x_1..x_d] with a fixed global monomial order.
// Immutable; shared by every value built over it.
class PolyRing {
 public:
  static RingPtr make(Field field, std::vector<std::string> var_names,
                      MonomialOrder order = MonomialOrder::grevlex());

  const Field& field() const { return field_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& var_names() const { return vars_; }
  const MonomialOrder& order() const { return order_; }

  int var_index(const std::string& name) const;  // -1 if absent

  int cmp(const Expvec& u, const Expvec& v) const {
    return compare_monomials(order_, u, v);
  }

 private:
  PolyRing(Field f, std::vector<std::string> v, MonomialOrder o)
      : field_(f), vars_(std::move(v)), order_(o) {}

  Field field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

// Structural equality: same field, same variable names, same order.
bool same_ring(const PolyRing& a, const PolyRing& b);
bool same_ring(const RingPtr& a, const RingPtr& b);

// Valid variable identifier: [A-Za-z_][A-Za-z0-9_]*
bool valid_var_name(const std::string& s);

}  // namespace modcore

#endif
