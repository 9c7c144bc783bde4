#pragma once

#include "forge/morphism.hpp"

#include <string>

namespace forge {

struct CheckResult {
  bool ok = true;
  std::string failure;

  explicit operator bool() const { return ok; }
  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

CheckResult check_order_preserving(const PosetMap& f);
CheckResult check_order_preserving(const Comap& c);

// Boundary preservation and finality of every boundary restriction.
CheckResult check_map(const PosetMap& f);  // throws NotOrderPreserving
// Greatest-lift condition; throws NotAMap when check_map fails.
CheckResult check_cartesian(const PosetMap& f);
// The greatest-lift condition alone, for order-preserving functions that need not be maps.
CheckResult check_fibration(const PosetMap& f);
CheckResult check_local_embedding(const PosetMap& f);
CheckResult check_inclusion(const PosetMap& f);
CheckResult check_declared(const PosetMap& f);

// Preimages of atoms are molecules and preimages commute with boundaries.
CheckResult check_comap(const Comap& c);

// s(U) = c⁻¹(U) for the subdivision dual to c.
Subset subdiv_image(const Comap& c, const Subset& U);

// g ∘ f.
PosetMap compose(const PosetMap& f, const PosetMap& g);
Comap compose(const Comap& c, const Comap& d);

}  // namespace forge
