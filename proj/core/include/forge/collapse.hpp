#pragma once

#include "forge/maps.hpp"
#include "forge/morphism.hpp"

#include <optional>
#include <vector>

namespace forge {

// ∂₀^α of the closure of x, as a set of points.
Subset zero_boundary(const OgPoset& U, int x, Sign a);

// K nonempty, closed, and every x with ∂₀^{−β}x ⊆ K lies in K. Throws NotClosed.
CheckResult is_collapsible(const OgPoset& U, const Subset& K, Sign beta);

// Every β-collapsible subset of U. Such a subset is determined by its points.
std::vector<Subset> collapsible_subsets(const OgPoset& U, Sign beta);

struct Collapse {
  PosetPtr quotient;
  PosetMap p;  // U → U/K
  int bullet = -1;
};

// U/K: K becomes a single point. Throws NotCollapsible.
Collapse collapse(PosetPtr U, const Subset& K, Sign beta);

// Compares collapse() against an independently built quotient order of U by K.
CheckResult pushout_check(PosetPtr U, const Subset& K, Sign beta);

// Inclusion of an arrow chain from ∂₀^α U to x (α = −) or from x to ∂₀^α U (α = +).
PosetMap path_to_point(PosetPtr U, int x, Sign alpha);

// U′ with ΣU′ ≅ U when gr₀U consists of exactly the two points ∂₀⁻U and ∂₀⁺U.
std::optional<OgPoset> detect_suspension(const OgPoset& U);

struct Desuspension {
  PosetPtr V;
  PosetMap q;  // U → ΣV
};

// Collapses K⁻ then K⁺ and desuspends. Throws PreconditionFail naming the failed clause.
Desuspension desuspend(PosetPtr U, const Subset& kminus, const Subset& kplus);

}  // namespace forge
