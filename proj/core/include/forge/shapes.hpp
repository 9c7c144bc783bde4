#pragma once

#include "forge/maps.hpp"
#include "forge/molecule.hpp"
#include "forge/morphism.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace forge {

enum class CylKind { Plain, Left, Right };

// I ⊗_K U together with the element correspondence. Element (i, x) has id "0-|x", "0+|x"
// or "1|x"; the collapsed copy of x ∈ K keeps the id of x.
struct Cylinder {
  PosetPtr poset;
  PosetMap tau;  // projection onto U
  Subset K;
  std::vector<std::array<int, 3>> at;  // at[x] = {(0⁻,x), (0⁺,x), (1,x)} or -1 when x ∈ K
  std::vector<int> collapsed;          // (x) for x ∈ K, else -1

  int zero(int x, Sign s) const { return at[x][slot(s)]; }
  int one(int x) const { return at[x][2]; }
  int of(int x, Sign s) const { return collapsed[x] >= 0 ? collapsed[x] : zero(x, s); }
};

// Throws NotClosed.
Cylinder cylinder(PosetPtr U, const Subset& K);
// K ⊆ ∂⁺U, else KNotInBoundary.
Cylinder lcyl(PosetPtr U, const Subset& K);
// K ⊆ ∂⁻U, else KNotInBoundary.
Cylinder rcyl(PosetPtr U, const Subset& K);
Cylinder make_cylinder(PosetPtr U, const Subset& K, CylKind kind);

// One invertor clause on top of cur: the left-inverted cylinder relative to ∂⁺cur for 'L',
// the right-inverted one relative to ∂⁻cur with its new top reversed for 'R'.
Cylinder invertor_stage(const PosetPtr& cur, char letter);

// Word over {L, R}; the first letter is the outermost construction.
struct Invertor {
  PosetPtr poset;
  PosetMap tau;  // H_t(U) → U, a fibration of the underlying posets
  std::vector<Cylinder> stages;  // innermost first; stages[i] is built on stage i−1 (or U)
};

// Throws NotRound, and ParseError on letters other than L and R.
Invertor invertor(PosetPtr U, const std::string& t);

struct Substitution {
  PosetPtr poset;  // P[V/U]_s
  Comap c;         // P[V/U]_s → P, dual to s′
  std::vector<int> from_p;  // P element -> new element, -1 inside ι(U)
  std::vector<int> from_v;  // V element -> new element
};

// iota: U ↪ P an inclusion; c: V → U the dual of the subdivision s: U ⇝ V.
// Throws NotInclusion, NotSubdivision.
Substitution substitute(const PosetMap& iota, const Comap& c);

// Cylinder of a subdivision: given c: V → U and K ⊆ U, the comap I⊗_{s(K)}V → I⊗_K U.
struct CylinderSubdivision {
  Cylinder fine;    // over V
  Cylinder coarse;  // over U
  Comap c;
};
CylinderSubdivision cyl_subdiv(const Comap& c, const Subset& K, CylKind kind = CylKind::Plain);  // throws ChecksFail

struct InvertorSubdivision {
  Invertor fine;
  Invertor coarse;
  Comap c;  // H_t(V) → H_t(U)
};
InvertorSubdivision invertor_subdiv(const Comap& c, const std::string& t);  // throws ChecksFail

// ε u = u ∘ τ_{∂U}.
PosetMap unit_shape(const PosetMap& u);

struct Degeneracy {
  PosetMap p;  // U → V surjective cartesian
  PosetMap v;  // V → target
};
// Factorization through the image of u, when that image has lower dimension.
std::optional<Degeneracy> find_degeneracy(const PosetMap& u);
// rev u = v ∘ Dₙp. Throws NotDegenerate.
PosetMap reverse(const PosetMap& u, const std::optional<Degeneracy>& witness = std::nullopt);

struct HornWitness {
  bool ok = false;
  std::string failure;
  // layers[i] = (L⁽ⁱ⁺¹⁾, R⁽ⁱ⁺¹⁾) as closed subsets of U; a unit factor is recorded as its boundary.
  std::vector<std::pair<Subset, Subset>> layers;
};

// Marked horn condition for the atom U at a maximal element x of ∂^α U.
// Throws PreconditionFail when ⊤ is unmarked or x is not maximal in ∂^α U.
HornWitness marked_horn_check(PosetPtr U, const Subset& marked, int x, Sign alpha);

}  // namespace forge
