#pragma once

#include "forge/maps.hpp"
#include "forge/molecule.hpp"

#include <string>
#include <vector>

namespace forge {

// A cell attached along its boundary. attach sends every element of the shape to the
// generator it lands on; lower-dimensional targets encode degenerate faces such as units.
struct Generator {
  std::string name;
  int dim = 0;
  PosetPtr shape;  // an atom
  std::vector<int> attach;
  int stage = 0;
};

// Finite presentation of a diagrammatic set by atoms glued along their boundaries.
class CellComplex {
public:
  // Sets the image of the shape's greatest element to the new generator.
  int add(Generator g);

  const std::vector<Generator>& generators() const { return gens_; }
  const Generator& operator[](int g) const { return gens_[g]; }
  std::size_t size() const { return gens_.size(); }
  int find(const std::string& name) const;  // -1 when absent
  int dim() const;
  std::vector<std::size_t> counts() const;  // generators by dimension

private:
  std::vector<Generator> gens_;
};

// One generator per element, shaped by its closure. Generator indices equal element indices.
CellComplex from_rdc(const PosetPtr& P);

// Every attaching map respects dimensions and agrees with the attaching maps of the faces it hits.
CheckResult check_complex(const CellComplex& X);

struct Localisation {
  CellComplex complex;
  int max_dim = 0;
  std::size_t stages = 0;
  std::size_t next_dim_count = 0;  // generators of dimension max_dim the next stage would add
};

// Attaches a^L, a^R and the invertor cells H_L(a), H_R(a) for every marked cell, stage by
// stage, keeping generators of dimension below max_dim.
Localisation localise(CellComplex X, const std::vector<int>& marked, int max_dim);

// Localisation of an atom at its greatest element. Throws PreconditionFail when dim U = 0.
Localisation walking_equivalence(const PosetPtr& U, int max_dim);

struct WeakComposite {
  Localisation loc;
  std::vector<int> inclusion;  // element of U -> generator
  int composite = -1;          // ⟨U⟩, shaped ∂⁻U ⇒ ∂⁺U
  int witness = -1;            // U ⇒ ⟨U⟩, the localised cell
};

// Throws NotRound, PreconditionFail when dim U = 0.
WeakComposite weak_composite_shape(const PosetPtr& U, int max_dim);

// Generator names graded by dimension.
std::vector<std::vector<std::string>> polygraph_basis(const CellComplex& X);

CellComplex skeleton(const CellComplex& X, int n);

struct Truncation {
  int n = 0;
  // Classes of n-dimensional boundary keys identified by (n+1)-cells; a key lists the
  // generators hit by the maximal elements of a boundary.
  std::vector<std::vector<std::string>> classes;
  CellComplex complex;  // the n-skeleton
};
Truncation truncate(const CellComplex& X, int n);

}  // namespace forge
