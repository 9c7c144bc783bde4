#pragma once

#include "forge/complex.hpp"
#include "forge/graded.hpp"
#include "forge/molecule.hpp"

#include <optional>
#include <string>
#include <vector>

namespace forge {

// What a fixture is expected to be; checked by check_fixture.
enum class FixtureClass {
  Atom,      // molecule with a greatest element
  Molecule,  // molecule, not an atom
  Rdc,       // regular directed complex that is not a molecule
};

struct Fixture {
  std::string name;
  FixtureClass cls = FixtureClass::Molecule;
  PosetPtr poset;
  Cert cert;  // when built from one
  bool round = false;
};

struct ComplexFixture {
  std::string name;
  CellComplex complex;
  std::vector<std::size_t> counts;  // expected generators by dimension
};

// Deterministic, every element validated on construction.
std::vector<Fixture> corpus();
std::optional<Fixture> find_fixture(const std::string& name);
std::vector<ComplexFixture> complex_corpus();

CheckResult check_fixture(const Fixture& f);

// Points a, b, c and edges a → c, b → c: an RDC that is not a molecule.
OgPoset two_arrows_common_target();
// (a ∘₀ c) ∘₁ (b ∘₀ d) with points x, y, z.
OgPoset interchange();

}  // namespace forge
