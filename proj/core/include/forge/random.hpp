#pragma once

#include "forge/molecule.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace forge {

// FORGE_SEED when set, else the fallback.
std::uint64_t seed_from_env(std::uint64_t fallback);

struct ExchangeQuadruple {
  Cert u, u2, v, v2;  // U, U′, V, V′
  int k = 0;          // U ∘ₖ V
  int l = 1;          // U ∘ₗ U′, k < l
};

// An atom A = cl x of a poset, a round molecule V with the same boundary, and the comap
// V → A that is the identity on the boundary and sends the interior to x.
struct AtomSubdivision {
  Cert atom;
  Cert fine;
  Comap c;
};

// Random molecules grown from atoms by rewrites, pastings at submolecules, suspension and
// Gray products with the arrow. Deterministic for a given seed.
class MoleculeGenerator {
public:
  explicit MoleculeGenerator(std::uint64_t seed, int max_dim = 4, std::size_t max_size = 60);

  Cert molecule();
  Cert molecule(int dim);  // exactly this dimension
  Cert round_molecule(int dim);
  Cert atom(int dim);

  // A molecule W with ∂ₖ⁻W = B, of dimension at most max_dim, dim B ≤ k.
  Cert grow(const Cert& B, int k);

  // Some V with U ∘ₖ V defined.
  std::pair<Cert, Cert> pastable_pair(int k);
  std::optional<ExchangeQuadruple> exchange_quadruple();

  AtomSubdivision subdivide(const Cert& A);

  std::mt19937_64& rng() { return rng_; }
  int uniform(int lo, int hi);  // inclusive

private:
  // Pastes a new atom of dimension at most cap onto a k-dimensional atom of ∂ₖ^side W.
  Cert grow_step(const Cert& W, int k, Sign side, int cap);
  Cert raise(const Cert& A, int dim);

  std::mt19937_64 rng_;
  int max_dim_;
  std::size_t max_size_;
};

// The same molecule with short ids: v0, v1, .. for points, e0, .. for edges, and so on.
Cert tidy(const Cert& c);

}  // namespace forge
