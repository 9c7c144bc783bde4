#pragma once

#include "forge/iso.hpp"
#include "forge/morphism.hpp"
#include "forge/ogposet.hpp"

#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace forge {

enum class CertKind { Point, Paste, Rewrite };

struct CertNode;
using Cert = std::shared_ptr<const CertNode>;

// Construction tree of a molecule together with the realized poset of every node.
struct CertNode {
  CertKind kind = CertKind::Point;
  int k = -1;  // pasting dimension, Paste only
  Cert left;   // Paste: left factor; Rewrite: input side
  Cert right;  // Paste: right factor; Rewrite: output side
  PosetPtr poset;
  std::vector<int> left_map;   // element of left->poset to element of poset
  std::vector<int> right_map;  // element of right->poset to element of poset

  const OgPoset& P() const { return *poset; }
};

Cert point();
Cert paste(const Cert& U, const Cert& V, int k);  // throws BoundaryMismatch
Cert rewrite(const Cert& U, const Cert& V);       // throws NotRound, BoundaryMismatch
Cert globe(int n);
Cert arrow_chain(int k);

// The same tree realized on Q, where phi is an isomorphism from c's poset onto Q.
Cert transport(const Cert& c, PosetPtr Q, const Iso& phi);

std::size_t cert_nodes(const Cert& c);
bool cert_consistent(const Cert& c);  // maps are embeddings that respect faces

struct Recognition {
  Cert cert;           // null when refuted
  std::string reason;  // refutation reason
  Subset witness;      // unsplittable closed subset named by the refutation

  explicit operator bool() const { return cert != nullptr; }
};

struct Layering {
  int k = -1;
  std::vector<Subset> layers;
};

struct SubmoleculeStep {
  enum class Kind { Split, Boundary } kind = Kind::Split;
  int k = -1;
  Sign alpha = Sign::Minus;   // Boundary only
  bool part_is_left = true;   // Split only
  Subset whole;
  Subset part;   // the factor or boundary that still contains the submolecule
  Subset other;  // the complementary factor (Split only)
};

struct SubmoleculeWitness {
  std::vector<SubmoleculeStep> steps;  // outermost first
};

// Recognition, layerings and submolecule search on closed subsets of one poset.
// Results are cached per subset.
class Recognizer {
public:
  explicit Recognizer(PosetPtr P);

  const OgPoset& poset() const { return *P_; }
  const PosetPtr& poset_ptr() const { return P_; }

  Recognition recognize(const Subset& U);
  Recognition recognize() { return recognize(P_->all()); }

  // All k-layerings of the molecule U, at most `limit` of them. Throws NoLayering.
  std::vector<Layering> layerings(const Subset& U, int k, std::size_t limit = std::numeric_limits<std::size_t>::max());
  int layering_dimension(const Subset& U);

  // Witness that S is a submolecule of the molecule W, found by bounded search.
  std::optional<SubmoleculeWitness> find_submolecule(const Subset& W, const Subset& S, std::size_t budget = 20000);

  // The realized poset of a closed subset.
  const Restriction& restriction(const Subset& U);

private:
  Cert node(CertKind kind, const Subset& U, int k, const Cert& l, const Subset& lu, const Cert& r,
            const Subset& ru);
  bool split_search(const Subset& U, int k, const std::vector<int>& tops, std::size_t limit,
                    std::vector<std::vector<Subset>>& found);

  PosetPtr P_;
  std::unordered_map<Subset, Recognition, SubsetHash> cache_;
  std::unordered_map<Subset, std::shared_ptr<const Restriction>, SubsetHash> restrictions_;
};

Recognition is_molecule(const OgPoset& P);
Recognition is_molecule(PosetPtr P);
bool is_atom(const OgPoset& P);
bool is_rdc(const OgPoset& P);

std::vector<Layering> layerings(const OgPoset& P, int k, std::size_t limit = std::numeric_limits<std::size_t>::max());
int layering_dimension(const OgPoset& P);

enum class PasteSide {
  Input,   // U #ι V with ι: ∂ₖ⁺U ↪ ∂ₖ⁻V
  Output,  // V #ι U with ι: ∂ₖ⁻U ↪ ∂ₖ⁺V
};

struct PasteAtResult {
  Cert cert;
  std::vector<int> u_map;  // U element -> result element
  std::vector<int> v_map;  // V element -> result element
};

// Pasting of U at a submolecule of a boundary of V; iota maps boundary ids of U to ids of V.
PasteAtResult paste_at(const Cert& U, const Cert& V, int k, const std::map<std::string, std::string>& iota,
                       PasteSide side = PasteSide::Input);

// The unique comap U → Oⁿ of a round molecule of dim n.
Comap globe_subdivision(const OgPoset& U);

}  // namespace forge
