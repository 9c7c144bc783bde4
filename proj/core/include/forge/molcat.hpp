#pragma once

#include "forge/maps.hpp"
#include "forge/molecule.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace forge {

// A molecule with a local embedding into P, identified up to the unique shape isomorphism.
struct MolCell {
  Cert shape;
  PosetMap u;
  std::vector<int> key;  // sorted image multiset

  int dim() const { return shape->P().dim(); }
};

// Throws NotLocalEmbedding, NotMolecule.
MolCell cell(const PosetMap& u, Cert shape = nullptr);
bool same_cell(const MolCell& a, const MolCell& b);
MolCell cell_boundary(const MolCell& c, int k, Sign a);
MolCell paste_cells(const MolCell& u, const MolCell& v, int k);  // throws BoundaryMismatch
std::vector<MolCell> atoms_in(const PosetPtr& P);
// The cell of a closed subset of P that is a molecule.
MolCell subset_cell(Recognizer& R, const Subset& U);

// Cells are interned handles; two handles are equal exactly when the cells are.
class CompositionStructure {
public:
  virtual ~CompositionStructure() = default;

  virtual std::size_t size() const = 0;
  virtual int dim(int c) const = 0;
  virtual std::string name(int c) const = 0;

  // ∂ₖ^α c, which is c itself when k ≥ dim c.
  int boundary(int c, int k, Sign a);
  // a ∘ₖ b with lower-dimensional arguments acting as units; empty when undefined.
  std::optional<int> compose(int a, int b, int k);

  // Cells that may be assigned to an element whose closure is the given atom.
  virtual std::vector<int> candidates(const OgPoset& atom) = 0;

protected:
  virtual int proper_boundary(int c, int k, Sign a) = 0;
  // Called only when both cells have dimension > k and their k-boundaries match.
  virtual std::optional<int> proper_compose(int a, int b, int k) = 0;
};

// Mol(Q).
class MolStructure : public CompositionStructure {
public:
  explicit MolStructure(PosetPtr Q);

  std::size_t size() const override { return cells_.size(); }
  int dim(int c) const override { return cells_[c].dim(); }
  std::string name(int c) const override;
  std::vector<int> candidates(const OgPoset& atom) override;

  int intern(MolCell c);
  const MolCell& get(int c) const { return cells_[c]; }
  const PosetPtr& base() const { return Q_; }
  Recognizer& recognizer() { return R_; }

protected:
  int proper_boundary(int c, int k, Sign a) override;
  std::optional<int> proper_compose(int a, int b, int k) override;

private:
  PosetPtr Q_;
  Recognizer R_;
  std::vector<MolCell> cells_;
  std::map<std::vector<int>, std::vector<int>> by_key_;
  std::vector<int> atoms_;
  std::map<std::tuple<int, int, int>, std::optional<int>> composed_;
};

// A finitely presented composition structure: named cells with their boundaries and a
// partial table of composites.
class TableStructure : public CompositionStructure {
public:
  struct Cell {
    std::string name;
    int dim = 0;
    std::vector<int> minus, plus;  // ∂ₖ⁻, ∂ₖ⁺ for k < dim
  };

  std::size_t size() const override { return cells_.size(); }
  int dim(int c) const override { return cells_[c].dim; }
  std::string name(int c) const override { return cells_[c].name; }
  std::vector<int> candidates(const OgPoset& atom) override;

  int add_cell(Cell c);
  void set_composite(int a, int b, int k, int result);
  int find(const std::string& name) const;  // -1 when absent
  const std::vector<Cell>& cells() const { return cells_; }
  const std::map<std::tuple<int, int, int>, int>& composites() const { return table_; }

  TableStructure skeleton(int n) const;
  // n-cells quotiented by the relation ∂ₙ⁻d ∼ ∂ₙ⁺d for every (n+1)-cell d.
  TableStructure truncate(int n) const;

  // Every molecule contained in P as a closed subset, with all composites inside P.
  static TableStructure from_molecules(const PosetPtr& P);

protected:
  int proper_boundary(int c, int k, Sign a) override;
  std::optional<int> proper_compose(int a, int b, int k) override;

private:
  std::vector<Cell> cells_;
  std::map<std::tuple<int, int, int>, int> table_;
  std::unordered_map<std::string, int> index_;
};

// The table of Mol(P) with the composite of the two k-layers of the interchange molecule
// replaced by a fresh cell parallel to the whole.
TableStructure broken_interchange_table();

struct MatchingFamily {
  PosetPtr base;
  std::vector<int> cells;  // handle per element of base
};

// x ↦ (c⁻¹(cl x) ↪ Q) for a comap c: Q → P.
MatchingFamily family_from_comap(const Comap& c, MolStructure& C);
// x ↦ f restricted to cl x, for a local embedding f: P → Q.
MatchingFamily family_from_map(const PosetMap& f, MolStructure& C);

struct AmalgamateOptions {
  bool reverse_order = false;        // alternative tie-breaking among decompositions
  std::size_t exhaustive_limit = 16;  // all layerings up to this many elements
  std::size_t sample = 32;            // layerings per dimension beyond it
};

struct Amalgamation {
  bool ok = false;
  std::string failure;
  Subset where;  // the molecule whose decompositions disagree
  std::unordered_map<Subset, int, SubsetHash> values;
  int whole = -1;  // value on the base when it is a molecule
  std::size_t decompositions = 0;
};

// Throws Incompatible when a cell's boundary differs from the family on that boundary.
Amalgamation amalgamate(const MatchingFamily& F, CompositionStructure& C, const AmalgamateOptions& opt = {});

struct StricterViolation {
  std::string shape;
  std::vector<std::pair<std::string, std::string>> family;  // element id, cell name
  std::string detail;
};

struct StricterReport {
  std::size_t shapes = 0;
  std::size_t families = 0;
  bool truncated = false;
  std::vector<StricterViolation> violations;
};

// Pasting shapes up to the given bounds, built from globes by pasting pairs.
std::vector<Cert> pasting_shapes(int dim_bound, std::size_t size_bound);

StricterReport stricter_check(CompositionStructure& C, int dim_bound, std::size_t size_bound,
                              std::size_t family_budget = 20000);

}  // namespace forge
