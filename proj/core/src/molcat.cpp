#include "forge/molcat.hpp"

#include "forge/error.hpp"
#include "forge/iso.hpp"

#include <boost/pending/disjoint_sets.hpp>

#include <algorithm>
#include <functional>
#include <memory>
#include <set>

namespace forge {

// ---------------------------------------------------------------------------
// Cells

MolCell cell(const PosetMap& u, Cert shape) {
  if (!shape) {
    Recognition r = is_molecule(u.source);
    if (!r) throw Error(Errc::NotMolecule, r.reason);
    shape = r.cert;
  }
  if (shape->P().size() != u.source->size()) throw Error(Errc::Mismatch, "shape and map disagree");
  MolCell c;
  c.shape = shape;
  c.u = u;
  c.u.source = shape->poset;
  c.u.declared = MapClass::LocalEmbedding;
  CheckResult le;
  try {
    le = check_local_embedding(c.u);
  } catch (const Error& e) {
    le = CheckResult::fail(e.what());
  }
  if (!le) throw Error(Errc::NotLocalEmbedding, le.failure);
  c.key = c.u.assign;
  std::sort(c.key.begin(), c.key.end());
  return c;
}

bool same_cell(const MolCell& a, const MolCell& b) {
  if (a.u.target.get() != b.u.target.get() && !(*a.u.target == *b.u.target)) return false;
  if (a.key != b.key) return false;
  IsoOptions opt;
  opt.colors_p = a.u.assign;
  opt.colors_q = b.u.assign;
  return find_iso(a.shape->P(), b.shape->P(), opt).has_value();
}

MolCell subset_cell(Recognizer& R, const Subset& U) {
  Recognition r = R.recognize(U);
  if (!r) throw Error(Errc::NotMolecule, r.reason);
  const Restriction& res = R.restriction(U);
  MolCell c;
  c.shape = r.cert;
  c.u.source = r.cert->poset;
  c.u.target = R.poset_ptr();
  c.u.declared = MapClass::LocalEmbedding;
  c.u.assign = res.to_parent;
  c.key = c.u.assign;
  std::sort(c.key.begin(), c.key.end());
  return c;
}

MolCell cell_boundary(const MolCell& c, int k, Sign a) {
  if (k >= c.dim()) return c;
  Recognizer R(c.shape->poset);
  MolCell b = subset_cell(R, boundary(c.shape->P(), c.shape->P().all(), k, a));
  b.u.target = c.u.target;
  for (int& y : b.u.assign) y = c.u.assign[y];
  b.key = b.u.assign;
  std::sort(b.key.begin(), b.key.end());
  return b;
}

MolCell paste_cells(const MolCell& u, const MolCell& v, int k) {
  if (!same_cell(cell_boundary(u, k, Sign::Plus), cell_boundary(v, k, Sign::Minus))) {
    throw Error(Errc::BoundaryMismatch, "the cells do not meet along their " + std::to_string(k) + "-boundaries");
  }
  Cert p = paste(u.shape, v.shape, k);
  PosetMap f;
  f.source = p->poset;
  f.target = u.u.target;
  f.assign.assign(p->P().size(), -1);
  for (std::size_t i = 0; i < u.u.assign.size(); ++i) f.assign[p->left_map[i]] = u.u.assign[i];
  for (std::size_t i = 0; i < v.u.assign.size(); ++i) {
    int& slot = f.assign[p->right_map[i]];
    if (slot >= 0 && slot != v.u.assign[i]) throw Error(Errc::BoundaryMismatch, "the embeddings disagree on the shared boundary");
    slot = v.u.assign[i];
  }
  return cell(f, p);
}

std::vector<MolCell> atoms_in(const PosetPtr& P) {
  Recognizer R(P);
  std::vector<MolCell> out;
  for (std::size_t x = 0; x < P->size(); ++x) out.push_back(subset_cell(R, closure(*P, static_cast<int>(x))));
  return out;
}

// ---------------------------------------------------------------------------
// Composition structures

int CompositionStructure::boundary(int c, int k, Sign a) {
  if (k >= dim(c)) return c;
  return proper_boundary(c, k, a);
}

std::optional<int> CompositionStructure::compose(int a, int b, int k) {
  if (k < 0) return std::nullopt;
  if (dim(b) <= k) {
    if (boundary(a, k, Sign::Plus) == b) return a;
    return std::nullopt;
  }
  if (dim(a) <= k) {
    if (boundary(b, k, Sign::Minus) == a) return b;
    return std::nullopt;
  }
  if (boundary(a, k, Sign::Plus) != boundary(b, k, Sign::Minus)) return std::nullopt;
  return proper_compose(a, b, k);
}

MolStructure::MolStructure(PosetPtr Q) : Q_(Q), R_(Q) {}

int MolStructure::intern(MolCell c) {
  auto& bucket = by_key_[c.key];
  for (int h : bucket) {
    if (same_cell(cells_[h], c)) return h;
  }
  cells_.push_back(std::move(c));
  bucket.push_back(static_cast<int>(cells_.size() - 1));
  return bucket.back();
}

std::string MolStructure::name(int c) const {
  const MolCell& m = cells_[c];
  const OgPoset& S = m.shape->P();
  const Subset mx = maximal(S, S.all());
  if (mx.count() == 1) return Q_->id(m.u.assign[mx.find_first()]);
  std::vector<std::string> ids;
  for (int x : members(mx)) ids.push_back(Q_->id(m.u.assign[x]));
  std::sort(ids.begin(), ids.end());
  std::string out = "<";
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? " " : "") + ids[i];
  return out + ">";
}

std::vector<int> MolStructure::candidates(const OgPoset& atom) {
  if (atoms_.empty()) {
    for (auto& a : atoms_in(Q_)) atoms_.push_back(intern(std::move(a)));
  }
  std::vector<int> out;
  for (int h : atoms_) {
    if (dim(h) == atom.dim() && find_iso(atom, cells_[h].shape->P())) out.push_back(h);
  }
  return out;
}

int MolStructure::proper_boundary(int c, int k, Sign a) { return intern(cell_boundary(cells_[c], k, a)); }

std::optional<int> MolStructure::proper_compose(int a, int b, int k) {
  const auto key = std::make_tuple(a, b, k);
  if (auto it = composed_.find(key); it != composed_.end()) return it->second;
  std::optional<int> r;
  try {
    r = intern(paste_cells(cells_[a], cells_[b], k));
  } catch (const Error& e) {
    if (e.code() != Errc::BoundaryMismatch && e.code() != Errc::NotLocalEmbedding) throw;
  }
  composed_.emplace(key, r);
  return r;
}

int TableStructure::add_cell(Cell c) {
  if (index_.count(c.name)) throw Error(Errc::DuplicateId, "duplicate cell '" + c.name + "'");
  if (static_cast<int>(c.minus.size()) != c.dim || static_cast<int>(c.plus.size()) != c.dim) {
    throw Error(Errc::ParseError, "cell '" + c.name + "' needs one boundary of each sign below its dimension");
  }
  const int h = static_cast<int>(cells_.size());
  index_.emplace(c.name, h);
  cells_.push_back(std::move(c));
  return h;
}

void TableStructure::set_composite(int a, int b, int k, int result) { table_[{a, b, k}] = result; }

int TableStructure::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> TableStructure::candidates(const OgPoset& atom) {
  std::vector<int> out;
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    if (cells_[c].dim == atom.dim()) out.push_back(static_cast<int>(c));
  }
  return out;
}

int TableStructure::proper_boundary(int c, int k, Sign a) {
  return a == Sign::Minus ? cells_[c].minus[k] : cells_[c].plus[k];
}

std::optional<int> TableStructure::proper_compose(int a, int b, int k) {
  auto it = table_.find({a, b, k});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

namespace {

TableStructure remapped(const std::vector<TableStructure::Cell>& cells, const std::map<std::tuple<int, int, int>, int>& table,
                        const std::vector<int>& keep, const std::vector<int>& rep) {
  // keep: cells carried over; rep: representative of every cell (itself when kept).
  TableStructure out;
  std::vector<int> to(cells.size(), -1);
  for (int c : keep) {
    TableStructure::Cell copy = cells[c];
    for (int& b : copy.minus) b = rep[b];
    for (int& b : copy.plus) b = rep[b];
    to[c] = out.add_cell(std::move(copy));
  }
  // Boundary handles refer to old indices until remapped here.
  TableStructure fixed;
  for (int c : keep) {
    TableStructure::Cell copy = out.cells()[to[c]];
    for (int& b : copy.minus) b = to[b];
    for (int& b : copy.plus) b = to[b];
    fixed.add_cell(std::move(copy));
  }
  for (const auto& [key, r] : table) {
    auto [a, b, k] = key;
    const int ra = to[rep[a]], rb = to[rep[b]], rr = to[rep[r]];
    if (ra < 0 || rb < 0 || rr < 0) continue;
    fixed.set_composite(ra, rb, k, rr);
  }
  return fixed;
}

}  // namespace

TableStructure TableStructure::skeleton(int n) const {
  std::vector<int> keep, rep(cells_.size());
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    rep[c] = static_cast<int>(c);
    if (cells_[c].dim <= n) keep.push_back(static_cast<int>(c));
  }
  return remapped(cells_, table_, keep, rep);
}

TableStructure TableStructure::truncate(int n) const {
  const std::size_t m = cells_.size();
  std::vector<int> rank(m), parent(m);
  boost::disjoint_sets<int*, int*> ds(rank.data(), parent.data());
  for (std::size_t c = 0; c < m; ++c) ds.make_set(static_cast<int>(c));
  for (std::size_t d = 0; d < m; ++d) {
    if (cells_[d].dim == n + 1) ds.union_set(cells_[d].minus[n], cells_[d].plus[n]);
  }
  // Close under the composites of the table.
  for (bool changed = true; changed;) {
    changed = false;
    std::map<std::tuple<int, int, int>, int> seen;
    for (const auto& [key, r] : table_) {
      auto [a, b, k] = key;
      if (cells_[r].dim > n) continue;
      auto probe = std::make_tuple(ds.find_set(a), ds.find_set(b), k);
      auto [it, fresh] = seen.emplace(probe, r);
      if (!fresh && ds.find_set(it->second) != ds.find_set(r)) {
        ds.union_set(it->second, r);
        changed = true;
      }
    }
  }
  // Representative: lowest dimension, then first index.
  std::map<int, int> best;
  for (std::size_t c = 0; c < m; ++c) {
    const int root = ds.find_set(static_cast<int>(c));
    auto it = best.find(root);
    if (it == best.end() || cells_[c].dim < cells_[it->second].dim) best[root] = static_cast<int>(c);
  }
  std::vector<int> keep, rep(m);
  for (std::size_t c = 0; c < m; ++c) {
    rep[c] = best[ds.find_set(static_cast<int>(c))];
    if (cells_[c].dim <= n && rep[c] == static_cast<int>(c)) keep.push_back(static_cast<int>(c));
  }
  return remapped(cells_, table_, keep, rep);
}

TableStructure TableStructure::from_molecules(const PosetPtr& Pptr) {
  const OgPoset& P = *Pptr;
  if (P.size() > 22) throw Error(Errc::PreconditionFail, "too many elements to enumerate molecules");
  Recognizer R(Pptr);
  std::vector<Subset> mols;
  for (std::size_t mask = 1; mask < (std::size_t{1} << P.size()); ++mask) {
    Subset U(P.size(), mask);
    if (is_closed(P, U) && R.recognize(U)) mols.push_back(U);
  }
  std::stable_sort(mols.begin(), mols.end(), [](const Subset& a, const Subset& b) { return a.count() < b.count(); });
  TableStructure t;
  std::unordered_map<Subset, int, SubsetHash> handle;
  for (const Subset& U : mols) {
    Cell c;
    c.dim = dim_of(P, U);
    const Subset mx = maximal(P, U);
    if (mx.count() == 1) {
      c.name = P.id(static_cast<int>(mx.find_first()));
    } else {
      std::vector<std::string> ids = ids_of(P, mx);
      std::sort(ids.begin(), ids.end());
      c.name = "(";
      for (std::size_t i = 0; i < ids.size(); ++i) c.name += (i ? " " : "") + ids[i];
      c.name += ")";
    }
    for (int k = 0; k < c.dim; ++k) {
      c.minus.push_back(handle.at(forge::boundary(P, U, k, Sign::Minus)));
      c.plus.push_back(handle.at(forge::boundary(P, U, k, Sign::Plus)));
    }
    handle.emplace(U, t.add_cell(std::move(c)));
  }
  for (const Subset& A : mols) {
    const int da = dim_of(P, A);
    for (const Subset& B : mols) {
      const int db = dim_of(P, B);
      for (int k = 0; k < std::min(da, db); ++k) {
        const Subset shared = forge::boundary(P, A, k, Sign::Plus);
        if (shared != forge::boundary(P, B, k, Sign::Minus) || (A & B) != shared) continue;
        auto it = handle.find(A | B);
        if (it != handle.end()) t.set_composite(handle.at(A), handle.at(B), k, it->second);
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Amalgamation

namespace {

// Recognizer of a base shape plus the layerings found on it, shared by every family over it.
struct ShapeContext {
  explicit ShapeContext(PosetPtr P) : R(std::move(P)) {}

  const std::vector<Layering>& layerings(const Subset& W, int k, std::size_t limit) {
    auto& slot = cache[{W, k}];
    if (!slot) {
      slot = std::make_unique<std::vector<Layering>>();
      try {
        *slot = R.layerings(W, k, limit);
      } catch (const Error& e) {
        if (e.code() != Errc::NoLayering) throw;
      }
    }
    return *slot;
  }

  struct KeyHash {
    std::size_t operator()(const std::pair<Subset, int>& p) const { return SubsetHash{}(p.first) * 31 + p.second; }
  };
  Recognizer R;
  std::unordered_map<std::pair<Subset, int>, std::unique_ptr<std::vector<Layering>>, KeyHash> cache;
};

struct Evaluator {
  ShapeContext& ctx;
  Recognizer& R;
  CompositionStructure& C;
  const std::vector<int>& cells;
  const AmalgamateOptions& opt;
  bool all_decompositions = true;

  Evaluator(ShapeContext& s, CompositionStructure& c, const std::vector<int>& cs, const AmalgamateOptions& o,
            bool all = true)
      : ctx(s), R(s.R), C(c), cells(cs), opt(o), all_decompositions(all) {}

  std::unordered_map<Subset, int, SubsetHash> values;
  std::size_t decompositions = 0;
  std::string failure;
  Subset where;

  std::optional<int> fail(std::string why, const Subset& W) {
    if (failure.empty()) {
      failure = std::move(why);
      where = W;
    }
    return std::nullopt;
  }

  std::string describe(const Subset& W) const {
    std::vector<std::string> ids = ids_of(R.poset(), maximal(R.poset(), W));
    std::sort(ids.begin(), ids.end());
    std::string out = "{";
    for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + ids[i];
    return out + "}";
  }

  // Value of a layering: the union of all but the last layer, composed with the last.
  std::optional<int> fold(const Layering& l, int k, bool& defined) {
    defined = true;
    Subset prefix = l.layers.front();
    for (std::size_t i = 1; i + 1 < l.layers.size(); ++i) prefix |= l.layers[i];
    std::optional<int> a = value(prefix);
    if (!a) return std::nullopt;
    std::optional<int> b = value(l.layers.back());
    if (!b) return std::nullopt;
    std::optional<int> r = C.compose(*a, *b, k);
    if (!r) defined = false;
    return r;
  }

  std::optional<int> value(const Subset& W) {
    if (auto it = values.find(W); it != values.end()) return it->second;
    if (!failure.empty()) return std::nullopt;
    const OgPoset& P = R.poset();
    const Subset mx = maximal(P, W);
    if (mx.count() == 1) {
      const int v = cells[mx.find_first()];
      values.emplace(W, v);
      return v;
    }
    const int n = dim_of(P, W);
    const std::size_t limit = W.count() <= opt.exhaustive_limit ? std::size_t{100000} : opt.sample;
    std::optional<int> result;
    std::string first_split;
    std::vector<int> ks;
    for (int k = 0; k < n; ++k) ks.push_back(k);
    if (opt.reverse_order) std::reverse(ks.begin(), ks.end());
    for (int k : ks) {
      std::vector<Layering> ls = ctx.layerings(W, k, limit);
      if (opt.reverse_order) std::reverse(ls.begin(), ls.end());
      for (const Layering& l : ls) {
        if (l.layers.size() < 2) continue;
        bool defined = true;
        std::optional<int> v = fold(l, k, defined);
        auto split = [&] {
          std::string out = std::to_string(k) + "-layering";
          for (const auto& layer : l.layers) out += " " + describe(layer);
          return out;
        };
        if (!v) {
          if (!defined) return fail("composite undefined for the " + split() + " of " + describe(W), W);
          return std::nullopt;
        }
        ++decompositions;
        if (!result) {
          result = v;
          first_split = split();
        } else if (*result != *v) {
          return fail("decompositions of " + describe(W) + " disagree: " + first_split + " gives " + C.name(*result) +
                          ", " + split() + " gives " + C.name(*v),
                      W);
        }
        if (!all_decompositions) break;
      }
      if (result && !all_decompositions) break;
    }
    if (!result) return fail("no decomposition of " + describe(W), W);
    values.emplace(W, *result);
    return result;
  }
};

// First violated boundary condition of x, or empty.
std::string boundary_mismatch(Evaluator& ev, int x) {
  const OgPoset& P = ev.R.poset();
  const Subset clx = closure(P, x);
  for (int k = 0; k < P.dim(x); ++k) {
    for (Sign a : kSigns) {
      const Subset b = boundary(P, clx, k, a);
      std::optional<int> v = ev.value(b);
      if (!v) return ev.failure.empty() ? "boundary of '" + P.id(x) + "' has no value" : ev.failure;
      const int expected = ev.C.boundary(ev.cells[x], k, a);
      if (*v != expected) {
        return std::string("the ") + sign_str(a) + std::to_string(k) + "-boundary of the cell at '" + P.id(x) + "' is " +
               ev.C.name(expected) + " but the family gives " + ev.C.name(*v);
      }
    }
  }
  return {};
}

}  // namespace

namespace {

Amalgamation amalgamate_in(ShapeContext& ctx, const MatchingFamily& F, CompositionStructure& C,
                           const AmalgamateOptions& opt) {
  Recognizer& R = ctx.R;
  Evaluator ev(ctx, C, F.cells, opt);
  const OgPoset& P = *F.base;
  for (std::size_t x = 0; x < P.size(); ++x) {
    if (C.dim(F.cells[x]) != P.dim(static_cast<int>(x))) {
      throw Error(Errc::Incompatible, "the cell at '" + P.id(static_cast<int>(x)) + "' has the wrong dimension");
    }
    std::string why = boundary_mismatch(ev, static_cast<int>(x));
    if (!why.empty()) {
      if (!ev.failure.empty()) break;  // a decomposition conflict, reported below
      throw Error(Errc::Incompatible, why);
    }
  }
  Amalgamation out;
  if (ev.failure.empty() && R.recognize()) {
    std::optional<int> whole = ev.value(P.all());
    if (whole) out.whole = *whole;
  }
  out.ok = ev.failure.empty();
  out.failure = ev.failure;
  out.where = ev.where;
  out.values = std::move(ev.values);
  out.decompositions = ev.decompositions;
  return out;
}

}  // namespace

Amalgamation amalgamate(const MatchingFamily& F, CompositionStructure& C, const AmalgamateOptions& opt) {
  if (F.cells.size() != F.base->size()) throw Error(Errc::Incompatible, "the family does not cover the base");
  ShapeContext ctx(F.base);
  return amalgamate_in(ctx, F, C, opt);
}

MatchingFamily family_from_comap(const Comap& c, MolStructure& C) {
  MatchingFamily F;
  F.base = c.target;
  Recognizer& R = C.recognizer();
  for (std::size_t x = 0; x < c.target->size(); ++x) {
    F.cells.push_back(C.intern(subset_cell(R, preimage(c, closure(*c.target, static_cast<int>(x))))));
  }
  return F;
}

MatchingFamily family_from_map(const PosetMap& f, MolStructure& C) {
  MatchingFamily F;
  F.base = f.source;
  Recognizer R(f.source);
  for (std::size_t x = 0; x < f.source->size(); ++x) {
    MolCell m = subset_cell(R, closure(*f.source, static_cast<int>(x)));
    m.u.target = C.base();
    for (int& y : m.u.assign) y = f.assign[y];
    F.cells.push_back(C.intern(cell(m.u, m.shape)));
  }
  return F;
}

// ---------------------------------------------------------------------------
// Stricter check

std::vector<Cert> pasting_shapes(int dim_bound, std::size_t size_bound) {
  std::vector<Cert> shapes;
  auto known = [&](const Cert& c) {
    for (const Cert& s : shapes) {
      if (s->P().size() == c->P().size() && s->P().dim() == c->P().dim() && find_iso(s->P(), c->P())) return true;
    }
    return false;
  };
  for (int n = 1; n <= dim_bound; ++n) {
    Cert g = globe(n);
    if (g->P().size() <= size_bound) shapes.push_back(g);
  }
  constexpr std::size_t kMaxShapes = 400;
  for (std::size_t i = 0; i < shapes.size() && shapes.size() < kMaxShapes; ++i) {
    for (std::size_t j = 0; j <= i && shapes.size() < kMaxShapes; ++j) {
      for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
        const Cert U = shapes[a], V = shapes[b];
        const int top = std::min(U->P().dim(), V->P().dim());
        for (int k = 0; k < top; ++k) {
          if (U->P().size() + V->P().size() > size_bound + boundary(U->P(), k, Sign::Plus).count()) continue;
          Cert W;
          try {
            W = paste(U, V, k);
          } catch (const Error&) {
            continue;
          }
          if (W->P().size() <= size_bound && !known(W)) shapes.push_back(W);
        }
      }
    }
  }
  return shapes;
}

StricterReport stricter_check(CompositionStructure& C, int dim_bound, std::size_t size_bound, std::size_t family_budget) {
  StricterReport report;
  const AmalgamateOptions opt;
  for (const Cert& shape : pasting_shapes(dim_bound, size_bound)) {
    ++report.shapes;
    const OgPoset& P = shape->P();
    ShapeContext ctx(shape->poset);
    Recognizer& R = ctx.R;
    std::vector<std::vector<int>> cand(P.size());
    for (std::size_t x = 0; x < P.size(); ++x) {
      cand[x] = C.candidates(*R.restriction(closure(P, static_cast<int>(x))).poset);
    }
    // Faces come right before the first element that needs them, so boundaries prune early.
    std::vector<int> order;
    std::vector<char> seen(P.size(), 0);
    std::function<void(int)> visit = [&](int x) {
      if (seen[x]) return;
      seen[x] = 1;
      for (Sign a : kSigns) {
        for (int y : P.faces(x, a)) visit(y);
      }
      order.push_back(x);
    };
    for (int x = static_cast<int>(P.size()) - 1; x >= 0; --x) visit(x);
    std::vector<int> cells(P.size(), -1);
    std::function<void(std::size_t)> assign = [&](std::size_t i) {
      if (report.truncated) return;
      if (i == order.size()) {
        if (++report.families > family_budget) {
          report.truncated = true;
          return;
        }
        Amalgamation a;
        try {
          a = amalgamate_in(ctx, MatchingFamily{shape->poset, cells}, C, opt);
        } catch (const Error& e) {
          if (e.code() != Errc::Incompatible) throw;
          a.failure = e.what();
        }
        if (!a.ok || a.whole < 0) {
          StricterViolation v;
          v.shape = std::to_string(P.size()) + "-element pasting of dimension " + std::to_string(P.dim());
          for (std::size_t y = 0; y < P.size(); ++y) v.family.emplace_back(P.id(static_cast<int>(y)), C.name(cells[y]));
          v.detail = a.failure.empty() ? "no value on the whole shape" : a.failure;
          report.violations.push_back(std::move(v));
        }
        return;
      }
      const int x = order[i];
      for (int c : cand[x]) {
        cells[x] = c;
        Evaluator ev(ctx, C, cells, opt, false);
        if (boundary_mismatch(ev, x).empty()) assign(i + 1);
        if (report.truncated) return;
      }
      cells[x] = -1;
    };
    assign(0);
    if (report.truncated) break;
  }
  return report;
}

TableStructure broken_interchange_table() {
  auto P = share(OgPoset::validate({
      {"x", 0, {}, {}},         {"y", 0, {}, {}},         {"z", 0, {}, {}},
      {"f0", 1, {"x"}, {"y"}},  {"f1", 1, {"x"}, {"y"}},  {"f2", 1, {"x"}, {"y"}},
      {"g0", 1, {"y"}, {"z"}},  {"g1", 1, {"y"}, {"z"}},  {"g2", 1, {"y"}, {"z"}},
      {"a", 2, {"f0"}, {"f1"}}, {"b", 2, {"f1"}, {"f2"}}, {"c", 2, {"g0"}, {"g1"}},
      {"d", 2, {"g1"}, {"g2"}},
  }));
  TableStructure t = TableStructure::from_molecules(P);
  // a ∘₀ c is kept; the whiskered composite (a ∘₀ g0) ∘₁ (f1 ∘₀ c) is sent elsewhere.
  const int lower = t.find("(a g0)");
  const int upper = t.find("(c f1)");
  const int whole = t.find("(a c)");
  TableStructure::Cell bad;
  bad.name = "bad";
  bad.dim = 2;
  bad.minus = t.cells()[whole].minus;
  bad.plus = t.cells()[whole].plus;
  const int h = t.add_cell(std::move(bad));
  // Further composites treat the impostor like the cell it replaces.
  for (const auto& [key, r] : std::map(t.composites())) {
    auto [a, b, k] = key;
    if (a == whole) t.set_composite(h, b, k, r);
    if (b == whole) t.set_composite(a, h, k, r);
  }
  t.set_composite(lower, upper, 1, h);
  return t;
}

}  // namespace forge
