#include "forge/complex.hpp"

#include "forge/constructions.hpp"
#include "forge/error.hpp"
#include "forge/iso.hpp"
#include "forge/shapes.hpp"

#include <boost/pending/disjoint_sets.hpp>

#include <algorithm>
#include <map>

namespace forge {

namespace {

int top_of(const OgPoset& U) {
  const Subset mx = maximal(U, U.all());
  if (mx.count() != 1) throw Error(Errc::PreconditionFail, "generator shapes must be atoms");
  return static_cast<int>(mx.find_first());
}

}  // namespace

int CellComplex::add(Generator g) {
  const int idx = static_cast<int>(gens_.size());
  g.dim = g.shape->dim();
  g.attach.resize(g.shape->size(), -1);
  g.attach[top_of(*g.shape)] = idx;
  gens_.push_back(std::move(g));
  return idx;
}

int CellComplex::find(const std::string& name) const {
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    if (gens_[g].name == name) return static_cast<int>(g);
  }
  return -1;
}

int CellComplex::dim() const {
  int d = -1;
  for (const auto& g : gens_) d = std::max(d, g.dim);
  return d;
}

std::vector<std::size_t> CellComplex::counts() const {
  std::vector<std::size_t> c(static_cast<std::size_t>(dim() + 1), 0);
  for (const auto& g : gens_) ++c[g.dim];
  return c;
}

CellComplex from_rdc(const PosetPtr& P) {
  CellComplex X;
  for (std::size_t xs = 0; xs < P->size(); ++xs) {
    const int x = static_cast<int>(xs);
    Restriction r = restrict_to(*P, closure(*P, x));
    Generator g;
    g.name = P->id(x);
    g.shape = r.poset;
    g.attach = r.to_parent;
    X.add(std::move(g));
  }
  return X;
}

CheckResult check_complex(const CellComplex& X) {
  for (std::size_t gi = 0; gi < X.size(); ++gi) {
    const Generator& g = X[static_cast<int>(gi)];
    const OgPoset& S = *g.shape;
    for (std::size_t ys = 0; ys < S.size(); ++ys) {
      const int y = static_cast<int>(ys);
      const int h = g.attach[y];
      if (h < 0 || h >= static_cast<int>(X.size())) return CheckResult::fail(g.name + ": unattached element");
      if (h == static_cast<int>(gi) && S.dim(y) != g.dim) return CheckResult::fail(g.name + ": attaches to itself");
      const Generator& target = X[h];
      if (target.dim > S.dim(y)) return CheckResult::fail(g.name + ": element '" + S.id(y) + "' lands too high");
      if (target.dim < S.dim(y) || h == static_cast<int>(gi)) continue;
      // A nondegenerate face must be a copy of the target's shape, attached the same way.
      Restriction r = restrict_to(S, closure(S, y));
      IsoOptions opt;
      for (int z : r.to_parent) opt.colors_p.push_back(g.attach[z]);
      opt.colors_q = target.attach;
      if (!find_iso(*r.poset, *target.shape, opt)) {
        return CheckResult::fail(g.name + ": face '" + S.id(y) + "' does not match " + target.name);
      }
    }
  }
  return CheckResult::pass();
}

namespace {

// "H_t(b)" ↦ ("t", "b"); other names are their own base with t empty.
std::pair<std::string, std::string> split_invertor_name(const std::string& name) {
  if (name.rfind("H_", 0) == 0 && !name.empty() && name.back() == ')') {
    const auto open = name.find('(');
    if (open != std::string::npos) return {name.substr(2, open - 2), name.substr(open + 1, name.size() - open - 2)};
  }
  return {"", name};
}

std::string invertor_name(char letter, const std::string& of) {
  auto [t, base] = split_invertor_name(of);
  return std::string("H_") + letter + t + "(" + base + ")";
}

}  // namespace

Localisation localise(CellComplex X, const std::vector<int>& marked, int max_dim) {
  Localisation out;
  out.max_dim = max_dim;
  const int limit = max_dim - 1;  // generators kept have dimension below the bound
  std::vector<int> current = marked;
  for (int a : current) {
    if (X[a].dim == 0) throw Error(Errc::PreconditionFail, "marked cells must have positive dimension");
  }
  while (!current.empty()) {
    ++out.stages;
    std::vector<int> next;
    for (int a : current) {
      const Generator src = X[a];
      const int m = src.dim;
      const int top = top_of(*src.shape);
      if (m > limit) continue;

      int inv[2];
      for (Sign s : kSigns) {
        Generator g;
        g.name = src.name + (s == Sign::Minus ? "^L" : "^R");
        g.shape = share(dual(*src.shape, {m}));
        g.attach = src.attach;
        g.stage = static_cast<int>(out.stages);
        inv[slot(s)] = X.add(std::move(g));
      }
      if (m + 1 > limit) {
        out.next_dim_count += 2 * 3;  // H_L, H_R and their two inverses each
        continue;
      }
      for (char letter : {'L', 'R'}) {
        Cylinder c = invertor_stage(src.shape, letter);
        Generator g;
        g.name = invertor_name(letter, src.name);
        g.shape = c.poset;
        g.stage = static_cast<int>(out.stages);
        g.attach.resize(c.poset->size());
        for (std::size_t y = 0; y < c.poset->size(); ++y) g.attach[y] = src.attach[c.tau.assign[y]];
        // The reversed copy of the cell is its inverse.
        if (letter == 'L') {
          g.attach[c.zero(top, Sign::Plus)] = inv[slot(Sign::Minus)];
        } else {
          g.attach[c.zero(top, Sign::Minus)] = inv[slot(Sign::Plus)];
        }
        next.push_back(X.add(std::move(g)));
      }
    }
    current = std::move(next);
  }
  out.complex = std::move(X);
  return out;
}

Localisation walking_equivalence(const PosetPtr& U, int max_dim) {
  if (U->dim() < 1) throw Error(Errc::PreconditionFail, "walking equivalences need an atom of positive dimension");
  CellComplex X = from_rdc(U);
  return localise(std::move(X), {top_of(*U)}, max_dim);
}

WeakComposite weak_composite_shape(const PosetPtr& Uptr, int max_dim) {
  const OgPoset& U = *Uptr;
  if (!is_round(U)) throw Error(Errc::NotRound, "weak composites need a round molecule");
  const int n = U.dim();
  if (n < 1) throw Error(Errc::PreconditionFail, "weak composites need positive dimension");
  Recognizer R(Uptr);
  Recognition whole = R.recognize();
  if (!whole) throw Error(Errc::NotMolecule, whole.reason);

  CellComplex X = from_rdc(Uptr);
  WeakComposite wc;
  for (std::size_t x = 0; x < U.size(); ++x) wc.inclusion.push_back(static_cast<int>(x));

  const Subset bm = boundary(U, U.all(), n - 1, Sign::Minus);
  const Subset bp = boundary(U, U.all(), n - 1, Sign::Plus);
  Cert cm = R.recognize(bm).cert;
  Cert cp = R.recognize(bp).cert;
  Cert C = rewrite(cm, cp);
  Generator comp;
  comp.name = "<U>";
  comp.shape = C->poset;
  comp.attach.assign(C->P().size(), -1);
  const Restriction& rm = R.restriction(bm);
  const Restriction& rp = R.restriction(bp);
  for (std::size_t i = 0; i < cm->P().size(); ++i) comp.attach[C->left_map[i]] = rm.to_parent[i];
  for (std::size_t i = 0; i < cp->P().size(); ++i) comp.attach[C->right_map[i]] = rp.to_parent[i];
  wc.composite = X.add(comp);
  comp.attach[top_of(C->P())] = wc.composite;

  Cert W = rewrite(whole.cert, C);
  Generator w;
  w.name = "w";
  w.shape = W->poset;
  w.attach.assign(W->P().size(), -1);
  const Restriction& rall = R.restriction(U.all());
  for (std::size_t i = 0; i < whole.cert->P().size(); ++i) w.attach[W->left_map[i]] = rall.to_parent[i];
  for (std::size_t i = 0; i < C->P().size(); ++i) w.attach[W->right_map[i]] = comp.attach[i];
  wc.witness = X.add(std::move(w));

  wc.loc = localise(std::move(X), {wc.witness}, max_dim);
  return wc;
}

std::vector<std::vector<std::string>> polygraph_basis(const CellComplex& X) {
  std::vector<std::vector<std::string>> out(static_cast<std::size_t>(std::max(X.dim() + 1, 0)));
  for (const auto& g : X.generators()) out[g.dim].push_back(g.name);
  return out;
}

CellComplex skeleton(const CellComplex& X, int n) {
  CellComplex S;
  std::vector<int> remap(X.size(), -1);
  for (std::size_t g = 0; g < X.size(); ++g) {
    const Generator& src = X[static_cast<int>(g)];
    if (src.dim > n) continue;
    Generator copy = src;
    for (int& a : copy.attach) a = remap[a];
    remap[g] = S.add(std::move(copy));
  }
  return S;
}

Truncation truncate(const CellComplex& X, int n) {
  Truncation t;
  t.n = n;
  t.complex = skeleton(X, n);
  std::map<std::vector<int>, int> key_index;
  std::vector<std::vector<int>> keys;
  auto key_of = [&](const Generator& g, Sign a) {
    const Subset b = boundary(*g.shape, g.shape->all(), n, a);
    std::vector<int> key;
    for (int y : members(maximal(*g.shape, b))) key.push_back(g.attach[y]);
    std::sort(key.begin(), key.end());
    auto [it, fresh] = key_index.emplace(key, static_cast<int>(keys.size()));
    if (fresh) keys.push_back(key);
    return it->second;
  };
  std::vector<std::pair<int, int>> edges;
  for (const auto& g : X.generators()) {
    if (g.dim == n) key_of(g, Sign::Minus);
    if (g.dim != n + 1) continue;
    edges.emplace_back(key_of(g, Sign::Minus), key_of(g, Sign::Plus));
  }
  std::vector<int> rank(keys.size()), parent(keys.size());
  boost::disjoint_sets<int*, int*> ds(rank.data(), parent.data());
  for (std::size_t i = 0; i < keys.size(); ++i) ds.make_set(static_cast<int>(i));
  for (auto [a, b] : edges) ds.union_set(a, b);
  std::map<int, std::vector<std::string>> classes;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    std::string name;
    for (int g : keys[i]) name += (name.empty() ? "" : " # ") + X[g].name;
    classes[ds.find_set(static_cast<int>(i))].push_back(name);
  }
  for (auto& [root, names] : classes) {
    std::sort(names.begin(), names.end());
    t.classes.push_back(std::move(names));
  }
  std::sort(t.classes.begin(), t.classes.end());
  return t;
}

}  // namespace forge
