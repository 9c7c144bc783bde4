#include "forge/molecule.hpp"

#include "forge/constructions.hpp"
#include "forge/error.hpp"
#include "forge/maps.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace forge {
namespace {

struct Glued {
  OgPoset poset;
  std::vector<int> a_map;
  std::vector<int> b_map;
};

struct TopCell {
  std::string id;
  int dim = 0;
  std::vector<int> a_faces;  // input faces, elements of A
  std::vector<int> b_faces;  // output faces, elements of B
};

// Pushout of A and B identifying y ∈ B with b_to_a[y] ∈ A whenever b_to_a[y] >= 0,
// optionally capped by a new top element.
Glued glue(const OgPoset& A, const OgPoset& B, const std::vector<int>& b_to_a, const TopCell* top) {
  IdPool pool;
  std::vector<std::string> a_id(A.size()), b_id(B.size());
  for (std::size_t x = 0; x < A.size(); ++x) a_id[x] = pool.take(A.id(static_cast<int>(x)));
  for (std::size_t y = 0; y < B.size(); ++y) {
    b_id[y] = b_to_a[y] >= 0 ? a_id[b_to_a[y]] : pool.take(B.id(static_cast<int>(y)));
  }
  std::vector<RawElement> raw;
  for (std::size_t x = 0; x < A.size(); ++x) {
    RawElement e{a_id[x], A.dim(static_cast<int>(x)), {}, {}};
    for (int f : A.faces(static_cast<int>(x), Sign::Minus)) e.minus.push_back(a_id[f]);
    for (int f : A.faces(static_cast<int>(x), Sign::Plus)) e.plus.push_back(a_id[f]);
    raw.push_back(std::move(e));
  }
  for (std::size_t y = 0; y < B.size(); ++y) {
    if (b_to_a[y] >= 0) continue;
    RawElement e{b_id[y], B.dim(static_cast<int>(y)), {}, {}};
    for (int f : B.faces(static_cast<int>(y), Sign::Minus)) e.minus.push_back(b_id[f]);
    for (int f : B.faces(static_cast<int>(y), Sign::Plus)) e.plus.push_back(b_id[f]);
    raw.push_back(std::move(e));
  }
  if (top) {
    RawElement e{pool.take(top->id), top->dim, {}, {}};
    for (int f : top->a_faces) e.minus.push_back(a_id[f]);
    for (int f : top->b_faces) e.plus.push_back(b_id[f]);
    raw.push_back(std::move(e));
  }
  Glued g;
  g.poset = OgPoset::validate(std::move(raw));
  for (const auto& id : a_id) g.a_map.push_back(g.poset.index(id));
  for (const auto& id : b_id) g.b_map.push_back(g.poset.index(id));
  return g;
}

Cert make_node(CertKind kind, int k, Cert l, Cert r, Glued g) {
  auto n = std::make_shared<CertNode>();
  n->kind = kind;
  n->k = k;
  n->left = std::move(l);
  n->right = std::move(r);
  n->poset = share(std::move(g.poset));
  n->left_map = std::move(g.a_map);
  n->right_map = std::move(g.b_map);
  return n;
}

}  // namespace

Cert point() {
  auto n = std::make_shared<CertNode>();
  n->kind = CertKind::Point;
  n->poset = share(OgPoset::validate({RawElement{"pt", 0, {}, {}}}));
  return n;
}

Cert paste(const Cert& U, const Cert& V, int k) {
  if (k < 0) throw Error(Errc::BoundaryMismatch, "pasting dimension must be non-negative");
  const OgPoset& A = U->P();
  const OgPoset& B = V->P();
  Subset bu = boundary(A, k, Sign::Plus);
  Subset bv = boundary(B, k, Sign::Minus);
  auto iso = find_subset_iso(B, bv, A, bu);
  if (!iso) {
    throw Error(Errc::BoundaryMismatch, "output " + std::to_string(k) + "-boundary of the left factor is not "
                                        "isomorphic to the input " + std::to_string(k) + "-boundary of the right factor");
  }
  return make_node(CertKind::Paste, k, U, V, glue(A, B, *iso, nullptr));
}

Cert rewrite(const Cert& U, const Cert& V) {
  const OgPoset& A = U->P();
  const OgPoset& B = V->P();
  const int n = A.dim();
  if (B.dim() != n) throw Error(Errc::BoundaryMismatch, "rewrite needs equal dimensions");
  if (!is_round(A) || !is_round(B)) throw Error(Errc::NotRound, "rewrite needs round molecules");
  if (n == 0 && (A.size() != 1 || B.size() != 1)) throw Error(Errc::NotRound, "0-dimensional molecules are points");
  std::vector<int> b_to_a(B.size(), -1);
  if (n > 0) {
    auto colour = [n](const OgPoset& P) {
      Subset m = boundary(P, n - 1, Sign::Minus), p = boundary(P, n - 1, Sign::Plus);
      std::vector<int> c(P.size(), 0);
      for (std::size_t x = 0; x < P.size(); ++x) c[x] = (m.test(x) ? 1 : 0) + (p.test(x) ? 2 : 0);
      return c;
    };
    auto ca = colour(A), cb = colour(B);
    Subset ba = boundary(A, A.all(), n - 1), bb = boundary(B, B.all(), n - 1);
    auto iso = find_subset_iso(B, bb, A, ba, cb, ca);
    if (!iso) throw Error(Errc::BoundaryMismatch, "boundaries of the two sides are not isomorphic");
    b_to_a = *iso;
  }
  TopCell top;
  top.id = "top";
  top.dim = n + 1;
  for (std::size_t x = 0; x < A.size(); ++x) {
    if (A.dim(static_cast<int>(x)) == n) top.a_faces.push_back(static_cast<int>(x));
  }
  for (std::size_t y = 0; y < B.size(); ++y) {
    if (B.dim(static_cast<int>(y)) == n) top.b_faces.push_back(static_cast<int>(y));
  }
  return make_node(CertKind::Rewrite, -1, U, V, glue(A, B, b_to_a, &top));
}

Cert transport(const Cert& c, PosetPtr Q, const Iso& phi) {
  auto n = std::make_shared<CertNode>(*c);
  n->poset = std::move(Q);
  for (int& v : n->left_map) v = phi[v];
  for (int& v : n->right_map) v = phi[v];
  return n;
}

Cert globe(int n) {
  if (n <= 0) return point();
  Cert prev = globe(n - 1);
  Cert built = rewrite(prev, prev);
  OgPoset g = point()->P();
  for (int i = 0; i < n; ++i) g = suspend(g);
  std::vector<std::string> ids(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    const std::string& id = g.id(static_cast<int>(x));
    const int d = g.dim(static_cast<int>(x));
    if (d == n) {
      ids[x] = std::to_string(n);
    } else {
      ids[x] = std::to_string(d) + (id.back() == '-' ? "-" : "+");
    }
  }
  auto G = share(rename(g, ids));
  auto phi = find_iso(built->P(), *G);
  return transport(built, G, *phi);
}

Cert arrow_chain(int k) {
  if (k <= 0) return point();
  Cert c = globe(1);
  for (int i = 1; i < k; ++i) c = paste(c, globe(1), 0);
  std::vector<RawElement> raw;
  for (int i = 0; i <= k; ++i) raw.push_back({"v" + std::to_string(i), 0, {}, {}});
  for (int i = 1; i <= k; ++i) {
    raw.push_back({"e" + std::to_string(i), 1, {"v" + std::to_string(i - 1)}, {"v" + std::to_string(i)}});
  }
  auto Q = share(OgPoset::validate(std::move(raw)));
  auto phi = find_iso(c->P(), *Q);
  return transport(c, Q, *phi);
}

std::size_t cert_nodes(const Cert& c) {
  if (!c) return 0;
  return 1 + cert_nodes(c->left) + cert_nodes(c->right);
}

namespace {
bool embeds(const OgPoset& child, const OgPoset& parent, const std::vector<int>& f) {
  if (f.size() != child.size()) return false;
  std::vector<char> hit(parent.size(), 0);
  for (std::size_t x = 0; x < f.size(); ++x) {
    const int y = f[x];
    if (y < 0 || y >= static_cast<int>(parent.size()) || hit[y]) return false;
    hit[y] = 1;
    if (child.dim(static_cast<int>(x)) != parent.dim(y)) return false;
    for (Sign a : kSigns) {
      std::vector<int> img;
      for (int z : child.faces(static_cast<int>(x), a)) img.push_back(f[z]);
      std::sort(img.begin(), img.end());
      if (img != parent.faces(y, a)) return false;
    }
  }
  return true;
}
}  // namespace

bool cert_consistent(const Cert& c) {
  if (!c) return false;
  switch (c->kind) {
    case CertKind::Point:
      return c->P().size() == 1 && c->P().dim() == 0;
    case CertKind::Paste:
    case CertKind::Rewrite:
      return cert_consistent(c->left) && cert_consistent(c->right) &&
             embeds(c->left->P(), c->P(), c->left_map) && embeds(c->right->P(), c->P(), c->right_map);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Recognition

Recognizer::Recognizer(PosetPtr P) : P_(std::move(P)) {}

const Restriction& Recognizer::restriction(const Subset& U) {
  auto it = restrictions_.find(U);
  if (it != restrictions_.end()) return *it->second;
  auto r = std::make_shared<const Restriction>(restrict_to(*P_, U));
  return *restrictions_.emplace(U, std::move(r)).first->second;
}

Cert Recognizer::node(CertKind kind, const Subset& U, int k, const Cert& l, const Subset& lu, const Cert& r,
                      const Subset& ru) {
  const Restriction& R = restriction(U);
  auto n = std::make_shared<CertNode>();
  n->kind = kind;
  n->k = k;
  n->left = l;
  n->right = r;
  n->poset = R.poset;
  if (l) {
    const Restriction& RL = restriction(lu);
    for (int x : RL.to_parent) n->left_map.push_back(R.from_parent[x]);
  }
  if (r) {
    const Restriction& RR = restriction(ru);
    for (int x : RR.to_parent) n->right_map.push_back(R.from_parent[x]);
  }
  return n;
}

bool Recognizer::split_search(const Subset& U, int k, const std::vector<int>& tops, std::size_t limit,
                              std::vector<std::vector<Subset>>& found) {
  const OgPoset& P = *P_;
  const std::size_t m = tops.size();
  const Subset in = boundary(P, U, k, Sign::Minus);
  const Subset out = boundary(P, U, k, Sign::Plus);

  std::vector<Subset> cl(m), outk(m), ink(m);
  for (std::size_t i = 0; i < m; ++i) {
    cl[i] = closure(P, tops[i]);
    outk[i] = grade(P, boundary(P, cl[i], k, Sign::Plus), k);
    ink[i] = grade(P, boundary(P, cl[i], k, Sign::Minus), k);
  }
  // Flow: i must precede j when some k-cell is output of i and input of j.
  std::vector<std::vector<std::size_t>> preds(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && (outk[i] & ink[j]).any()) preds[j].push_back(i);
    }
  }

  std::unordered_set<Subset, SubsetHash> dead;
  std::vector<Subset> layers;
  Subset used(m);
  std::function<void(const Subset&, const Subset&)> dfs = [&](const Subset& acc, const Subset& W) {
    if (found.size() >= limit) return;
    if (used.all()) {
      if (acc == U && W == out) found.push_back(layers);
      return;
    }
    if (dead.count(used)) return;
    const std::size_t before = found.size();
    for (std::size_t j = 0; j < m; ++j) {
      if (used.test(j)) continue;
      bool ready = true;
      for (std::size_t i : preds[j]) ready = ready && used.test(i);
      if (!ready) continue;
      if (!(acc & cl[j]).is_subset_of(W)) continue;
      Subset L = cl[j] | W;
      if (boundary(P, L, k, Sign::Minus) != W) continue;
      if (!recognize(L)) continue;
      used.set(j);
      layers.push_back(L);
      dfs(acc | L, boundary(P, L, k, Sign::Plus));
      layers.pop_back();
      used.reset(j);
      if (found.size() >= limit) return;
    }
    if (found.size() == before) dead.insert(used);
  };
  dfs(in, in);
  return !found.empty();
}

Recognition Recognizer::recognize(const Subset& U) {
  if (auto it = cache_.find(U); it != cache_.end()) return it->second;
  const OgPoset& P = *P_;
  Recognition r;
  auto refute = [&](std::string why, Subset where) {
    r.cert = nullptr;
    r.reason = std::move(why);
    r.witness = std::move(where);
  };

  const Subset mx = maximal(P, U);
  const int n = dim_of(P, U);
  if (U.none()) {
    refute("empty subset", U);
  } else if (!is_closed(P, U)) {
    refute("subset is not closed", U);
  } else if (mx.count() == 1) {
    const int t = static_cast<int>(mx.find_first());
    if (n == 0) {
      r.cert = node(CertKind::Point, U, -1, nullptr, {}, nullptr, {});
    } else {
      const Subset bm = boundary(P, U, n - 1, Sign::Minus);
      const Subset bp = boundary(P, U, n - 1, Sign::Plus);
      Recognition rm = recognize(bm);
      Recognition rp = rm ? recognize(bp) : Recognition{};
      if (!rm) {
        refute("input boundary of '" + P.id(t) + "' is not a molecule: " + rm.reason, rm.witness);
      } else if (!rp) {
        refute("output boundary of '" + P.id(t) + "' is not a molecule: " + rp.reason, rp.witness);
      } else if (!is_round(P, bm) || !is_round(P, bp)) {
        refute("a boundary of '" + P.id(t) + "' is not round", U);
      } else if (boundary(P, bm, n - 2, Sign::Minus) != boundary(P, bp, n - 2, Sign::Minus) ||
                 boundary(P, bm, n - 2, Sign::Plus) != boundary(P, bp, n - 2, Sign::Plus)) {
        refute("input and output boundaries of '" + P.id(t) + "' are not parallel", U);
      } else if ((bm & bp) != boundary(P, bm, n - 2)) {
        refute("input and output boundaries of '" + P.id(t) + "' overlap beyond their boundary", U);
      } else if ((bm | bp | P.singleton(t)) != U) {
        refute("'" + P.id(t) + "' is not covered by its boundaries", U);
      } else {
        r.cert = node(CertKind::Rewrite, U, -1, rm.cert, bm, rp.cert, bp);
      }
    }
  } else {
    bool done = false;
    for (int k = n - 1; k >= 0 && !done; --k) {
      std::vector<int> tops;
      for (int x : members(mx)) {
        if (P.dim(x) > k) tops.push_back(x);
      }
      if (tops.size() < 2) continue;
      std::vector<std::vector<Subset>> found;
      if (!split_search(U, k, tops, 1, found)) continue;
      const auto& layers = found.front();
      Subset acc = layers.front();
      Cert cert = recognize(acc).cert;
      for (std::size_t i = 1; i < layers.size(); ++i) {
        Subset next = acc | layers[i];
        cert = node(CertKind::Paste, next, k, cert, acc, recognize(layers[i]).cert, layers[i]);
        if (i + 1 < layers.size() && !cache_.count(next)) cache_.emplace(next, Recognition{cert, {}, {}});
        acc = next;
      }
      r.cert = cert;
      done = true;
    }
    if (!done) refute("no pasting decomposition exists", U);
  }
  cache_.emplace(U, r);
  return r;
}

std::vector<Layering> Recognizer::layerings(const Subset& U, int k, std::size_t limit) {
  const OgPoset& P = *P_;
  if (!recognize(U)) throw Error(Errc::NotMolecule, "layerings need a molecule");
  const Subset mx = maximal(P, U);
  if (k < -1) throw Error(Errc::NoLayering, "no layering below dimension -1");
  if (k == -1) {
    if (mx.count() == 1) return {Layering{-1, {U}}};
    throw Error(Errc::NoLayering, "only atoms admit a (-1)-layering");
  }
  std::vector<int> tops;
  for (int x : members(mx)) {
    if (P.dim(x) > k) tops.push_back(x);
  }
  if (tops.size() <= 1) return {Layering{k, {U}}};
  std::vector<std::vector<Subset>> found;
  split_search(U, k, tops, limit, found);
  if (found.empty()) throw Error(Errc::NoLayering, "no " + std::to_string(k) + "-layering exists");
  std::vector<Layering> out;
  for (auto& layers : found) out.push_back(Layering{k, std::move(layers)});
  return out;
}

int Recognizer::layering_dimension(const Subset& U) {
  const int n = dim_of(*P_, U);
  for (int k = -1; k < n; ++k) {
    try {
      layerings(U, k, 1);
      return k;
    } catch (const Error& e) {
      if (e.code() != Errc::NoLayering) throw;
    }
  }
  return std::max(n - 1, -1);
}

Recognition is_molecule(PosetPtr P) {
  Recognizer R(std::move(P));
  return R.recognize();
}

Recognition is_molecule(const OgPoset& P) { return is_molecule(share(P)); }

bool is_atom(const OgPoset& P) { return maximal(P, P.all()).count() == 1 && static_cast<bool>(is_molecule(P)); }

bool is_rdc(const OgPoset& P) {
  Recognizer R(share(P));
  for (std::size_t x = 0; x < P.size(); ++x) {
    if (!R.recognize(closure(P, static_cast<int>(x)))) return false;
  }
  return true;
}

std::vector<Layering> layerings(const OgPoset& P, int k, std::size_t limit) {
  Recognizer R(share(P));
  return R.layerings(P.all(), k, limit);
}

int layering_dimension(const OgPoset& P) {
  Recognizer R(share(P));
  return R.layering_dimension(P.all());
}

Comap globe_subdivision(const OgPoset& U) {
  if (!is_round(U)) throw Error(Errc::NotRound, "globe subdivision needs a round molecule");
  const int n = U.dim();
  auto G = globe(n)->poset;
  Comap c;
  c.source = share(U);
  c.target = G;
  c.assign.assign(U.size(), -1);
  std::vector<Subset> bd_m, bd_p;
  for (int k = 0; k < n; ++k) {
    bd_m.push_back(boundary(U, k, Sign::Minus));
    bd_p.push_back(boundary(U, k, Sign::Plus));
  }
  for (std::size_t x = 0; x < U.size(); ++x) {
    int target = -1;
    for (int k = 0; k < n && target < 0; ++k) {
      if (bd_m[k].test(x)) {
        target = G->index(std::to_string(k) + "-");
      } else if (bd_p[k].test(x)) {
        target = G->index(std::to_string(k) + "+");
      }
    }
    if (target < 0) target = G->index(n == 0 ? "pt" : std::to_string(n));
    c.assign[x] = target;
  }
  return c;
}

}  // namespace forge
