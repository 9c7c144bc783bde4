#include "forge/maps.hpp"

#include "forge/error.hpp"
#include "forge/molecule.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace forge {

const char* map_class_name(MapClass c) noexcept {
  switch (c) {
    case MapClass::Plain: return "plain";
    case MapClass::Map: return "map";
    case MapClass::Cartesian: return "cartesian";
    case MapClass::Inclusion: return "inclusion";
    case MapClass::LocalEmbedding: return "local_embedding";
  }
  return "plain";
}

MapClass parse_map_class(const std::string& name) {
  if (name == "plain" || name.empty()) return MapClass::Plain;
  if (name == "map") return MapClass::Map;
  if (name == "cartesian") return MapClass::Cartesian;
  if (name == "inclusion") return MapClass::Inclusion;
  if (name == "local_embedding") return MapClass::LocalEmbedding;
  throw Error(Errc::ParseError, "unknown map class '" + name + "'");
}

PosetMap identity_map(PosetPtr P) {
  PosetMap f;
  f.source = P;
  f.target = P;
  f.assign.resize(P->size());
  std::iota(f.assign.begin(), f.assign.end(), 0);
  f.declared = MapClass::Inclusion;
  return f;
}

Comap identity_comap(PosetPtr P) {
  Comap c;
  c.source = P;
  c.target = P;
  c.assign.resize(P->size());
  std::iota(c.assign.begin(), c.assign.end(), 0);
  return c;
}

PosetMap map_from_ids(PosetPtr source, PosetPtr target, const std::map<std::string, std::string>& assignment,
                      MapClass declared) {
  PosetMap f;
  f.assign.assign(source->size(), -1);
  for (const auto& [from, to] : assignment) f.assign[source->index(from)] = target->index(to);
  for (std::size_t x = 0; x < f.assign.size(); ++x) {
    if (f.assign[x] < 0) throw Error(Errc::UnknownId, "no image for '" + source->id(static_cast<int>(x)) + "'");
  }
  f.source = std::move(source);
  f.target = std::move(target);
  f.declared = declared;
  return f;
}

std::map<std::string, std::string> assignment_ids(const PosetPtr& source, const PosetPtr& target,
                                                  const std::vector<int>& assign) {
  std::map<std::string, std::string> out;
  for (std::size_t x = 0; x < assign.size(); ++x) out[source->id(static_cast<int>(x))] = target->id(assign[x]);
  return out;
}

Subset image(const PosetMap& f, const Subset& U) {
  Subset out = f.target->none();
  for (int x : members(U)) out.set(f.assign[x]);
  return out;
}

Subset preimage(const Comap& c, const Subset& U) {
  Subset out = c.source->none();
  for (std::size_t x = 0; x < c.assign.size(); ++x) {
    if (U.test(c.assign[x])) out.set(x);
  }
  return out;
}

Subset preimage(const PosetMap& f, const Subset& U) {
  Subset out = f.source->none();
  for (std::size_t x = 0; x < f.assign.size(); ++x) {
    if (U.test(f.assign[x])) out.set(x);
  }
  return out;
}

namespace {

CheckResult order_preserving(const OgPoset& S, const OgPoset& T, const std::vector<int>& assign) {
  if (assign.size() != S.size()) return CheckResult::fail("assignment has the wrong size");
  std::vector<Subset> cl(T.size());
  std::vector<char> have(T.size(), 0);
  for (std::size_t x = 0; x < S.size(); ++x) {
    const int fx = assign[x];
    if (fx < 0 || fx >= static_cast<int>(T.size())) return CheckResult::fail("image out of range");
    if (!have[fx]) {
      cl[fx] = closure(T, fx);
      have[fx] = 1;
    }
    for (Sign a : kSigns) {
      for (int y : S.faces(static_cast<int>(x), a)) {
        if (!cl[fx].test(assign[y])) {
          return CheckResult::fail("'" + S.id(y) + "' <= '" + S.id(static_cast<int>(x)) + "' but images are not ordered");
        }
      }
    }
  }
  return CheckResult::pass();
}

// The set is upward closed in its ambient closed subset; connectivity through covers suffices.
bool connected(const OgPoset& P, const std::vector<int>& set) {
  if (set.empty()) return false;
  std::vector<int> parent(P.size(), -1);
  for (int x : set) parent[x] = x;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int x : set) {
    for (Sign a : kSigns) {
      for (int y : P.faces(x, a)) {
        if (parent[y] >= 0) parent[find(y)] = find(x);
      }
    }
  }
  const int root = find(set.front());
  for (int x : set) {
    if (find(x) != root) return false;
  }
  return true;
}

}  // namespace

CheckResult check_order_preserving(const PosetMap& f) { return order_preserving(*f.source, *f.target, f.assign); }

CheckResult check_order_preserving(const Comap& c) { return order_preserving(*c.source, *c.target, c.assign); }

CheckResult check_map(const PosetMap& f) {
  if (auto op = check_order_preserving(f); !op) throw Error(Errc::NotOrderPreserving, op.failure);
  const OgPoset& S = *f.source;
  const OgPoset& T = *f.target;
  std::vector<Subset> tcl(T.size());
  for (std::size_t y = 0; y < T.size(); ++y) tcl[y] = closure(T, static_cast<int>(y));
  for (std::size_t xs = 0; xs < S.size(); ++xs) {
    const int x = static_cast<int>(xs);
    const Subset clx = closure(S, x);
    const Subset& clfx = tcl[f.assign[x]];
    for (int k = 0; k <= S.dim(x); ++k) {
      for (Sign a : kSigns) {
        const Subset d = boundary(S, clx, k, a);
        const Subset e = boundary(T, clfx, k, a);
        if (image(f, d) != e) {
          return CheckResult::fail("image of the " + std::string(sign_str(a)) + std::to_string(k) +
                                   "-boundary of '" + S.id(x) + "' is not the boundary of its image");
        }
        for (int b : members(e)) {
          std::vector<int> fibre;
          for (int y : members(d)) {
            if (tcl[f.assign[y]].test(b)) fibre.push_back(y);
          }
          if (!connected(S, fibre)) {
            return CheckResult::fail("restriction to the " + std::string(sign_str(a)) + std::to_string(k) +
                                     "-boundary of '" + S.id(x) + "' is not final at '" + T.id(b) + "'");
          }
        }
      }
    }
  }
  return CheckResult::pass();
}

CheckResult check_cartesian(const PosetMap& f) {
  if (auto m = check_map(f); !m) throw Error(Errc::NotAMap, m.failure);
  return check_fibration(f);
}

CheckResult check_fibration(const PosetMap& f) {
  if (auto op = check_order_preserving(f); !op) return op;
  const OgPoset& S = *f.source;
  const OgPoset& T = *f.target;
  for (std::size_t xs = 0; xs < S.size(); ++xs) {
    const int x = static_cast<int>(xs);
    const Subset clx = closure(S, x);
    for (int y : members(closure(T, f.assign[x]))) {
      // Greatest element of {x' <= x | f(x') <= y}, required to lie over y.
      const Subset below_y = closure(T, y);
      Subset lifts = S.none();
      for (int z : members(clx)) {
        if (below_y.test(f.assign[z])) lifts.set(z);
      }
      const Subset top = maximal(S, lifts);
      if (top.count() != 1 || f.assign[top.find_first()] != y) {
        return CheckResult::fail("no cartesian lift of '" + T.id(y) + "' below '" + S.id(x) + "'");
      }
    }
  }
  return CheckResult::pass();
}

CheckResult check_local_embedding(const PosetMap& f) {
  if (auto m = check_map(f); !m) throw Error(Errc::NotAMap, m.failure);
  const OgPoset& S = *f.source;
  for (std::size_t xs = 0; xs < S.size(); ++xs) {
    std::vector<char> hit(f.target->size(), 0);
    for (int z : members(closure(S, static_cast<int>(xs)))) {
      if (hit[f.assign[z]]++) {
        return CheckResult::fail("not injective on the closure of '" + S.id(static_cast<int>(xs)) + "'");
      }
    }
  }
  return CheckResult::pass();
}

CheckResult check_inclusion(const PosetMap& f) {
  if (auto m = check_map(f); !m) throw Error(Errc::NotAMap, m.failure);
  std::vector<char> hit(f.target->size(), 0);
  for (int v : f.assign) {
    if (hit[v]++) return CheckResult::fail("not injective at '" + f.target->id(v) + "'");
  }
  return CheckResult::pass();
}

CheckResult check_declared(const PosetMap& f) {
  switch (f.declared) {
    case MapClass::Plain: return check_order_preserving(f);
    case MapClass::Map: return check_map(f);
    case MapClass::Cartesian: return check_cartesian(f);
    case MapClass::Inclusion: return check_inclusion(f);
    case MapClass::LocalEmbedding: return check_local_embedding(f);
  }
  return CheckResult::fail("unknown class");
}

CheckResult check_comap(const Comap& c) {
  if (auto op = check_order_preserving(c); !op) return op;
  const OgPoset& Q = *c.source;
  const OgPoset& P = *c.target;
  Recognizer R(c.source);
  for (std::size_t xs = 0; xs < P.size(); ++xs) {
    const int x = static_cast<int>(xs);
    const Subset clx = closure(P, x);
    const Subset pre = preimage(c, clx);
    if (auto r = R.recognize(pre); !r) {
      return CheckResult::fail("preimage of the closure of '" + P.id(x) + "' is not a molecule: " + r.reason);
    }
    for (int k = 0; k < P.dim(x); ++k) {
      for (Sign a : kSigns) {
        if (preimage(c, boundary(P, clx, k, a)) != boundary(Q, pre, k, a)) {
          return CheckResult::fail("preimage of the " + std::string(sign_str(a)) + std::to_string(k) +
                                   "-boundary of '" + P.id(x) + "' is not a boundary");
        }
      }
    }
  }
  return CheckResult::pass();
}

Subset subdiv_image(const Comap& c, const Subset& U) { return preimage(c, U); }

PosetMap compose(const PosetMap& f, const PosetMap& g) {
  if (f.target.get() != g.source.get() && !(*f.target == *g.source)) {
    throw Error(Errc::Mismatch, "codomain and domain differ");
  }
  PosetMap h;
  h.source = f.source;
  h.target = g.target;
  for (int v : f.assign) h.assign.push_back(g.assign[v]);
  auto rank = [](MapClass c) {
    switch (c) {
      case MapClass::Plain: return 0;
      case MapClass::Map: return 1;
      case MapClass::Cartesian: return 2;
      case MapClass::LocalEmbedding: return 2;
      case MapClass::Inclusion: return 3;
    }
    return 0;
  };
  if (f.declared == g.declared) {
    h.declared = f.declared;
  } else if (rank(f.declared) == 0 || rank(g.declared) == 0) {
    h.declared = MapClass::Plain;
  } else if (f.declared == MapClass::Inclusion) {
    h.declared = g.declared;
  } else if (g.declared == MapClass::Inclusion) {
    h.declared = f.declared;
  } else {
    h.declared = MapClass::Map;
  }
  return h;
}

Comap compose(const Comap& c, const Comap& d) {
  // c: A → B, d: B → C; the composite is d ∘ c.
  if (c.target.get() != d.source.get() && !(*c.target == *d.source)) {
    throw Error(Errc::Mismatch, "codomain and domain differ");
  }
  Comap e;
  e.source = c.source;
  e.target = d.target;
  for (int v : c.assign) e.assign.push_back(d.assign[v]);
  return e;
}

}  // namespace forge
