#include "forge/shapes.hpp"

#include "forge/constructions.hpp"
#include "forge/error.hpp"

#include <algorithm>
#include <functional>

namespace forge {

namespace {

const char* const kCylPrefix[3] = {"0-|", "0+|", "1|"};

}  // namespace

Cylinder make_cylinder(PosetPtr Uptr, const Subset& K, CylKind kind) {
  const OgPoset& U = *Uptr;
  if (!is_closed(U, K)) throw Error(Errc::NotClosed, "cylinder needs a closed subset");
  const int n = U.dim();
  if (kind != CylKind::Plain) {
    const Sign side = kind == CylKind::Left ? Sign::Plus : Sign::Minus;
    if (!K.is_subset_of(boundary(U, n - 1, side))) {
      throw Error(Errc::KNotInBoundary, std::string("K must lie in the ") + sign_str(side) + " boundary");
    }
  }

  IdPool pool;
  std::vector<std::array<std::string, 3>> ids(U.size());
  std::vector<std::string> kid(U.size());
  for (std::size_t x = 0; x < U.size(); ++x) {
    if (K.test(x)) kid[x] = pool.take(U.id(static_cast<int>(x)));
  }
  for (std::size_t x = 0; x < U.size(); ++x) {
    if (K.test(x)) continue;
    for (int i = 0; i < 3; ++i) ids[x][i] = pool.take(kCylPrefix[i] + U.id(static_cast<int>(x)));
  }
  auto zero_or_k = [&](int y, int s) -> const std::string& { return K.test(y) ? kid[y] : ids[y][s]; };

  std::vector<RawElement> raw;
  for (std::size_t xs = 0; xs < U.size(); ++xs) {
    const int x = static_cast<int>(xs);
    if (K.test(x)) {
      RawElement e{kid[x], U.dim(x), {}, {}};
      for (int y : U.faces(x, Sign::Minus)) e.minus.push_back(kid[y]);
      for (int y : U.faces(x, Sign::Plus)) e.plus.push_back(kid[y]);
      raw.push_back(std::move(e));
      continue;
    }
    const bool top = U.dim(x) == n;
    for (Sign b : kSigns) {
      // (0^β, x); the flipped copy in an inverted cylinder reads the faces of x reversed.
      const bool flip = top && ((kind == CylKind::Left && b == Sign::Plus) || (kind == CylKind::Right && b == Sign::Minus));
      RawElement e{ids[x][slot(b)], U.dim(x), {}, {}};
      for (Sign a : kSigns) {
        auto& out = a == Sign::Minus ? e.minus : e.plus;
        for (int y : U.faces(x, flip ? -a : a)) out.push_back(zero_or_k(y, slot(b)));
      }
      raw.push_back(std::move(e));
    }
    RawElement e{ids[x][2], U.dim(x) + 1, {}, {}};
    auto ones = [&](Sign s, std::vector<std::string>& out) {
      for (int y : U.faces(x, s)) {
        if (!K.test(y)) out.push_back(ids[y][2]);
      }
    };
    if (top && kind == CylKind::Left) {
      e.minus = {ids[x][0], ids[x][1]};
      ones(Sign::Plus, e.minus);
      ones(Sign::Minus, e.plus);
    } else if (top && kind == CylKind::Right) {
      ones(Sign::Plus, e.minus);
      e.plus = {ids[x][0], ids[x][1]};
      ones(Sign::Minus, e.plus);
    } else {
      e.minus.push_back(ids[x][0]);
      ones(Sign::Plus, e.minus);
      e.plus.push_back(ids[x][1]);
      ones(Sign::Minus, e.plus);
    }
    raw.push_back(std::move(e));
  }

  Cylinder c;
  c.poset = share(OgPoset::validate(std::move(raw)));
  c.K = K;
  c.at.assign(U.size(), {-1, -1, -1});
  c.collapsed.assign(U.size(), -1);
  c.tau.source = c.poset;
  c.tau.target = Uptr;
  // Inverted cylinders only project as fibrations of posets.
  c.tau.declared = kind == CylKind::Plain ? MapClass::Cartesian : MapClass::Plain;
  c.tau.assign.assign(c.poset->size(), -1);
  for (std::size_t x = 0; x < U.size(); ++x) {
    if (K.test(x)) {
      c.collapsed[x] = c.poset->index(kid[x]);
      c.tau.assign[c.collapsed[x]] = static_cast<int>(x);
    } else {
      for (int i = 0; i < 3; ++i) {
        c.at[x][i] = c.poset->index(ids[x][i]);
        c.tau.assign[c.at[x][i]] = static_cast<int>(x);
      }
    }
  }
  return c;
}

Cylinder cylinder(PosetPtr U, const Subset& K) { return make_cylinder(std::move(U), K, CylKind::Plain); }
Cylinder lcyl(PosetPtr U, const Subset& K) { return make_cylinder(std::move(U), K, CylKind::Left); }
Cylinder rcyl(PosetPtr U, const Subset& K) { return make_cylinder(std::move(U), K, CylKind::Right); }

Cylinder invertor_stage(const PosetPtr& cur, char letter) {
  const int m = cur->dim();
  if (letter == 'L') return lcyl(cur, boundary(*cur, m - 1, Sign::Plus));
  if (letter != 'R') throw Error(Errc::ParseError, std::string("invertor strings use L and R, got '") + letter + "'");
  Cylinder c = rcyl(cur, boundary(*cur, m - 1, Sign::Minus));
  // The new top is reversed so that its input is the composite of the two copies.
  c.poset = share(dual(*c.poset, {m + 1}));
  c.tau.source = c.poset;
  return c;
}

namespace {

std::vector<int> lift_assignment(const Cylinder& fine, const Cylinder& coarse, const Comap& c) {
  std::vector<int> assign(fine.poset->size(), -1);
  for (std::size_t vs = 0; vs < c.source->size(); ++vs) {
    const int v = static_cast<int>(vs);
    const int u = c.assign[v];
    if (fine.collapsed[v] >= 0) {
      assign[fine.collapsed[v]] = coarse.collapsed[u];
      continue;
    }
    for (Sign b : kSigns) assign[fine.zero(v, b)] = coarse.of(u, b);
    assign[fine.one(v)] = coarse.collapsed[u] >= 0 ? coarse.collapsed[u] : coarse.one(u);
  }
  return assign;
}

}  // namespace

Invertor invertor(PosetPtr U, const std::string& t) {
  if (!is_round(*U)) throw Error(Errc::NotRound, "invertor shapes need a round molecule");
  Invertor h;
  h.poset = U;
  h.tau = identity_map(U);
  h.tau.declared = MapClass::Cartesian;
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    Cylinder c = invertor_stage(h.poset, *it);
    h.tau = compose(c.tau, h.tau);
    h.poset = c.poset;
    h.stages.push_back(std::move(c));
  }
  return h;
}

Substitution substitute(const PosetMap& iota, const Comap& c) {
  CheckResult inc;
  try {
    inc = check_inclusion(iota);
  } catch (const Error& e) {
    inc = CheckResult::fail(e.what());
  }
  if (!inc) throw Error(Errc::NotInclusion, inc.failure);
  if (c.target.get() != iota.source.get() && !(*c.target == *iota.source)) {
    throw Error(Errc::Mismatch, "the subdivision and the inclusion have different domains");
  }
  if (auto cc = check_comap(c); !cc) throw Error(Errc::NotSubdivision, cc.failure);

  const OgPoset& P = *iota.target;
  const OgPoset& V = *c.source;
  const Subset inU = image(iota, iota.source->all());
  // Elements of V standing in for a same-dimensional element of ι(U).
  std::vector<std::vector<int>> stand_in(P.size());
  for (std::size_t vs = 0; vs < V.size(); ++vs) {
    const int v = static_cast<int>(vs);
    const int p = iota.assign[c.assign[v]];
    if (P.dim(p) == V.dim(v)) stand_in[p].push_back(v);
  }

  IdPool pool;
  std::vector<std::string> pid(P.size()), vid(V.size());
  for (std::size_t p = 0; p < P.size(); ++p) {
    if (!inU.test(p)) pid[p] = pool.take(P.id(static_cast<int>(p)));
  }
  for (std::size_t v = 0; v < V.size(); ++v) vid[v] = pool.take(V.id(static_cast<int>(v)));

  std::vector<RawElement> raw;
  for (std::size_t ps = 0; ps < P.size(); ++ps) {
    const int p = static_cast<int>(ps);
    if (inU.test(p)) continue;
    RawElement e{pid[p], P.dim(p), {}, {}};
    for (Sign a : kSigns) {
      auto& out = a == Sign::Minus ? e.minus : e.plus;
      for (int y : P.faces(p, a)) {
        if (!inU.test(y)) {
          out.push_back(pid[y]);
        } else {
          for (int v : stand_in[y]) out.push_back(vid[v]);
        }
      }
    }
    raw.push_back(std::move(e));
  }
  for (std::size_t vs = 0; vs < V.size(); ++vs) {
    const int v = static_cast<int>(vs);
    RawElement e{vid[v], V.dim(v), {}, {}};
    for (int y : V.faces(v, Sign::Minus)) e.minus.push_back(vid[y]);
    for (int y : V.faces(v, Sign::Plus)) e.plus.push_back(vid[y]);
    raw.push_back(std::move(e));
  }

  Substitution s;
  s.poset = share(OgPoset::validate(std::move(raw)));
  s.from_p.assign(P.size(), -1);
  s.from_v.assign(V.size(), -1);
  s.c.source = s.poset;
  s.c.target = iota.target;
  s.c.assign.assign(s.poset->size(), -1);
  for (std::size_t p = 0; p < P.size(); ++p) {
    if (inU.test(p)) continue;
    s.from_p[p] = s.poset->index(pid[p]);
    s.c.assign[s.from_p[p]] = static_cast<int>(p);
  }
  for (std::size_t v = 0; v < V.size(); ++v) {
    s.from_v[v] = s.poset->index(vid[v]);
    s.c.assign[s.from_v[v]] = iota.assign[c.assign[v]];
  }
  if (auto cc = check_comap(s.c); !cc) throw Error(Errc::NotSubdivision, "s' is not a subdivision: " + cc.failure);
  return s;
}

CylinderSubdivision cyl_subdiv(const Comap& c, const Subset& K, CylKind kind) {
  CylinderSubdivision out;
  out.coarse = make_cylinder(c.target, K, kind);
  out.fine = make_cylinder(c.source, preimage(c, K), kind);
  out.c.source = out.fine.poset;
  out.c.target = out.coarse.poset;
  out.c.assign = lift_assignment(out.fine, out.coarse, c);
  if (auto r = check_comap(out.c); !r) throw Error(Errc::ChecksFail, "cylinder subdivision: " + r.failure);
  return out;
}

InvertorSubdivision invertor_subdiv(const Comap& c, const std::string& t) {
  InvertorSubdivision out;
  out.fine = invertor(c.source, "");
  out.coarse = invertor(c.target, "");
  out.c = c;
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    Cylinder fc = invertor_stage(out.fine.poset, *it);
    Cylinder cc = invertor_stage(out.coarse.poset, *it);
    if (preimage(out.c, cc.K) != fc.K) throw Error(Errc::ChecksFail, "the subdivision does not preserve boundaries");
    Comap next;
    next.source = fc.poset;
    next.target = cc.poset;
    next.assign = lift_assignment(fc, cc, out.c);
    out.fine.tau = compose(fc.tau, out.fine.tau);
    out.coarse.tau = compose(cc.tau, out.coarse.tau);
    out.fine.poset = fc.poset;
    out.coarse.poset = cc.poset;
    out.fine.stages.push_back(std::move(fc));
    out.coarse.stages.push_back(std::move(cc));
    out.c = std::move(next);
  }
  if (auto r = check_comap(out.c); !r) throw Error(Errc::ChecksFail, "invertor subdivision: " + r.failure);
  return out;
}

PosetMap unit_shape(const PosetMap& u) {
  const OgPoset& U = *u.source;
  Cylinder c = cylinder(u.source, boundary(U, U.all(), U.dim() - 1));
  PosetMap e = compose(c.tau, u);
  e.declared = MapClass::Map;
  return e;
}

std::optional<Degeneracy> find_degeneracy(const PosetMap& u) {
  const Subset im = image(u, u.source->all());
  if (dim_of(*u.target, im) >= u.source->dim()) return std::nullopt;
  Restriction r = restrict_to(*u.target, im);
  Degeneracy d;
  d.p.source = u.source;
  d.p.target = r.poset;
  d.p.declared = MapClass::Cartesian;
  for (int y : u.assign) d.p.assign.push_back(r.from_parent[y]);
  d.v.source = r.poset;
  d.v.target = u.target;
  d.v.declared = MapClass::Inclusion;
  d.v.assign = r.to_parent;
  try {
    if (!check_cartesian(d.p)) return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
  return d;
}

PosetMap reverse(const PosetMap& u, const std::optional<Degeneracy>& witness) {
  std::optional<Degeneracy> d = witness ? witness : find_degeneracy(u);
  if (!d) throw Error(Errc::NotDegenerate, "no factorization through a lower-dimensional image");
  const int n = u.source->dim();
  PosetMap r;
  r.source = share(dual(*u.source, {n}));
  r.target = d->v.target;
  r.declared = MapClass::Map;
  for (int y : d->p.assign) r.assign.push_back(d->v.assign[y]);
  CheckResult ok;
  try {
    ok = check_map(r);
  } catch (const Error& e) {
    ok = CheckResult::fail(e.what());
  }
  if (!ok) throw Error(Errc::ChecksFail, "reverse is not a map: " + ok.failure);
  return r;
}

HornWitness marked_horn_check(PosetPtr Uptr, const Subset& marked, int x, Sign alpha) {
  const OgPoset& U = *Uptr;
  const Subset mx = maximal(U, U.all());
  if (mx.count() != 1) throw Error(Errc::PreconditionFail, "marked horns live on atoms");
  const int top = static_cast<int>(mx.find_first());
  const int k = U.dim() - 1;
  if (k < 0) throw Error(Errc::PreconditionFail, "the atom must have positive dimension");
  if (!marked.test(top)) throw Error(Errc::PreconditionFail, "the greatest element must be marked");
  const Subset bd = boundary(U, k, alpha);
  if (!maximal(U, bd).test(x)) throw Error(Errc::PreconditionFail, "'" + U.id(x) + "' is not maximal in the boundary");

  HornWitness w;
  bool faces_marked = true;
  for (int y : U.faces(top, -alpha)) faces_marked = faces_marked && marked.test(y);
  if (marked.test(x) != faces_marked) {
    w.failure = "marking of '" + U.id(x) + "' does not match the marking of the opposite faces";
    return w;
  }

  Recognizer R(Uptr);
  const Subset clx = closure(U, x);
  std::vector<std::pair<Subset, Subset>> found;  // outermost first while unwinding

  std::function<bool(const Subset&, int)> solve = [&](const Subset& W, int i) -> bool {
    if (!W.test(x)) return false;
    if (i == 0) return W == clx;
    if (dim_of(U, W) <= i - 1) {
      if (!solve(W, i - 1)) return false;
      found.emplace_back(W, W);
      return true;
    }
    std::vector<Layering> ls;
    try {
      ls = R.layerings(W, i - 1, 256);
    } catch (const Error&) {
      return false;
    }
    for (const Layering& l : ls) {
      const std::size_t r = l.layers.size();
      // A layer may sit outside the middle factor only if its top is a marked i-cell.
      std::vector<char> outer_ok(r);
      for (std::size_t j = 0; j < r; ++j) {
        const Subset tops = maximal(U, l.layers[j]) & ~boundary(U, l.layers[j], i - 1);
        bool ok = true;
        for (int t : members(tops)) ok = ok && U.dim(t) == i && marked.test(t);
        outer_ok[j] = ok;
      }
      for (std::size_t a = 0; a <= r; ++a) {
        if (a > 0 && !outer_ok[a - 1]) break;
        for (std::size_t b = r; b + 1 >= a + 1; --b) {
          // Middle factor is layers [a, b).
          if (b < r && !outer_ok[b]) break;
          Subset mid = U.none();
          for (std::size_t j = a; j < b; ++j) mid |= l.layers[j];
          if (a == b) {
            mid = a < r ? boundary(U, l.layers[a], i - 1, Sign::Minus) : boundary(U, l.layers[r - 1], i - 1, Sign::Plus);
          }
          Subset left = U.none(), right = U.none();
          for (std::size_t j = 0; j < a; ++j) left |= l.layers[j];
          for (std::size_t j = b; j < r; ++j) right |= l.layers[j];
          if (a == 0) left = boundary(U, mid, i - 1, Sign::Minus);
          if (b == r) right = boundary(U, mid, i - 1, Sign::Plus);
          if (solve(mid, i - 1)) {
            found.emplace_back(left, right);
            return true;
          }
          if (b == a) break;
        }
      }
    }
    return false;
  };

  if (!solve(bd, k)) {
    w.failure = "no decomposition of the boundary around '" + U.id(x) + "'";
    return w;
  }
  w.ok = true;
  w.layers = std::move(found);
  return w;
}

}  // namespace forge
