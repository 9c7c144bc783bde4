#include "forge/collapse.hpp"

#include "forge/constructions.hpp"
#include "forge/error.hpp"
#include "forge/iso.hpp"
#include "forge/molecule.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace forge {

Subset zero_boundary(const OgPoset& U, int x, Sign a) { return boundary(U, closure(U, x), 0, a); }

CheckResult is_collapsible(const OgPoset& U, const Subset& K, Sign beta) {
  if (!is_closed(U, K)) throw Error(Errc::NotClosed, "collapsible subsets must be closed");
  if (K.none()) return CheckResult::fail("K is empty");
  for (std::size_t xs = 0; xs < U.size(); ++xs) {
    const int x = static_cast<int>(xs);
    if (K.test(x)) continue;
    if (zero_boundary(U, x, -beta).is_subset_of(K)) {
      return CheckResult::fail("'" + U.id(x) + "' has its " + sign_str(-beta) + "0-boundary in K but is not in K");
    }
  }
  return CheckResult::pass();
}

std::vector<Subset> collapsible_subsets(const OgPoset& U, Sign beta) {
  std::vector<int> points;
  for (std::size_t x = 0; x < U.size(); ++x) {
    if (U.dim(static_cast<int>(x)) == 0) points.push_back(static_cast<int>(x));
  }
  std::vector<Subset> src(U.size());
  for (std::size_t x = 0; x < U.size(); ++x) src[x] = zero_boundary(U, static_cast<int>(x), -beta);
  std::vector<Subset> out;
  const std::size_t m = points.size();
  if (m >= 24) throw Error(Errc::PreconditionFail, "too many points to enumerate collapsible subsets");
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    Subset k0 = U.none();
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) k0.set(points[i]);
    }
    Subset K = U.none();
    for (std::size_t x = 0; x < U.size(); ++x) {
      if (src[x].is_subset_of(k0)) K.set(x);
    }
    if (grade(U, K, 0) != k0 || !is_closed(U, K)) continue;
    if (is_collapsible(U, K, beta)) out.push_back(K);
  }
  return out;
}

Collapse collapse(PosetPtr Uptr, const Subset& K, Sign beta) {
  const OgPoset& U = *Uptr;
  if (auto c = is_collapsible(U, K, beta); !c) throw Error(Errc::NotCollapsible, c.failure);
  IdPool pool;
  std::vector<std::string> ids(U.size());
  for (std::size_t x = 0; x < U.size(); ++x) {
    if (!K.test(x)) ids[x] = pool.take(U.id(static_cast<int>(x)));
  }
  const std::string bullet = pool.take("*");
  std::vector<RawElement> raw;
  raw.push_back({bullet, 0, {}, {}});
  for (std::size_t xs = 0; xs < U.size(); ++xs) {
    const int x = static_cast<int>(xs);
    if (K.test(x)) continue;
    RawElement e{ids[x], U.dim(x), {}, {}};
    for (Sign a : kSigns) {
      auto& out = a == Sign::Minus ? e.minus : e.plus;
      bool into_k = false;
      for (int f : U.faces(x, a)) {
        if (K.test(f)) {
          into_k = true;
        } else {
          out.push_back(ids[f]);
        }
      }
      if (U.dim(x) == 1 && a == beta && into_k) out.push_back(bullet);
    }
    raw.push_back(std::move(e));
  }
  Collapse c;
  c.quotient = share(OgPoset::validate(std::move(raw)));
  c.bullet = c.quotient->index(bullet);
  c.p.source = Uptr;
  c.p.target = c.quotient;
  c.p.declared = MapClass::Map;
  for (std::size_t x = 0; x < U.size(); ++x) {
    c.p.assign.push_back(K.test(x) ? c.bullet : c.quotient->index(ids[x]));
  }
  return c;
}

CheckResult pushout_check(PosetPtr Uptr, const Subset& K, Sign beta) {
  const OgPoset& U = *Uptr;
  Collapse c = collapse(Uptr, K, beta);
  const OgPoset& Q = *c.quotient;

  // Classes: 0 is the image of K, the rest are the elements outside K.
  std::vector<int> cls(U.size());
  std::vector<int> rep{-1};
  for (std::size_t x = 0; x < U.size(); ++x) {
    if (K.test(x)) {
      cls[x] = 0;
    } else {
      cls[x] = static_cast<int>(rep.size());
      rep.push_back(static_cast<int>(x));
    }
  }
  const std::size_t m = rep.size();
  std::vector<std::vector<char>> le(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i) le[i][i] = 1;
  for (std::size_t xs = 0; xs < U.size(); ++xs) {
    for (Sign a : kSigns) {
      for (int f : U.faces(static_cast<int>(xs), a)) le[cls[f]][cls[xs]] = 1;
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      if (!le[i][k]) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (le[k][j]) le[i][j] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (le[i][j] && le[j][i]) return CheckResult::fail("quotient preorder is not antisymmetric");
    }
  }
  // Class index of each quotient element via p.
  std::vector<int> q_of_class(m, -1);
  for (std::size_t x = 0; x < U.size(); ++x) q_of_class[cls[x]] = c.p.assign[x];
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      bool cover = le[i][j];
      for (std::size_t k = 0; k < m && cover; ++k) {
        if (k != i && k != j && le[i][k] && le[k][j]) cover = false;
      }
      const int qi = q_of_class[i], qj = q_of_class[j];
      const auto& fm = Q.faces(qj, Sign::Minus);
      const auto& fp = Q.faces(qj, Sign::Plus);
      const bool face = std::binary_search(fm.begin(), fm.end(), qi) || std::binary_search(fp.begin(), fp.end(), qi);
      if (cover != face) {
        return CheckResult::fail("covering relation differs at '" + Q.id(qi) + "' < '" + Q.id(qj) + "'");
      }
    }
  }
  return CheckResult::pass();
}

PosetMap path_to_point(PosetPtr Uptr, int x, Sign alpha) {
  const OgPoset& U = *Uptr;
  if (U.dim(x) != 0) throw Error(Errc::PreconditionFail, "path_to_point needs a point");
  const Subset end = boundary(U, 0, alpha);
  if (end.count() != 1) throw Error(Errc::PreconditionFail, "0-boundary is not a single point");
  const int s = static_cast<int>(end.find_first());
  // Search along edges in their direction for α = −, against it for α = +.
  std::vector<int> via(U.size(), -2);
  std::deque<int> q{s};
  via[s] = -1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int e : U.cofaces(v, alpha == Sign::Minus ? Sign::Minus : Sign::Plus)) {
      const int w = U.faces(e, alpha == Sign::Minus ? Sign::Plus : Sign::Minus).front();
      if (via[w] == -2) {
        via[w] = e;
        q.push_back(w);
      }
    }
  }
  if (via[x] == -2) throw Error(Errc::PreconditionFail, "no directed path reaches '" + U.id(x) + "'");
  std::vector<int> verts{x}, edges;
  for (int v = x; via[v] >= 0;) {
    const int e = via[v];
    edges.push_back(e);
    v = U.faces(e, alpha == Sign::Minus ? Sign::Minus : Sign::Plus).front();
    verts.push_back(v);
  }
  if (alpha == Sign::Minus) {
    std::reverse(verts.begin(), verts.end());
    std::reverse(edges.begin(), edges.end());
  }
  const int k = static_cast<int>(edges.size());
  PosetMap f;
  f.source = arrow_chain(k)->poset;
  f.target = Uptr;
  f.declared = MapClass::Inclusion;
  f.assign.assign(f.source->size(), -1);
  if (k == 0) {
    f.assign[0] = x;
  } else {
    for (int i = 0; i <= k; ++i) f.assign[f.source->index("v" + std::to_string(i))] = verts[i];
    for (int i = 1; i <= k; ++i) f.assign[f.source->index("e" + std::to_string(i))] = edges[i - 1];
  }
  return f;
}

std::optional<OgPoset> detect_suspension(const OgPoset& U) {
  const Subset points = grade(U, U.all(), 0);
  const Subset bm = boundary(U, 0, Sign::Minus);
  const Subset bp = boundary(U, 0, Sign::Plus);
  if (bm.count() != 1 || bp.count() != 1 || bm == bp || (bm | bp) != points) return std::nullopt;
  bool prefixed = true;
  for (std::size_t x = 0; x < U.size(); ++x) {
    if (!points.test(x)) prefixed = prefixed && U.id(static_cast<int>(x)).rfind("S:", 0) == 0;
  }
  auto strip = [&](const std::string& id) { return prefixed ? id.substr(2) : id; };
  std::vector<RawElement> raw;
  for (std::size_t xs = 0; xs < U.size(); ++xs) {
    const int x = static_cast<int>(xs);
    if (points.test(x)) continue;
    RawElement e{strip(U.id(x)), U.dim(x) - 1, {}, {}};
    if (U.dim(x) > 1) {
      for (int f : U.faces(x, Sign::Minus)) e.minus.push_back(strip(U.id(f)));
      for (int f : U.faces(x, Sign::Plus)) e.plus.push_back(strip(U.id(f)));
    }
    raw.push_back(std::move(e));
  }
  return OgPoset::validate(std::move(raw));
}

Desuspension desuspend(PosetPtr Uptr, const Subset& kminus, const Subset& kplus) {
  const OgPoset& U = *Uptr;
  auto fail = [](const std::string& clause) { throw Error(Errc::PreconditionFail, clause); };
  if ((kminus & kplus).any()) fail("K- and K+ must be disjoint");
  if (!is_closed(U, kminus) || !is_closed(U, kplus)) fail("K- and K+ must be closed");
  if (!grade(U, U.all(), 0).is_subset_of(kminus | kplus)) fail("every point must lie in K- or K+");
  if ((kminus | kplus) == U.all()) fail("K- and K+ must not cover U");
  if (auto c = is_collapsible(U, kminus, Sign::Minus); !c) fail("K- is not (-)-collapsible: " + c.failure);
  if (auto c = is_collapsible(U, kplus, Sign::Plus); !c) fail("K+ is not (+)-collapsible: " + c.failure);

  Collapse first = collapse(Uptr, kminus, Sign::Minus);
  if (auto r = pushout_check(Uptr, kminus, Sign::Minus); !r) fail("first collapse is not a pushout: " + r.failure);
  const Subset k2 = image(first.p, kplus);
  Collapse second = collapse(first.quotient, k2, Sign::Plus);
  if (auto r = pushout_check(first.quotient, k2, Sign::Plus); !r) fail("second collapse is not a pushout: " + r.failure);

  auto V = detect_suspension(*second.quotient);
  if (!V) fail("the double collapse is not a suspension");
  Desuspension d;
  d.V = share(std::move(*V));
  auto sv = share(suspend(*d.V));
  auto phi = find_iso(*second.quotient, *sv);
  if (!phi) fail("the double collapse is not isomorphic to the suspension of its desuspension");
  d.q.source = Uptr;
  d.q.target = sv;
  d.q.declared = MapClass::Map;
  for (std::size_t x = 0; x < U.size(); ++x) d.q.assign.push_back((*phi)[second.p.assign[first.p.assign[x]]]);
  if (auto r = check_map(d.q); !r) fail("q is not a map: " + r.failure);
  return d;
}

}  // namespace forge
