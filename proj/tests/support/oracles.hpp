#pragma once

// Independent reference computations for the tests. Each works directly from the element
// table by brute force and shares no code path with the library beyond OgPoset itself.

#include "forge/ogposet.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using forge::OgPoset;
using forge::Sign;

// Reflexive-transitive order as a matrix: below[x][y] iff x ≤ y.
inline std::vector<std::vector<bool>> order(const OgPoset& P) {
  const std::size_t n = P.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) {
    le[x][x] = true;
    for (Sign a : forge::kSigns) {
      for (int y : P.faces(static_cast<int>(x), a)) le[y][x] = true;
    }
  }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      if (le[i][m])
        for (std::size_t j = 0; j < n; ++j)
          if (le[m][j]) le[i][j] = true;
  return le;
}

inline std::set<int> down(const OgPoset& P, const std::set<int>& S) {
  const auto le = order(P);
  std::set<int> out;
  for (std::size_t x = 0; x < P.size(); ++x)
    for (int s : S)
      if (le[x][s]) out.insert(static_cast<int>(x));
  return out;
}

// ∂ₖ^α U read off the definition: k-dimensional elements of U none of whose
// (−α)-cofaces lie in U, together with the maximal elements of U below dimension k,
// closed downwards.
inline std::set<int> boundary(const OgPoset& P, const std::set<int>& U, int k, Sign a) {
  std::set<int> gens;
  for (int x : U) {
    const int d = P.dim(x);
    if (d == k) {
      bool free = true;
      for (int y : U)
        for (int f : P.faces(y, -a))
          if (f == x) free = false;
      if (free) gens.insert(x);
    } else if (d < k) {
      bool maximal = true;
      for (int y : U)
        for (Sign s : forge::kSigns)
          for (int f : P.faces(y, s))
            if (f == x) maximal = false;
      if (maximal) gens.insert(x);
    }
  }
  return down(P, gens);
}

inline std::set<int> all(const OgPoset& P) {
  std::set<int> out;
  for (std::size_t x = 0; x < P.size(); ++x) out.insert(static_cast<int>(x));
  return out;
}

inline int dim(const OgPoset& P, const std::set<int>& U) {
  int d = -1;
  for (int x : U) d = std::max(d, P.dim(x));
  return d;
}

// Number of isomorphisms P → Q (up to limit), by trying every dimension-preserving
// bijection. Only for small posets.
inline std::size_t count_isos(const OgPoset& P, const OgPoset& Q, std::size_t limit = 1000000) {
  if (P.size() != Q.size()) return 0;
  const std::size_t n = P.size();
  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);
  std::size_t count = 0;
  auto faces_match = [&](int x) {
    for (Sign a : forge::kSigns) {
      std::vector<int> fp, fq(Q.faces(img[x], a).begin(), Q.faces(img[x], a).end());
      for (int f : P.faces(x, a)) fp.push_back(img[f]);
      std::sort(fp.begin(), fp.end());
      std::sort(fq.begin(), fq.end());
      if (fp != fq) return false;
    }
    return true;
  };
  // Indices are ordered by dimension, so faces are placed before their cofaces.
  std::function<void(std::size_t)> go = [&](std::size_t x) {
    if (count >= limit) return;
    if (x == n) {
      ++count;
      return;
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || Q.dim(static_cast<int>(y)) != P.dim(static_cast<int>(x))) continue;
      img[x] = static_cast<int>(y);
      if (!faces_match(static_cast<int>(x))) continue;
      used[y] = true;
      go(x + 1);
      used[y] = false;
    }
    img[x] = -1;
  };
  go(0);
  return count;
}

inline bool is_closed(const OgPoset& P, const std::set<int>& U) { return down(P, U) == U; }

inline bool round(const OgPoset& P, const std::set<int>& U) {
  const int n = dim(P, U);
  for (int k = 0; k < n; ++k) {
    std::set<int> m = boundary(P, U, k, Sign::Minus), p = boundary(P, U, k, Sign::Plus), both;
    std::set_intersection(m.begin(), m.end(), p.begin(), p.end(), std::inserter(both, both.begin()));
    std::set<int> lower;
    if (k > 0) {
      std::set<int> lm = boundary(P, U, k - 1, Sign::Minus), lp = boundary(P, U, k - 1, Sign::Plus);
      lower = lm;
      lower.insert(lp.begin(), lp.end());
    }
    if (both != lower) return false;
  }
  return true;
}

// Molecules by the inductive definition: a point; a pasting U₁ ∪ U₂ with
// U₁ ∩ U₂ = ∂ₖ⁺U₁ = ∂ₖ⁻U₂ of smaller molecules; or a greatest element over a round
// molecule boundary ∂⁻ ∪ ∂⁺ with both sides molecules. Exponential; keep inputs small.
class Molecules {
public:
  explicit Molecules(const OgPoset& P) : P_(P) {}

  bool operator()(const std::set<int>& U) {
    if (auto it = memo_.find(U); it != memo_.end()) return it->second;
    bool ok = decide(U);
    memo_[U] = ok;
    return ok;
  }

private:
  bool decide(const std::set<int>& U) {
    if (U.empty()) return false;
    if (U.size() == 1) return P_.dim(*U.begin()) == 0;
    const int n = dim(P_, U);
    std::vector<int> maximal;
    for (int x : U) {
      bool is_max = true;
      for (int y : U)
        for (Sign s : forge::kSigns)
          for (int f : P_.faces(y, s))
            if (f == x) is_max = false;
      if (is_max) maximal.push_back(x);
    }
    if (maximal.size() == 1) {
      std::set<int> rest = U;
      rest.erase(maximal.front());
      std::set<int> m = boundary(P_, rest, n - 1, Sign::Minus), p = boundary(P_, rest, n - 1, Sign::Plus);
      std::set<int> in = down(P_, std::set<int>(P_.faces(maximal.front(), Sign::Minus).begin(),
                                                 P_.faces(maximal.front(), Sign::Minus).end()));
      std::set<int> out = down(P_, std::set<int>(P_.faces(maximal.front(), Sign::Plus).begin(),
                                                  P_.faces(maximal.front(), Sign::Plus).end()));
      std::set<int> whole = in;
      whole.insert(out.begin(), out.end());
      if (whole != rest) return false;
      return (*this)(in) && (*this)(out) && round(P_, in) && round(P_, out) &&
             boundary(P_, in, n - 2, Sign::Minus) == boundary(P_, out, n - 2, Sign::Minus) &&
             boundary(P_, in, n - 2, Sign::Plus) == boundary(P_, out, n - 2, Sign::Plus);
    }
    // Any U = U₁ ∘ₖ U₂ has Uᵢ = ∂ₖ^∓U ∪ cl gᵢ, where g₁, g₂ split the maximal elements of
    // dimension > k; maximal elements of dimension ≤ k sit in both k-boundaries.
    for (int k = 0; k < n; ++k) {
      std::vector<int> high;
      for (int x : maximal)
        if (P_.dim(x) > k) high.push_back(x);
      const std::size_t m = high.size();
      if (m < 2 || m > 16) continue;
      const std::set<int> in = boundary(P_, U, k, Sign::Minus), out = boundary(P_, U, k, Sign::Plus);
      for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << m); ++mask) {
        std::set<int> g1, g2;
        for (std::size_t i = 0; i < m; ++i) ((mask >> i) & 1 ? g1 : g2).insert(high[i]);
        std::set<int> U1 = down(P_, g1), U2 = down(P_, g2);
        U1.insert(in.begin(), in.end());
        U2.insert(out.begin(), out.end());
        std::set<int> meet, join = U1;
        join.insert(U2.begin(), U2.end());
        std::set_intersection(U1.begin(), U1.end(), U2.begin(), U2.end(), std::inserter(meet, meet.begin()));
        if (join != U || meet != boundary(P_, U1, k, Sign::Plus) || meet != boundary(P_, U2, k, Sign::Minus)) continue;
        if ((*this)(U1) && (*this)(U2)) return true;
      }
    }
    return false;
  }

  const OgPoset& P_;
  std::map<std::set<int>, bool> memo_;
};

inline bool is_molecule(const OgPoset& P) { return Molecules(P)(all(P)); }

}  // namespace oracle
