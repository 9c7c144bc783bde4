#include "forge/iso.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>

namespace forge {
namespace {

using Signature = std::array<int, 6>;

Signature signature(const OgPoset& P, int x, const std::vector<int>& colors) {
  return {P.dim(x),
          static_cast<int>(P.faces(x, Sign::Minus).size()),
          static_cast<int>(P.faces(x, Sign::Plus).size()),
          static_cast<int>(P.cofaces(x, Sign::Minus).size()),
          static_cast<int>(P.cofaces(x, Sign::Plus).size()),
          colors.empty() ? 0 : colors[x]};
}

class Search {
public:
  Search(const OgPoset& P, const OgPoset& Q, const IsoOptions& opt) : P_(P), Q_(Q), opt_(opt) {}

  std::vector<Iso> run() {
    const int n = static_cast<int>(P_.size());
    if (P_.size() != Q_.size()) return {};
    sig_p_.resize(n);
    sig_q_.resize(n);
    std::map<Signature, int> count;
    for (int x = 0; x < n; ++x) {
      sig_p_[x] = signature(P_, x, opt_.colors_p);
      ++count[sig_p_[x]];
    }
    for (int y = 0; y < n; ++y) {
      sig_q_[y] = signature(Q_, y, opt_.colors_q);
      if (--count[sig_q_[y]] < 0) return {};
    }
    for (int y = 0; y < n; ++y) by_sig_[sig_q_[y]].push_back(y);

    // BFS order from the rarest, highest-dimensional elements.
    std::vector<int> seeds(n);
    for (int x = 0; x < n; ++x) seeds[x] = x;
    std::sort(seeds.begin(), seeds.end(), [&](int a, int b) {
      auto ca = by_sig_[sig_p_[a]].size(), cb = by_sig_[sig_p_[b]].size();
      if (ca != cb) return ca < cb;
      if (P_.dim(a) != P_.dim(b)) return P_.dim(a) > P_.dim(b);
      return a < b;
    });
    std::vector<char> seen(n, 0);
    for (int s : seeds) {
      if (seen[s]) continue;
      std::deque<int> queue{s};
      seen[s] = 1;
      while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        order_.push_back(x);
        for (Sign a : kSigns) {
          for (int y : P_.faces(x, a)) {
            if (!seen[y]) { seen[y] = 1; queue.push_back(y); }
          }
          for (int y : P_.cofaces(x, a)) {
            if (!seen[y]) { seen[y] = 1; queue.push_back(y); }
          }
        }
      }
    }
    map_.assign(n, -1);
    used_.assign(n, 0);
    extend(0);
    return std::move(found_);
  }

private:
  bool consistent(int x, int y) const {
    for (Sign a : kSigns) {
      for (int f : P_.faces(x, a)) {
        if (map_[f] < 0) continue;
        const auto& fq = Q_.faces(y, a);
        if (!std::binary_search(fq.begin(), fq.end(), map_[f])) return false;
      }
      for (int c : P_.cofaces(x, a)) {
        if (map_[c] < 0) continue;
        const auto& cq = Q_.cofaces(y, a);
        if (std::find(cq.begin(), cq.end(), map_[c]) == cq.end()) return false;
      }
    }
    return true;
  }

  void extend(std::size_t depth) {
    if (found_.size() >= opt_.limit) return;
    if (depth == order_.size()) {
      found_.push_back(map_);
      return;
    }
    const int x = order_[depth];
    // Narrow candidates through an already-mapped neighbour where possible.
    const std::vector<int>* pool = &by_sig_[sig_p_[x]];
    std::vector<int> local;
    for (Sign a : kSigns) {
      for (int f : P_.faces(x, a)) {
        if (map_[f] >= 0) {
          local = Q_.cofaces(map_[f], a);
          pool = &local;
          goto chosen;
        }
      }
      for (int c : P_.cofaces(x, a)) {
        if (map_[c] >= 0) {
          local = Q_.faces(map_[c], a);
          pool = &local;
          goto chosen;
        }
      }
    }
  chosen:
    for (int y : *pool) {
      if (used_[y] || sig_q_[y] != sig_p_[x] || !consistent(x, y)) continue;
      map_[x] = y;
      used_[y] = 1;
      extend(depth + 1);
      map_[x] = -1;
      used_[y] = 0;
      if (found_.size() >= opt_.limit) return;
    }
  }

  const OgPoset& P_;
  const OgPoset& Q_;
  const IsoOptions& opt_;
  std::vector<Signature> sig_p_, sig_q_;
  std::map<Signature, std::vector<int>> by_sig_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<char> used_;
  std::vector<Iso> found_;
};

}  // namespace

std::vector<Iso> find_isos(const OgPoset& P, const OgPoset& Q, const IsoOptions& options) {
  if (options.limit == 0) return {};
  return Search(P, Q, options).run();
}

std::optional<Iso> find_iso(const OgPoset& P, const OgPoset& Q) { return find_iso(P, Q, IsoOptions{}); }

std::optional<Iso> find_iso(const OgPoset& P, const OgPoset& Q, const IsoOptions& options) {
  IsoOptions opt = options;
  opt.limit = 1;
  auto r = find_isos(P, Q, opt);
  if (r.empty()) return std::nullopt;
  return r.front();
}

std::size_t count_isos(const OgPoset& P, const OgPoset& Q, std::size_t limit) {
  IsoOptions opt;
  opt.limit = limit;
  return find_isos(P, Q, opt).size();
}

std::optional<Iso> find_subset_iso(const OgPoset& P, const Subset& U, const OgPoset& Q, const Subset& V,
                                   const std::vector<int>& colors_p, const std::vector<int>& colors_q) {
  if (U.count() != V.count()) return std::nullopt;
  auto rp = restrict_to(P, U);
  auto rq = restrict_to(Q, V);
  IsoOptions opt;
  if (!colors_p.empty()) {
    for (int x : rp.to_parent) opt.colors_p.push_back(colors_p[x]);
    for (int y : rq.to_parent) opt.colors_q.push_back(colors_q[y]);
  }
  auto iso = find_iso(*rp.poset, *rq.poset, opt);
  if (!iso) return std::nullopt;
  Iso out(P.size(), -1);
  for (std::size_t j = 0; j < iso->size(); ++j) out[rp.to_parent[j]] = rq.to_parent[(*iso)[j]];
  return out;
}

bool is_isomorphism(const OgPoset& P, const OgPoset& Q, const Iso& f) {
  if (P.size() != Q.size() || f.size() != P.size()) return false;
  std::vector<char> hit(Q.size(), 0);
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] < 0 || f[x] >= static_cast<int>(Q.size()) || hit[f[x]]) return false;
    hit[f[x]] = 1;
    if (P.dim(static_cast<int>(x)) != Q.dim(f[x])) return false;
    for (Sign a : kSigns) {
      std::vector<int> img;
      for (int y : P.faces(static_cast<int>(x), a)) img.push_back(f[y]);
      std::sort(img.begin(), img.end());
      if (img != Q.faces(f[x], a)) return false;
    }
  }
  return true;
}

Iso invert(const Iso& f, std::size_t target_size) {
  Iso g(target_size, -1);
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] >= 0) g[f[x]] = static_cast<int>(x);
  }
  return g;
}

}  // namespace forge
