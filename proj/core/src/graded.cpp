#include "forge/graded.hpp"

#include "forge/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace forge {

int GradedPoset::index(const std::string& id) const {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) throw Error(Errc::UnknownId, "no element '" + id + "'");
  return static_cast<int>(it - ids.begin());
}

GradedPoset make_graded(std::vector<std::string> ids, std::vector<int> rank,
                        const std::vector<std::pair<std::string, std::string>>& covers) {
  GradedPoset G;
  G.ids = std::move(ids);
  G.rank = std::move(rank);
  G.down.resize(G.ids.size());
  G.up.resize(G.ids.size());
  for (const auto& [lo, hi] : covers) {
    int a = G.index(lo), b = G.index(hi);
    if (G.rank[b] != G.rank[a] + 1) {
      throw Error(Errc::BadGrading, "cover " + lo + " < " + hi + " does not raise rank by one");
    }
    G.down[b].push_back(a);
    G.up[a].push_back(b);
  }
  for (auto& v : G.down) std::sort(v.begin(), v.end());
  for (auto& v : G.up) std::sort(v.begin(), v.end());
  return G;
}

GradedPoset augment(const OgPoset& P) {
  GradedPoset G;
  const int n = static_cast<int>(P.size());
  G.ids.push_back("⊥");
  G.rank.push_back(-1);
  for (int x = 0; x < n; ++x) {
    G.ids.push_back(P.id(x));
    G.rank.push_back(P.dim(x));
  }
  G.down.resize(n + 1);
  G.up.resize(n + 1);
  for (int x = 0; x < n; ++x) {
    if (P.dim(x) == 0) {
      G.down[x + 1].push_back(0);
      G.up[0].push_back(x + 1);
    }
    for (Sign a : kSigns) {
      for (int f : P.faces(x, a)) {
        G.down[x + 1].push_back(f + 1);
        G.up[f + 1].push_back(x + 1);
      }
    }
  }
  for (auto& v : G.down) std::sort(v.begin(), v.end());
  for (auto& v : G.up) std::sort(v.begin(), v.end());
  return G;
}

std::vector<int> open_interval(const GradedPoset& G, int x, int y) {
  // Elements above x (upward search) intersected with elements below y.
  std::vector<char> above(G.size(), 0), below(G.size(), 0);
  std::deque<int> q{x};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : G.up[v]) {
      if (!above[w] && G.rank[w] <= G.rank[y]) { above[w] = 1; q.push_back(w); }
    }
  }
  q = {y};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : G.down[v]) {
      if (!below[w] && G.rank[w] >= G.rank[x]) { below[w] = 1; q.push_back(w); }
    }
  }
  std::vector<int> out;
  for (std::size_t v = 0; v < G.size(); ++v) {
    if (above[v] && below[v] && static_cast<int>(v) != x && static_cast<int>(v) != y) out.push_back(static_cast<int>(v));
  }
  return out;
}

std::optional<std::pair<int, int>> find_non_diamond(const GradedPoset& G) {
  for (std::size_t x = 0; x < G.size(); ++x) {
    std::set<int> tops;
    for (int m : G.up[x]) {
      for (int t : G.up[m]) tops.insert(t);
    }
    for (int t : tops) {
      if (open_interval(G, static_cast<int>(x), t).size() != 2) return std::make_pair(static_cast<int>(x), t);
    }
  }
  return std::nullopt;
}

bool is_thin(const GradedPoset& G) { return !find_non_diamond(G).has_value(); }

Diamond diamond_at(const GradedPoset& G, int bottom, int top) {
  auto mid = open_interval(G, bottom, top);
  if (G.rank[top] - G.rank[bottom] != 2 || mid.size() != 2) {
    throw Error(Errc::NotThin, "[" + G.ids[bottom] + ", " + G.ids[top] + "] is not a diamond");
  }
  return {bottom, mid[0], mid[1], top};
}

namespace {
bool covers(const GradedPoset& G, int lo, int hi) {
  return std::binary_search(G.down[hi].begin(), G.down[hi].end(), lo);
}
}  // namespace

Path diamond_act(const GradedPoset& G, const Diamond& D, const Path& path) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!covers(G, path[i], path[i + 1])) throw Error(Errc::NotAPath, "consecutive elements are not a cover");
  }
  for (std::size_t i = 0; i + 2 < path.size(); ++i) {
    if (path[i] == D.bottom && path[i + 2] == D.top) {
      Path out = path;
      if (path[i + 1] == D.mid1) {
        out[i + 1] = D.mid2;
        return out;
      }
      if (path[i + 1] == D.mid2) {
        out[i + 1] = D.mid1;
        return out;
      }
    }
  }
  return path;
}

namespace {

void all_paths(const GradedPoset& G, int x, int y, Path& cur, std::vector<Path>& out) {
  if (cur.back() == y) {
    out.push_back(cur);
    return;
  }
  for (int w : G.up[cur.back()]) {
    if (G.rank[w] > G.rank[y]) continue;
    cur.push_back(w);
    all_paths(G, x, y, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TransitivityReport is_diamond_transitive(const GradedPoset& G) {
  if (auto bad = find_non_diamond(G)) {
    throw Error(Errc::NotThin, "[" + G.ids[bad->first] + ", " + G.ids[bad->second] + "] is not a diamond");
  }
  TransitivityReport report;
  bool sampled = false;
  for (std::size_t xs = 0; xs < G.size(); ++xs) {
    const int x = static_cast<int>(xs);
    // Every y reachable upward from x.
    std::vector<char> reach(G.size(), 0);
    std::deque<int> q{x};
    reach[x] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : G.up[v]) {
        if (!reach[w]) { reach[w] = 1; q.push_back(w); }
      }
    }
    for (std::size_t ys = 0; ys < G.size(); ++ys) {
      const int y = static_cast<int>(ys);
      if (!reach[y] || G.rank[y] - G.rank[x] < 2) continue;
      ++report.pairs_checked;
      std::vector<Path> paths;
      Path cur{x};
      all_paths(G, x, y, cur, paths);
      report.paths_checked += paths.size();
      std::map<Path, int> id_of;
      for (std::size_t i = 0; i < paths.size(); ++i) id_of[paths[i]] = static_cast<int>(i);
      // BFS over diamond moves from the first path.
      std::vector<int> parent(paths.size(), -2);
      std::vector<Diamond> via(paths.size());
      parent[0] = -1;
      std::deque<int> bfs{0};
      while (!bfs.empty()) {
        int p = bfs.front();
        bfs.pop_front();
        const Path& path = paths[p];
        for (std::size_t i = 0; i + 2 < path.size(); ++i) {
          Diamond D = diamond_at(G, path[i], path[i + 2]);
          Path next = diamond_act(G, D, path);
          int j = id_of.at(next);
          if (parent[j] == -2) {
            parent[j] = p;
            via[j] = D;
            bfs.push_back(j);
          }
        }
      }
      for (std::size_t j = 0; j < paths.size(); ++j) {
        if (parent[j] == -2) {
          report.transitive = false;
          report.x = x;
          report.y = y;
          report.first = paths[0];
          report.second = paths[j];
          report.sequence.clear();
          return report;
        }
      }
      if (!sampled && paths.size() > 1) {
        sampled = true;
        report.x = x;
        report.y = y;
        const int last = static_cast<int>(paths.size()) - 1;
        report.first = paths[0];
        report.second = paths[last];
        std::vector<Diamond> seq;
        for (int j = last; parent[j] >= 0; j = parent[j]) seq.push_back(via[j]);
        std::reverse(seq.begin(), seq.end());
        report.sequence = std::move(seq);
      }
    }
  }
  return report;
}

GradedPoset broken_prism() {
  std::vector<std::string> ids = {"⊥", "a", "b", "c", "d", "p", "q", "r", "s", "t"};
  std::vector<int> rank = {-1, 0, 0, 0, 0, 1, 1, 1, 1, 2};
  std::vector<std::pair<std::string, std::string>> covers = {
      {"⊥", "a"}, {"⊥", "b"}, {"⊥", "c"}, {"⊥", "d"},
      {"a", "p"}, {"b", "p"}, {"a", "q"}, {"b", "q"},
      {"c", "r"}, {"d", "r"}, {"c", "s"}, {"d", "s"},
      {"p", "t"}, {"q", "t"}, {"r", "t"}, {"s", "t"}};
  return make_graded(std::move(ids), std::move(rank), covers);
}

}  // namespace forge
