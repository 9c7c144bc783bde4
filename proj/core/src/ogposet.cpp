#include "forge/ogposet.hpp"

#include "forge/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace forge {

const char* sign_str(Sign s) noexcept { return s == Sign::Minus ? "-" : "+"; }

Sign parse_sign(std::string_view text) {
  if (text == "-" || text == "minus" || text == "in") return Sign::Minus;
  if (text == "+" || text == "plus" || text == "out") return Sign::Plus;
  throw Error(Errc::ParseError, "bad sign '" + std::string(text) + "'");
}

std::size_t SubsetHash::operator()(const Subset& s) const noexcept {
  std::size_t h = s.size();
  std::vector<Subset::block_type> blocks;
  boost::to_block_range(s, std::back_inserter(blocks));
  for (auto b : blocks) h = h * 1000003u ^ std::hash<Subset::block_type>{}(b);
  return h;
}

OgPoset OgPoset::validate(std::vector<RawElement> raw) {
  using V = ValidationError::Violation;
  std::vector<V> violations;

  std::unordered_map<std::string, int> where;
  for (int i = 0; i < static_cast<int>(raw.size()); ++i) {
    if (!where.emplace(raw[i].id, i).second) {
      violations.push_back({Errc::DuplicateId, "id '" + raw[i].id + "' repeated"});
    }
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));

  const int n = static_cast<int>(raw.size());
  std::vector<std::vector<int>> face_idx[2];
  face_idx[0].resize(n);
  face_idx[1].resize(n);
  for (int i = 0; i < n; ++i) {
    auto& r = raw[i];
    std::sort(r.minus.begin(), r.minus.end());
    r.minus.erase(std::unique(r.minus.begin(), r.minus.end()), r.minus.end());
    std::sort(r.plus.begin(), r.plus.end());
    r.plus.erase(std::unique(r.plus.begin(), r.plus.end()), r.plus.end());
    if (r.dim < 0) violations.push_back({Errc::BadGrading, "'" + r.id + "' has negative dim"});
    for (int s = 0; s < 2; ++s) {
      for (const auto& f : (s == 0 ? r.minus : r.plus)) {
        auto it = where.find(f);
        if (it == where.end()) {
          violations.push_back({Errc::DanglingFace, "'" + r.id + "' names absent face '" + f + "'"});
        } else {
          face_idx[s][i].push_back(it->second);
        }
      }
    }
    std::vector<std::string> both;
    std::set_intersection(r.minus.begin(), r.minus.end(), r.plus.begin(), r.plus.end(),
                          std::back_inserter(both));
    for (const auto& f : both) {
      violations.push_back({Errc::OrientationOverlap, "'" + f + "' is both an input and output face of '" + r.id + "'"});
    }
  }

  // Cycle detection over the face relation.
  std::vector<int> state(n, 0);
  bool cyclic = false;
  std::function<void(int)> visit = [&](int v) {
    state[v] = 1;
    for (int s = 0; s < 2 && !cyclic; ++s) {
      for (int w : face_idx[s][v]) {
        if (state[w] == 1) {
          cyclic = true;
          violations.push_back({Errc::Cycle, "face relation has a cycle through '" + raw[w].id + "'"});
          return;
        }
        if (state[w] == 0) visit(w);
        if (cyclic) return;
      }
    }
    state[v] = 2;
  };
  for (int i = 0; i < n && !cyclic; ++i) {
    if (state[i] == 0) visit(i);
  }

  for (int i = 0; i < n; ++i) {
    const auto& r = raw[i];
    for (int s = 0; s < 2; ++s) {
      for (int f : face_idx[s][i]) {
        if (raw[f].dim != r.dim - 1) {
          violations.push_back({Errc::BadGrading, "face '" + raw[f].id + "' of '" + r.id + "' has dim " +
                                                      std::to_string(raw[f].dim) + ", expected " +
                                                      std::to_string(r.dim - 1)});
        }
      }
    }
    if (r.dim > 0 && (r.minus.empty() || r.plus.empty())) {
      violations.push_back({Errc::BadGrading, "'" + r.id + "' of dim " + std::to_string(r.dim) +
                                                  " lacks an input or output face"});
    }
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (raw[a].dim != raw[b].dim) return raw[a].dim < raw[b].dim;
    return raw[a].id < raw[b].id;
  });
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[order[i]] = i;

  OgPoset P;
  P.nodes_.resize(n);
  for (int i = 0; i < n; ++i) {
    auto& node = P.nodes_[i];
    const auto& r = raw[order[i]];
    node.id = r.id;
    node.dim = r.dim;
    P.dim_ = std::max(P.dim_, r.dim);
    P.index_.emplace(r.id, i);
    for (int s = 0; s < 2; ++s) {
      for (int f : face_idx[s][order[i]]) node.face[s].push_back(rank[f]);
      std::sort(node.face[s].begin(), node.face[s].end());
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int s = 0; s < 2; ++s) {
      for (int f : P.nodes_[i].face[s]) P.nodes_[f].coface[s].push_back(i);
    }
  }
  return P;
}

std::optional<int> OgPoset::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int OgPoset::index(std::string_view id) const {
  auto r = find(id);
  if (!r) throw Error(Errc::UnknownId, "no element '" + std::string(id) + "'");
  return *r;
}

Subset OgPoset::all() const {
  Subset s(size());
  s.set();
  return s;
}

Subset OgPoset::singleton(int x) const {
  Subset s(size());
  s.set(x);
  return s;
}

std::vector<RawElement> OgPoset::raw() const {
  std::vector<RawElement> out;
  out.reserve(size());
  for (const auto& node : nodes_) {
    RawElement r;
    r.id = node.id;
    r.dim = node.dim;
    for (int f : node.face[0]) r.minus.push_back(nodes_[f].id);
    for (int f : node.face[1]) r.plus.push_back(nodes_[f].id);
    std::sort(r.minus.begin(), r.minus.end());
    std::sort(r.plus.begin(), r.plus.end());
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const RawElement& a, const RawElement& b) { return a.id < b.id; });
  return out;
}

bool OgPoset::operator==(const OgPoset& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    const auto& a = nodes_[i];
    const auto& b = other.nodes_[i];
    if (a.id != b.id || a.dim != b.dim || a.face[0] != b.face[0] || a.face[1] != b.face[1]) return false;
  }
  return true;
}

Subset closure(const OgPoset& P, const Subset& S) {
  Subset out = S;
  for (int i = static_cast<int>(P.size()) - 1; i >= 0; --i) {
    if (!out.test(i)) continue;
    for (Sign a : kSigns) {
      for (int f : P.faces(i, a)) out.set(f);
    }
  }
  return out;
}

Subset closure(const OgPoset& P, int x) { return closure(P, P.singleton(x)); }

Subset closure(const OgPoset& P, const std::vector<std::string>& ids) { return closure(P, subset_of(P, ids)); }

bool is_closed(const OgPoset& P, const Subset& U) { return closure(P, U) == U; }

bool leq(const OgPoset& P, int x, int y) {
  if (x == y) return true;
  if (P.dim(x) >= P.dim(y)) return false;
  return closure(P, y).test(x);
}

int dim_of(const OgPoset& P, const Subset& U) {
  int d = -1;
  for (auto i = U.find_first(); i != Subset::npos; i = U.find_next(i)) d = std::max(d, P.dim(static_cast<int>(i)));
  return d;
}

Subset grade(const OgPoset& P, const Subset& U, int k) {
  Subset out(P.size());
  for (auto i = U.find_first(); i != Subset::npos; i = U.find_next(i)) {
    if (P.dim(static_cast<int>(i)) == k) out.set(i);
  }
  return out;
}

namespace {
bool has_coface_in(const OgPoset& P, int x, Sign a, const Subset& U) {
  for (int c : P.cofaces(x, a)) {
    if (U.test(c)) return true;
  }
  return false;
}
}  // namespace

Subset maximal(const OgPoset& P, const Subset& U) {
  Subset out(P.size());
  for (auto i = U.find_first(); i != Subset::npos; i = U.find_next(i)) {
    int x = static_cast<int>(i);
    if (!has_coface_in(P, x, Sign::Minus, U) && !has_coface_in(P, x, Sign::Plus, U)) out.set(i);
  }
  return out;
}

Subset boundary(const OgPoset& P, const Subset& U, int k, Sign a) {
  if (k < 0) return P.none();
  if (k >= dim_of(P, U)) return U;
  Subset seed(P.size());
  for (auto i = U.find_first(); i != Subset::npos; i = U.find_next(i)) {
    int x = static_cast<int>(i);
    int d = P.dim(x);
    if (d == k) {
      if (!has_coface_in(P, x, -a, U)) seed.set(i);
    } else if (d < k) {
      if (!has_coface_in(P, x, Sign::Minus, U) && !has_coface_in(P, x, Sign::Plus, U)) seed.set(i);
    }
  }
  return closure(P, seed);
}

Subset boundary(const OgPoset& P, const Subset& U, int k) {
  return boundary(P, U, k, Sign::Minus) | boundary(P, U, k, Sign::Plus);
}

Subset boundary(const OgPoset& P, int k, Sign a) { return boundary(P, P.all(), k, a); }

bool is_round(const OgPoset& P, const Subset& U) {
  const int n = dim_of(P, U);
  for (int k = 0; k < n; ++k) {
    if ((boundary(P, U, k, Sign::Minus) & boundary(P, U, k, Sign::Plus)) != boundary(P, U, k - 1)) return false;
  }
  return true;
}

bool is_round(const OgPoset& P) { return is_round(P, P.all()); }

Restriction restrict_to(const OgPoset& P, const Subset& U) {
  Restriction r;
  r.from_parent.assign(P.size(), -1);
  std::vector<RawElement> raw;
  for (auto i = U.find_first(); i != Subset::npos; i = U.find_next(i)) {
    int x = static_cast<int>(i);
    RawElement e;
    e.id = P.id(x);
    e.dim = P.dim(x);
    for (int f : P.faces(x, Sign::Minus)) {
      if (U.test(f)) e.minus.push_back(P.id(f));
    }
    for (int f : P.faces(x, Sign::Plus)) {
      if (U.test(f)) e.plus.push_back(P.id(f));
    }
    raw.push_back(std::move(e));
  }
  r.poset = share(OgPoset::validate(std::move(raw)));
  r.to_parent.resize(r.poset->size());
  for (std::size_t j = 0; j < r.poset->size(); ++j) {
    int x = P.index(r.poset->id(static_cast<int>(j)));
    r.to_parent[j] = x;
    r.from_parent[x] = static_cast<int>(j);
  }
  return r;
}

std::vector<std::string> ids_of(const OgPoset& P, const Subset& U) {
  std::vector<std::string> out;
  for (auto i = U.find_first(); i != Subset::npos; i = U.find_next(i)) out.push_back(P.id(static_cast<int>(i)));
  std::sort(out.begin(), out.end());
  return out;
}

Subset subset_of(const OgPoset& P, const std::vector<std::string>& ids) {
  Subset s(P.size());
  for (const auto& id : ids) s.set(P.index(id));
  return s;
}

std::vector<int> members(const Subset& U) {
  std::vector<int> out;
  out.reserve(U.count());
  for (auto i = U.find_first(); i != Subset::npos; i = U.find_next(i)) out.push_back(static_cast<int>(i));
  return out;
}

std::string IdPool::take(const std::string& base) {
  std::string id = base;
  while (used_.count(id)) id += "'";
  used_.insert(id);
  return id;
}

}  // namespace forge
