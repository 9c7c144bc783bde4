#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace forge {

enum class Sign : signed char { Minus = -1, Plus = 1 };

constexpr Sign operator-(Sign s) noexcept { return s == Sign::Minus ? Sign::Plus : Sign::Minus; }

// (−)^n α
constexpr Sign sign_pow(int n, Sign a) noexcept { return (n % 2 == 0) ? a : -a; }

constexpr int slot(Sign s) noexcept { return s == Sign::Minus ? 0 : 1; }

inline constexpr Sign kSigns[2] = {Sign::Minus, Sign::Plus};

const char* sign_str(Sign s) noexcept;
Sign parse_sign(std::string_view text);

using Subset = boost::dynamic_bitset<>;

struct SubsetHash {
  std::size_t operator()(const Subset& s) const noexcept;
};

struct RawElement {
  std::string id;
  int dim = 0;
  std::vector<std::string> minus;
  std::vector<std::string> plus;
};

// Finite oriented graded poset. Internal indices are ordered by (dim, id), so every
// face of x has a smaller index than x.
class OgPoset {
public:
  OgPoset() = default;

  // Throws ValidationError listing every violated invariant.
  static OgPoset validate(std::vector<RawElement> raw);

  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }
  int dim() const noexcept { return dim_; }

  int dim(int x) const { return nodes_[x].dim; }
  const std::string& id(int x) const { return nodes_[x].id; }
  const std::vector<int>& faces(int x, Sign a) const { return nodes_[x].face[slot(a)]; }
  const std::vector<int>& cofaces(int x, Sign a) const { return nodes_[x].coface[slot(a)]; }

  std::optional<int> find(std::string_view id) const;
  int index(std::string_view id) const;  // throws UnknownId

  Subset none() const { return Subset(size()); }
  Subset all() const;
  Subset singleton(int x) const;

  // Element table in lexicographic id order.
  std::vector<RawElement> raw() const;

  bool operator==(const OgPoset& other) const;

private:
  struct Node {
    std::string id;
    int dim = 0;
    std::vector<int> face[2];
    std::vector<int> coface[2];
  };
  std::vector<Node> nodes_;
  std::unordered_map<std::string, int> index_;
  int dim_ = -1;
};

using PosetPtr = std::shared_ptr<const OgPoset>;

inline PosetPtr share(OgPoset p) { return std::make_shared<const OgPoset>(std::move(p)); }

Subset closure(const OgPoset& P, const Subset& S);
Subset closure(const OgPoset& P, int x);
Subset closure(const OgPoset& P, const std::vector<std::string>& ids);
bool is_closed(const OgPoset& P, const Subset& U);
bool leq(const OgPoset& P, int x, int y);

int dim_of(const OgPoset& P, const Subset& U);
Subset grade(const OgPoset& P, const Subset& U, int k);
Subset maximal(const OgPoset& P, const Subset& U);

Subset boundary(const OgPoset& P, const Subset& U, int k, Sign a);
Subset boundary(const OgPoset& P, const Subset& U, int k);
Subset boundary(const OgPoset& P, int k, Sign a);

bool is_round(const OgPoset& P, const Subset& U);
bool is_round(const OgPoset& P);

struct Restriction {
  PosetPtr poset;
  std::vector<int> to_parent;    // poset index -> parent index
  std::vector<int> from_parent;  // parent index -> poset index or -1
};
// U must be closed.
Restriction restrict_to(const OgPoset& P, const Subset& U);

std::vector<std::string> ids_of(const OgPoset& P, const Subset& U);
Subset subset_of(const OgPoset& P, const std::vector<std::string>& ids);
std::vector<int> members(const Subset& U);

// Hands out unique identifiers: the requested base, or the base with primes appended.
class IdPool {
public:
  std::string take(const std::string& base);
  bool contains(const std::string& id) const { return used_.count(id) != 0; }

private:
  std::unordered_set<std::string> used_;
};

}  // namespace forge
