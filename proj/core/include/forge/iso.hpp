#pragma once

#include "forge/ogposet.hpp"

#include <optional>
#include <vector>

namespace forge {

// Iso[x] is the image in Q of element x of P.
using Iso = std::vector<int>;

struct IsoOptions {
  // Optional element colours that an isomorphism must preserve.
  std::vector<int> colors_p;
  std::vector<int> colors_q;
  // Stop after this many isomorphisms.
  std::size_t limit = 1;
};

std::vector<Iso> find_isos(const OgPoset& P, const OgPoset& Q, const IsoOptions& options);
std::optional<Iso> find_iso(const OgPoset& P, const OgPoset& Q);
std::optional<Iso> find_iso(const OgPoset& P, const OgPoset& Q, const IsoOptions& options);
std::size_t count_isos(const OgPoset& P, const OgPoset& Q, std::size_t limit);

// Isomorphism between the closed subsets U ⊆ P and V ⊆ Q, returned on parent indices
// (entries outside U are -1).
std::optional<Iso> find_subset_iso(const OgPoset& P, const Subset& U, const OgPoset& Q, const Subset& V,
                                   const std::vector<int>& colors_p = {}, const std::vector<int>& colors_q = {});

bool is_isomorphism(const OgPoset& P, const OgPoset& Q, const Iso& f);
Iso invert(const Iso& f, std::size_t target_size);

}  // namespace forge
