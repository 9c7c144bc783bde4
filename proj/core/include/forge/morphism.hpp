#pragma once

#include "forge/ogposet.hpp"

#include <map>
#include <string>
#include <vector>

namespace forge {

enum class MapClass { Plain, Map, Cartesian, Inclusion, LocalEmbedding };

const char* map_class_name(MapClass c) noexcept;
MapClass parse_map_class(const std::string& name);

// Element-wise function between oriented graded posets.
struct PosetMap {
  PosetPtr source;
  PosetPtr target;
  std::vector<int> assign;
  MapClass declared = MapClass::Plain;

  int operator()(int x) const { return assign[x]; }
};

// Order-preserving c: source → target; its formal dual is the subdivision target ⇝ source.
struct Comap {
  PosetPtr source;
  PosetPtr target;
  std::vector<int> assign;

  int operator()(int x) const { return assign[x]; }
};

PosetMap identity_map(PosetPtr P);
Comap identity_comap(PosetPtr P);
PosetMap map_from_ids(PosetPtr source, PosetPtr target, const std::map<std::string, std::string>& assignment,
                      MapClass declared = MapClass::Plain);
std::map<std::string, std::string> assignment_ids(const PosetPtr& source, const PosetPtr& target,
                                                  const std::vector<int>& assign);

Subset image(const PosetMap& f, const Subset& U);
Subset preimage(const Comap& c, const Subset& U);
Subset preimage(const PosetMap& f, const Subset& U);

}  // namespace forge
