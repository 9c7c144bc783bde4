#pragma once

#include "forge/morphism.hpp"
#include "forge/ogposet.hpp"

#include <set>
#include <string>

namespace forge {

std::string gray_id(const std::string& x, const std::string& y);

// Gray product; element (x, y) has id "x|y".
OgPoset gray(const OgPoset& P, const OgPoset& Q);
PosetMap gray_map(const PosetMap& f, const PosetMap& g);
Comap gray_comap(const Comap& c, const Comap& d);

// Suspension; element Σx has id "S:x", the poles are "bot-" and "bot+".
OgPoset suspend(const OgPoset& P);
PosetMap suspend_map(const PosetMap& f);
std::string suspended_id(const std::string& x);

// J-dual: faces swapped on elements whose dimension lies in J.
OgPoset dual(const OgPoset& P, const std::set<int>& J);
PosetMap dual_map(const PosetMap& f, const std::set<int>& J);

// Renames elements through `ids` (indexed by element).
OgPoset rename(const OgPoset& P, const std::vector<std::string>& ids);

}  // namespace forge
