#pragma once

#include "forge/complex.hpp"
#include "forge/maps.hpp"
#include "forge/molcat.hpp"
#include "forge/molecule.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

// Text formats. All readers throw ParseError on malformed input; posets additionally go
// through OgPoset::validate. Writers list elements in lexicographic id order.
namespace forge {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// {"elements":[{"id":..,"dim":..,"faces":{"-":[..],"+":[..]}}]}
std::string poset_json(const OgPoset& P);
OgPoset parse_poset(std::string_view text);
OgPoset load_poset(const std::string& path);

// {"source":P,"target":Q,"assignment":{id:id},"class":..}. Source and target are inline
// posets or file paths, resolved against base_dir.
std::string map_json(const PosetMap& f);
PosetMap parse_map(std::string_view text, const std::string& base_dir = ".");

// Same layout without "class"; the assignment runs from the fine to the coarse poset.
std::string comap_json(const Comap& c);
Comap parse_comap(std::string_view text, const std::string& base_dir = ".");

// {"kind":"point"} | {"kind":"paste","k":k,"left":..,"right":..} |
// {"kind":"rewrite","input":..,"output":..}; the top level also carries "poset".
std::string cert_json(const Cert& c);
Cert parse_cert(std::string_view text);

// Expressions such as paste(rewrite(g1,g1),g2,0). Leaves: point, gN (globe), aN (arrow chain).
Cert parse_expression(std::string_view text);

std::string complex_json(const CellComplex& X);

// {"cells":[{"name","dim","minus":[..],"plus":[..]}],"composites":[{"left","right","k","result"}]}
std::string table_json(const TableStructure& t);
TableStructure parse_table(std::string_view text);

// A matching family: "base" (optional when supplied separately) and exactly one of
// "cells" naming table cells, "map" (into the target) or "comap" (from the target onto the base).
struct FamilySpec {
  PosetPtr base;
  std::map<std::string, std::string> cells;
  std::map<std::string, std::string> map;
  std::map<std::string, std::string> comap;
};
FamilySpec parse_family(std::string_view text, const std::string& base_dir = ".");

// Hasse diagram: solid edges for input faces, dashed for output faces, one rank per dimension.
std::string dot(const OgPoset& P, const std::string& name = "P");

}  // namespace forge
