#include "forge/io.hpp"

#include "forge/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace forge {

using nlohmann::json;

namespace {

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

template <typename T>
T field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::ParseError, std::string(what) + " lacks \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(Errc::ParseError, std::string(what) + ": \"" + key + "\" has the wrong type");
  }
}

json poset_to(const OgPoset& P) {
  json elems = json::array();
  for (const RawElement& e : P.raw()) {
    std::vector<std::string> minus = e.minus, plus = e.plus;
    std::sort(minus.begin(), minus.end());
    std::sort(plus.begin(), plus.end());
    elems.push_back({{"id", e.id}, {"dim", e.dim}, {"faces", {{"-", minus}, {"+", plus}}}});
  }
  return {{"elements", elems}};
}

OgPoset poset_from(const json& j) {
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array()) {
    throw Error(Errc::ParseError, "a poset needs an \"elements\" array");
  }
  std::vector<RawElement> raw;
  for (const json& e : j["elements"]) {
    RawElement r;
    r.id = field<std::string>(e, "id", "element");
    r.dim = field<int>(e, "dim", "element");
    if (e.contains("faces")) {
      const json& f = e["faces"];
      if (!f.is_object()) throw Error(Errc::ParseError, "faces of '" + r.id + "' must be an object");
      for (auto& [key, list] : f.items()) {
        if (key != "-" && key != "+") throw Error(Errc::ParseError, "face sign must be \"-\" or \"+\"");
        try {
          (key == "-" ? r.minus : r.plus) = list.get<std::vector<std::string>>();
        } catch (const json::exception&) {
          throw Error(Errc::ParseError, "faces of '" + r.id + "' must be id lists");
        }
      }
    }
    raw.push_back(std::move(r));
  }
  return OgPoset::validate(std::move(raw));
}

PosetPtr poset_ref(const json& j, const std::string& base_dir) {
  if (j.is_string()) {
    std::filesystem::path p = j.get<std::string>();
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    return share(load_poset(p.string()));
  }
  return share(poset_from(j));
}

std::map<std::string, std::string> assignment_from(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  try {
    return j[key].get<std::map<std::string, std::string>>();
  } catch (const json::exception&) {
    throw Error(Errc::ParseError, std::string("\"") + key + "\" must map ids to ids");
  }
}

json cert_to(const Cert& c) {
  switch (c->kind) {
    case CertKind::Point:
      return {{"kind", "point"}};
    case CertKind::Paste:
      return {{"kind", "paste"}, {"k", c->k}, {"left", cert_to(c->left)}, {"right", cert_to(c->right)}};
    case CertKind::Rewrite:
      return {{"kind", "rewrite"}, {"input", cert_to(c->left)}, {"output", cert_to(c->right)}};
  }
  return {};
}

Cert cert_from(const json& j) {
  const auto kind = field<std::string>(j, "kind", "certificate node");
  if (kind == "point") return point();
  if (kind == "paste") {
    return paste(cert_from(j.at("left")), cert_from(j.at("right")), field<int>(j, "k", "paste node"));
  }
  if (kind == "rewrite") {
    if (!j.contains("input") || !j.contains("output")) throw Error(Errc::ParseError, "rewrite node needs input and output");
    return rewrite(cert_from(j["input"]), cert_from(j["output"]));
  }
  throw Error(Errc::ParseError, "unknown certificate node '" + kind + "'");
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write '" + path + "'");
  out << text;
}

std::string poset_json(const OgPoset& P) { return poset_to(P).dump(2) + "\n"; }

OgPoset parse_poset(std::string_view text) { return poset_from(parse_text(text)); }

OgPoset load_poset(const std::string& path) { return parse_poset(read_file(path)); }

std::string map_json(const PosetMap& f) {
  json j;
  j["source"] = poset_to(*f.source);
  j["target"] = poset_to(*f.target);
  j["assignment"] = assignment_ids(f.source, f.target, f.assign);
  j["class"] = map_class_name(f.declared);
  return j.dump(2) + "\n";
}

PosetMap parse_map(std::string_view text, const std::string& base_dir) {
  const json j = parse_text(text);
  if (!j.contains("source") || !j.contains("target")) throw Error(Errc::ParseError, "a map needs source and target");
  PosetPtr s = poset_ref(j["source"], base_dir);
  PosetPtr t = poset_ref(j["target"], base_dir);
  MapClass cls = MapClass::Plain;
  if (j.contains("class")) cls = parse_map_class(field<std::string>(j, "class", "map"));
  return map_from_ids(s, t, assignment_from(j, "assignment"), cls);
}

std::string comap_json(const Comap& c) {
  json j;
  j["source"] = poset_to(*c.source);
  j["target"] = poset_to(*c.target);
  j["assignment"] = assignment_ids(c.source, c.target, c.assign);
  return j.dump(2) + "\n";
}

Comap parse_comap(std::string_view text, const std::string& base_dir) {
  const json j = parse_text(text);
  if (!j.contains("source") || !j.contains("target")) throw Error(Errc::ParseError, "a comap needs source and target");
  PosetPtr s = poset_ref(j["source"], base_dir);
  PosetPtr t = poset_ref(j["target"], base_dir);
  const PosetMap f = map_from_ids(s, t, assignment_from(j, "assignment"));
  return Comap{f.source, f.target, f.assign};
}

std::string cert_json(const Cert& c) {
  json j = cert_to(c);
  j["poset"] = poset_to(c->P());
  return j.dump(2) + "\n";
}

Cert parse_cert(std::string_view text) { return cert_from(parse_text(text)); }

namespace {

struct ExprParser {
  std::string_view s;
  std::size_t i = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::ParseError, what + " at offset " + std::to_string(i) + " of '" + std::string(s) + "'");
  }
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  void expect(char c) {
    skip();
    if (i >= s.size() || s[i] != c) fail(std::string("expected '") + c + "'");
    ++i;
  }
  std::string word() {
    skip();
    const std::size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    if (start == i) fail("expected a name");
    return std::string(s.substr(start, i - start));
  }
  int number() {
    const std::string w = word();
    if (!std::all_of(w.begin(), w.end(), [](unsigned char c) { return std::isdigit(c); })) fail("expected a number");
    return std::stoi(w);
  }
  Cert expr() {
    const std::string w = word();
    if (w == "point") return point();
    if (w == "paste") {
      expect('(');
      Cert a = expr();
      expect(',');
      Cert b = expr();
      expect(',');
      const int k = number();
      expect(')');
      return paste(a, b, k);
    }
    if (w == "rewrite") {
      expect('(');
      Cert a = expr();
      expect(',');
      Cert b = expr();
      expect(')');
      return rewrite(a, b);
    }
    if (w.size() > 1 && (w[0] == 'g' || w[0] == 'a') &&
        std::all_of(w.begin() + 1, w.end(), [](unsigned char c) { return std::isdigit(c); })) {
      const int n = std::stoi(w.substr(1));
      return w[0] == 'g' ? globe(n) : arrow_chain(n);
    }
    fail("unknown term '" + w + "'");
  }
};

}  // namespace

Cert parse_expression(std::string_view text) {
  ExprParser p{text};
  Cert c = p.expr();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  return c;
}

std::string complex_json(const CellComplex& X) {
  json gens = json::array();
  for (const Generator& g : X.generators()) {
    json attach = json::object();
    for (std::size_t y = 0; y < g.shape->size(); ++y) attach[g.shape->id(static_cast<int>(y))] = X[g.attach[y]].name;
    gens.push_back({{"name", g.name}, {"dim", g.dim}, {"stage", g.stage}, {"shape", poset_to(*g.shape)}, {"attach", attach}});
  }
  json j;
  j["generators"] = gens;
  j["counts"] = X.counts();
  return j.dump(2) + "\n";
}

std::string table_json(const TableStructure& t) {
  json cells = json::array();
  auto names = [&](const std::vector<int>& hs) {
    std::vector<std::string> out;
    for (int h : hs) out.push_back(t.cells()[h].name);
    return out;
  };
  for (const auto& c : t.cells()) {
    cells.push_back({{"name", c.name}, {"dim", c.dim}, {"minus", names(c.minus)}, {"plus", names(c.plus)}});
  }
  json comps = json::array();
  for (const auto& [key, r] : t.composites()) {
    auto [a, b, k] = key;
    comps.push_back({{"left", t.cells()[a].name}, {"right", t.cells()[b].name}, {"k", k}, {"result", t.cells()[r].name}});
  }
  return json{{"cells", cells}, {"composites", comps}}.dump(2) + "\n";
}

TableStructure parse_table(std::string_view text) {
  const json j = parse_text(text);
  if (!j.contains("cells") || !j["cells"].is_array()) throw Error(Errc::ParseError, "a table needs a \"cells\" array");
  TableStructure t;
  // Boundary names may refer to cells listed later, so register names first.
  std::vector<TableStructure::Cell> pending;
  std::map<std::string, int> index;
  for (const json& c : j["cells"]) {
    TableStructure::Cell cell;
    cell.name = field<std::string>(c, "name", "cell");
    cell.dim = field<int>(c, "dim", "cell");
    if (!index.emplace(cell.name, static_cast<int>(pending.size())).second) {
      throw Error(Errc::DuplicateId, "duplicate cell '" + cell.name + "'");
    }
    pending.push_back(std::move(cell));
  }
  auto lookup = [&](const std::string& n) {
    auto it = index.find(n);
    if (it == index.end()) throw Error(Errc::UnknownId, "unknown cell '" + n + "'");
    return it->second;
  };
  std::size_t i = 0;
  for (const json& c : j["cells"]) {
    auto& cell = pending[i++];
    for (const auto& n : c.value("minus", std::vector<std::string>{})) cell.minus.push_back(lookup(n));
    for (const auto& n : c.value("plus", std::vector<std::string>{})) cell.plus.push_back(lookup(n));
    t.add_cell(cell);
  }
  if (j.contains("composites")) {
    for (const json& c : j["composites"]) {
      t.set_composite(lookup(field<std::string>(c, "left", "composite")), lookup(field<std::string>(c, "right", "composite")),
                      field<int>(c, "k", "composite"), lookup(field<std::string>(c, "result", "composite")));
    }
  }
  return t;
}

FamilySpec parse_family(std::string_view text, const std::string& base_dir) {
  const json j = parse_text(text);
  FamilySpec f;
  if (j.contains("base")) f.base = poset_ref(j["base"], base_dir);
  f.cells = assignment_from(j, "cells");
  f.map = assignment_from(j, "map");
  f.comap = assignment_from(j, "comap");
  if (f.cells.empty() + f.map.empty() + f.comap.empty() != 2) {
    throw Error(Errc::ParseError, "a family gives exactly one of \"cells\", \"map\" or \"comap\"");
  }
  return f;
}

std::string dot(const OgPoset& P, const std::string& name) {
  std::vector<int> order(P.size());
  for (std::size_t x = 0; x < P.size(); ++x) order[x] = static_cast<int>(x);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return P.id(a) < P.id(b); });
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream o;
  o << "digraph " << quote(name) << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int d = 0; d <= P.dim(); ++d) {
    o << "  { rank=same;";
    for (int x : order) {
      if (P.dim(x) == d) o << ' ' << quote(P.id(x)) << ';';
    }
    o << " }\n";
  }
  for (int x : order) {
    for (Sign a : kSigns) {
      std::vector<std::string> faces;
      for (int y : P.faces(x, a)) faces.push_back(P.id(y));
      std::sort(faces.begin(), faces.end());
      for (const auto& y : faces) {
        o << "  " << quote(y) << " -> " << quote(P.id(x)) << (a == Sign::Minus ? " [style=solid];\n" : " [style=dashed];\n");
      }
    }
  }
  o << "}\n";
  return o.str();
}

}  // namespace forge
