#include "forge/complex.hpp"
#include "forge/corpus.hpp"
#include "forge/error.hpp"
#include "forge/io.hpp"
#include "forge/iso.hpp"
#include "forge/maps.hpp"
#include "forge/molcat.hpp"

#include <doctest.h>

using namespace forge;

TEST_CASE("posets round-trip through JSON") {
  for (const Fixture& f : corpus()) {
    CAPTURE(f.name);
    const std::string text = poset_json(*f.poset);
    OgPoset back = parse_poset(text);
    CHECK(back == *f.poset);
    CHECK(poset_json(back) == text);
  }
}

TEST_CASE("malformed posets") {
  CHECK_THROWS_AS(parse_poset(""), Error);
  CHECK_THROWS_AS(parse_poset("{\"elements\": 3}"), Error);
  try {
    parse_poset(R"({"elements":[{"id":"e","dim":1,"faces":{"-":["x"],"+":["y"]}},{"id":"x","dim":0}]})");
    FAIL("dangling face accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DanglingFace);
  }
  try {
    parse_poset(R"({"elements":[{"id":"x","dim":0},{"id":"x","dim":0}]})");
    FAIL("duplicate id accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DuplicateId);
  }
}

TEST_CASE("certificates round-trip") {
  for (const Fixture& f : corpus()) {
    if (!f.cert) continue;
    CAPTURE(f.name);
    Cert back = parse_cert(cert_json(f.cert));
    CHECK(find_iso(back->P(), f.cert->P()));
  }
}

TEST_CASE("expressions") {
  CHECK(parse_expression("point")->P().size() == 1);
  CHECK(parse_expression("g2")->P().size() == 5);
  CHECK(parse_expression("a3")->P().size() == 7);
  Cert c = parse_expression("paste(rewrite(a2,g1),g1,0)");
  CHECK(c->P().dim() == 2);
  CHECK(find_iso(parse_expression("rewrite(a2,g1)")->P(), *find_fixture("composition-atom")->poset));
  CHECK_THROWS_AS(parse_expression("paste(g1,g1"), Error);
  CHECK_THROWS_AS(parse_expression("h2"), Error);
  CHECK_THROWS_AS(parse_expression("paste(g2,g2,0)x"), Error);
}

TEST_CASE("maps and comaps round-trip") {
  auto P = globe(2)->poset;
  PosetMap id = identity_map(P);
  PosetMap back = parse_map(map_json(id));
  CHECK(back.assign == id.assign);
  Comap c = globe_subdivision(*arrow_chain(2)->poset);
  Comap cb = parse_comap(comap_json(c));
  CHECK(cb.assign == c.assign);
  CHECK(check_comap(cb));
}

TEST_CASE("tables round-trip") {
  TableStructure t = broken_interchange_table();
  TableStructure back = parse_table(table_json(t));
  CHECK(back.size() == t.size());
  CHECK(back.composites().size() == t.composites().size());
  CHECK(table_json(back) == table_json(t));
}

TEST_CASE("families") {
  FamilySpec s = parse_family(R"({"cells":{"x":"x"}})");
  CHECK(s.cells.size() == 1);
  CHECK(s.base == nullptr);
  CHECK_THROWS_AS(parse_family(R"({"cells":{},"map":{}})"), Error);
  CHECK_THROWS_AS(parse_family(R"({})"), Error);
}

TEST_CASE("dot output lists every covering") {
  const std::string d = dot(*globe(1)->poset, "O1");
  CHECK(d.find("digraph \"O1\"") != std::string::npos);
  CHECK(d.find("rankdir=BT") != std::string::npos);
  CHECK(d.find("dashed") != std::string::npos);
}

TEST_CASE("complexes serialize their counts") {
  const std::string j = complex_json(walking_equivalence(globe(1)->poset, 4).complex);
  CHECK(j.find("\"counts\"") != std::string::npos);
  CHECK(j.find("H_L(1)") != std::string::npos);
}
