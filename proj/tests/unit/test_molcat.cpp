#include "forge/corpus.hpp"
#include "forge/error.hpp"
#include "forge/molcat.hpp"
#include "forge/random.hpp"

#include <doctest.h>

using namespace forge;

TEST_CASE("cells of Mol(P) are identified up to shape isomorphism") {
  auto P = share(interchange());
  MolStructure C(P);
  const auto atoms = atoms_in(P);
  CHECK(atoms.size() == P->size());
  const int a = C.intern(atoms[static_cast<std::size_t>(P->index("a"))]);
  const int again = C.intern(atoms[static_cast<std::size_t>(P->index("a"))]);
  CHECK(a == again);
  CHECK(C.name(a) == "a");
  CHECK(C.dim(a) == 2);
  // ∂₁⁺a is the edge f1.
  CHECK(C.name(C.boundary(a, 1, Sign::Plus)) == "f1");
  CHECK(C.boundary(a, 2, Sign::Plus) == a);
}

TEST_CASE("composition in Mol(P) with units") {
  auto P = share(interchange());
  MolStructure C(P);
  auto at = [&](const char* id) { return C.intern(atoms_in(P)[static_cast<std::size_t>(P->index(id))]); };
  const int a = at("a"), b = at("b"), c = at("c"), g0 = at("g0"), f0 = at("f0");
  auto ab = C.compose(a, b, 1);
  REQUIRE(ab);
  CHECK(C.dim(*ab) == 2);
  CHECK_FALSE(C.compose(b, a, 1));
  auto ac = C.compose(a, c, 0);
  REQUIRE(ac);
  // Whiskering by a lower-dimensional cell.
  auto ag = C.compose(a, g0, 0);
  REQUIRE(ag);
  CHECK(C.boundary(*ag, 1, Sign::Minus) == *C.compose(f0, g0, 0));
  // Interchange holds in Mol(P).
  auto lhs = C.compose(*C.compose(a, c, 0), *C.compose(b, at("d"), 0), 1);
  auto rhs = C.compose(*C.compose(a, b, 1), *C.compose(c, at("d"), 1), 0);
  REQUIRE(lhs);
  REQUIRE(rhs);
  CHECK(*lhs == *rhs);
}

TEST_CASE("tables from molecules") {
  auto P = share(interchange());
  TableStructure t = TableStructure::from_molecules(P);
  CHECK(t.find("a") >= 0);
  CHECK(t.find("(a c)") >= 0);
  CHECK(t.find("missing") == -1);
  const int a = t.find("a"), c = t.find("c");
  auto ac = t.compose(a, c, 0);
  REQUIRE(ac);
  CHECK(t.name(*ac) == "(a c)");
  TableStructure sk = t.skeleton(1);
  for (const auto& cell : sk.cells()) CHECK(cell.dim <= 1);
  TableStructure tr = t.truncate(1);
  CHECK(tr.find("f0") >= 0);
  CHECK(tr.size() < sk.size());
}

TEST_CASE("amalgamation over Mol(P)") {
  auto P = share(interchange());
  MolStructure C(P);
  MatchingFamily F = family_from_map(PosetMap{P, P, [&] {
                                                std::vector<int> v(P->size());
                                                for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
                                                return v;
                                              }(),
                                              MapClass::Inclusion},
                                     C);
  Amalgamation am = amalgamate(F, C);
  CHECK(am.ok);
  REQUIRE(am.whole >= 0);
  CHECK(C.dim(am.whole) == 2);
  AmalgamateOptions rev;
  rev.reverse_order = true;
  Amalgamation back = amalgamate(F, C, rev);
  CHECK(back.ok);
  CHECK(back.whole == am.whole);
}

TEST_CASE("the broken interchange table is caught") {
  TableStructure t = broken_interchange_table();
  auto P = share(interchange());
  MatchingFamily F{P, {}};
  for (std::size_t x = 0; x < P->size(); ++x) F.cells.push_back(t.find(P->id(static_cast<int>(x))));
  Amalgamation am = amalgamate(F, t);
  CHECK_FALSE(am.ok);
  CHECK(am.failure.find("disagree") != std::string::npos);
  CHECK(am.where.any());
}

TEST_CASE("incompatible families are rejected") {
  auto P = share(interchange());
  TableStructure t = TableStructure::from_molecules(P);
  MatchingFamily F{P, {}};
  for (std::size_t x = 0; x < P->size(); ++x) F.cells.push_back(t.find(P->id(static_cast<int>(x))));
  F.cells[static_cast<std::size_t>(P->index("a"))] = t.find("c");
  CHECK_THROWS_AS(amalgamate(F, t), Error);
}

TEST_CASE("subdivision families amalgamate") {
  MoleculeGenerator gen(seed_from_env(5), 3, 24);
  for (int i = 0; i < 5; ++i) {
    AtomSubdivision s = gen.subdivide(gen.atom(gen.uniform(1, 2)));
    MolStructure C(s.c.source);
    MatchingFamily F = family_from_comap(s.c, C);
    Amalgamation am = amalgamate(F, C);
    CHECK(am.ok);
    REQUIRE(am.whole >= 0);
    // The amalgam of the whole atom is all of the fine molecule.
    CHECK(C.get(am.whole).u.source->size() == s.c.source->size());
  }
}

TEST_CASE("stricter check") {
  const auto shapes = pasting_shapes(2, 9);
  CHECK(!shapes.empty());
  for (const Cert& s : shapes) CHECK(s->P().dim() <= 2);
  MolStructure C(share(interchange()));
  StricterReport ok = stricter_check(C, 2, 9);
  CHECK(ok.violations.empty());
  CHECK(ok.families > 0);
  TableStructure broken = broken_interchange_table();
  StricterReport bad = stricter_check(broken, 2, 9);
  CHECK_FALSE(bad.violations.empty());
}
