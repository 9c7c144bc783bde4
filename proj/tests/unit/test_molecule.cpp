#include "forge/corpus.hpp"
#include "forge/error.hpp"
#include "forge/iso.hpp"
#include "forge/molecule.hpp"
#include "forge/random.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace forge;

TEST_CASE("globes have 2n+1 elements") {
  for (int n = 0; n <= 4; ++n) CHECK(globe(n)->P().size() == static_cast<std::size_t>(2 * n + 1));
  CHECK(arrow_chain(3)->P().size() == 7);
}

TEST_CASE("recognition agrees with the inductive definition") {
  for (const Fixture& f : corpus()) {
    if (f.poset->size() > 14) continue;
    CAPTURE(f.name);
    CHECK(static_cast<bool>(is_molecule(*f.poset)) == oracle::is_molecule(*f.poset));
  }
  MoleculeGenerator gen(seed_from_env(11), 3, 14);
  for (int i = 0; i < 40; ++i) {
    Cert c = gen.molecule();
    CAPTURE(c->P().size());
    CHECK(oracle::is_molecule(c->P()));
    CHECK(is_molecule(c->P()));
  }
}

TEST_CASE("the two arrows with a common target are refuted") {
  Recognition r = is_molecule(two_arrows_common_target());
  CHECK_FALSE(r);
  CHECK_FALSE(r.reason.empty());
  CHECK(is_rdc(two_arrows_common_target()));
}

TEST_CASE("pasting and rewriting") {
  Cert h = paste(globe(2), globe(2), 0);
  CHECK(h->P().size() == 9);
  CHECK(paste(globe(2), globe(2), 1)->P().size() == 7);
  // Pasting with a lower-dimensional molecule along its whole boundary is a unit law.
  CHECK(paste(globe(2), globe(1), 1)->P().size() == 5);
  CHECK_THROWS_AS(paste(globe(2), arrow_chain(2), 1), Error);
  CHECK_THROWS_AS(rewrite(h, h), Error);  // not round
  Cert comp = rewrite(arrow_chain(2), globe(1));
  CHECK(is_atom(comp->P()));
  CHECK(comp->P().size() == 7);
  CHECK(cert_consistent(comp));
  CHECK(cert_consistent(h));
}

TEST_CASE("layerings of the interchange molecule") {
  auto P = share(interchange());
  Recognizer R(P);
  CHECK(R.recognize());
  // a and b both run between the same pair of points, so there is no 0-layering.
  CHECK_THROWS_AS(R.layerings(P->all(), 0), Error);
  const auto l1 = R.layerings(P->all(), 1);
  CHECK(!l1.empty());
  for (const auto& l : l1) CHECK(l.layers.size() == 4);
  CHECK(layering_dimension(*P) <= 1);
}

TEST_CASE("isomorphisms of molecules are unique") {
  for (const Fixture& f : corpus()) {
    if (f.cls == FixtureClass::Rdc || f.poset->size() > 12) continue;
    CAPTURE(f.name);
    CHECK(count_isos(*f.poset, *f.poset, 5) == 1);
    CHECK(oracle::count_isos(*f.poset, *f.poset) == 1);
  }
  // Not molecules, hence more symmetric.
  OgPoset two = OgPoset::validate({{"a", 0, {}, {}}, {"b", 0, {}, {}}, {"c", 0, {}, {}}, {"d", 0, {}, {}},
                                   {"f", 1, {"a"}, {"b"}}, {"g", 1, {"c"}, {"d"}}});
  CHECK(count_isos(two, two, 10) == 2);
  CHECK(oracle::count_isos(two, two) == 2);
}

TEST_CASE("pasting at a submolecule") {
  // A 2-cell whiskered by an edge, glued onto the output vertex.
  Cert whisk = paste(globe(2), globe(1), 0);
  CHECK(whisk->P().size() == 7);
  // A fresh 2-cell glued onto the first edge of a 2-arrow.
  Cert arrow = arrow_chain(2);
  std::map<std::string, std::string> iota = {{"0-", "v0"}, {"0+", "v1"}, {"1-", "e1"}};
  PasteAtResult r = paste_at(globe(2), arrow, 1, iota, PasteSide::Output);
  CHECK(r.cert->P().size() == 7);
  CHECK(is_molecule(r.cert->P()));
  CHECK_THROWS_AS(paste_at(globe(2), arrow, 1, {{"0-", "v0"}}, PasteSide::Output), Error);
}

TEST_CASE("exchange holds up to a unique isomorphism") {
  MoleculeGenerator gen(seed_from_env(5), 3, 20);
  for (int i = 0; i < 20; ++i) {
    auto q = gen.exchange_quadruple();
    REQUIRE(q);
    Cert lhs = paste(paste(q->u, q->u2, q->l), paste(q->v, q->v2, q->l), q->k);
    Cert rhs = paste(paste(q->u, q->v, q->k), paste(q->u2, q->v2, q->k), q->l);
    CHECK(count_isos(lhs->P(), rhs->P(), 3) == 1);
  }
}

TEST_CASE("globe subdivision of a round molecule") {
  const OgPoset A = arrow_chain(2)->P();
  Comap c = globe_subdivision(A);
  CHECK(c.target->dim() == 1);
  CHECK(c.target->size() == 3);
}
