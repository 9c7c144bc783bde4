#include "forge/error.hpp"
#include "forge/iso.hpp"
#include "forge/maps.hpp"
#include "forge/random.hpp"

#include <doctest.h>

#include "oracles.hpp"

using namespace forge;

TEST_CASE("generated molecules are molecules") {
  MoleculeGenerator gen(seed_from_env(1), 3, 16);
  for (int i = 0; i < 40; ++i) {
    Cert c = gen.molecule();
    CHECK(cert_consistent(c));
    CHECK(c->P().dim() <= 3);
    CHECK(c->P().size() <= 16 * 4);
    CHECK(oracle::is_molecule(c->P()));
  }
}

TEST_CASE("generation is deterministic") {
  MoleculeGenerator a(77), b(77);
  for (int i = 0; i < 10; ++i) CHECK(a.molecule()->P() == b.molecule()->P());
}

TEST_CASE("round molecules and atoms") {
  MoleculeGenerator gen(seed_from_env(2), 3, 30);
  for (int d = 1; d <= 3; ++d) {
    Cert r = gen.round_molecule(d);
    CHECK(r->P().dim() == d);
    CHECK(is_round(r->P()));
    CHECK(is_atom(gen.atom(d)->P()));
  }
}

TEST_CASE("grow keeps the input boundary") {
  MoleculeGenerator gen(seed_from_env(3), 3, 30);
  for (int i = 0; i < 10; ++i) {
    Cert B = gen.molecule(1);
    Cert W = gen.grow(B, 1);
    const OgPoset& P = W->P();
    auto r = restrict_to(P, boundary(P, 1, Sign::Minus));
    CHECK(find_iso(*r.poset, B->P()));
  }
}

TEST_CASE("exchange quadruples paste both ways") {
  MoleculeGenerator gen(seed_from_env(4), 3, 30);
  int seen = 0;
  for (int i = 0; i < 20 && seen < 5; ++i) {
    auto q = gen.exchange_quadruple();
    if (!q) continue;
    ++seen;
    Cert lhs = paste(paste(q->u, q->u2, q->l), paste(q->v, q->v2, q->l), q->k);
    Cert rhs = paste(paste(q->u, q->v, q->k), paste(q->u2, q->v2, q->k), q->l);
    CHECK(count_isos(lhs->P(), rhs->P(), 2) == 1);
  }
  CHECK(seen > 0);
}

TEST_CASE("subdivisions are comaps") {
  MoleculeGenerator gen(seed_from_env(6), 3, 30);
  for (int i = 0; i < 10; ++i) {
    AtomSubdivision s = gen.subdivide(gen.atom(gen.uniform(1, 3)));
    CHECK(check_comap(s.c));
    CHECK(is_round(s.fine->P()));
  }
}

TEST_CASE("tidy ids") {
  Cert c = tidy(globe(2));
  CHECK(c->P().find("v0"));
  CHECK(c->P().find("e0"));
  CHECK(c->P().find("f0"));
}
