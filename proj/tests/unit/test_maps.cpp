#include "forge/corpus.hpp"
#include "forge/error.hpp"
#include "forge/maps.hpp"
#include "forge/shapes.hpp"

#include <doctest.h>

using namespace forge;

TEST_CASE("identities belong to every class") {
  for (const Fixture& f : corpus()) {
    if (f.poset->size() > 30) continue;
    CAPTURE(f.name);
    PosetMap id = identity_map(f.poset);
    CHECK(check_map(id));
    CHECK(check_cartesian(id));
    CHECK(check_inclusion(id));
    CHECK(check_local_embedding(id));
    CHECK(check_comap(identity_comap(f.poset)));
  }
}

TEST_CASE("folding two edges onto one is not a map") {
  auto A = arrow_chain(2)->poset;
  auto O1 = globe(1)->poset;
  PosetMap fold = map_from_ids(A, O1, {{"v0", "0-"}, {"v1", "0+"}, {"v2", "0+"}, {"e1", "1"}, {"e2", "1"}});
  CHECK_FALSE(check_map(fold));
  CHECK_THROWS_AS(check_cartesian(fold), Error);
}

TEST_CASE("boundary inclusions are inclusions and cartesian") {
  auto O2 = globe(2)->poset;
  const Restriction r = restrict_to(*O2, boundary(*O2, 1, Sign::Minus));
  PosetMap inc{r.poset, O2, r.to_parent, MapClass::Inclusion};
  CHECK(check_inclusion(inc));
  CHECK(check_cartesian(inc));
  CHECK(check_declared(inc));
}

TEST_CASE("the collapse of a cylinder onto its base is cartesian") {
  for (const char* name : {"globe1", "globe2", "composition-atom", "arrow2"}) {
    CAPTURE(name);
    auto f = *find_fixture(name);
    Cylinder c = cylinder(f.poset, f.poset->none());
    CHECK(check_cartesian(c.tau));
    const Subset bd = boundary(*f.poset, f.poset->all(), f.poset->dim() - 1);
    Cylinder u = cylinder(f.poset, bd);
    CHECK(check_cartesian(u.tau));
    // τ relative to the boundary drops dimension on the top cell, so it is no local embedding.
    CHECK_FALSE(check_local_embedding(u.tau));
  }
}

TEST_CASE("non order-preserving functions are rejected") {
  auto O1 = globe(1)->poset;
  PosetMap swap = map_from_ids(O1, O1, {{"0-", "1"}, {"0+", "0+"}, {"1", "0-"}});
  CHECK_THROWS_AS(check_map(swap), Error);
  CHECK_FALSE(check_order_preserving(swap));
}

TEST_CASE("composition of maps") {
  auto O2 = globe(2)->poset;
  PosetMap id = identity_map(O2);
  PosetMap twice = compose(id, id);
  CHECK(twice.assign == id.assign);
}

TEST_CASE("comap of a subdivision of the arrow") {
  auto A = arrow_chain(2)->poset;
  Comap c = globe_subdivision(*A);
  CHECK(check_comap(c));
  // s(1) is all of the arrow chain.
  const Subset img = subdiv_image(c, c.target->all());
  CHECK(img.count() == c.source->size());
}
