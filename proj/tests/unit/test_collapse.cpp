#include "forge/collapse.hpp"
#include "forge/constructions.hpp"
#include "forge/corpus.hpp"
#include "forge/error.hpp"
#include "forge/iso.hpp"
#include "forge/maps.hpp"
#include "forge/random.hpp"

#include <doctest.h>

using namespace forge;

TEST_CASE("collapsible subsets of the arrow") {
  auto O1 = globe(1)->poset;
  const auto minus = collapsible_subsets(*O1, Sign::Minus);
  const auto plus = collapsible_subsets(*O1, Sign::Plus);
  CHECK(minus.size() == 2);
  CHECK(plus.size() == 2);
  CHECK(is_collapsible(*O1, subset_of(*O1, {"0-"}), Sign::Minus));
  CHECK_FALSE(is_collapsible(*O1, subset_of(*O1, {"0-"}), Sign::Plus));
  CHECK_THROWS_AS(is_collapsible(*O1, subset_of(*O1, {"1"}), Sign::Minus), Error);
}

TEST_CASE("collapsing the input vertex of a globe") {
  auto O2 = globe(2)->poset;
  // Nothing outside {0-} has its 0-target in it, so the collapse only renames the vertex.
  Collapse c = collapse(O2, subset_of(*O2, {"0-"}), Sign::Minus);
  CHECK(c.quotient->size() == O2->size());
  CHECK(c.quotient->id(c.bullet) == "*");
  CHECK(check_map(c.p));
  CHECK(pushout_check(O2, subset_of(*O2, {"0-"}), Sign::Minus));
  // Collapsing the whole poset leaves a point.
  Collapse all = collapse(O2, O2->all(), Sign::Minus);
  CHECK(all.quotient->size() == 1);
  CHECK_THROWS_AS(collapse(O2, subset_of(*O2, {"0+"}), Sign::Minus), Error);
}

TEST_CASE("every collapse of a small fixture is a molecule with boundaries preserved") {
  for (const Fixture& f : corpus()) {
    if (f.cls == FixtureClass::Rdc || f.poset->size() > 12) continue;
    const OgPoset& U = *f.poset;
    for (Sign beta : kSigns) {
      for (const Subset& K : collapsible_subsets(U, beta)) {
        CAPTURE(f.name);
        Collapse c = collapse(f.poset, K, beta);
        CHECK(is_molecule(*c.quotient));
        CHECK(check_map(c.p));
        CHECK(pushout_check(f.poset, K, beta));
        for (int k = 0; k <= U.dim(); ++k)
          for (Sign a : kSigns) CHECK(image(c.p, boundary(U, U.all(), k, a)) == boundary(*c.quotient, c.quotient->all(), k, a));
      }
    }
  }
}

TEST_CASE("paths from the 0-boundary") {
  auto P = share(interchange());
  for (std::size_t x = 0; x < P->size(); ++x) {
    if (P->dim(static_cast<int>(x)) != 0) continue;
    for (Sign a : kSigns) {
      PosetMap p = path_to_point(P, static_cast<int>(x), a);
      CHECK(check_inclusion(p));
    }
  }
}

TEST_CASE("suspension detection and desuspension") {
  CHECK(detect_suspension(globe(3)->P()));
  CHECK_FALSE(detect_suspension(arrow_chain(2)->P()));
  const OgPoset s = suspend(interchange());
  auto found = detect_suspension(s);
  REQUIRE(found);
  CHECK(find_iso(*found, interchange()));

  auto O3 = globe(3)->poset;
  Desuspension d = desuspend(O3, subset_of(*O3, {"0-"}), subset_of(*O3, {"0+"}));
  CHECK(d.V->dim() == 2);
  CHECK(d.V->size() == 5);
  CHECK(check_map(d.q));

  MoleculeGenerator gen(seed_from_env(21), 3, 20);
  for (int i = 0; i < 10; ++i) {
    Cert u = gen.molecule();
    auto su = share(suspend(u->P()));
    Desuspension back = desuspend(su, subset_of(*su, {"bot-"}), subset_of(*su, {"bot+"}));
    CHECK(count_isos(*back.V, u->P(), 3) == 1);
  }
}
