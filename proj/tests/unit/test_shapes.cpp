#include "forge/corpus.hpp"
#include "forge/error.hpp"
#include "forge/iso.hpp"
#include "forge/maps.hpp"
#include "forge/shapes.hpp"

#include <doctest.h>

using namespace forge;

TEST_CASE("cylinder over the arrow is the Gray square") {
  auto O1 = globe(1)->poset;
  Cylinder c = cylinder(O1, O1->none());
  CHECK(c.poset->size() == 9);
  CHECK(find_iso(*c.poset, *find_fixture("gray-square")->poset));
  CHECK(check_cartesian(c.tau));
}

TEST_CASE("relative cylinders collapse K") {
  auto O1 = globe(1)->poset;
  Cylinder u = cylinder(O1, boundary(*O1, O1->all(), 0));
  // The unit on an arrow: two vertices, the edge twice, and the 2-cell.
  CHECK(u.poset->size() == 5);
  CHECK(is_atom(*u.poset));
  CHECK(is_round(*u.poset));
  CHECK_THROWS_AS(cylinder(O1, subset_of(*O1, {"1"})), Error);
}

TEST_CASE("inverted cylinders need K in the right boundary") {
  auto O1 = globe(1)->poset;
  for (Cylinder c : {lcyl(O1, subset_of(*O1, {"0+"})), rcyl(O1, subset_of(*O1, {"0-"})), lcyl(O1, O1->none())}) {
    CHECK(is_molecule(*c.poset));
    CHECK(is_round(*c.poset));
    CHECK(check_fibration(c.tau));
  }
  CHECK_THROWS_AS(lcyl(O1, subset_of(*O1, {"0-"})), Error);
  CHECK_THROWS_AS(rcyl(O1, subset_of(*O1, {"0+"})), Error);
}

TEST_CASE("invertor shapes are round molecules") {
  for (const char* base : {"globe1", "globe2", "composition-atom"}) {
    auto U = find_fixture(base)->poset;
    for (const std::string t : {"L", "R", "LL", "LR", "RL", "RR"}) {
      CAPTURE(base);
      CAPTURE(t);
      Invertor h = invertor(U, t);
      CHECK(is_molecule(*h.poset));
      CHECK(is_round(*h.poset));
      CHECK(h.poset->dim() == U->dim() + static_cast<int>(t.size()));
      CHECK(check_fibration(h.tau));
    }
  }
  CHECK_THROWS_AS(invertor(globe(1)->poset, "X"), Error);
  CHECK_THROWS_AS(invertor(find_fixture("horizontal-pair")->poset, "L"), Error);
}

TEST_CASE("substitution of the input edge of the 2-globe by a 2-arrow") {
  auto O2 = globe(2)->poset;
  const Restriction r = restrict_to(*O2, boundary(*O2, 1, Sign::Minus));
  PosetMap iota{r.poset, O2, r.to_parent, MapClass::Inclusion};
  Comap sub = globe_subdivision(arrow_chain(2)->P());
  // Re-target the comap at the boundary copy of O¹.
  auto iso = find_iso(*sub.target, *r.poset);
  REQUIRE(iso);
  for (int& y : sub.assign) y = (*iso)[y];
  sub.target = r.poset;
  Substitution s = substitute(iota, sub);
  CHECK(count_isos(*s.poset, *find_fixture("composition-atom")->poset, 3) == 1);
  CHECK(check_comap(s.c));
}

TEST_CASE("units and reverses") {
  auto O1 = globe(1)->poset;
  PosetMap id = identity_map(O1);
  PosetMap e = unit_shape(id);
  CHECK(e.source->dim() == 2);
  CHECK(check_map(e));
  CHECK(find_degeneracy(e));
  CHECK_FALSE(find_degeneracy(id));
  PosetMap rev = reverse(e);
  CHECK(check_map(rev));
  CHECK_THROWS_AS(reverse(id), Error);
}

TEST_CASE("marked horns") {
  auto O2 = globe(2)->poset;
  Subset marked = subset_of(*O2, {"2"});
  HornWitness w = marked_horn_check(O2, marked, O2->index("1-"), Sign::Minus);
  CHECK(w.ok);
  CHECK_THROWS_AS(marked_horn_check(O2, O2->none(), O2->index("1-"), Sign::Minus), Error);
}

TEST_CASE("subdivision cylinders and invertors are comaps") {
  auto A = arrow_chain(2)->poset;
  Comap c = globe_subdivision(*A);
  for (CylKind kind : {CylKind::Plain, CylKind::Left, CylKind::Right}) {
    CylinderSubdivision s = cyl_subdiv(c, c.target->none(), kind);
    CHECK(check_comap(s.c));
  }
  for (const std::string t : {"L", "R", "LR"}) CHECK(check_comap(invertor_subdiv(c, t).c));
}
