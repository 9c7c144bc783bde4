#include "forge/complex.hpp"
#include "forge/corpus.hpp"
#include "forge/error.hpp"
#include "forge/maps.hpp"
#include "forge/molecule.hpp"

#include <doctest.h>

using namespace forge;

TEST_CASE("an RDC presents itself") {
  for (const char* name : {"globe2", "interchange", "two-arrows-common-target", "gray-square"}) {
    CAPTURE(name);
    auto P = find_fixture(name)->poset;
    CellComplex X = from_rdc(P);
    CHECK(X.size() == P->size());
    CHECK(check_complex(X));
    CHECK(X.dim() == P->dim());
  }
}

TEST_CASE("walking equivalence counts double from dimension two") {
  auto O1 = globe(1)->poset;
  Localisation l4 = walking_equivalence(O1, 4);
  CHECK(l4.complex.counts() == std::vector<std::size_t>{2, 3, 6, 12});
  CHECK(l4.next_dim_count == 24);
  CHECK(check_complex(l4.complex));

  Localisation l6 = walking_equivalence(O1, 6);
  const auto c = l6.complex.counts();
  REQUIRE(c.size() == 6);
  for (std::size_t k = 1; k < c.size(); ++k) CHECK(c[k] == 3 * (std::size_t{1} << (k - 1)));

  CHECK(walking_equivalence(O1, 3).complex.counts() == std::vector<std::size_t>{2, 3, 6});
  CHECK(walking_equivalence(globe(2)->poset, 4).complex.counts() == std::vector<std::size_t>{2, 2, 3, 6});
  CHECK_THROWS_AS(walking_equivalence(globe(0)->poset, 3), Error);
}

TEST_CASE("localisation names its generators") {
  Localisation l = walking_equivalence(globe(1)->poset, 4);
  const CellComplex& X = l.complex;
  const int a = X.find("1");
  REQUIRE(a >= 0);
  CHECK(X.find("1^L") >= 0);
  CHECK(X.find("1^R") >= 0);
  CHECK(X.find("H_L(1)") >= 0);
  CHECK(X.find("H_R(1)") >= 0);
  CHECK(X[X.find("H_L(1)")].dim == 2);
  CHECK(X.find("nope") == -1);
}

TEST_CASE("weak composites") {
  auto A = arrow_chain(2)->poset;
  WeakComposite w = weak_composite_shape(A, 3);
  REQUIRE(w.composite >= 0);
  REQUIRE(w.witness >= 0);
  const CellComplex& X = w.loc.complex;
  CHECK(X[w.composite].dim == 1);
  CHECK(X[w.witness].dim == 2);
  CHECK(check_complex(X));
  CHECK_THROWS_AS(weak_composite_shape(find_fixture("horizontal-pair")->poset, 3), Error);
}

TEST_CASE("basis, skeleton and truncation") {
  auto P = share(interchange());
  CellComplex X = from_rdc(P);
  const auto basis = polygraph_basis(X);
  REQUIRE(basis.size() == 3);
  CHECK(basis[0].size() == 3);
  CHECK(basis[1].size() == 6);
  CHECK(basis[2].size() == 4);
  CHECK(skeleton(X, 1).size() == 9);
  Truncation t = truncate(X, 1);
  CHECK(t.complex.size() == 9);
  // a, b identify f0 ∼ f1 ∼ f2; c, d identify g0 ∼ g1 ∼ g2.
  std::size_t nontrivial = 0;
  for (const auto& cls : t.classes) nontrivial += cls.size() > 1;
  CHECK(nontrivial == 2);
}
