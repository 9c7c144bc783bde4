#include "forge/corpus.hpp"
#include "forge/error.hpp"
#include "forge/graded.hpp"
#include "forge/ogposet.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace forge;

namespace {

std::set<int> as_set(const Subset& U) {
  std::set<int> out;
  for (int x : members(U)) out.insert(x);
  return out;
}

bool has_violation(const std::vector<RawElement>& raw, Errc code) {
  try {
    OgPoset::validate(raw);
  } catch (const ValidationError& e) {
    for (const auto& v : e.violations())
      if (v.code == code) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("validation reports each broken invariant") {
  CHECK(has_violation({{"a", 0, {}, {}}, {"f", 1, {"a"}, {"b"}}}, Errc::DanglingFace));
  CHECK(has_violation({{"a", 0, {}, {}}, {"f", 2, {"a"}, {"a"}}}, Errc::BadGrading));
  CHECK(has_violation({{"a", 0, {}, {}}, {"b", 0, {}, {}}, {"f", 1, {"a", "b"}, {"a"}}}, Errc::OrientationOverlap));
  CHECK(has_violation({{"a", 0, {}, {}}, {"a", 0, {}, {}}}, Errc::DuplicateId));
  CHECK(has_violation({{"a", 0, {}, {}}, {"b", 0, {}, {}}, {"f", 1, {"a", "b"}, {}}}, Errc::BadGrading));
  // Both errors of one element are reported together.
  try {
    OgPoset::validate({{"a", 0, {}, {}}, {"f", 1, {"a", "zz"}, {}}});
    FAIL("accepted");
  } catch (const ValidationError& e) {
    CHECK(e.violations().size() >= 2);
  }
}

TEST_CASE("elements are ordered by dimension then id") {
  OgPoset P = OgPoset::validate({{"z", 0, {}, {}}, {"e", 1, {"z"}, {"a"}}, {"a", 0, {}, {}}});
  CHECK(P.id(0) == "a");
  CHECK(P.id(1) == "z");
  CHECK(P.id(2) == "e");
  CHECK_THROWS_AS(P.index("nope"), Error);
}

TEST_CASE("boundaries agree with the definition on every corpus poset") {
  for (const Fixture& f : corpus()) {
    const OgPoset& P = *f.poset;
    for (int k = -1; k <= P.dim() + 1; ++k) {
      for (Sign a : kSigns) {
        CAPTURE(f.name);
        CAPTURE(k);
        CHECK(as_set(boundary(P, P.all(), k, a)) == oracle::boundary(P, oracle::all(P), k, a));
      }
    }
  }
}

TEST_CASE("globe boundaries are globes") {
  const OgPoset O3 = globe(3)->P();
  for (int k = 0; k < 3; ++k)
    for (Sign a : kSigns) CHECK(boundary(O3, k, a).count() == static_cast<std::size_t>(2 * k + 1));
}

TEST_CASE("roundness") {
  CHECK(is_round(globe(3)->P()));
  CHECK(is_round(arrow_chain(3)->P()));
  CHECK_FALSE(is_round(paste(globe(2), globe(2), 0)->P()));
  // Two arrows into a common target: the boundary identity holds even though the poset is no molecule.
  CHECK(is_round(two_arrows_common_target()));
  for (const Fixture& f : corpus()) {
    CAPTURE(f.name);
    CHECK(is_round(*f.poset) == oracle::round(*f.poset, oracle::all(*f.poset)));
  }
}

TEST_CASE("closure and order") {
  const OgPoset O2 = globe(2)->P();
  CHECK(closure(O2, O2.index("1-")).count() == 3);
  CHECK(leq(O2, O2.index("0-"), O2.index("2")));
  CHECK_FALSE(leq(O2, O2.index("1-"), O2.index("1+")));
  CHECK(is_closed(O2, closure(O2, std::vector<std::string>{"1+"})));
  CHECK_FALSE(is_closed(O2, subset_of(O2, {"1+"})));
}

TEST_CASE("augmented posets are thin and diamond transitive") {
  for (const Fixture& f : corpus()) {
    if (f.poset->size() > 20) continue;
    CAPTURE(f.name);
    GradedPoset G = augment(*f.poset);
    CHECK(is_thin(G));
    CHECK(is_diamond_transitive(G).transitive);
  }
  GradedPoset B = broken_prism();
  CHECK(is_thin(B));
  CHECK_FALSE(is_diamond_transitive(B).transitive);
}

TEST_CASE("diamond action swaps the middle of a path") {
  GradedPoset G = augment(globe(1)->P());
  const int bot = G.index("⊥"), top = G.index("1");
  Diamond D = diamond_at(G, bot, top);
  Path p = {bot, D.mid1, top};
  Path q = diamond_act(G, D, p);
  CHECK(q[1] == D.mid2);
  CHECK_THROWS_AS(diamond_act(G, D, Path{bot, top}), Error);
}

TEST_CASE("id pool hands out fresh names") {
  IdPool pool;
  CHECK(pool.take("x") == "x");
  CHECK(pool.take("x") == "x'");
  CHECK(pool.take("x") == "x''");
}
