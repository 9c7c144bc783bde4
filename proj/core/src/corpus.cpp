#include "forge/corpus.hpp"

#include "forge/constructions.hpp"
#include "forge/error.hpp"
#include "forge/shapes.hpp"

namespace forge {

OgPoset two_arrows_common_target() {
  return OgPoset::validate({
      {"a", 0, {}, {}},
      {"b", 0, {}, {}},
      {"c", 0, {}, {}},
      {"f", 1, {"a"}, {"c"}},
      {"g", 1, {"b"}, {"c"}},
  });
}

OgPoset interchange() {
  return OgPoset::validate({
      {"x", 0, {}, {}},         {"y", 0, {}, {}},         {"z", 0, {}, {}},
      {"f0", 1, {"x"}, {"y"}},  {"f1", 1, {"x"}, {"y"}},  {"f2", 1, {"x"}, {"y"}},
      {"g0", 1, {"y"}, {"z"}},  {"g1", 1, {"y"}, {"z"}},  {"g2", 1, {"y"}, {"z"}},
      {"a", 2, {"f0"}, {"f1"}}, {"b", 2, {"f1"}, {"f2"}}, {"c", 2, {"g0"}, {"g1"}},
      {"d", 2, {"g1"}, {"g2"}},
  });
}

namespace {

Fixture from_cert(std::string name, const Cert& c) {
  Fixture f;
  f.name = std::move(name);
  f.poset = c->poset;
  f.cert = c;
  f.cls = is_atom(c->P()) ? FixtureClass::Atom : FixtureClass::Molecule;
  f.round = is_round(c->P());
  return f;
}

Fixture from_poset(std::string name, OgPoset P) {
  auto ptr = share(std::move(P));
  Recognition r = is_molecule(ptr);
  Fixture f;
  f.name = std::move(name);
  f.poset = r ? r.cert->poset : ptr;
  f.cert = r.cert;
  f.cls = !r ? FixtureClass::Rdc : (is_atom(*ptr) ? FixtureClass::Atom : FixtureClass::Molecule);
  f.round = r && is_round(*ptr);
  return f;
}

}  // namespace

std::vector<Fixture> corpus() {
  std::vector<Fixture> out;
  for (int n = 0; n <= 4; ++n) out.push_back(from_cert("globe" + std::to_string(n), globe(n)));
  for (int k = 2; k <= 3; ++k) out.push_back(from_cert("arrow" + std::to_string(k), arrow_chain(k)));

  const Cert o1 = globe(1), o2 = globe(2);
  out.push_back(from_cert("composition-atom", rewrite(arrow_chain(2), o1)));
  out.push_back(from_cert("vertical-pair", paste(o2, o2, 1)));
  out.push_back(from_cert("horizontal-pair", paste(o2, o2, 0)));
  out.push_back(from_cert("whiskered", paste(o2, o1, 0)));
  out.push_back(from_poset("interchange", interchange()));
  out.push_back(from_cert("horizontal-3-pair", paste(globe(3), globe(3), 0)));

  const OgPoset& p1 = o1->P();
  out.push_back(from_poset("gray-square", gray(p1, p1)));
  out.push_back(from_poset("gray-cube", gray(gray(p1, p1), p1)));
  out.push_back(from_poset("gray-o1-o2", gray(p1, o2->P())));
  out.push_back(from_poset("suspended-arrow2", suspend(arrow_chain(2)->P())));

  for (const auto& [label, base] : {std::pair{"o1", o1->poset}, std::pair{"o2", o2->poset}}) {
    const std::string b = label;
    out.push_back(from_poset("cylinder-" + b, *cylinder(base, base->none()).poset));
    const Subset bd = boundary(*base, base->all(), base->dim() - 1);
    out.push_back(from_poset("unit-" + b, *cylinder(base, bd).poset));
    for (const std::string t : {"L", "R", "LL", "LR", "RL", "RR"}) {
      out.push_back(from_poset("invertor-" + t + "-" + b, *invertor(base, t).poset));
    }
  }
  out.push_back(from_poset("two-arrows-common-target", two_arrows_common_target()));
  return out;
}

std::optional<Fixture> find_fixture(const std::string& name) {
  for (auto& f : corpus()) {
    if (f.name == name) return f;
  }
  return std::nullopt;
}

std::vector<ComplexFixture> complex_corpus() {
  std::vector<ComplexFixture> out;
  out.push_back({"walking-eq-dim4", walking_equivalence(globe(1)->poset, 4).complex, {2, 3, 6, 12}});
  out.push_back({"walking-eq-dim6", walking_equivalence(globe(1)->poset, 6).complex, {2, 3, 6, 12, 24, 48}});
  out.push_back({"walking-eq-o2-dim4", walking_equivalence(globe(2)->poset, 4).complex, {2, 2, 3, 6}});
  return out;
}

CheckResult check_fixture(const Fixture& f) {
  const OgPoset& P = *f.poset;
  switch (f.cls) {
    case FixtureClass::Atom:
      if (!is_atom(P)) return CheckResult::fail(f.name + " is not an atom");
      break;
    case FixtureClass::Molecule:
      if (!is_molecule(P) || is_atom(P)) return CheckResult::fail(f.name + " is not a non-atomic molecule");
      break;
    case FixtureClass::Rdc:
      if (!is_rdc(P) || is_molecule(P)) return CheckResult::fail(f.name + " is not an RDC outside the molecules");
      break;
  }
  if (f.round != (f.cls != FixtureClass::Rdc && is_round(P))) return CheckResult::fail(f.name + " has the wrong roundness flag");
  return CheckResult::pass();
}

}  // namespace forge
