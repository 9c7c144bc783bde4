#include "forge/collapse.hpp"
#include "forge/complex.hpp"
#include "forge/constructions.hpp"
#include "forge/corpus.hpp"
#include "forge/error.hpp"
#include "forge/io.hpp"
#include "forge/iso.hpp"
#include "forge/maps.hpp"
#include "forge/molcat.hpp"
#include "forge/molecule.hpp"
#include "forge/shapes.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <set>

namespace {

using nlohmann::json;
using namespace forge;

// A checked failure: the certificate is printed and the exit status is 1.
struct Refuted {
  json certificate;
};

std::string g_out;

void emit(const std::string& text) {
  if (g_out.empty()) {
    std::cout << text;
  } else {
    write_file(g_out, text);
  }
}

void emit(const json& j) { emit(j.dump(2) + "\n"); }

json as_json(const std::string& text) { return json::parse(text); }

PosetPtr load(const std::string& path) { return share(load_poset(path)); }

std::string dir_of(const std::string& path) {
  const auto p = std::filesystem::path(path).parent_path();
  return p.empty() ? "." : p.string();
}

Cert certify(const PosetPtr& P) {
  Recognition r = is_molecule(P);
  if (!r) throw Refuted{{{"molecule", false}, {"reason", r.reason}, {"witness", ids_of(*P, r.witness)}}};
  return r.cert;
}

json ids(const OgPoset& P, const Subset& U) { return ids_of(P, U); }

json cylinder_json(const Cylinder& c) {
  return {{"poset", as_json(poset_json(*c.poset))},
          {"tau", as_json(map_json(c.tau))["assignment"]},
          {"K", ids(*c.tau.target, c.K)}};
}

int exit_code(Errc c) {
  switch (c) {
    case Errc::ParseError:
    case Errc::UnknownVerb:
    case Errc::UnknownId:
    case Errc::DuplicateId:
    case Errc::DanglingFace:
    case Errc::BadGrading:
    case Errc::OrientationOverlap:
    case Errc::Cycle:
      return 2;
    default:
      return 1;
  }
}

Sign sign_arg(const std::string& s) { return parse_sign(s); }

void add_verbs(CLI::App& app);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"forge: regular directed complexes, molecules and their constructions"};
  app.set_help_all_flag("--help-all");
  app.add_option("--out", g_out, "Write the result to this file instead of stdout");
  app.require_subcommand(1);
  add_verbs(app);
  CLI::App* molcat = app.add_subcommand("molcat", "Composition-structure verbs (basis, amalgamate, stricter-check)");
  molcat->require_subcommand(1);
  add_verbs(*molcat);

  // The first positional word names the verb.
  for (int i = 1; i < argc; ++i) {
    const std::string w = argv[i];
    if (w == "--out") {
      ++i;
      continue;
    }
    if (w.empty() || w[0] == '-') continue;
    bool known = false;
    for (const CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) known = known || sub->get_name() == w;
    if (!known) {
      std::cerr << json{{"error", errc_name(Errc::UnknownVerb)}, {"message", "unknown verb '" + w + "'"}}.dump(2) << "\n";
      return 2;
    }
    break;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    json err = {{"error", errc_name(Errc::UnknownVerb)}, {"message", e.what()}};
    if (dynamic_cast<const CLI::RequiredError*>(&e) == nullptr && dynamic_cast<const CLI::ExtrasError*>(&e) == nullptr) {
      err["error"] = errc_name(Errc::ParseError);
    }
    std::cerr << err.dump(2) << "\n";
    return 2;
  } catch (const Refuted& r) {
    emit(r.certificate);
    return 1;
  } catch (const ValidationError& e) {
    json v = json::array();
    for (const auto& x : e.violations()) v.push_back({{"code", errc_name(x.code)}, {"detail", x.detail}});
    std::cerr << json{{"error", "ValidationError"}, {"violations", v}}.dump(2) << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << json{{"error", errc_name(e.code())}, {"message", e.what()}}.dump(2) << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "ParseError"}, {"message", e.what()}}.dump(2) << "\n";
    return 2;
  }
  return 0;
}

namespace {

void add_verbs(CLI::App& app) {
  // Options live as long as the process; each registration gets its own storage.
  struct Args {
    std::string a, b, c;
    std::vector<std::string> list1, list2;
    int k = 0, n = 0, size = 0;
    std::string sign = "-", kind = "plain", word;
    bool flag = false;
  };
  auto add = [&app](const std::string& name, const std::string& help) {
    auto args = std::make_shared<Args>();
    return std::pair{app.add_subcommand(name, help), args};
  };

  {
    auto [s, a] = add("validate", "Check the oriented graded poset invariants and classify the input");
    s->add_option("poset", a->a, "Poset JSON")->required();
    s->callback([a] {
      auto P = load(a->a);
      const bool mol = static_cast<bool>(is_molecule(*P));
      emit(json{{"valid", true},
                {"size", P->size()},
                {"dim", P->dim()},
                {"rdc", is_rdc(*P)},
                {"molecule", mol},
                {"atom", mol && is_atom(*P)},
                {"round", mol && is_round(*P)}});
    });
  }
  {
    auto [s, a] = add("boundary", "The k-boundary of a poset or of one of its closed subsets");
    s->add_option("poset", a->a, "Poset JSON")->required();
    s->add_option("-k", a->k, "Dimension")->required();
    s->add_option("--sign", a->sign, "- or +; 'both' for the whole boundary");
    s->add_option("--subset", a->list1, "Ids generating the closed subset (default: everything)")->delimiter(',');
    s->callback([a] {
      auto P = load(a->a);
      const Subset U = a->list1.empty() ? P->all() : closure(*P, a->list1);
      const Subset b = a->sign == "both" ? boundary(*P, U, a->k) : boundary(*P, U, a->k, sign_arg(a->sign));
      emit(poset_json(*restrict_to(*P, b).poset));
    });
  }
  {
    auto [s, a] = add("paste", "U ∘ₖ V");
    s->add_option("U", a->a)->required();
    s->add_option("V", a->b)->required();
    s->add_option("-k", a->k, "Pasting dimension")->required();
    s->callback([a] { emit(poset_json(paste(certify(load(a->a)), certify(load(a->b)), a->k)->P())); });
  }
  {
    auto [s, a] = add("rewrite", "The atom U ⇒ V");
    s->add_option("U", a->a)->required();
    s->add_option("V", a->b)->required();
    s->callback([a] { emit(poset_json(rewrite(certify(load(a->a)), certify(load(a->b)))->P())); });
  }
  {
    auto [s, a] = add("recognize", "Molecule recognition with a construction certificate");
    s->add_option("poset", a->a)->required();
    s->add_option("--layerings", a->k, "Also list the k-layerings for this k")->default_val(-1);
    s->callback([a] {
      auto P = load(a->a);
      Cert c = certify(P);
      json out = as_json(cert_json(c));
      out["molecule"] = true;
      out["atom"] = is_atom(*P);
      out["round"] = is_round(*P);
      if (a->k >= 0) {
        json ls = json::array();
        for (const Layering& l : layerings(*P, a->k, 64)) {
          json layer = json::array();
          for (const Subset& u : l.layers) layer.push_back(ids(*P, maximal(*P, u)));
          ls.push_back(layer);
        }
        out["layerings"] = ls;
      }
      emit(out);
    });
  }
  {
    auto [s, a] = add("gray", "Gray product P ⊗ Q");
    s->add_option("P", a->a)->required();
    s->add_option("Q", a->b)->required();
    s->callback([a] { emit(poset_json(gray(*load(a->a), *load(a->b)))); });
  }
  {
    auto [s, a] = add("suspend", "Suspension ΣP");
    s->add_option("P", a->a)->required();
    s->callback([a] { emit(poset_json(suspend(*load(a->a)))); });
  }
  {
    auto [s, a] = add("dual", "J-dual of P");
    s->add_option("P", a->a)->required();
    s->add_option("--dims", a->list1, "Dimensions in J, comma separated")->delimiter(',')->required();
    s->callback([a] {
      std::set<int> J;
      for (const auto& d : a->list1) J.insert(std::stoi(d));
      emit(poset_json(dual(*load(a->a), J)));
    });
  }
  {
    auto [s, a] = add("collapse", "Quotient U/K by a β-collapsible subset, or list all of them");
    s->add_option("U", a->a)->required();
    s->add_option("--subset", a->list1, "Ids generating K")->delimiter(',');
    s->add_option("--beta", a->sign, "- or +");
    s->add_flag("--all", a->flag, "List every collapsible subset instead");
    s->callback([a] {
      auto U = load(a->a);
      const Sign beta = sign_arg(a->sign);
      if (a->flag) {
        json all = json::array();
        for (const Subset& K : collapsible_subsets(*U, beta)) all.push_back(ids(*U, K));
        emit(json{{"beta", sign_str(beta)}, {"subsets", all}});
        return;
      }
      const Subset K = closure(*U, a->list1);
      if (CheckResult r = is_collapsible(*U, K, beta); !r) throw Refuted{{{"collapsible", false}, {"reason", r.failure}}};
      Collapse c = collapse(U, K, beta);
      emit(json{{"quotient", as_json(poset_json(*c.quotient))},
                {"map", as_json(map_json(c.p))["assignment"]},
                {"bullet", c.quotient->id(c.bullet)}});
    });
  }
  {
    auto [s, a] = add("desuspend", "Collapse K⁻ and K⁺ and desuspend");
    s->add_option("U", a->a)->required();
    s->add_option("--kminus", a->list1, "Ids generating K⁻ (default: the input 0-boundary)")->delimiter(',');
    s->add_option("--kplus", a->list2, "Ids generating K⁺ (default: the output 0-boundary)")->delimiter(',');
    s->callback([a] {
      auto U = load(a->a);
      const Subset km = a->list1.empty() ? boundary(*U, 0, Sign::Minus) : closure(*U, a->list1);
      const Subset kp = a->list2.empty() ? boundary(*U, 0, Sign::Plus) : closure(*U, a->list2);
      Desuspension d;
      try {
        d = desuspend(U, km, kp);
      } catch (const Error& e) {
        if (e.code() != Errc::PreconditionFail) throw;
        throw Refuted{{{"desuspended", false}, {"reason", e.what()}}};
      }
      emit(json{{"V", as_json(poset_json(*d.V))}, {"q", as_json(map_json(d.q))["assignment"]}});
    });
  }
  {
    auto [s, a] = add("cyl", "Partial Gray cylinder I ⊗_K U, or its left/right inverted forms");
    s->add_option("U", a->a)->required();
    s->add_option("--K", a->list1, "Ids generating K (default: empty)")->delimiter(',');
    s->add_option("--kind", a->kind, "plain, left or right")->check(CLI::IsMember({"plain", "left", "right"}));
    s->callback([a] {
      auto U = load(a->a);
      const Subset K = a->list1.empty() ? U->none() : closure(*U, a->list1);
      const CylKind kind = a->kind == "left" ? CylKind::Left : a->kind == "right" ? CylKind::Right : CylKind::Plain;
      emit(cylinder_json(make_cylinder(U, K, kind)));
    });
  }
  {
    auto [s, a] = add("invertor", "Higher invertor shape H_t(U)");
    s->add_option("U", a->a)->required();
    s->add_option("--word", a->word, "Word over L and R")->required();
    s->callback([a] {
      Invertor h = invertor(load(a->a), a->word);
      emit(json{{"poset", as_json(poset_json(*h.poset))}, {"tau", as_json(map_json(h.tau))["assignment"]}});
    });
  }
  {
    auto [s, a] = add("substitute", "Generalised substitution P[V/U]_s");
    s->add_option("iota", a->a, "Map JSON of the inclusion U ↪ P")->required();
    s->add_option("comap", a->b, "Comap JSON V → U dual to s")->required();
    s->callback([a] {
      const PosetMap iota = parse_map(read_file(a->a), dir_of(a->a));
      const Comap c = parse_comap(read_file(a->b), dir_of(a->b));
      Substitution sub = substitute(iota, c);
      const CheckResult ok = check_comap(sub.c);
      emit(json{{"poset", as_json(poset_json(*sub.poset))},
                {"comap", as_json(comap_json(sub.c))["assignment"]},
                {"comap_ok", ok.ok}});
    });
  }
  {
    auto [s, a] = add("localise", "Bounded localisation at marked cells; generators of dimension below --max-dim");
    s->add_option("U", a->a, "An atom, or any RDC with --marked")->required();
    s->add_option("--max-dim", a->n, "Dimension bound")->required();
    s->add_option("--marked", a->list1, "Marked element ids (default: the greatest element)")->delimiter(',');
    s->add_flag("--weak-composite", a->flag, "Localise the walking weak composite of a round molecule instead");
    s->callback([a] {
      auto U = load(a->a);
      Localisation loc;
      if (a->flag) {
        loc = weak_composite_shape(U, a->n).loc;
      } else if (a->list1.empty()) {
        loc = walking_equivalence(U, a->n);
      } else {
        std::vector<int> marked;
        for (const auto& id : a->list1) marked.push_back(U->index(id));
        loc = localise(from_rdc(U), marked, a->n);
      }
      json out = as_json(complex_json(loc.complex));
      out["max_dim"] = loc.max_dim;
      out["stages"] = loc.stages;
      out["next_dim_count"] = loc.next_dim_count;
      emit(out);
    });
  }
  {
    auto [s, a] = add("horn", "Marked horn condition at a maximal element of a boundary");
    s->add_option("U", a->a)->required();
    s->add_option("--marked", a->list1, "Marked ids (must include the greatest element)")->delimiter(',')->required();
    s->add_option("--x", a->b, "The element removed from the boundary")->required();
    s->add_option("--sign", a->sign, "Side of the boundary, - or +");
    s->callback([a] {
      auto U = load(a->a);
      Subset marked = U->none();
      for (const auto& id : a->list1) marked.set(U->index(id));
      HornWitness w = marked_horn_check(U, marked, U->index(a->b), sign_arg(a->sign));
      json layers = json::array();
      for (const auto& [l, r] : w.layers) layers.push_back({{"left", ids(*U, l)}, {"right", ids(*U, r)}});
      json out = {{"ok", w.ok}, {"layers", layers}};
      if (!w.ok) {
        out["failure"] = w.failure;
        throw Refuted{out};
      }
      emit(out);
    });
  }
  {
    auto [s, a] = add("iso", "Isomorphism search between two posets");
    s->add_option("P", a->a)->required();
    s->add_option("Q", a->b)->required();
    s->callback([a] {
      auto P = load(a->a);
      auto Q = load(a->b);
      IsoOptions opt;
      opt.limit = 2;
      const auto all = find_isos(*P, *Q, opt);
      if (all.empty()) throw Refuted{{{"isomorphic", false}}};
      emit(json{{"isomorphic", true},
                {"unique", all.size() == 1},
                {"assignment", assignment_ids(P, Q, all.front())}});
    });
  }
  {
    auto [s, a] = add("basis", "Polygraph basis: generators by dimension");
    s->add_option("P", a->a, "Poset JSON")->required();
    s->add_option("--localise", a->n, "Basis of the walking equivalence on P up to this bound instead")->default_val(0);
    s->callback([a] {
      auto P = load(a->a);
      const CellComplex X = a->n > 0 ? walking_equivalence(P, a->n).complex : from_rdc(P);
      json out = json::array();
      for (const auto& names : polygraph_basis(X)) out.push_back(names);
      emit(json{{"basis", out}, {"counts", X.counts()}});
    });
  }
  {
    auto [s, a] = add("amalgamate", "Amalgamate a matching family into Mol(Q) or into a table");
    s->add_option("P", a->a, "Base poset JSON")->required();
    s->add_option("family", a->b, "Family JSON")->required();
    s->add_option("--target", a->c, "Target poset Q for Mol(Q)");
    s->add_option("--table", a->word, "Target table JSON");
    s->add_flag("--reverse", a->flag, "Try decompositions in the opposite order");
    s->callback([a] {
      const PosetPtr P = load(a->a);
      FamilySpec spec = parse_family(read_file(a->b), dir_of(a->b));
      if (!spec.base) spec.base = P;
      if (!(*spec.base == *P)) throw Error(Errc::Mismatch, "the family is over a different base");
      AmalgamateOptions opt;
      opt.reverse_order = a->flag;
      auto report = [&](const Amalgamation& r, CompositionStructure& C, const PosetPtr& base) {
        json values = json::object();
        for (const auto& [W, v] : r.values) {
          std::vector<std::string> top = ids_of(*base, maximal(*base, W));
          std::sort(top.begin(), top.end());
          std::string key;
          for (const auto& t : top) key += (key.empty() ? "" : ",") + t;
          values[key] = C.name(v);
        }
        json out = {{"ok", r.ok}, {"decompositions", r.decompositions}, {"values", values}};
        if (r.whole >= 0) out["whole"] = C.name(r.whole);
        if (!r.ok) {
          out["failure"] = r.failure;
          out["where"] = ids_of(*base, r.where);
          throw Refuted{out};
        }
        emit(out);
      };
      if (!a->word.empty()) {
        TableStructure t = parse_table(read_file(a->word));
        MatchingFamily F{spec.base, {}};
        for (std::size_t x = 0; x < spec.base->size(); ++x) {
          auto it = spec.cells.find(spec.base->id(static_cast<int>(x)));
          if (it == spec.cells.end()) throw Error(Errc::Incompatible, "no cell for '" + spec.base->id(static_cast<int>(x)) + "'");
          const int h = t.find(it->second);
          if (h < 0) throw Error(Errc::UnknownId, "unknown cell '" + it->second + "'");
          F.cells.push_back(h);
        }
        report(amalgamate(F, t, opt), t, spec.base);
        return;
      }
      if (a->c.empty()) throw Error(Errc::ParseError, "give --target or --table");
      const PosetPtr Q = load(a->c);
      MolStructure M(Q);
      MatchingFamily F;
      if (!spec.map.empty()) {
        F = family_from_map(map_from_ids(spec.base, Q, spec.map), M);
      } else if (!spec.comap.empty()) {
        const PosetMap c = map_from_ids(Q, spec.base, spec.comap);
        F = family_from_comap(Comap{c.source, c.target, c.assign}, M);
      } else {
        throw Error(Errc::ParseError, "a family into Mol(Q) is given by \"map\" or \"comap\"");
      }
      report(amalgamate(F, M, opt), M, spec.base);
    });
  }
  {
    auto [s, a] = add("stricter-check", "Check that matching families over small pastings amalgamate");
    s->add_option("input", a->a, "A table JSON, or a poset JSON P for Mol(P)")->required();
    s->add_option("--dim", a->n, "Dimension bound for the pasting shapes")->default_val(3);
    s->add_option("--size", a->size, "Element bound for the pasting shapes")->default_val(16);
    s->add_option("--budget", a->k, "Maximum number of families")->default_val(20000);
    s->callback([a] {
      const json in = as_json(read_file(a->a));
      StricterReport r;
      if (in.contains("cells")) {
        TableStructure t = parse_table(in.dump());
        r = stricter_check(t, a->n, static_cast<std::size_t>(a->size), static_cast<std::size_t>(a->k));
      } else {
        MolStructure M(load(a->a));
        r = stricter_check(M, a->n, static_cast<std::size_t>(a->size), static_cast<std::size_t>(a->k));
      }
      json v = json::array();
      for (const auto& x : r.violations) {
        json fam = json::object();
        for (const auto& [id, name] : x.family) fam[id] = name;
        v.push_back({{"shape", x.shape}, {"family", fam}, {"detail", x.detail}});
      }
      json out = {{"shapes", r.shapes}, {"families", r.families}, {"truncated", r.truncated}, {"violations", v}};
      if (!r.violations.empty()) throw Refuted{out};
      emit(out);
    });
  }
  {
    auto [s, a] = add("export-dot", "Hasse diagram in DOT");
    s->add_option("P", a->a)->required();
    s->callback([a] {
      const std::string name = std::filesystem::path(a->a).stem().string();
      emit(dot(*load(a->a), name));
    });
  }
  {
    auto [s, a] = add("build", "Molecule from an expression such as paste(rewrite(g1,g1),g2,0)");
    s->add_option("expr", a->a)->required();
    s->add_flag("--cert", a->flag, "Print the certificate tree as well");
    s->callback([a] {
      Cert c = parse_expression(a->a);
      emit(a->flag ? cert_json(c) : poset_json(c->P()));
    });
  }
  {
    auto [s, a] = add("corpus", "List the fixture corpus, or write it as JSON files");
    s->add_option("--dir", a->a, "Directory to write <name>.json into");
    s->callback([a] {
      json list = json::array();
      for (const Fixture& f : corpus()) {
        const CheckResult ok = check_fixture(f);
        if (!ok) throw Error(Errc::OracleError, ok.failure);
        if (!a->a.empty()) write_file((std::filesystem::path(a->a) / (f.name + ".json")).string(), poset_json(*f.poset));
        const char* cls = f.cls == FixtureClass::Atom ? "atom" : f.cls == FixtureClass::Molecule ? "molecule" : "rdc";
        list.push_back({{"name", f.name}, {"class", cls}, {"size", f.poset->size()}, {"dim", f.poset->dim()}, {"round", f.round}});
      }
      json complexes = json::array();
      for (const ComplexFixture& c : complex_corpus()) {
        if (!a->a.empty()) write_file((std::filesystem::path(a->a) / (c.name + ".json")).string(), complex_json(c.complex));
        complexes.push_back({{"name", c.name}, {"counts", c.complex.counts()}});
      }
      if (!a->a.empty()) {
        write_file((std::filesystem::path(a->a) / "broken-interchange.json").string(), table_json(broken_interchange_table()));
      }
      emit(json{{"fixtures", list}, {"complexes", complexes}});
    });
  }
}

}  // namespace
