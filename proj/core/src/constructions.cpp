#include "forge/constructions.hpp"

#include "forge/error.hpp"
#include "forge/maps.hpp"

namespace forge {

std::string gray_id(const std::string& x, const std::string& y) { return x + "|" + y; }

std::string suspended_id(const std::string& x) { return "S:" + x; }

OgPoset gray(const OgPoset& P, const OgPoset& Q) {
  std::vector<RawElement> raw;
  raw.reserve(P.size() * Q.size());
  for (std::size_t xs = 0; xs < P.size(); ++xs) {
    const int x = static_cast<int>(xs);
    for (std::size_t ys = 0; ys < Q.size(); ++ys) {
      const int y = static_cast<int>(ys);
      RawElement e{gray_id(P.id(x), Q.id(y)), P.dim(x) + Q.dim(y), {}, {}};
      for (Sign a : kSigns) {
        auto& out = a == Sign::Minus ? e.minus : e.plus;
        for (int f : P.faces(x, a)) out.push_back(gray_id(P.id(f), Q.id(y)));
        for (int f : Q.faces(y, sign_pow(P.dim(x), a))) out.push_back(gray_id(P.id(x), Q.id(f)));
      }
      raw.push_back(std::move(e));
    }
  }
  return OgPoset::validate(std::move(raw));
}

PosetMap gray_map(const PosetMap& f, const PosetMap& g) {
  PosetMap h;
  h.source = share(gray(*f.source, *g.source));
  h.target = share(gray(*f.target, *g.target));
  h.assign.resize(h.source->size());
  for (std::size_t x = 0; x < f.source->size(); ++x) {
    for (std::size_t y = 0; y < g.source->size(); ++y) {
      const int from = h.source->index(gray_id(f.source->id(static_cast<int>(x)), g.source->id(static_cast<int>(y))));
      const int to = h.target->index(gray_id(f.target->id(f.assign[x]), g.target->id(g.assign[y])));
      h.assign[from] = to;
    }
  }
  h.declared = f.declared == g.declared ? f.declared : MapClass::Map;
  if (auto r = check_map(h); !r) throw Error(Errc::ChecksFail, "Gray product of maps: " + r.failure);
  return h;
}

Comap gray_comap(const Comap& c, const Comap& d) {
  Comap h;
  h.source = share(gray(*c.source, *d.source));
  h.target = share(gray(*c.target, *d.target));
  h.assign.resize(h.source->size());
  for (std::size_t x = 0; x < c.source->size(); ++x) {
    for (std::size_t y = 0; y < d.source->size(); ++y) {
      const int from = h.source->index(gray_id(c.source->id(static_cast<int>(x)), d.source->id(static_cast<int>(y))));
      h.assign[from] = h.target->index(gray_id(c.target->id(c.assign[x]), d.target->id(d.assign[y])));
    }
  }
  return h;
}

OgPoset suspend(const OgPoset& P) {
  std::vector<RawElement> raw;
  raw.push_back({"bot-", 0, {}, {}});
  raw.push_back({"bot+", 0, {}, {}});
  for (std::size_t xs = 0; xs < P.size(); ++xs) {
    const int x = static_cast<int>(xs);
    RawElement e{suspended_id(P.id(x)), P.dim(x) + 1, {}, {}};
    if (P.dim(x) == 0) {
      e.minus.push_back("bot-");
      e.plus.push_back("bot+");
    } else {
      for (int f : P.faces(x, Sign::Minus)) e.minus.push_back(suspended_id(P.id(f)));
      for (int f : P.faces(x, Sign::Plus)) e.plus.push_back(suspended_id(P.id(f)));
    }
    raw.push_back(std::move(e));
  }
  return OgPoset::validate(std::move(raw));
}

PosetMap suspend_map(const PosetMap& f) {
  PosetMap h;
  h.source = share(suspend(*f.source));
  h.target = share(suspend(*f.target));
  h.assign.resize(h.source->size());
  h.assign[h.source->index("bot-")] = h.target->index("bot-");
  h.assign[h.source->index("bot+")] = h.target->index("bot+");
  for (std::size_t x = 0; x < f.source->size(); ++x) {
    h.assign[h.source->index(suspended_id(f.source->id(static_cast<int>(x))))] =
        h.target->index(suspended_id(f.target->id(f.assign[x])));
  }
  h.declared = f.declared;
  return h;
}

OgPoset dual(const OgPoset& P, const std::set<int>& J) {
  auto raw = P.raw();
  for (auto& e : raw) {
    if (J.count(e.dim)) std::swap(e.minus, e.plus);
  }
  return OgPoset::validate(std::move(raw));
}

PosetMap dual_map(const PosetMap& f, const std::set<int>& J) {
  PosetMap h;
  h.source = share(dual(*f.source, J));
  h.target = share(dual(*f.target, J));
  h.assign.resize(f.assign.size());
  for (std::size_t x = 0; x < f.assign.size(); ++x) {
    h.assign[h.source->index(f.source->id(static_cast<int>(x)))] = h.target->index(f.target->id(f.assign[x]));
  }
  h.declared = f.declared;
  return h;
}

OgPoset rename(const OgPoset& P, const std::vector<std::string>& ids) {
  std::vector<RawElement> raw;
  for (std::size_t xs = 0; xs < P.size(); ++xs) {
    const int x = static_cast<int>(xs);
    RawElement e{ids[x], P.dim(x), {}, {}};
    for (int f : P.faces(x, Sign::Minus)) e.minus.push_back(ids[f]);
    for (int f : P.faces(x, Sign::Plus)) e.plus.push_back(ids[f]);
    raw.push_back(std::move(e));
  }
  return OgPoset::validate(std::move(raw));
}

}  // namespace forge
