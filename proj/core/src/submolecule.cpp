#include "forge/error.hpp"
#include "forge/molecule.hpp"

#include <functional>
#include <unordered_set>

namespace forge {

std::optional<SubmoleculeWitness> Recognizer::find_submolecule(const Subset& W, const Subset& S,
                                                               std::size_t budget) {
  const OgPoset& P = *P_;
  if (!S.is_subset_of(W) || !recognize(S) || !recognize(W)) return std::nullopt;
  std::unordered_set<Subset, SubsetHash> failed;
  std::size_t spent = 0;
  SubmoleculeWitness witness;

  std::function<bool(const Subset&)> search = [&](const Subset& whole) -> bool {
    if (whole == S) return true;
    if (!S.is_subset_of(whole) || failed.count(whole) || ++spent > budget) return false;
    const int n = dim_of(P, whole);
    const Subset mx = maximal(P, whole);
    for (int k = n - 1; k >= 0; --k) {
      int tops = 0;
      for (int x : members(mx)) tops += P.dim(x) > k ? 1 : 0;
      if (tops < 2) continue;
      std::vector<Layering> ls;
      try {
        ls = layerings(whole, k, 64);
      } catch (const Error&) {
        continue;
      }
      for (const auto& l : ls) {
        Subset left = P.none();
        for (std::size_t i = 0; i + 1 < l.layers.size(); ++i) {
          left |= l.layers[i];
          Subset right = P.none();
          for (std::size_t j = i + 1; j < l.layers.size(); ++j) right |= l.layers[j];
          for (bool in_left : {true, false}) {
            const Subset& part = in_left ? left : right;
            if (!S.is_subset_of(part)) continue;
            if (search(part)) {
              SubmoleculeStep step;
              step.kind = SubmoleculeStep::Kind::Split;
              step.k = k;
              step.part_is_left = in_left;
              step.whole = whole;
              step.part = part;
              step.other = in_left ? right : left;
              witness.steps.insert(witness.steps.begin(), std::move(step));
              return true;
            }
          }
        }
      }
    }
    for (int k = n - 1; k >= 0; --k) {
      for (Sign a : kSigns) {
        Subset b = boundary(P, whole, k, a);
        if (b == whole || !S.is_subset_of(b)) continue;
        if (search(b)) {
          SubmoleculeStep step;
          step.kind = SubmoleculeStep::Kind::Boundary;
          step.k = k;
          step.alpha = a;
          step.whole = whole;
          step.part = b;
          witness.steps.insert(witness.steps.begin(), std::move(step));
          return true;
        }
      }
    }
    failed.insert(whole);
    return false;
  };
  if (!search(W)) return std::nullopt;
  return witness;
}

namespace {

// Tracks where the elements of U and V land while the result is assembled.
struct Tracked {
  Cert cert;
  std::vector<int> u_map;
};

std::vector<int> compose_maps(const std::vector<int>& first, const std::vector<int>& second) {
  std::vector<int> out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
  return out;
}

}  // namespace

PasteAtResult paste_at(const Cert& U, const Cert& V, int k, const std::map<std::string, std::string>& iota,
                       PasteSide side) {
  const OgPoset& A = U->P();
  const OgPoset& B = V->P();
  const Sign u_side = side == PasteSide::Input ? Sign::Plus : Sign::Minus;
  const Sign v_side = -u_side;
  const Subset bu = boundary(A, k, u_side);
  const Subset bv = boundary(B, k, v_side);

  // ι must be an orientation-preserving isomorphism of ∂U onto a closed subset of ∂V.
  std::vector<int> iota_idx(A.size(), -1);
  Subset image = B.none();
  for (const auto& [from, to] : iota) {
    auto x = A.find(from);
    auto y = B.find(to);
    if (!x || !y || !bu.test(*x) || !bv.test(*y) || image.test(*y)) {
      throw Error(Errc::NotSubmolecule, "inclusion is not an injective map between the pasting boundaries");
    }
    iota_idx[*x] = *y;
    image.set(*y);
  }
  if (image.count() != bu.count() || !is_closed(B, image)) {
    throw Error(Errc::NotSubmolecule, "inclusion must be defined on the whole boundary with closed image");
  }
  for (int x : members(bu)) {
    if (A.dim(x) != B.dim(iota_idx[x])) throw Error(Errc::NotSubmolecule, "inclusion changes dimension");
    for (Sign a : kSigns) {
      std::vector<int> img;
      for (int f : A.faces(x, a)) img.push_back(iota_idx[f]);
      std::sort(img.begin(), img.end());
      std::vector<int> expect;
      for (int f : B.faces(iota_idx[x], a)) {
        if (image.test(f)) expect.push_back(f);
      }
      if (img != expect) throw Error(Errc::NotSubmolecule, "inclusion does not preserve orientation");
    }
  }

  Recognizer R(V->poset);
  auto witness = R.find_submolecule(bv, image);
  if (!witness) throw Error(Errc::NotSubmolecule, "image is not a submolecule of the boundary");

  bool whiskerable = true;
  for (const auto& step : witness->steps) whiskerable = whiskerable && step.kind == SubmoleculeStep::Kind::Split;

  PasteAtResult result;
  if (whiskerable) {
    // Enlarge U by the complementary factors, innermost first, then paste along the full boundary.
    Tracked e{U, {}};
    for (std::size_t x = 0; x < A.size(); ++x) e.u_map.push_back(static_cast<int>(x));
    for (auto it = witness->steps.rbegin(); it != witness->steps.rend(); ++it) {
      Cert other = R.recognize(it->other).cert;
      if (it->part_is_left) {
        Cert next = paste(e.cert, other, it->k);
        e = {next, compose_maps(e.u_map, next->left_map)};
      } else {
        Cert next = paste(other, e.cert, it->k);
        e = {next, compose_maps(e.u_map, next->right_map)};
      }
    }
    if (side == PasteSide::Input) {
      Cert c = paste(e.cert, V, k);
      result.cert = c;
      result.u_map = compose_maps(e.u_map, c->left_map);
      result.v_map = c->right_map;
    } else {
      Cert c = paste(V, e.cert, k);
      result.cert = c;
      result.u_map = compose_maps(e.u_map, c->right_map);
      result.v_map = c->left_map;
    }
    return result;
  }

  // Fall back to the explicit pushout, certified by recognition.
  IdPool pool;
  std::vector<std::string> b_id(B.size()), a_id(A.size());
  for (std::size_t y = 0; y < B.size(); ++y) b_id[y] = pool.take(B.id(static_cast<int>(y)));
  for (std::size_t x = 0; x < A.size(); ++x) {
    a_id[x] = iota_idx[x] >= 0 ? b_id[iota_idx[x]] : pool.take(A.id(static_cast<int>(x)));
  }
  std::vector<RawElement> raw;
  for (std::size_t y = 0; y < B.size(); ++y) {
    RawElement el{b_id[y], B.dim(static_cast<int>(y)), {}, {}};
    for (int f : B.faces(static_cast<int>(y), Sign::Minus)) el.minus.push_back(b_id[f]);
    for (int f : B.faces(static_cast<int>(y), Sign::Plus)) el.plus.push_back(b_id[f]);
    raw.push_back(std::move(el));
  }
  for (std::size_t x = 0; x < A.size(); ++x) {
    if (iota_idx[x] >= 0) continue;
    RawElement el{a_id[x], A.dim(static_cast<int>(x)), {}, {}};
    for (int f : A.faces(static_cast<int>(x), Sign::Minus)) el.minus.push_back(a_id[f]);
    for (int f : A.faces(static_cast<int>(x), Sign::Plus)) el.plus.push_back(a_id[f]);
    raw.push_back(std::move(el));
  }
  auto glued = share(OgPoset::validate(std::move(raw)));
  auto rec = is_molecule(glued);
  if (!rec) throw Error(Errc::NotMolecule, "pushout is not a molecule: " + rec.reason);
  result.cert = rec.cert;
  for (const auto& id : a_id) result.u_map.push_back(glued->index(id));
  for (const auto& id : b_id) result.v_map.push_back(glued->index(id));
  return result;
}

}  // namespace forge
