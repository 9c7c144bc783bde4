#include "forge/random.hpp"

#include "forge/constructions.hpp"
#include "forge/error.hpp"

#include <cstdlib>

namespace forge {

std::uint64_t seed_from_env(std::uint64_t fallback) {
  if (const char* s = std::getenv("FORGE_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0') return v;
  }
  return fallback;
}

namespace {

Cert bd(const Cert& c, int k, Sign a) {
  Recognizer R(c->poset);
  return R.recognize(boundary(c->P(), c->P().all(), k, a)).cert;
}

// ⟨S⟩: a single cell from ∂⁻S to ∂⁺S.
Cert enclose(const Cert& S) {
  const int n = S->P().dim();
  if (n <= 0) return S;
  return rewrite(bd(S, n - 1, Sign::Minus), bd(S, n - 1, Sign::Plus));
}

Cert certify(const OgPoset& P) {
  Recognition r = is_molecule(P);
  if (!r) throw Error(Errc::NotMolecule, r.reason);
  return r.cert;
}

std::vector<int> then(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
  return out;
}

}  // namespace

Cert tidy(const Cert& c) {
  static const char* letters = "vefchkm";
  const OgPoset& P = c->P();
  std::vector<std::string> ids(P.size());
  std::vector<int> next(P.dim() + 1, 0);
  for (std::size_t x = 0; x < P.size(); ++x) {
    const int d = P.dim(static_cast<int>(x));
    ids[x] = (d < 7 ? std::string(1, letters[d]) : "x" + std::to_string(d) + "_") + std::to_string(next[d]++);
  }
  auto Q = share(rename(P, ids));
  Iso phi(P.size());
  for (std::size_t x = 0; x < P.size(); ++x) phi[x] = Q->index(ids[x]);
  return transport(c, Q, phi);
}

MoleculeGenerator::MoleculeGenerator(std::uint64_t seed, int max_dim, std::size_t max_size)
    : rng_(seed), max_dim_(max_dim), max_size_(max_size) {}

int MoleculeGenerator::uniform(int lo, int hi) {
  if (hi <= lo) return lo;
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Cert MoleculeGenerator::atom(int n) {
  if (n <= 0) return point();
  Cert S = round_molecule(n - 1);
  Cert out;
  switch (n >= 2 ? uniform(0, 2) : 0) {
    case 0: out = rewrite(S, S); break;
    case 1: out = rewrite(S, enclose(S)); break;
    default: out = rewrite(enclose(S), S); break;
  }
  return tidy(out);
}

Cert MoleculeGenerator::round_molecule(int n) {
  if (n <= 0) return point();
  Cert U = atom(n);
  for (int reps = uniform(0, 2); reps > 0; --reps) {
    const bool after = uniform(0, 1) == 1;
    Cert T = bd(U, n - 1, after ? Sign::Plus : Sign::Minus);
    Cert other = uniform(0, 1) ? enclose(T) : T;
    Cert V = after ? rewrite(T, other) : rewrite(other, T);
    if (U->P().size() + V->P().size() > max_size_ + T->P().size()) break;
    U = after ? paste(U, V, n - 1) : paste(V, U, n - 1);
  }
  return tidy(U);
}

Cert MoleculeGenerator::raise(const Cert& A, int dim) {
  Cert U = A;
  while (U->P().dim() < dim) U = rewrite(U, U);
  return U;
}

Cert MoleculeGenerator::grow_step(const Cert& W, int k, Sign side, int cap) {
  const OgPoset& P = W->P();
  const Subset b = boundary(P, P.all(), k, side);
  std::vector<int> tops;
  for (int x : members(maximal(P, b))) {
    if (P.dim(x) == k) tops.push_back(x);
  }
  if (tops.empty()) return W;
  const int a = tops[uniform(0, static_cast<int>(tops.size()) - 1)];
  Recognizer R(W->poset);
  const Subset cla = closure(P, a);
  Cert A = R.recognize(cla).cert;
  const std::vector<int>& to_w = R.restriction(cla).to_parent;

  // A new atom whose k-boundary on the glued side is A.
  Cert other = (k > 0 && uniform(0, 1)) ? enclose(A) : A;
  Cert U = side == Sign::Plus ? rewrite(A, other) : rewrite(other, A);
  std::vector<int> a_in_u = side == Sign::Plus ? U->left_map : U->right_map;
  const int target = uniform(k + 1, std::max(k + 1, std::min(cap, P.dim() + 1)));
  while (U->P().dim() < target) {
    Cert next = rewrite(U, U);
    a_in_u = then(a_in_u, next->left_map);
    U = next;
  }
  if (P.size() + U->P().size() > max_size_ + A->P().size()) return W;

  std::map<std::string, std::string> iota;
  for (std::size_t i = 0; i < a_in_u.size(); ++i) iota[U->P().id(a_in_u[i])] = P.id(to_w[i]);
  try {
    PasteAtResult r = paste_at(U, W, k, iota, side == Sign::Plus ? PasteSide::Output : PasteSide::Input);
    return tidy(r.cert);
  } catch (const Error& e) {
    if (e.code() != Errc::NotSubmolecule) throw;
    return W;
  }
}

Cert MoleculeGenerator::grow(const Cert& B, int k) {
  if (B->P().dim() < k) return B;
  Cert W = grow_step(B, k, Sign::Plus, max_dim_);
  for (int steps = uniform(0, 2); steps > 0; --steps) {
    const int top = W->P().dim();
    const int j = uniform(k, std::max(k, top - 1));
    // Pasting above k leaves ∂ₖ⁻ alone; at k only the output side may grow.
    W = grow_step(W, j, j == k ? Sign::Plus : (uniform(0, 1) ? Sign::Plus : Sign::Minus), max_dim_);
  }
  return W;
}

Cert MoleculeGenerator::molecule(int n) {
  Cert W = uniform(0, 1) ? atom(n) : round_molecule(n);
  for (int steps = uniform(0, 4); steps > 0 && n > 0; --steps) {
    W = grow_step(W, uniform(0, n - 1), uniform(0, 1) ? Sign::Plus : Sign::Minus, n);
  }
  return W;
}

Cert MoleculeGenerator::molecule() {
  const int n = uniform(0, max_dim_);
  Cert W = molecule(n);
  const int roll = uniform(0, 9);
  const int d = W->P().dim();
  if (roll == 0 && d < max_dim_ && W->P().size() + 2 <= max_size_) {
    W = tidy(certify(suspend(W->P())));
  } else if (roll == 1 && d < max_dim_ && 3 * W->P().size() <= max_size_) {
    W = tidy(certify(gray(W->P(), globe(1)->P())));
  }
  return W;
}

std::pair<Cert, Cert> MoleculeGenerator::pastable_pair(int k) {
  Cert U = molecule(uniform(k + 1, std::max(k + 1, max_dim_)));
  Cert V = grow(bd(U, k, Sign::Plus), k);
  return {U, V};
}

std::optional<ExchangeQuadruple> MoleculeGenerator::exchange_quadruple() {
  if (max_dim_ < 2) return std::nullopt;
  ExchangeQuadruple q;
  q.k = uniform(0, max_dim_ - 2);
  q.l = uniform(q.k + 1, max_dim_ - 1);
  q.u = molecule(uniform(q.l + 1, max_dim_));
  q.u2 = grow(bd(q.u, q.l, Sign::Plus), q.l);
  q.v = grow(bd(q.u, q.k, Sign::Plus), q.k);
  q.v2 = grow(bd(q.v, q.l, Sign::Plus), q.l);
  return q;
}

AtomSubdivision MoleculeGenerator::subdivide(const Cert& A) {
  const OgPoset& P = A->P();
  const int n = P.dim();
  if (n < 1) throw Error(Errc::PreconditionFail, "only atoms of positive dimension are subdivided");
  Cert V;
  if (uniform(0, 1)) {
    Cert T = bd(A, n - 1, Sign::Plus);
    V = paste(A, rewrite(T, T), n - 1);
  } else {
    Cert T = bd(A, n - 1, Sign::Minus);
    V = paste(rewrite(T, T), A, n - 1);
  }
  V = tidy(V);
  const OgPoset& Q = V->P();
  auto colour = [n](const OgPoset& X) {
    const Subset m = boundary(X, n - 1, Sign::Minus), p = boundary(X, n - 1, Sign::Plus);
    std::vector<int> c(X.size());
    for (std::size_t x = 0; x < X.size(); ++x) c[x] = (m.test(x) ? 1 : 0) + (p.test(x) ? 2 : 0);
    return c;
  };
  const Subset bq = boundary(Q, Q.all(), n - 1), bp = boundary(P, P.all(), n - 1);
  auto iso = find_subset_iso(Q, bq, P, bp, colour(Q), colour(P));
  if (!iso) throw Error(Errc::Mismatch, "subdivision boundary does not match the atom");
  int top = -1;
  for (std::size_t x = 0; x < P.size(); ++x) {
    if (P.dim(static_cast<int>(x)) == n) top = static_cast<int>(x);
  }
  AtomSubdivision out;
  out.atom = A;
  out.fine = V;
  out.c = Comap{V->poset, A->poset, std::vector<int>(Q.size(), top)};
  for (int v : members(bq)) out.c.assign[v] = (*iso)[v];
  return out;
}

}  // namespace forge
