#include "forge/complex.hpp"
#include "forge/constructions.hpp"
#include "forge/corpus.hpp"
#include "forge/iso.hpp"
#include "forge/molcat.hpp"
#include "forge/random.hpp"
#include "forge/shapes.hpp"

#include <benchmark/benchmark.h>

using namespace forge;

namespace {

std::vector<Cert> sample(std::size_t n, int max_dim, std::size_t max_size) {
  MoleculeGenerator gen(7, max_dim, max_size);
  std::vector<Cert> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(gen.molecule());
  return out;
}

void BM_Boundary(benchmark::State& st) {
  const auto ms = sample(64, 4, 60);
  for (auto _ : st) {
    for (const Cert& c : ms) {
      const OgPoset& P = c->P();
      for (int k = 0; k < P.dim(); ++k) benchmark::DoNotOptimize(boundary(P, k, Sign::Minus));
    }
  }
}
BENCHMARK(BM_Boundary);

void BM_Recognize(benchmark::State& st) {
  const auto ms = sample(64, static_cast<int>(st.range(0)), 60);
  std::vector<PosetPtr> ps;
  for (const Cert& c : ms) ps.push_back(share(OgPoset::validate(c->P().raw())));
  for (auto _ : st) {
    for (const PosetPtr& P : ps) benchmark::DoNotOptimize(is_molecule(P));
  }
}
BENCHMARK(BM_Recognize)->Arg(2)->Arg(3)->Arg(4);

void BM_FindIso(benchmark::State& st) {
  const auto ms = sample(64, 4, 60);
  for (auto _ : st) {
    for (const Cert& c : ms) benchmark::DoNotOptimize(find_iso(c->P(), c->P()));
  }
}
BENCHMARK(BM_FindIso);

void BM_GrayCube(benchmark::State& st) {
  const OgPoset O1 = globe(1)->P();
  for (auto _ : st) benchmark::DoNotOptimize(gray(gray(O1, O1), O1));
}
BENCHMARK(BM_GrayCube);

void BM_Invertor(benchmark::State& st) {
  auto U = find_fixture("composition-atom")->poset;
  for (auto _ : st) benchmark::DoNotOptimize(invertor(U, "LR"));
}
BENCHMARK(BM_Invertor);

void BM_WalkingEquivalence(benchmark::State& st) {
  auto O1 = globe(1)->poset;
  for (auto _ : st) benchmark::DoNotOptimize(walking_equivalence(O1, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_WalkingEquivalence)->DenseRange(3, 6);

void BM_StricterCheck(benchmark::State& st) {
  for (auto _ : st) {
    MolStructure C(share(interchange()));
    benchmark::DoNotOptimize(stricter_check(C, 2, 9));
  }
}
BENCHMARK(BM_StricterCheck)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
