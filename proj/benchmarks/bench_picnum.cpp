#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "picnum/classifier.hpp"
#include "picnum/clifford.hpp"
#include "picnum/fourier_mukai.hpp"
#include "picnum/split_oracle.hpp"

using namespace picnum;

namespace {

std::vector<Rational> random_rationals(std::size_t n) {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<long long> num(-1000000, 1000000);
  std::uniform_int_distribution<long long> den(1, 1000000);
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(num(rng), den(rng));
  return out;
}

void BM_RationalArithmetic(benchmark::State& state) {
  const auto qs = random_rationals(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const Rational& a = qs[i % qs.size()];
    const Rational& b = qs[(i + 1) % qs.size()];
    benchmark::DoNotOptimize(a * b + a - b);
    benchmark::DoNotOptimize(a < b);
    ++i;
  }
}
BENCHMARK(BM_RationalArithmetic);

void BM_SectionBound(benchmark::State& state) {
  const Genus g(4);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long long> rk(1, 5);
  std::uniform_int_distribution<long long> dg(-12, 12);
  std::vector<HNPolygon> polys;
  for (int i = 0; i < 256; ++i) {
    std::vector<NumClass> segs;
    for (int k = 0; k < 4; ++k) segs.emplace_back(rk(rng), dg(rng));
    polys.push_back(HNPolygon::merge_equal_slopes(segs));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(h0_upper_bound(g, polys[i % polys.size()]).bound);
    ++i;
  }
}
BENCHMARK(BM_SectionBound);

void BM_ClassifySweep(benchmark::State& state) {
  const Genus g(3);
  for (auto _ : state) {
    long long unknowns = 0;
    for (long long r = 1; r <= 4; ++r)
      for (long long d = -20; d <= 20; ++d) {
        const Verdict v = classify(g, NumClass(r, d), Assumption::semistable);
        if (v.conclusion == Conclusion::unknown) ++unknowns;
      }
    benchmark::DoNotOptimize(unknowns);
  }
}
BENCHMARK(BM_ClassifySweep);

void BM_OracleEnumerate(benchmark::State& state) {
  const Genus g(state.range(0));
  for (auto _ : state) {
    const auto bundles = enumerate_bundles(g, 3, -2, 2 * g.g);
    benchmark::DoNotOptimize(bundles.size());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<long long>(enumerate_bundles(g, 3, -2, 2 * g.g).size()));
}
BENCHMARK(BM_OracleEnumerate)->Arg(2)->Arg(3)->Arg(4);

void BM_OracleVerifyGrid(benchmark::State& state) {
  const Genus g(state.range(0));
  const auto bundles = enumerate_bundles(g, 3, -2, 2 * g.g);
  for (auto _ : state) {
    long long bad = 0;
    for (const auto& b : bundles)
      if (!verify_bundle(b).ok) ++bad;
    benchmark::DoNotOptimize(bad);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(bundles.size()));
}
BENCHMARK(BM_OracleVerifyGrid)->Arg(2)->Arg(3)->Arg(4);

void BM_DominanceCertificate(benchmark::State& state) {
  const Genus g(2);
  const NumClass c(3, static_cast<long long>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_f0_slope_dominance(g, c).pass);
  }
}
BENCHMARK(BM_DominanceCertificate)->Arg(20)->Arg(60)->Arg(120);

}  // namespace

BENCHMARK_MAIN();
