#include <benchmark/benchmark.h>

#include "pluricalc/family.hpp"
#include "pluricalc/nefbuilder.hpp"
#include "pluricalc/ratmat.hpp"
#include "pluricalc/singularity.hpp"
#include "pluricalc/toric3.hpp"
#include "pluricalc/zariski.hpp"

using namespace pluricalc;

static void BM_DenseDet(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(static_cast<long>((i * 7 + j * 3) % 11) - 5, 1 + (i + j) % 3);
  for (auto _ : st) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_DenseDet)->Arg(8)->Arg(16)->Arg(32);

static void BM_ChainDiscrepancy(benchmark::State& st) {
  const auto g = chain(std::vector<std::int64_t>(static_cast<std::size_t>(st.range(0)), 3));
  for (auto _ : st) benchmark::DoNotOptimize(discrepancy_coeffs(g));
}
BENCHMARK(BM_ChainDiscrepancy)->Arg(10)->Arg(100)->Arg(1000);

static void BM_Resolve(benchmark::State& st) {
  std::int64_t n = 1000003, q = 12345;
  for (auto _ : st) benchmark::DoNotOptimize(resolve(CyclicQuotientType(n, q)));
}
BENCHMARK(BM_Resolve);

static void BM_UnitEquation(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(solve_unit_equation(st.range(0)));
}
BENCHMARK(BM_UnitEquation)->Arg(6)->Arg(10);

static void BM_Classify(benchmark::State& st) {
  ClassifyOptions o;
  o.epsilon = Rational(11, 30);
  o.strict = true;
  o.threads = 1;
  for (auto _ : st) benchmark::DoNotOptimize(classify_chains(o));
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMillisecond);

static void BM_ZariskiChain(benchmark::State& st) {
  Configuration cfg;
  const auto n = static_cast<std::size_t>(st.range(0));
  cfg.graph = chain(std::vector<std::int64_t>(n, 2));
  ExternalClass b;
  b.id = "B";
  b.dots.assign(n, 0);
  b.dots[0] = 1;
  cfg.externals.push_back(b);
  LatticeDivisor d;
  d.base = BaseTerm{"B", 1};
  d.coeffs.assign(n, 1);
  for (auto _ : st) benchmark::DoNotOptimize(zariski_decompose(cfg, d));
}
BENCHMARK(BM_ZariskiChain)->Arg(8)->Arg(32);

static void BM_NefCertificate(benchmark::State& st) {
  std::vector<std::int64_t> ks;
  for (std::int64_t k = 4; k < 4 + st.range(0); ++k) ks.push_back(k);
  const auto inp = make_nef_input(45, 4, ks);
  for (auto _ : st) benchmark::DoNotOptimize(verify_exceptional(inp, build_coeffs(inp)));
}
BENCHMARK(BM_NefCertificate)->Arg(10)->Arg(50);

static void BM_FamilyBuild(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(build_family(st.range(0), 3));
}
BENCHMARK(BM_FamilyBuild)->Arg(4)->Arg(12);

static void BM_NonNef(benchmark::State& st) {
  const auto f = build_family(5, 2);
  for (auto _ : st) benchmark::DoNotOptimize(exhaustive_non_nef(f, 4, 50'000'000, 1));
}
BENCHMARK(BM_NonNef)->Unit(benchmark::kMillisecond);

static void BM_ToricCheck(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(floored_pullback_check({9, 5, 2}, 3, st.range(0) != 0));
}
BENCHMARK(BM_ToricCheck)->Arg(0)->Arg(1);

BENCHMARK_MAIN();
