#include <benchmark/benchmark.h>

#include <random>

#include "twistcert/certificates.h"
#include "twistcert/homology.h"
#include "twistcert/presentation.h"

namespace twistcert {
namespace {

Word random_word(std::size_t length, unsigned seed) {
  static const char* names[] = {"b", "a1", "a2", "r"};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, 3);
  std::bernoulli_distribution neg(0.5);
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < length; ++i) letters.emplace_back(names[pick(rng)], neg(rng) ? -1 : 1);
  return Word(std::move(letters));
}

void BM_FreeReduce(benchmark::State& state) {
  const Word w = random_word(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(free_reduce(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FreeReduce)->RangeMultiplier(4)->Range(64, 1 << 16)->Complexity();

void BM_VerifyScript(benchmark::State& state) {
  const Certificate cert = build_theorem2_certificate(
      SurfaceSpec::parse("n:7"), CurveClass::parse("sep:o1,n5"), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_script(cert.script));
  state.counters["steps"] = static_cast<double>(cert.script.steps.size());
}
BENCHMARK(BM_VerifyScript)->Arg(1)->Arg(8)->Arg(32);

void BM_BuildCertificate(benchmark::State& state) {
  const SurfaceSpec s = SurfaceSpec::parse("n:7");
  const CurveClass c = CurveClass::parse("sep:o1,n5");
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_theorem2_certificate(s, c, state.range(0)));
  }
}
BENCHMARK(BM_BuildCertificate)->Arg(1)->Arg(8)->Arg(32);

void BM_VerifyCertificate(benchmark::State& state) {
  const Certificate cert = build_theorem1_certificate(SurfaceSpec::parse("o:3"),
                                                      CurveClass::parse("nonsep:oc"), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(cert));
}
BENCHMARK(BM_VerifyCertificate)->Arg(1)->Arg(32);

void BM_EvaluateRep(benchmark::State& state) {
  const HomologyAssignment ha = genus3_assignment();
  // Random words overflow int64 quickly; powers of the star word stay bounded.
  const Word w = power(parse_word("(b a1 a2 a3)^3"), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_rep(w, ha));
  state.counters["letters"] = static_cast<double>(w.size());
}
BENCHMARK(BM_EvaluateRep)->Arg(10)->Arg(100);

}  // namespace
}  // namespace twistcert

BENCHMARK_MAIN();
