#include <benchmark/benchmark.h>

#include "gwa/enumeration.hpp"
#include "gwa/semidirect.hpp"

namespace {

void BM_ValidateGwaS3(benchmark::State& state) {
  const gwa::FiniteGwa g = gwa::conjugation_gwa(gwa::symmetric_group_s3());
  for (auto _ : state) {
    benchmark::DoNotOptimize(gwa::validate_gwa(g).ok());
  }
}
BENCHMARK(BM_ValidateGwaS3);

void BM_DerivedActionCheck(benchmark::State& state) {
  const gwa::ActionTriple t =
      gwa::self_action(gwa::conjugation_gwa(gwa::symmetric_group_s3()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gwa::is_derived_action(t).ok());
  }
}
BENCHMARK(BM_DerivedActionCheck);

void BM_AuditTheorem33_Z2(benchmark::State& state) {
  const gwa::FiniteGwa z2 = gwa::identity_action_gwa(gwa::cyclic_group(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gwa::audit_theorem_3_3(z2, z2).agree);
  }
}
BENCHMARK(BM_AuditTheorem33_Z2);

void BM_SampledAudit43_Z3(benchmark::State& state) {
  const gwa::FiniteGwa z3 = gwa::identity_action_gwa(gwa::cyclic_group(3));
  gwa::AuditOptions opt;
  opt.max_exhaustive = 1;  // force sampling
  opt.samples = static_cast<std::uint64_t>(state.range(0));
  opt.seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gwa::audit_theorem_4_3(z3, z3, opt).agree);
  }
}
BENCHMARK(BM_SampledAudit43_Z3)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
