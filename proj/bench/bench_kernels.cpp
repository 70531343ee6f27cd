#include <benchmark/benchmark.h>

#include "classlab/classes.hpp"
#include "classlab/config.hpp"
#include "classlab/realization.hpp"
#include "classlab/structure.hpp"

using namespace classlab;

namespace {

// Γ = A5 ≀ C4 over the cosets of C2 (order 14400) and H = A4 × A5.
const RealizationCertificate& wreath_case() {
  static const RealizationCertificate cert = [] {
    RealizeOptions options;
    options.top = named::cyclic(4);
    options.brute_check = false;
    return realize(named::cyclic(2), options);
  }();
  return cert;
}

void BM_NormalizerParallel(benchmark::State& state) {
  const auto& cert = wreath_case();
  cert.gamma.elements();
  for (auto _ : state) benchmark::DoNotOptimize(normalizer_bits(cert.gamma, cert.h));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cert.gamma.order()));
}

void BM_NormalizerSerial(benchmark::State& state) {
  const auto& cert = wreath_case();
  cert.gamma.elements();
  for (auto _ : state) benchmark::DoNotOptimize(normalizer_bits_serial(cert.gamma, cert.h));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cert.gamma.order()));
}

void BM_NormalizerA6Subgroups(benchmark::State& state) {
  auto a6 = named::alternating(6);
  auto subs = subgroups(a6, limits().subgroup_limit);
  bool parallel = state.range(0) != 0;
  for (auto _ : state)
    for (const auto& h : subs)
      benchmark::DoNotOptimize(parallel ? normalizer_bits(a6, h) : normalizer_bits_serial(a6, h));
  state.SetLabel(parallel ? "parallel" : "serial");
}

void BM_Audit(benchmark::State& state) {
  static const Catalog u = build_universe(UniverseSpec::with_default_extras());
  set_jobs(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (auto p : {Property::C0, Property::C1, Property::C2, Property::C3})
      benchmark::DoNotOptimize(audit_property(cls::nilpotent(), u, p));
  set_jobs(0);
}

}  // namespace

BENCHMARK(BM_NormalizerParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NormalizerSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NormalizerA6Subgroups)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Audit)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
