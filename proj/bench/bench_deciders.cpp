// Serial reference path against the OpenMP path on the same workloads.

#include <benchmark/benchmark.h>

#include "folnewt/decision.hpp"
#include "oracles/corpus.hpp"

namespace {

using namespace folnewt;

const std::vector<Atlas>& workload() {
  static const std::vector<Atlas> atlases = [] {
    corpus::Shape shape;
    shape.min_degree = 1;
    std::vector<Atlas> out;
    for (const auto& inst : corpus::generate(12, 7, shape)) out.push_back(load_space(inst.doc));
    return out;
  }();
  return atlases;
}

ExecPolicy policy_of(const benchmark::State& state) {
  return state.range(0) == 0 ? ExecPolicy::serial : ExecPolicy::parallel;
}

void BM_DirectCheck(benchmark::State& state) {
  DecisionOptions opts;
  opts.search_witness = false;
  opts.policy = policy_of(state);
  for (auto _ : state) {
    for (const auto& a : workload()) benchmark::DoNotOptimize(check_nnd_direct(a, opts).outcome);
  }
  state.SetLabel(opts.policy == ExecPolicy::serial ? "serial" : "parallel");
}

void BM_PolyhedraSystem(benchmark::State& state) {
  const ExecPolicy policy = policy_of(state);
  for (auto _ : state) {
    for (const auto& a : workload()) benchmark::DoNotOptimize(newton_polyhedra_system(a, policy).polyhedra.size());
  }
  state.SetLabel(policy == ExecPolicy::serial ? "serial" : "parallel");
}

void BM_CompactFaces(benchmark::State& state) {
  const ExecPolicy policy = policy_of(state);
  const LabelSet axes{"a", "b", "c"};
  SupportSet s{axes, {{6, 0, 0}, {0, 6, 0}, {0, 0, 6}, {2, 2, 1}, {1, 2, 2}, {2, 1, 2}, {3, 3, 0}, {0, 3, 3}}};
  const NewtonPolyhedron n = newton_vertices(s);
  for (auto _ : state) benchmark::DoNotOptimize(compact_faces(n, s, policy).size());
  state.SetLabel(policy == ExecPolicy::serial ? "serial" : "parallel");
}

void BM_LogsingAfterDesing(benchmark::State& state) {
  const ExecPolicy policy = policy_of(state);
  std::vector<Atlas> desingularized;
  for (const auto& a : workload()) {
    DesingResult d = desingularize(a, Strategy::lex_first, 16, policy);
    if (d.complete) desingularized.push_back(std::move(d.atlas));
  }
  for (auto _ : state) {
    for (const auto& a : desingularized) benchmark::DoNotOptimize(logsing_empty(a, groebner::Fuel{}, policy).empty);
  }
  state.SetLabel(policy == ExecPolicy::serial ? "serial" : "parallel");
}

BENCHMARK(BM_DirectCheck)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PolyhedraSystem)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CompactFaces)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LogsingAfterDesing)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
