#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "wirebraid/analysis.hpp"
#include "wirebraid/garside.hpp"
#include "wirebraid/oracle.hpp"
#include "wirebraid/presentation.hpp"
#include "wirebraid/representations.hpp"
#include "wirebraid/strings.hpp"

namespace {

wb::Network fixture(const std::string& name) {
  return wb::load_network_file(std::string(WIREBRAID_FIXTURE_DIR) + "/" + name + ".json");
}

void BM_OracleReport(benchmark::State& state, const char* name) {
  wb::Network net = fixture(name);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    wb::Oracle o(net, n);
    benchmark::DoNotOptimize(o.report());
  }
}
BENCHMARK_CAPTURE(BM_OracleReport, trijunction, "trijunction")->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_OracleReport, theta, "theta")->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_CubeComplexH1(benchmark::State& state) {
  wb::Network fine = wb::subdivide(fixture("fig5b"), 2).fine;
  for (auto _ : state) {
    wb::CubeComplex cx(fine, 2);
    benchmark::DoNotOptimize(cx.h1_rank());
  }
}
BENCHMARK(BM_CubeComplexH1)->Unit(benchmark::kMillisecond);

void BM_GarsideNormalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const size_t len = static_cast<size_t>(state.range(1));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> gen(1, n - 1), sign(0, 1);
  wb::garside::PlanarWord w(len);
  for (int& x : w) x = sign(rng) ? gen(rng) : -gen(rng);
  for (auto _ : state) benchmark::DoNotOptimize(wb::garside::normal_form(n, w));
  state.SetComplexityN(state.range(1));
}
BENCHMARK(BM_GarsideNormalForm)->ArgsProduct({{4, 8}, {16, 64, 256}});

void BM_EquivalentTheta(benchmark::State& state) {
  wb::Network net = fixture("theta");
  wb::Analysis a = wb::analyze(net);
  wb::Word u = wb::parse_word("s[v;2,1]", &net), v = wb::parse_word("s[w;2,1]", &net);
  for (auto _ : state) benchmark::DoNotOptimize(wb::equivalent(a, 2, u, v));
}
BENCHMARK(BM_EquivalentTheta)->Unit(benchmark::kMicrosecond);

void BM_VerifyMajorana(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  wb::Analysis a = wb::analyze(fixture("fig5b"));
  wb::Presentation p = wb::emit_presentation(a, n);
  wb::UnitaryAssignment u = wb::majorana_assignment(a, n);
  for (auto _ : state) benchmark::DoNotOptimize(wb::verify_presentation(u, p));
}
BENCHMARK(BM_VerifyMajorana)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMicrosecond);

void BM_ThetaComposite(benchmark::State& state) {
  wb::Network net = fixture("theta_ext");
  wb::ThetaOptions opt;
  opt.n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wb::theta_composite(net, opt));
}
BENCHMARK(BM_ThetaComposite)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_StringExpansion(benchmark::State& state) {
  wb::Network net = fixture("trijunction");
  const int n = static_cast<int>(state.range(0));
  wb::Choreographer ch(net, n);
  std::vector<int> a(static_cast<size_t>(n), 2);
  a.back() = 1;
  wb::MoveSequence seq = wb::expand_simple_braid(ch, {"v", a});
  wb::StringConfiguration start = wb::initial_configuration(ch);
  for (auto _ : state) benchmark::DoNotOptimize(wb::run_sequence(ch.sub().fine, start, seq));
}
BENCHMARK(BM_StringExpansion)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
