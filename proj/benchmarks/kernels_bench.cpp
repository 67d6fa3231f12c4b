#include <benchmark/benchmark.h>

#include <cyclo/cyclo.hpp>

namespace {

// Binary fast path: dual(C_n) over F_2 has dimension phi(n).
void BM_BinaryMinDistance(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const cyclo::CyclicCode code = cyclo::dual(cyclo::build_cn(n, cyclo::make_prime_field(2)));
  const cyclo::GenMatrix g = cyclo::generator_matrix(code);
  for (auto _ : state) benchmark::DoNotOptimize(cyclo::min_distance(g, {cyclo::kDefaultBudget, 1}).d);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cyclo::codeword_count(g.field(), code.dimension())));
  state.counters["k"] = static_cast<double>(code.dimension());
}
BENCHMARK(BM_BinaryMinDistance)->Arg(15)->Arg(21)->Arg(33)->Arg(35)->Unit(benchmark::kMillisecond);

// Table-driven q-ary path.
void BM_QaryMinDistance(benchmark::State& state) {
  const cyclo::FieldCtx field = cyclo::parse_field(state.range(0) == 0 ? "3" : state.range(0) == 1 ? "4" : "7");
  const std::size_t n = state.range(0) == 0 ? 20 : state.range(0) == 1 ? 21 : 30;
  const cyclo::CyclicCode code = cyclo::dual(cyclo::build_cn(n, field));
  const cyclo::GenMatrix g = cyclo::generator_matrix(code);
  for (auto _ : state) benchmark::DoNotOptimize(cyclo::min_distance(g, {cyclo::kDefaultBudget, 1}).d);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cyclo::codeword_count(field, code.dimension())));
  state.SetLabel("F_" + field.literal() + " n=" + std::to_string(n));
}
BENCHMARK(BM_QaryMinDistance)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_IntegerCyclotomic(benchmark::State& state) {
  const cyclo::FieldCtx f2 = cyclo::make_prime_field(2);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cyclo::cyclotomic_poly(n, f2));
}
BENCHMARK(BM_IntegerCyclotomic)->Arg(105)->Arg(1155);

void BM_PolyOrder(benchmark::State& state) {
  const cyclo::FieldCtx f9 = cyclo::parse_field("9");
  const cyclo::Poly q = cyclo::cyclotomic_poly(static_cast<std::uint64_t>(state.range(0)), f9);
  for (auto _ : state) benchmark::DoNotOptimize(cyclo::poly_order(q));
}
BENCHMARK(BM_PolyOrder)->Arg(35)->Arg(59);

void BM_Rref(benchmark::State& state) {
  const cyclo::FieldCtx f = cyclo::parse_field("5");
  const auto n = static_cast<std::size_t>(state.range(0));
  const cyclo::GenMatrix g = cyclo::generator_matrix(cyclo::build_cn(n, f));
  for (auto _ : state) benchmark::DoNotOptimize(cyclo::rref(g));
}
BENCHMARK(BM_Rref)->Arg(24)->Arg(63)->Arg(126);

void BM_TensorEquivalence(benchmark::State& state) {
  const cyclo::FieldCtx f2 = cyclo::make_prime_field(2);
  for (auto _ : state) {
    const cyclo::GenMatrix image = cyclo::apply_psi(
        cyclo::direct_product(cyclo::dual(cyclo::build_cn(5, f2)), cyclo::dual(cyclo::build_cn(7, f2))),
        cyclo::crt_map(5, 7));
    benchmark::DoNotOptimize(cyclo::same_code(image, cyclo::dual(cyclo::build_cn(35, f2))));
  }
}
BENCHMARK(BM_TensorEquivalence);

}  // namespace

BENCHMARK_MAIN();
