#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "murmur/arith.hpp"
#include "murmur/kloosterman.hpp"
#include "murmur/petersson.hpp"
#include "murmur/special.hpp"

namespace {

const murmur::arith::ArithTables& tables() {
  static const murmur::arith::ArithTables t(200000);
  return t;
}

void BM_KloostermanDirect(benchmark::State& state) {
  const auto c = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(murmur::arith::kloosterman_direct({17, 29, c}));
  }
}
BENCHMARK(BM_KloostermanDirect)->Arg(997)->Arg(30030)->Arg(65536)->Arg(199999);

void BM_KloostermanFast(benchmark::State& state) {
  const auto c = static_cast<std::uint64_t>(state.range(0));
  const auto& t = tables();
  for (auto _ : state) {
    benchmark::DoNotOptimize(murmur::arith::kloosterman_fast({17, 29, c}, t));
  }
}
BENCHMARK(BM_KloostermanFast)->Arg(997)->Arg(30030)->Arg(65536)->Arg(199999);

// Arguments straddle the series, backward-recurrence and forward-recurrence regimes.
void BM_BesselJ(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const double x = static_cast<double>(state.range(1)) / 10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(murmur::special::bessel_j(order, x));
  }
}
BENCHMARK(BM_BesselJ)
    ->Args({11, 20})
    ->Args({11, 200})
    ->Args({11, 2000})
    ->Args({200, 1500})
    ->Args({200, 6000});

void BM_PeterssonDelta(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto n = static_cast<std::uint64_t>(state.range(1));
  const auto& t = tables();
  for (auto _ : state) {
    benchmark::DoNotOptimize(murmur::petersson::petersson_delta({k, 1, n}, t).value);
  }
}
BENCHMARK(BM_PeterssonDelta)->Args({12, 7})->Args({40, 997})->Args({160, 9973});

}  // namespace

BENCHMARK_MAIN();
