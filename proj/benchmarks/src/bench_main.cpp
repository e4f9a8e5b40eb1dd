#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "monoconv/atomic_conv.hpp"
#include "monoconv/semigroup.hpp"
#include "monoconv/transforms.hpp"

using namespace monoconv;

namespace {

AtomicMeasure random_atomic(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> loc(-5.0, 5.0), w(0.1, 1.0);
    std::vector<Atom> atoms;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        atoms.push_back({loc(rng), w(rng)});
        total += atoms.back().w;
    }
    for (auto& a : atoms) a.w /= total;
    return AtomicMeasure(atoms);
}

void BM_PointConvolve(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const AtomicMeasure nu = random_atomic(std::size_t(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(point_convolve(1.3, nu));
}
BENCHMARK(BM_PointConvolve)->Arg(4)->Arg(16)->Arg(64);

void BM_MonotoneConvolveAtomic(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const std::size_t n = std::size_t(state.range(0));
    const AtomicMeasure mu = random_atomic(n, rng), nu = random_atomic(n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(monotone_convolve_atomic(mu, nu));
}
BENCHMARK(BM_MonotoneConvolveAtomic)->Arg(4)->Arg(8)->Arg(16);

void BM_Flow(benchmark::State& state) {
    const VectorField V(0.5, AtomicMeasure({{-1.0, 0.3}, {1.0, 0.7}}));
    const double t = double(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(flow(V, cplx(0.4, 1.0), t));
}
BENCHMARK(BM_Flow)->Arg(1)->Arg(4);

void BM_StieltjesInvert(benchmark::State& state) {
    const AtomicMeasure tau({{0.0, 1.0}});
    const TransformEvaluator h = flow_evaluator(VectorField(0.0, tau), 1.0);
    std::vector<double> xs;
    const int n = int(state.range(0));
    for (int i = 0; i < n; ++i) xs.push_back(-1.4 + 2.8 * (i + 0.5) / n);
    for (auto _ : state) benchmark::DoNotOptimize(stieltjes_invert(h, xs));
}
BENCHMARK(BM_StieltjesInvert)->Arg(32)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
