#include <benchmark/benchmark.h>

#include "cobordia/cobordism.hpp"
#include "cobordia/fixtures.hpp"
#include "cobordia/gf2.hpp"
#include "cobordia/oracle.hpp"

using namespace cobordia;

static void BM_reduce_random(benchmark::State& state) {
    const auto size = static_cast<std::size_t>(state.range(0));
    fixtures::Rng rng(99);
    std::vector<SparseGF2Matrix> inputs;
    for (int i = 0; i < 8; ++i)
        inputs.push_back(fixtures::random_sparse_matrix(rng, size, size, 0.1));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(reduce(inputs[i++ % inputs.size()]));
    }
}
BENCHMARK(BM_reduce_random)->Arg(64)->Arg(128)->Arg(256);

static void BM_kernel_pairs_cylinder(benchmark::State& state) {
    const auto complex = fixtures::cylinder();
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel_pairs(complex, Block::A));
    }
}
BENCHMARK(BM_kernel_pairs_cylinder);

static void BM_cobordism_pipeline_cylinder(benchmark::State& state) {
    const auto complex = fixtures::cylinder_with_middle();
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_cobordisms(complex));
    }
}
BENCHMARK(BM_cobordism_pipeline_cylinder);

static void BM_cobordism_pipeline_random(benchmark::State& state) {
    const auto complex = fixtures::random_labeled_complex(5, 30);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_cobordisms(complex));
    }
}
BENCHMARK(BM_cobordism_pipeline_random);

static void BM_oracle_barcode_random(benchmark::State& state) {
    const auto complex = fixtures::random_labeled_complex(5, 30);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::barcode(complex));
    }
}
BENCHMARK(BM_oracle_barcode_random);

static void BM_delaunay_lattice(benchmark::State& state) {
    const auto lattice = fixtures::lattice_cloud();
    for (auto _ : state) {
        benchmark::DoNotOptimize(delaunay(lattice.cloud));
    }
}
BENCHMARK(BM_delaunay_lattice)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
