// Micro-benchmarks for the hot paths: Smith reduction, the circle model,
// symmetric-product chain complexes, the splitting pipeline, and first-page
// assembly. Run with --benchmark_filter=<regex> to pick a subset.

#include <confighom/bounds.hpp>
#include <confighom/braid.hpp>
#include <confighom/chain_complex.hpp>
#include <confighom/coefficients.hpp>
#include <confighom/graded_group.hpp>
#include <confighom/smith.hpp>
#include <confighom/spsym.hpp>
#include <confighom/tsp.hpp>

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace confighom;

IntMatrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-9, 9);
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = dist(rng);
    return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    IntMatrix m = random_matrix(n, n, 7);
    for (auto _ : state) {
        SmithResult s = smith_normal_form(m);
        benchmark::DoNotOptimize(s.rank);
    }
}
BENCHMARK(BM_SmithNormalForm)->Arg(10)->Arg(20)->Arg(40);

void BM_CircleModelHomology(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        GradedGroup h = tsp::tp_circle_complex(n).homology(Coefficients::integers());
        benchmark::DoNotOptimize(h.max_degree());
    }
}
BENCHMARK(BM_CircleModelHomology)->Arg(10)->Arg(50);

void BM_SphereSymmetricProduct(benchmark::State& state) {
    const long n = state.range(0);
    const auto sphere = spsym::TwoComplexPresentation::sphere();
    for (auto _ : state) {
        GradedGroup h =
            spsym::sp_chain_complex(sphere, n, false).homology(Coefficients::integers());
        benchmark::DoNotOptimize(h.max_degree());
    }
}
BENCHMARK(BM_SphereSymmetricProduct)->Arg(5)->Arg(10)->Arg(20);

void BM_WedgeSymmetricProduct(benchmark::State& state) {
    const long w = state.range(0);
    const long n = state.range(1);
    const auto wedge = spsym::TwoComplexPresentation::wedge_of_circles(w);
    for (auto _ : state) {
        GradedGroup h =
            spsym::sp_chain_complex(wedge, n, false).homology(Coefficients::mod(2));
        benchmark::DoNotOptimize(h.max_degree());
    }
}
BENCHMARK(BM_WedgeSymmetricProduct)->Args({4, 4})->Args({6, 6})->Args({8, 8});

void BM_CircleBraidPipeline(benchmark::State& state) {
    const long k = state.range(0);
    braid::SpaceDescriptor closed;
    closed.d = 1;
    closed.closed = true;
    closed.quotient_model = "circle";
    const Coefficients f2 = Coefficients::mod(2);
    for (auto _ : state) {
        GradedGroup h = braid::braid_cohomology(closed, k, f2);
        benchmark::DoNotOptimize(h.max_degree());
    }
}
BENCHMARK(BM_CircleBraidPipeline)->Arg(10)->Arg(30);

void BM_MultiPunctureSplit(benchmark::State& state) {
    const long n = state.range(0);
    const Coefficients f2 = Coefficients::mod(2);
    std::vector<GradedGroup> base;
    for (long m = 0; m <= n; ++m) {
        GradedGroup t(f2, false);
        for (long q = 0; q <= m; ++q) t.add_free(q, 1);
        base.push_back(std::move(t));
    }
    for (auto _ : state) {
        GradedGroup h = braid::multi_puncture_split(base, 2, 3, n, f2, true);
        benchmark::DoNotOptimize(h.max_degree());
    }
}
BENCHMARK(BM_MultiPunctureSplit)->Arg(8)->Arg(15);

void BM_FirstPageAssembly(benchmark::State& state) {
    const long k = state.range(0);
    const Coefficients f2 = Coefficients::mod(2);
    auto rel_wedge = spsym::sp_relative_family(
        spsym::TwoComplexPresentation::wedge_of_circles(k), k, f2);
    std::vector<GradedGroup> rel_susp;
    for (long j = 0; j <= k / 2; ++j) {
        GradedGroup t(f2, false);
        t.add_free(2 * j, weak_composition_count(k, j).get_si());
        rel_susp.push_back(std::move(t));
    }
    for (auto _ : state) {
        bounds::BigradedTable e1 = bounds::bcm_e1_assemble(rel_wedge, rel_susp, k, f2);
        benchmark::DoNotOptimize(e1.min_total_degree());
    }
}
BENCHMARK(BM_FirstPageAssembly)->Arg(8)->Arg(14);

} // namespace

BENCHMARK_MAIN();
