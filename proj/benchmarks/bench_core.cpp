// Microbenchmarks for the hot paths: determinants, ideal computations,
// module membership, and the full analysis pipeline.

#include "hautus/analyzer.hpp"
#include "hautus/genericity.hpp"
#include "hautus/groebner.hpp"
#include "hautus/module_groebner.hpp"
#include "hautus/pointfinder.hpp"
#include "hautus/poly_text.hpp"
#include "hautus/polymatrix.hpp"
#include "hautus/rng.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace hautus;

PolyMatrix sample_matrix(int rows, int cols, int nvars, int degree, std::uint64_t seed) {
    SampleSpec spec;
    spec.rows = rows;
    spec.cols = cols;
    spec.nvars = nvars;
    spec.degree = degree;
    SplitMix64 rng(seed);
    return random_matrix(spec, rng);
}

PolyMatrix curl_scaled() {
    return parse_matrix_text("vars: 3\n0; -d3; d2\nd3; 0; -d1\n-d1*d2; d1^2; 0\n");
}

void BM_determinant_4x4(benchmark::State& state) {
    const PolyMatrix m = sample_matrix(4, 4, 2, 1, 11);
    for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_determinant_4x4);

void BM_minors_2_of_3x3(benchmark::State& state) {
    const PolyMatrix m = curl_scaled();
    for (auto _ : state) benchmark::DoNotOptimize(minors(m, 2));
}
BENCHMARK(BM_minors_2_of_3x3);

void BM_poly_gcd_planted(benchmark::State& state) {
    SplitMix64 rng(12);
    SampleSpec spec;
    spec.nvars = 2;
    spec.degree = 3;
    const Poly g = random_poly(spec, rng);
    const Poly a = random_poly(spec, rng) * g;
    const Poly b = random_poly(spec, rng) * g;
    for (auto _ : state) benchmark::DoNotOptimize(poly_gcd(a, b));
}
BENCHMARK(BM_poly_gcd_planted);

void BM_buchberger_fitting(benchmark::State& state) {
    const IdealBasis fitting(3, minors(curl_scaled(), 2).nonzero_values());
    for (auto _ : state) benchmark::DoNotOptimize(buchberger(fitting));
}
BENCHMARK(BM_buchberger_fitting);

void BM_krull_dimension(benchmark::State& state) {
    const IdealBasis fitting(3, minors(curl_scaled(), 2).nonzero_values());
    for (auto _ : state) benchmark::DoNotOptimize(krull_dimension(fitting));
}
BENCHMARK(BM_krull_dimension);

void BM_module_membership(benchmark::State& state) {
    const PolyMatrix m = curl_scaled();
    const ModuleGroebnerBasis gb = module_buchberger(SubmoduleBasis::row_module(m));
    const VectorPoly probe(3, {parse_poly("-d2", 3), parse_poly("d1", 3), Poly::zero(3)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(module_membership(probe, gb));
        benchmark::DoNotOptimize(module_membership(probe.scaled_by(parse_poly("d1", 3)), gb));
    }
}
BENCHMARK(BM_module_membership);

void BM_integer_point_search(benchmark::State& state) {
    const Poly sphere = parse_poly("d1^2 + d2^2 - 5", 2);
    for (auto _ : state) benchmark::DoNotOptimize(has_integer_points(sphere));
}
BENCHMARK(BM_integer_point_search);

void BM_analyze_curl(benchmark::State& state) {
    const PolyMatrix m = curl_scaled();
    for (auto _ : state) benchmark::DoNotOptimize(analyze(m, {}));
}
BENCHMARK(BM_analyze_curl);

void BM_analyze_random_2x3(benchmark::State& state) {
    const PolyMatrix m = sample_matrix(2, 3, 2, 2, 13);
    for (auto _ : state) benchmark::DoNotOptimize(analyze(m, {}));
}
BENCHMARK(BM_analyze_random_2x3);

} // namespace

BENCHMARK_MAIN();
