#include <benchmark/benchmark.h>

#include "charsum/reference.hpp"
#include "charsum/sums.hpp"

using namespace charsum;

namespace {

const Field& field_3_8() {
    static const Field f({3, 1, 8});
    return f;
}

const Field& field_2_16() {
    static const Field f({2, 1, 16});
    return f;
}

Poly quadratic(const Field& f) { return Poly::from_roots(f, std::vector<Elt>{f.one(), f.generator()}); }

void BM_Restricted_Reference(benchmark::State& st) {
    const Field& f = field_3_8();
    const auto fam = hyperplane_avoiding_family(f, std::vector<std::uint32_t>(8, 0));
    const auto chi = char_of_index(f, 1);
    const auto p = quadratic(f);
    for (auto _ : st) benchmark::DoNotOptimize(reference::char_sum(f, fam, chi, p));
}

void BM_Restricted_Parallel(benchmark::State& st) {
    const Field& f = field_3_8();
    const auto fam = hyperplane_avoiding_family(f, std::vector<std::uint32_t>(8, 0));
    const auto chi = char_of_index(f, 1);
    const auto p = quadratic(f);
    for (auto _ : st) benchmark::DoNotOptimize(char_sum(f, fam, chi, p));
}

void BM_Sparse_Reference(benchmark::State& st) {
    const Field& f = field_2_16();
    const auto chi = char_of_index(f, 3);
    const auto p = quadratic(f);
    for (auto _ : st) benchmark::DoNotOptimize(reference::char_sum(f, SparseSpec{5}, chi, p));
}

void BM_Sparse_Parallel(benchmark::State& st) {
    const Field& f = field_2_16();
    const auto chi = char_of_index(f, 3);
    const auto p = quadratic(f);
    for (auto _ : st) benchmark::DoNotOptimize(char_sum(f, SparseSpec{5}, chi, p));
}

void BM_Sparse_Decomposition(benchmark::State& st) {
    const Field& f = field_2_16();
    const auto chi = char_of_index(f, 3);
    const auto p = quadratic(f);
    for (auto _ : st) benchmark::DoNotOptimize(merge_all(mi_decomposition(f, SparseSpec{5}, chi, p)));
}

}  // namespace

BENCHMARK(BM_Restricted_Reference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Restricted_Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sparse_Reference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sparse_Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sparse_Decomposition)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
