#include <benchmark/benchmark.h>

#include "lucasbt/quadfield.hpp"
#include "lucasbt/recurrence.hpp"
#include "lucasbt/series.hpp"
#include "lucasbt/transform.hpp"

using lucasbt::Integer;
using lucasbt::TransformParams;

namespace {

const lucasbt::SequenceSpec kSpec = lucasbt::iterated_lucas_spec(TransformParams(1, 1));

void BM_TermIterative(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        Integer value = lucasbt::term_at_iterative(kSpec, n);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_TermIterative)->Range(64, 65536);

void BM_TermMatrix(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        Integer value = lucasbt::term_at(kSpec, n);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_TermMatrix)->Range(64, 65536);

void BM_TermModIterative(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    lucasbt::Modulus mod{Integer(1000000007)};
    for (auto _ : state) {
        Integer value = lucasbt::term_at_mod_iterative(kSpec, n, mod);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_TermModIterative)->Range(1024, 1048576);

void BM_TermModMatrix(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    lucasbt::Modulus mod{Integer(1000000007)};
    for (auto _ : state) {
        Integer value = lucasbt::term_at_mod(kSpec, n, mod);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_TermModMatrix)->Range(1024, 1048576);

void BM_BinomialTransform(benchmark::State& state) {
    const auto count = static_cast<std::size_t>(state.range(0));
    std::vector<Integer> prefix = lucasbt::terms(lucasbt::k_lucas_spec(1), count);
    for (auto _ : state) {
        std::vector<Integer> transformed = lucasbt::binomial_transform(prefix);
        benchmark::DoNotOptimize(transformed);
    }
}
BENCHMARK(BM_BinomialTransform)->Range(16, 512);

void BM_BinetTerm(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    TransformParams params(1, 1);
    for (auto _ : state) {
        Integer value = lucasbt::binet_term(params, n);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_BinetTerm)->Range(64, 4096);

void BM_GfExpand(benchmark::State& state) {
    const auto count = static_cast<std::size_t>(state.range(0));
    TransformParams params(1, 1);
    for (auto _ : state) {
        std::vector<lucasbt::Rational> coeffs = lucasbt::gf_expand(params, count);
        benchmark::DoNotOptimize(coeffs);
    }
}
BENCHMARK(BM_GfExpand)->Range(16, 512);

} // namespace

BENCHMARK_MAIN();
