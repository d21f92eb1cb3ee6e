#include <benchmark/benchmark.h>

#include <random>

#include "wickring/state_space.hpp"

using namespace wickring;

namespace {

RingElement make_element(std::mt19937& rng, const TruncationSpec& spec, double density) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> keep(0.0, 1.0);
    RingElement f(spec);
    for (const auto& alpha : enumerate_indices(spec))
        if (keep(rng) < density)
            f.set_coeff(alpha, {u(rng), u(rng)});
    return f;
}

RingMatrix make_matrix(std::mt19937& rng, const TruncationSpec& spec, std::uint32_t n,
                       double density, double scale = 1.0) {
    RingMatrix m(spec, n, n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            m.at(i, j) = make_element(rng, spec, density).scale(scale);
    return m;
}

void BM_wick_mul(benchmark::State& state) {
    const TruncationSpec spec{static_cast<std::uint32_t>(state.range(0)),
                              static_cast<std::uint32_t>(state.range(1))};
    std::mt19937 rng(1);
    const RingElement f = make_element(rng, spec, 0.5);
    const RingElement g = make_element(rng, spec, 0.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_wick_mul)->Args({2, 6})->Args({3, 6})->Args({4, 8});

void BM_matrix_inverse(benchmark::State& state) {
    const TruncationSpec spec{2, 6};
    const auto n = static_cast<std::uint32_t>(state.range(0));
    std::mt19937 rng(2);
    RingMatrix m = make_matrix(rng, spec, n, 0.4, 0.2);
    for (std::uint32_t i = 0; i < n; ++i)
        m.at(i, i) = m.at(i, i) + RingElement::one(spec);
    for (auto _ : state)
        benchmark::DoNotOptimize(m.inverse());
}
BENCHMARK(BM_matrix_inverse)->Arg(2)->Arg(3)->Arg(4);

void BM_markov(benchmark::State& state) {
    const TruncationSpec spec{2, 6};
    std::mt19937 rng(3);
    const std::uint32_t n = 3;
    const StateSpaceSystem sys(make_matrix(rng, spec, n, 0.4, 0.3),
                               make_matrix(rng, spec, n, 0.4),
                               make_matrix(rng, spec, n, 0.4),
                               make_matrix(rng, spec, n, 0.4));
    for (auto _ : state)
        benchmark::DoNotOptimize(markov(sys, static_cast<std::uint32_t>(state.range(0))));
}
BENCHMARK(BM_markov)->Arg(8)->Arg(16);

void BM_char_poly(benchmark::State& state) {
    const TruncationSpec spec{2, 6};
    std::mt19937 rng(4);
    const RingMatrix m =
        make_matrix(rng, spec, static_cast<std::uint32_t>(state.range(0)), 0.4);
    for (auto _ : state)
        benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_char_poly)->Arg(2)->Arg(3)->Arg(4);

} // namespace

BENCHMARK_MAIN();
