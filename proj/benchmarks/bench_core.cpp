// Microbenchmarks for the rewrite kernel and the trace evaluators.

#include <benchmark/benchmark.h>

#include "hecke/element.hpp"
#include "hecke/inductive.hpp"
#include "hecke/markov.hpp"

#include <random>
#include <vector>

namespace {

using namespace hecke;

GenWord random_word(std::mt19937_64& rng, int n, int len) {
    GenWord w;
    for (int i = 0; i < len; ++i) {
        if (rng() % 3 == 0)
            w.push_back(GenLetter::t());
        else
            w.push_back(GenLetter::s(1 + static_cast<int>(
                                             rng() % static_cast<unsigned>(
                                                 n - 1))));
    }
    return w;
}

void BM_normalize_random_word(benchmark::State& state) {
    const int m = 3, n = 4, len = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    std::vector<GenWord> words;
    for (int i = 0; i < 32; ++i) words.push_back(random_word(rng, n, len));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(normalize_word(m, n, words[i % words.size()]));
        ++i;
    }
}
BENCHMARK(BM_normalize_random_word)->Arg(8)->Arg(16);

void BM_mul_H3(benchmark::State& state) {
    const int m = 3, n = 3;
    Element a = mul(jm(m, n, 3), Element::perm_elt(
                                     m, n, Permutation::adjacent(n, 1)));
    Element b = mul(Element::perm_elt(m, n, Permutation::adjacent(n, 2)),
                    jm(m, n, 2));
    for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_mul_H3);

void BM_reduce_power(benchmark::State& state) {
    const int m = 4, n = 3;
    for (auto _ : state)
        benchmark::DoNotOptimize(elt_pow(jm(m, n, 3), m + 1));
}
BENCHMARK(BM_reduce_power);

void BM_tr_eval_H3(benchmark::State& state) {
    const int m = 2, n = 3;
    Element x = mul(mul(jm(m, n, 2), jm(m, n, 3)),
                    Element::perm_elt(m, n, Permutation::adjacent(n, 2)));
    for (auto _ : state) benchmark::DoNotOptimize(tr_symbolic(x));
}
BENCHMARK(BM_tr_eval_H3);

void BM_Tr_eval_H3(benchmark::State& state) {
    const int m = 2, n = 3;
    Element x = mul(mul(jm(m, n, 2), jm(m, n, 3)),
                    Element::perm_elt(m, n, Permutation::adjacent(n, 2)));
    for (auto _ : state) benchmark::DoNotOptimize(Tr_symbolic(x));
}
BENCHMARK(BM_Tr_eval_H3);

void BM_decompose_J_H3(benchmark::State& state) {
    const int m = 2, n = 3;
    Element x = mul(mul(jm(m, n, 3), jm(m, n, 1)),
                    Element::perm_elt(m, n, Permutation::adjacent(n, 2)));
    for (auto _ : state) benchmark::DoNotOptimize(decompose_J(x));
}
BENCHMARK(BM_decompose_J_H3);

}  // namespace

BENCHMARK_MAIN();
