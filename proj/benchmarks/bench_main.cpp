#include <benchmark/benchmark.h>

#include "sre/derive.hpp"
#include "sre/lang.hpp"
#include "sre/nfa.hpp"
#include "sre/sample.hpp"
#include "sre/series.hpp"

namespace {

sre::Alphabet distinct_letters(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
    return sre::Alphabet(names);
}

void BM_BuildApdShuffleFamily(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    sre::Alphabet alphabet = distinct_letters(n);
    for (auto _ : state) {
        sre::ExprPool pool(alphabet);
        sre::Expr e = pool.sym(0);
        for (int i = 1; i < n; ++i) e = pool.make_shuffle(e, pool.sym(i));
        benchmark::DoNotOptimize(sre::build_apd(pool, e).state_count());
    }
    state.SetComplexityN(1 << n);
}
BENCHMARK(BM_BuildApdShuffleFamily)->DenseRange(4, 12, 2)->Complexity();

void BM_SupportOfRandomExpr(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    sre::Alphabet alphabet = sre::Alphabet::prefix(3);
    sre::CoeffTable table = sre::coefficients(3, n);
    std::uint64_t index = 0;
    for (auto _ : state) {
        auto rng = sre::substream(7, index++);
        sre::ExprPool pool(alphabet);
        sre::Expr e = sre::sample_uniform(pool, table, n, rng);
        benchmark::DoNotOptimize(sre::pi(pool, e).size());
    }
}
BENCHMARK(BM_SupportOfRandomExpr)->Arg(20)->Arg(50)->Arg(100);

void BM_Coefficients(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sre::coefficients(2, n).r.back());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_Coefficients)->RangeMultiplier(4)->Range(64, 1024)->Complexity();

void BM_SampleUniform(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    sre::Alphabet alphabet = sre::Alphabet::prefix(2);
    sre::CoeffTable table = sre::coefficients(2, n);
    std::uint64_t index = 0;
    for (auto _ : state) {
        auto rng = sre::substream(13, index++);
        sre::ExprPool pool(alphabet);
        benchmark::DoNotOptimize(sre::sample_uniform(pool, table, n, rng).id());
    }
}
BENCHMARK(BM_SampleUniform)->Arg(50)->Arg(200);

void BM_BoundedLanguage(benchmark::State& state) {
    sre::ExprPool pool(sre::Alphabet::prefix(2));
    sre::Expr e = pool.make_star(pool.make_shuffle(pool.sym(0), pool.sym(1)));
    int limit = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sre::bounded_language(e, limit).words.size());
    }
}
BENCHMARK(BM_BoundedLanguage)->DenseRange(4, 10, 2);

void BM_NfaMember(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    sre::ExprPool pool(distinct_letters(n));
    sre::Expr e = pool.sym(0);
    for (int i = 1; i < n; ++i) e = pool.make_shuffle(e, pool.sym(i));
    sre::Nfa nfa = sre::build_apd(pool, e);
    sre::Word w;
    for (int i = n - 1; i >= 0; --i) w.push_back(i);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sre::nfa_member(nfa, w));
    }
}
BENCHMARK(BM_NfaMember)->Arg(6)->Arg(10)->Arg(12);

} // namespace

BENCHMARK_MAIN();
