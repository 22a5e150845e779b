#pragma once

#include <cstdint>
#include <random>

#include "sre/bigint.hpp"
#include "sre/expr.hpp"
#include "sre/series.hpp"

namespace sre {

// Uniform draw from [0, bound) by rejection on fixed-width bit blocks.
// Deterministic given the engine state; bound must be positive.
BigInt uniform_below(std::mt19937_64& rng, const BigInt& bound);

// Independent, reproducible per-sample stream: two runs with the same
// (seed, index) produce identical engines regardless of evaluation order.
std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index);

// Draws each $-free expression of size `size` over the pool's alphabet
// with probability exactly 1/r[size], by the recursive counting method:
// the root production is chosen with probability proportional to its
// coefficient contribution, binary splits proportionally to
// r[i]*r[size-1-i]. `table` must cover the pool's alphabet size and
// n_max >= size.
Expr sample_uniform(ExprPool& pool, const CoeffTable& table, int size,
                    std::mt19937_64& rng);

// Per-sample censoring budgets for the statistics harness; samples whose
// support or closure computation exceeds them are counted, never silently
// dropped.
struct SampleLimits {
    std::size_t closure_states = 200'000;
    std::size_t pi_items = 2'000'000;
};

struct SampleStats {
    long long k = 0;
    int n = 0;
    long long samples = 0;
    std::uint64_t seed = 0;
    double mean_width = 0;
    double mean_pi = 0;
    long long max_pi = 0;
    double mean_states = 0;
    double bound_worst = 0; // mean over samples of 2^width
    double bound_avg = 0;   // mean over samples of (4/3)^width
    long long censored = 0;
};

// Draws `samples` expressions of size n over the first k letters and
// aggregates support sizes, automaton state counts and widths.
// Deterministic given (k, n, samples, seed). Aggregates are over the
// uncensored samples.
SampleStats run_stats(long long k, int n, long long samples, std::uint64_t seed,
                      const SampleLimits& limits = {});

// CSV row, schema:
// k,n,samples,seed,mean_width,mean_pi,max_pi,mean_states,bound_worst,bound_avg,censored
std::string stats_csv(const SampleStats& stats);

} // namespace sre
