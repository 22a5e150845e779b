#include "sre/sample.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "sre/derive.hpp"
#include "sre/errors.hpp"

namespace sre {

BigInt uniform_below(std::mt19937_64& rng, const BigInt& bound) {
    if (bound <= 0) throw std::invalid_argument("uniform_below needs a positive bound");
    if (bound == 1) return 0;
    unsigned bits = boost::multiprecision::msb(bound - 1) + 1;
    for (;;) {
        BigInt v = 0;
        unsigned produced = 0;
        while (produced < bits) {
            v <<= 64;
            v |= rng();
            produced += 64;
        }
        v >>= (produced - bits);
        if (v < bound) return v;
    }
}

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

namespace {

Expr sample_rec(ExprPool& pool, const CoeffTable& table, int n, std::mt19937_64& rng) {
    int k = pool.alphabet().size();
    if (n == 1) {
        BigInt u = uniform_below(rng, BigInt(1 + k));
        if (u == 0) return pool.eps();
        return pool.sym(u.convert_to<int>() - 1);
    }
    const BigInt& total = table.r[static_cast<std::size_t>(n)];
    BigInt u = uniform_below(rng, total);

    // star production contributes r[n-1]
    const BigInt& star_weight = table.r[static_cast<std::size_t>(n - 1)];
    if (u < star_weight) {
        return pool.make_star(sample_rec(pool, table, n - 1, rng));
    }
    u -= star_weight;

    // the three binary productions contribute 3 * sum r[i] r[n-1-i]
    BigInt split_total = (total - star_weight) / 3;
    int op = (u / split_total).convert_to<int>();
    BigInt v = u % split_total;

    int i = 1;
    for (;; ++i) {
        BigInt weight =
            table.r[static_cast<std::size_t>(i)] * table.r[static_cast<std::size_t>(n - 1 - i)];
        if (v < weight) break;
        v -= weight;
    }
    Expr left = sample_rec(pool, table, i, rng);
    Expr right = sample_rec(pool, table, n - 1 - i, rng);
    switch (op) {
    case 0: return pool.make_union(left, right);
    case 1: return pool.make_concat(left, right);
    default: return pool.make_shuffle(left, right);
    }
}

} // namespace

Expr sample_uniform(ExprPool& pool, const CoeffTable& table, int size, std::mt19937_64& rng) {
    if (size < 1) throw std::invalid_argument("expression size must be positive");
    if (table.k != pool.alphabet().size()) {
        throw std::invalid_argument("coefficient table does not match the pool alphabet");
    }
    if (size > table.n_max) throw std::invalid_argument("size outside the computed table");
    return sample_rec(pool, table, size, rng);
}

SampleStats run_stats(long long k, int n, long long samples, std::uint64_t seed,
                      const SampleLimits& limits) {
    if (samples < 1) throw std::invalid_argument("need at least one sample");

    Alphabet alphabet = Alphabet::prefix(static_cast<int>(k));
    CoeffTable table = coefficients(k, n);

    SampleStats stats;
    stats.k = k;
    stats.n = n;
    stats.samples = samples;
    stats.seed = seed;

    double sum_width = 0, sum_pi = 0, sum_states = 0, sum_worst = 0, sum_avg = 0;
    long long kept = 0;

    DeriveLimits derive_limits{limits.closure_states, limits.pi_items};
    for (long long i = 0; i < samples; ++i) {
        std::mt19937_64 rng = substream(seed, static_cast<std::uint64_t>(i));
        ExprPool pool(alphabet);
        Expr e = sample_uniform(pool, table, n, rng);
        ExprSet support;
        try {
            support = pi(pool, e, derive_limits);
        } catch (const BudgetError&) {
            ++stats.censored;
            continue;
        }
        // states of the automaton: the support plus the origin when new
        long long states =
            static_cast<long long>(support.size()) + (support.contains(e) ? 0 : 1);
        long long width = e.alphabetic_width();

        ++kept;
        sum_width += static_cast<double>(width);
        sum_pi += static_cast<double>(support.size());
        sum_states += static_cast<double>(states);
        sum_worst += std::exp2(static_cast<double>(width));
        sum_avg += std::pow(4.0 / 3.0, static_cast<double>(width));
        stats.max_pi = std::max(stats.max_pi, static_cast<long long>(support.size()));
    }

    if (kept > 0) {
        double d = static_cast<double>(kept);
        stats.mean_width = sum_width / d;
        stats.mean_pi = sum_pi / d;
        stats.mean_states = sum_states / d;
        stats.bound_worst = sum_worst / d;
        stats.bound_avg = sum_avg / d;
    }
    return stats;
}

std::string stats_csv(const SampleStats& s) {
    std::ostringstream os;
    os << "k,n,samples,seed,mean_width,mean_pi,max_pi,mean_states,bound_worst,bound_avg,censored\n"
       << s.k << ',' << s.n << ',' << s.samples << ',' << s.seed << ',' << std::setprecision(12)
       << s.mean_width << ',' << s.mean_pi << ',' << s.max_pi << ',' << s.mean_states << ','
       << s.bound_worst << ',' << s.bound_avg << ',' << s.censored << '\n';
    return os.str();
}

} // namespace sre
