#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sre/bigint.hpp"
#include "sre/expr.hpp"

namespace sre {

// Exact coefficient sequences, indexed by expression size n:
//   r[n]  number of $-free expressions of size n over k symbols
//   l[n]  total number of symbol occurrences across those expressions
//   p[n]  total of the p_upper support-size bound across them
struct CoeffTable {
    long long k = 0;
    int n_max = 0;
    std::vector<BigInt> r, l, p;
};

// Convolution recurrences derived from the generating functions
//   R = z + kz + 3 z R^2 + z R
//   L = kz + 6 z L R + z L            (letters: two children, three ops)
//   P = kz + 6 z P R + z P + z P^2
// Quadratic time, exact integer arithmetic.
CoeffTable coefficients(long long k, int n_max);

// Every $-free expression of size exactly `size` over the pool's
// alphabet, each exactly once, in a fixed deterministic order. Throws
// BudgetError when the expression count exceeds `guard`.
void enumerate_exprs(ExprPool& pool, int size, const std::function<void(Expr)>& fn,
                     std::uint64_t guard = 10'000'000);

struct Radii {
    double rho = 0;       // radius of convergence of R_k
    double rho_prime = 0; // the second singularity governing P_k
};

// rho   = (-1 + 2 sqrt(3+3k)) / (11+12k)
// rho'  = (-1 + 2 sqrt(3+4k)) / (11+16k)
Radii radii(long long k);

// Closed-form asymptotic evaluation at (k, n). Everything is computed in
// log space so n up to 1e8 and beyond stays finite.
struct AsymptoticReport {
    long long k = 0;
    long long n = 0;
    double rho = 0;
    double rho_prime = 0;
    double av_letters = 0;  // mean alphabetic width of a size-n expression
    double av_pi_log2 = 0;  // log2 of the mean support-size bound
    double ratio = 0;       // av_pi_log2 / av_letters
    double per_letter = 0;  // 2^ratio: mean bound per letter, tends to 4/3
};

AsymptoticReport asymptotics(long long k, long long n);

// Relative error |exact - asymptotic| / exact of the closed asymptotic
// coefficient forms against the exact table entries at n.
struct AgreementReport {
    double r_rel_error = 0;
    double l_rel_error = 0;
};

AgreementReport coefficient_asymptotic_agreement(const CoeffTable& table, int n);

// CSV helpers, schema: n,k,r,l,p (exact decimal integers).
std::string series_csv(const CoeffTable& table);
// Schema: k,n,rho,rho_prime,avL,avP_log2,ratio,per_letter.
std::string asymptotics_csv(const AsymptoticReport& report);

} // namespace sre
