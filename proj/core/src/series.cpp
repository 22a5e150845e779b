#include "sre/series.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "sre/errors.hpp"

namespace sre {

namespace {

constexpr int kMaxTableSize = 50'000; // quadratic recurrences, big operands

// log2 of a + b given log2 a and log2 b, without leaving log space.
double log2_sum(double la, double lb) {
    double hi = std::max(la, lb);
    double lo = std::min(la, lb);
    return hi + std::log2(1.0 + std::exp2(lo - hi));
}

// log2 of the closed asymptotic form for [z^n]R_k.
double log2_r_asymptotic(long long k, double rho, long long n) {
    double dk = static_cast<double>(k);
    return 0.25 * std::log2(3 + 3 * dk) - std::log2(6.0) - 0.5 * std::log2(M_PI) +
           (-static_cast<double>(n) - 0.5) * std::log2(rho) -
           1.5 * std::log2(static_cast<double>(n) + 1.0);
}

// log2 of the closed asymptotic form for [z^n]L_k.
double log2_l_asymptotic(long long k, double rho, long long n) {
    double dk = static_cast<double>(k);
    return std::log2(dk) - std::log2(2.0) - 0.5 * std::log2(M_PI) -
           0.25 * std::log2(3 + 3 * dk) + (-static_cast<double>(n) + 0.5) * std::log2(rho) -
           0.5 * std::log2(static_cast<double>(n));
}

// log2 of the closed asymptotic form for [z^n]P_k: two square-root
// singularities, the inner one dominates.
double log2_p_asymptotic(long long k, double rho, double rho_prime, long long n) {
    double dk = static_cast<double>(k);
    double nn = static_cast<double>(n);
    double t1 = 0.25 * std::log2(3 + 3 * dk) + (-nn - 0.5) * std::log2(rho);
    double t2 = 0.25 * std::log2(3 + 4 * dk) + (-nn - 0.5) * std::log2(rho_prime);
    return log2_sum(t1, t2) - std::log2(4.0) - 0.5 * std::log2(M_PI) -
           1.5 * std::log2(nn + 1.0);
}

std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

} // namespace

CoeffTable coefficients(long long k, int n_max) {
    if (k < 1) throw std::invalid_argument("alphabet size must be positive");
    if (n_max < 1) throw std::invalid_argument("n_max must be positive");
    if (n_max > kMaxTableSize) {
        throw BudgetError("coefficient table size exceeds the resource guard");
    }

    CoeffTable t;
    t.k = k;
    t.n_max = n_max;
    std::size_t len = static_cast<std::size_t>(n_max) + 1;
    t.r.assign(len, 0);
    t.l.assign(len, 0);
    t.p.assign(len, 0);

    for (int n = 1; n <= n_max; ++n) {
        BigInt rr = (n == 1) ? BigInt(1 + k) : BigInt(0);
        BigInt ll = (n == 1) ? BigInt(k) : BigInt(0);
        BigInt pp = (n == 1) ? BigInt(k) : BigInt(0);
        for (int i = 0; i <= n - 1; ++i) {
            int j = n - 1 - i;
            rr += 3 * t.r[i] * t.r[j];
            ll += 6 * t.l[i] * t.r[j];
            pp += 6 * t.p[i] * t.r[j] + t.p[i] * t.p[j];
        }
        rr += t.r[n - 1];
        ll += t.l[n - 1];
        pp += t.p[n - 1];
        t.r[static_cast<std::size_t>(n)] = rr;
        t.l[static_cast<std::size_t>(n)] = ll;
        t.p[static_cast<std::size_t>(n)] = pp;
    }
    return t;
}

namespace {

void enumerate_rec(ExprPool& pool, int n, const std::function<void(Expr)>& fn) {
    if (n == 1) {
        fn(pool.eps());
        for (int s = 0; s < pool.alphabet().size(); ++s) fn(pool.sym(s));
        return;
    }
    enumerate_rec(pool, n - 1, [&](Expr c) { fn(pool.make_star(c)); });
    for (int i = 1; i <= n - 2; ++i) {
        enumerate_rec(pool, i, [&](Expr l) {
            enumerate_rec(pool, n - 1 - i, [&](Expr r) {
                fn(pool.make_union(l, r));
                fn(pool.make_concat(l, r));
                fn(pool.make_shuffle(l, r));
            });
        });
    }
}

} // namespace

void enumerate_exprs(ExprPool& pool, int size, const std::function<void(Expr)>& fn,
                     std::uint64_t guard) {
    if (size < 1) throw std::invalid_argument("expression size must be positive");
    CoeffTable t = coefficients(pool.alphabet().size(), size);
    if (t.r[static_cast<std::size_t>(size)] > BigInt(guard)) {
        throw BudgetError("enumeration exceeds the expression-count guard");
    }
    enumerate_rec(pool, size, fn);
}

Radii radii(long long k) {
    if (k < 1) throw std::invalid_argument("alphabet size must be positive");
    double dk = static_cast<double>(k);
    Radii out;
    out.rho = (-1.0 + 2.0 * std::sqrt(3.0 + 3.0 * dk)) / (11.0 + 12.0 * dk);
    out.rho_prime = (-1.0 + 2.0 * std::sqrt(3.0 + 4.0 * dk)) / (11.0 + 16.0 * dk);
    return out;
}

AsymptoticReport asymptotics(long long k, long long n) {
    if (k < 1 || n < 1) throw std::invalid_argument("k and n must be positive");
    Radii rad = radii(k);
    double dk = static_cast<double>(k);
    double nn = static_cast<double>(n);

    AsymptoticReport rep;
    rep.k = k;
    rep.n = n;
    rep.rho = rad.rho;
    rep.rho_prime = rad.rho_prime;
    rep.av_letters = 3.0 * dk * rad.rho / std::sqrt(3.0 + 3.0 * dk) *
                     std::pow(nn + 1.0, 1.5) / std::sqrt(nn);
    rep.av_pi_log2 = log2_p_asymptotic(k, rad.rho, rad.rho_prime, n) -
                     log2_r_asymptotic(k, rad.rho, n);
    rep.ratio = rep.av_pi_log2 / rep.av_letters;
    rep.per_letter = std::exp2(rep.ratio);
    return rep;
}

AgreementReport coefficient_asymptotic_agreement(const CoeffTable& table, int n) {
    if (n < 1 || n > table.n_max) throw std::invalid_argument("n outside the computed table");
    Radii rad = radii(table.k);

    AgreementReport rep;
    double r_exact = log2_value(table.r[static_cast<std::size_t>(n)]);
    double l_exact = log2_value(table.l[static_cast<std::size_t>(n)]);
    rep.r_rel_error = std::abs(1.0 - std::exp2(log2_r_asymptotic(table.k, rad.rho, n) - r_exact));
    rep.l_rel_error = std::abs(1.0 - std::exp2(log2_l_asymptotic(table.k, rad.rho, n) - l_exact));
    return rep;
}

std::string series_csv(const CoeffTable& table) {
    std::string out = "n,k,r,l,p\n";
    for (int n = 1; n <= table.n_max; ++n) {
        auto i = static_cast<std::size_t>(n);
        out += std::to_string(n) + "," + std::to_string(table.k) + "," + table.r[i].str() + "," +
               table.l[i].str() + "," + table.p[i].str() + "\n";
    }
    return out;
}

std::string asymptotics_csv(const AsymptoticReport& rep) {
    std::string out = "k,n,rho,rho_prime,avL,avP_log2,ratio,per_letter\n";
    out += std::to_string(rep.k) + "," + std::to_string(rep.n) + "," + format_double(rep.rho) +
           "," + format_double(rep.rho_prime) + "," + format_double(rep.av_letters) + "," +
           format_double(rep.av_pi_log2) + "," + format_double(rep.ratio) + "," +
           format_double(rep.per_letter) + "\n";
    return out;
}

} // namespace sre
