#include "simplexity/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace simplexity {

namespace {

// Largest n for which n! and the companion powers are evaluated directly
// in long double; beyond this everything moves to the log domain.
constexpr int kDirectLimit = 140;

long double factorial_ld(int n) {
    long double f = 1.0L;
    for (int i = 2; i <= n; ++i) f *= static_cast<long double>(i);
    return f;
}

long double log_factorial(int n) {
    return std::lgamma(static_cast<long double>(n) + 1.0L);
}

// base^k by repeated multiplication; exact whenever the result is (small
// integers stay exact, unlike a transcendental pow path).
long double ipow_ld(long double base, int k) {
    long double r = 1.0L;
    for (int i = 0; i < k; ++i) r *= base;
    return r;
}

void require_positive(int n, int least) {
    if (n < least)
        throw std::invalid_argument("n = " + std::to_string(n) + " below supported minimum " +
                                    std::to_string(least));
}

}  // namespace

double euclidean_bound(int n) {
    require_positive(n, 1);
    if (n <= kDirectLimit) {
        const long double half_root = std::sqrt(static_cast<long double>(n) + 1.0L) / 2.0L;
        return static_cast<double>(factorial_ld(n) / (2.0L * ipow_ld(half_root, n + 1)));
    }
    const long double ln2 = std::log(2.0L);
    const long double log_e = log_factorial(n) - ln2 -
                              (n + 1) * (0.5L * std::log(static_cast<long double>(n) + 1.0L) - ln2);
    return static_cast<double>(std::exp(log_e));
}

double lemma1_rho_bound(int n) {
    require_positive(n, 1);
    if (n <= kDirectLimit) {
        const long double half_root = std::sqrt(static_cast<long double>(n) + 1.0L) / 2.0L;
        return static_cast<double>(2.0L * ipow_ld(half_root, n + 1));
    }
    const long double ln2 = std::log(2.0L);
    const long double log_b =
        ln2 + (n + 1) * (0.5L * std::log(static_cast<long double>(n) + 1.0L) - ln2);
    return static_cast<double>(std::exp(log_b));
}

double smith_bound(int n) {
    require_positive(n, 1);
    if (n <= kDirectLimit) {
        const long double np1 = static_cast<long double>(n) + 1.0L;
        return static_cast<double>(0.5L * std::pow(6.0L, n / 2.0L) *
                                   std::pow(np1, -(n + 1) / 2.0L) * factorial_ld(n));
    }
    const long double log_s = -std::log(2.0L) + 0.5L * n * std::log(6.0L) -
                              0.5L * (n + 1) * std::log(static_cast<long double>(n) + 1.0L) +
                              log_factorial(n);
    return static_cast<double>(std::exp(log_s));
}

double asymptotic_bound(int n) {
    require_positive(n, 1);
    const long double np1 = static_cast<long double>(n) + 1.0L;
    if (n % 2 == 1) return static_cast<double>(ipow_ld(np1, (n - 1) / 2));
    if (n <= kDirectLimit) return static_cast<double>(std::pow(np1, (n - 1) / 2.0L));
    return static_cast<double>(std::exp(0.5L * (n - 1) * std::log(np1)));
}

double ratio_diagnostic(int n) {
    require_positive(n, 2);
    // F(n)/E(n) = (n+1)^n / (2^n n!), so the n-th root is evaluated
    // entirely in the log domain.
    const long double np1 = static_cast<long double>(n) + 1.0L;
    const long double log_ratio = n * std::log(np1) - n * std::log(2.0L) - log_factorial(n);
    return static_cast<double>(std::exp(log_ratio / n));
}

std::vector<BoundsRow> bounds_table(int n_max) {
    require_positive(n_max, 1);
    // dis(n) reference values for n = 3..8; constants quoted from the
    // literature, not reproduced by this code.
    static constexpr long kKnownDis[] = {5, 16, 61, 270, 1175, 5522};
    std::vector<BoundsRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        BoundsRow row{n, euclidean_bound(n), asymptotic_bound(n), smith_bound(n),
                      lemma1_rho_bound(n), std::nullopt};
        if (n >= 3 && n <= 8) row.known_dis = kKnownDis[n - 3];
        rows.push_back(row);
    }
    return rows;
}

std::string bounds_table_csv(const std::vector<BoundsRow>& rows) {
    std::string out = "n,E,F,H_lower,rho_bound,known_dis\n";
    char buf[64];
    auto format = [&buf](double v) {
        std::snprintf(buf, sizeof buf, "%.10g", v);
        return std::string(buf);
    };
    for (const BoundsRow& row : rows) {
        out += std::to_string(row.n);
        out += ',';
        out += format(row.E);
        out += ',';
        out += format(row.F);
        out += ',';
        out += format(row.H_lower);
        out += ',';
        out += format(row.rho_bound);
        out += ',';
        if (row.known_dis) out += std::to_string(*row.known_dis);
        out += '\n';
    }
    return out;
}

}  // namespace simplexity
