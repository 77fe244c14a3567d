#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace simplexity {

// All exact arithmetic runs on GMP. Rationals are kept canonical
// (lowest terms, positive denominator) by mpq_class itself.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

// Canonical "p/q" form; integers print without the "/1" suffix.
inline std::string to_fraction_string(const Rational& q) {
    return q.get_str();
}

inline std::string to_string(const Int& z) {
    return z.get_str();
}

// Accepts "p" or "p/q" with arbitrary-precision parts.
inline Rational rational_from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(std::string(s), 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + std::string(s));
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
    q.canonicalize();
    return q;
}

inline Int factorial_int(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative number");
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

inline Int binomial_int(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

inline Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

}  // namespace simplexity
