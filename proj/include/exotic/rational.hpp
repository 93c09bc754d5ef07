#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace exotic {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline long gcd_long(long a, long b) {
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

inline long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

inline long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

// Exact square root of a nonnegative rational, if it is a perfect square.
inline std::optional<Rat> sqrt_exact(const Rat& q) {
    if (q < 0) return std::nullopt;
    Rat canon = q;
    canon.canonicalize();
    Int num = canon.get_num(), den = canon.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rat(rn, rd);
}

inline Rat parse_rational(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

} // namespace exotic
