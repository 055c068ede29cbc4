#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cpk {

// Exact arithmetic everywhere: cluster numbers and avoider counts overflow
// 64 bits quickly, and certified root brackets need exact rationals.
using Int = mpz_class;
using Rat = mpq_class;

// Bad user-facing input (pattern strings, duplicate word entries, ...).
struct invalid_input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A configurable guard was exceeded (brute-force size, linext ceiling).
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// mpq_class does not reduce on construction; every two-argument rational
// must pass through here unless the literal is visibly coprime.
inline Rat rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int factorial(int n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// Falling factorial (a)_l = a (a-1) ... (a-l+1).
inline Int falling(int a, int l) {
    Int r = 1;
    for (int i = 0; i < l; ++i) r *= a - i;
    return r;
}

// Parses decimal strings such as "0.001", "1e-6", "2.5e-3" or plain
// fractions "1/1024" into an exact rational.
Rat parse_rational(const std::string& text);

// Decimal rendering with the given number of fraction digits, truncated
// toward zero. Used only for human-readable output; exact values travel
// as strings of the form "p/q".
std::string decimal_string(const Rat& value, int digits);

inline std::string fraction_string(const Rat& value) {
    return value.get_str();
}

}  // namespace cpk
