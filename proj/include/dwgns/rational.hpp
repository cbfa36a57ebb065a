#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace dwgns {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

// Accepts "p", "-p" and "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Reads a non-negative limit from an environment variable, falling back to `fallback`.
std::uint64_t env_limit(const char* name, std::uint64_t fallback);

}  // namespace dwgns
