#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

namespace gibgcd {

/// Exact signed integer of unbounded size.
using Integer = mpz_class;

/// Signed sequence index.
using Index = std::int64_t;

/// Parses an optionally signed decimal integer; throws PreconditionError on
/// anything else (including empty input and a leading '+').
Integer parse_integer(std::string_view text);

inline std::string to_string(const Integer& value) { return value.get_str(); }

/// Non-negative gcd; gcd(0, x) = |x|.
inline Integer gcd(const Integer& a, const Integer& b) {
  Integer result;
  mpz_gcd(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return result;
}

/// gcd over a collection; the empty collection yields 0.
Integer gcd_of(std::span<const Integer> values);
Integer gcd_of(std::initializer_list<Integer> values);

Integer pow(const Integer& base, std::uint64_t exponent);

/// True when `divisor` divides `value`. Only 0 is divisible by 0.
bool divides(const Integer& divisor, const Integer& value);

inline bool is_even(Index n) { return n % 2 == 0; }

/// (-1)^n for any signed n.
inline int minus_one_pow(Index n) { return is_even(n) ? 1 : -1; }

}  // namespace gibgcd
