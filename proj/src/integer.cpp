#include "gibgcd/integer.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "gibgcd/errors.hpp"

namespace gibgcd {

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](unsigned char ch) { return std::isdigit(ch) != 0; })) {
    throw PreconditionError("not a decimal integer: '" + std::string(text) +
                            "'");
  }
  return Integer(std::string(text), 10);
}

Integer gcd_of(std::span<const Integer> values) {
  Integer result = 0;
  for (const auto& v : values) {
    mpz_gcd(result.get_mpz_t(), result.get_mpz_t(), v.get_mpz_t());
  }
  return result;
}

Integer gcd_of(std::initializer_list<Integer> values) {
  return gcd_of(std::span<const Integer>(values.begin(), values.size()));
}

Integer pow(const Integer& base, std::uint64_t exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

bool divides(const Integer& divisor, const Integer& value) {
  if (divisor == 0) return value == 0;
  return mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t()) != 0;
}

}  // namespace gibgcd
