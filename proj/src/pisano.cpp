#include "gibgcd/pisano.hpp"

#include <string>

#include "gibgcd/errors.hpp"

namespace gibgcd {

namespace {

std::uint64_t residue(const Integer& value, std::uint64_t modulus) {
  // Non-negative remainder regardless of the sign of value.
  return mpz_fdiv_ui(value.get_mpz_t(), modulus);
}

}  // namespace

PisanoResult pisano_period(const GibonacciSpec& spec, std::uint64_t modulus) {
  if (modulus < 2) {
    throw ModulusError("modulus must be >= 2, got " + std::to_string(modulus));
  }
  if (modulus > (std::uint64_t{1} << 40)) {
    throw ModulusError("modulus too large for exhaustive period search");
  }
  PisanoResult out;
  out.modulus = modulus;
  out.residue_seed = {residue(spec.g0, modulus), residue(spec.g1, modulus)};

  // The pair map (a, b) -> (b, a + b) is invertible mod m, so the orbit of
  // the seed is purely periodic with length dividing pi_F(m) <= 6m.
  const std::uint64_t limit = 6 * modulus + 2;
  auto [a, b] = out.residue_seed;
  for (std::uint64_t r = 1; r <= limit; ++r) {
    const std::uint64_t next = (a + b) % modulus;
    a = b;
    b = next;
    if (a == out.residue_seed.first && b == out.residue_seed.second) {
      out.period = r;
      return out;
    }
  }
  throw InvariantError("no return to the seed pair within 6m steps (m = " +
                       std::to_string(modulus) + ")");
}

std::uint64_t fib_pisano(std::uint64_t modulus) {
  return pisano_period(GibonacciSpec::fibonacci(), modulus).period;
}

std::uint64_t lucas_pisano(std::uint64_t modulus) {
  return pisano_period(GibonacciSpec::lucas(), modulus).period;
}

}  // namespace gibgcd
