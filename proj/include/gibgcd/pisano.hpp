#pragma once

#include <cstdint>
#include <utility>

#include "gibgcd/sequences.hpp"

namespace gibgcd {

struct PisanoResult {
  std::uint64_t modulus = 0;
  std::uint64_t period = 0;
  std::pair<std::uint64_t, std::uint64_t> residue_seed;
};

/// Smallest r >= 1 with G_r = G_0 and G_{r+1} = G_1 (mod m). Throws
/// ModulusError for m < 2.
PisanoResult pisano_period(const GibonacciSpec& spec, std::uint64_t modulus);

std::uint64_t fib_pisano(std::uint64_t modulus);
std::uint64_t lucas_pisano(std::uint64_t modulus);

}  // namespace gibgcd
