#pragma once

#include <optional>
#include <string_view>

#include "gibgcd/integer.hpp"
#include "gibgcd/sequences.hpp"

namespace gibgcd {

inline constexpr Index kDefaultOracleWindows = 10;

/// gcd(S_0, ..., S_{N-1}) over window sums S_n together with a stability
/// flag: true when the running gcd already equalled the final value before
/// the last ceil(N/2) windows were folded in. For power <= 2 the value is
/// exact for every N >= 3; for higher powers the flag is a heuristic only.
struct OracleResult {
  Integer value;
  bool stable = false;
  Index windows = 0;
};

/// Brute force over N window sums of `power`-th powers, each summed directly.
/// Throws DegenerateSequenceError for (0, 0) and PreconditionError for
/// k < 1, power < 1 or windows < 3.
OracleResult windowed_gcd(const GibonacciSpec& spec, Index k, Index power,
                          Index windows = kDefaultOracleWindows);

Integer gcd_power_bruteforce(const GibonacciSpec& spec, Index k, Index power,
                             Index windows = kDefaultOracleWindows);

/// gcd(G_k G_{k+1} - G_0 G_1, G_{k+1}^2 - G_1^2, G_{k+2}^2 - G_2^2).
Integer gcd_squares_closed(const GibonacciSpec& spec, Index k);

/// g_k = gcd(G_{k+1}^2 - G_1^2, G_{k+2}^2 - G_2^2).
Integer g_value(const GibonacciSpec& spec, Index k);

/// g_k for even k, gcd(|2 mu|, g_k) for odd k.
Integer gcd_squares_parity(const GibonacciSpec& spec, Index k);

/// ell_k = gcd(G_{k+1} - G_1, G_{k+2} - G_2), the GCD of all sums of k
/// consecutive terms.
Integer gcd_firstpower_closed(const GibonacciSpec& spec, Index k);

struct PrimitiveReduction {
  Integer d;
  GibonacciSpec primitive;
};

/// Splits spec into d = gcd(|g0|, |g1|) and the seed (g0/d, g1/d).
PrimitiveReduction reduce_to_primitive(const GibonacciSpec& spec);

enum class CaseTag { kEvenFiveNotDividesMu, kEvenFiveDividesMu, kOddGeneral };

std::string_view case_tag_name(CaseTag tag);

struct GcdClassification {
  Integer value;
  CaseTag case_tag = CaseTag::kOddGeneral;
  Index k = 0;
  GibonacciSpec spec;
  Integer scale_factor = 1;
  /// Present only when the oracle cross-check was requested.
  std::optional<bool> oracle_agrees;
};

/// Reduces to a primitive seed, applies the even-k closed form (F_k or 5 F_k)
/// or the odd-k formula gcd(|2 mu|, g_k), then rescales by d^2. With
/// `cross_check`, compares against the oracle over `windows` window sums.
GcdClassification gcd_squares_classified(
    const GibonacciSpec& spec, Index k, bool cross_check = false,
    Index windows = kDefaultOracleWindows);

/// Case values for the Fibonacci seed: F_k (k even), 2 (k = 3 mod 6), 1.
Integer fib_closed(Index k);
/// Case values for the Lucas seed: 5 F_k (k even), 2 (k = 3 mod 6), 1.
Integer lucas_closed(Index k);

struct OddKReport {
  Index k = 0;
  Integer ell_k;
  Integer two_mu;
  bool hypothesis_holds = false;
  /// |2 mu| whenever the hypothesis holds.
  std::optional<Integer> predicted_value;
};

/// Tests whether 2 mu divides ell_k. When it does, the squares GCD equals
/// |2 mu| at every odd multiple of k. Requires a primitive seed and odd k.
OddKReport odd_k_maximality(const GibonacciSpec& spec, Index k);

}  // namespace gibgcd
