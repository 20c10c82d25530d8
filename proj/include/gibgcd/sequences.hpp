#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "gibgcd/integer.hpp"

namespace gibgcd {

/// Seed pair (G_0, G_1) of a sequence obeying G_n = G_{n-1} + G_{n-2}.
struct GibonacciSpec {
  Integer g0;
  Integer g1;

  static GibonacciSpec fibonacci() { return {0, 1}; }
  static GibonacciSpec lucas() { return {2, 1}; }

  bool is_degenerate() const { return g0 == 0 && g1 == 0; }
  bool is_primitive() const { return gcd(g0, g1) == 1; }

  friend bool operator==(const GibonacciSpec&, const GibonacciSpec&) = default;
};

std::string to_string(const GibonacciSpec& spec);

/// Throws DegenerateSequenceError for (0, 0).
void require_nondegenerate(const GibonacciSpec& spec);

/// Sum of `power`-th powers over `length` consecutive terms beginning at
/// index start + 1.
struct WindowSpec {
  Index length = 1;
  Index power = 1;
  Index start = 0;

  /// Throws PreconditionError unless length >= 1, power >= 1, start >= 0.
  void validate() const;
};

/// (F_n, F_{n+1}) by fast doubling; valid for any signed n.
std::pair<Integer, Integer> fib_pair(Index n);

Integer fib(Index n);
Integer lucas(Index n);

/// G_n = G_0 F_{n-1} + G_1 F_n.
Integer gib_term(const GibonacciSpec& spec, Index n);

/// mu = G_1^2 - G_0 G_1 - G_0^2.
Integer characteristic(const GibonacciSpec& spec);

Integer window_sum(const GibonacciSpec& spec, const WindowSpec& window);

/// G_{n+k} G_{n+k+1} - G_n G_{n+1}; equals the direct sum of squares.
Integer window_sum_squares_closed(const GibonacciSpec& spec, Index length,
                                  Index start);

/// G_{n+1}^2 - G_n G_{n+1} - G_n^2, which is (-1)^n mu.
Integer d_function(const GibonacciSpec& spec, Index n);

/// G_0^2 F_n + 2 G_0 G_1 F_{n+1} + G_1^2 F_{n+2}; itself a Gibonacci sequence.
Integer beta_term(const GibonacciSpec& spec, Index n);

/// G_0^2 F_{k+2l-2} + 2 G_0 G_1 F_{k+2l-1} + G_1^2 F_{k+2l} = beta_{k+2l-2}.
Integer gamma_term(const GibonacciSpec& spec, Index k, Index ell);

enum class Identity {
  kCassini,
  kCatalan,
  kVajda8,
  kVajda20a,
  kSumSquares,
  kFibDiffSquares,
  kGibDiffSquares,
  kZeroVs4Mu,
};

std::string_view identity_name(Identity identity);
/// Inverse of identity_name; throws PreconditionError for unknown names.
Identity parse_identity(std::string_view name);

/// Arguments for identity_check. Each identity reads only the fields it
/// needs:
///   cassini          spec, n (n >= 1)
///   catalan          n, r (n >= r)
///   vajda8           spec, m, n (any sign)
///   vajda20a         a, b, c (all >= 0)
///   sum_squares      spec, k (k >= 1)
///   fib_diff_squares k (even, >= 0), ell (any sign)
///   gib_diff_squares spec, k (even, >= 0), ell (>= 0)
///   zero_vs_4mu      spec, k (k >= 1)
struct IdentityParams {
  GibonacciSpec spec = GibonacciSpec::fibonacci();
  Index n = 0;
  Index m = 0;
  Index r = 0;
  Index a = 0;
  Index b = 0;
  Index c = 0;
  Index k = 0;
  Index ell = 0;
};

struct IdentityResult {
  Integer lhs;
  Integer rhs;
  bool holds = false;
};

/// Evaluates both sides of the named identity. Out-of-domain parameters
/// throw PreconditionError rather than reporting a false result.
IdentityResult identity_check(Identity identity, const IdentityParams& params);

}  // namespace gibgcd
