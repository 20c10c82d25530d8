#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gibgcd/gcd_engine.hpp"
#include "gibgcd/sequences.hpp"

namespace gibgcd {

// ---------------------------------------------------------------------------
// Closed-form tables

struct TableRow {
  Index k = 0;
  std::string case_label;
  Integer fib_value;
  Integer lucas_value;
  std::optional<Integer> gib_value;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Case label from (parity of k, k mod 6, 5 | mu). `mu` is only consulted
/// for even k; pass nullopt when no seed is in play.
std::string table_case_label(Index k, const std::optional<Integer>& mu);

/// One row per k in [k_min, k_max]. Every value is checked against the
/// oracle over `windows` sums before it is returned; a mismatch throws
/// VerificationError.
std::vector<TableRow> build_table(Index k_min, Index k_max,
                                  const std::optional<GibonacciSpec>& spec,
                                  Index windows = kDefaultOracleWindows);

inline constexpr std::string_view kTableCsvHeader = "k,case,fib,lucas,gib";

std::string table_to_csv(const std::vector<TableRow>& rows);
std::string table_to_json(const std::vector<TableRow>& rows);
std::string table_to_text(const std::vector<TableRow>& rows);
std::vector<TableRow> table_from_csv(std::string_view text);
std::vector<TableRow> table_from_json(std::string_view text);

// ---------------------------------------------------------------------------
// Cube conjectures (empirical, not theorems)

enum class Setting { kFibonacci, kLucas };

std::string_view setting_name(Setting setting);
Setting parse_setting(std::string_view name);

enum class Factor { kWhole, kHalf };

struct ConjectureReport {
  Setting setting = Setting::kFibonacci;
  Index k = 0;
  Integer oracle_value;
  bool oracle_stable = false;
  /// gcd(X_{k+1}^3 - 1, X_{k+2}^3 - c) with c = 1 (Fibonacci) or 9 (Lucas).
  Integer base_gcd;
  /// kWhole iff 6 | k.
  Factor factor_used = Factor::kWhole;
  /// base_gcd or base_gcd / 2; empty when halving an odd base_gcd.
  std::optional<Integer> conjectured_value;
  bool agrees = false;
};

ConjectureReport conjecture_cube(Setting setting, Index k,
                                 Index windows = kDefaultOracleWindows);

/// Reports for every even k in [2, k_max]. Throws PreconditionError for odd
/// or too-small k_max. Disagreements are reported, never thrown.
std::vector<ConjectureReport> conjecture_cubes(
    Setting setting, Index k_max, Index windows = kDefaultOracleWindows);

// ---------------------------------------------------------------------------
// Periodicity on odd k (heuristic search)

struct PeriodicityReport {
  GibonacciSpec spec;
  int power = 2;
  Index k_max = 0;
  std::optional<Index> candidate_period;
  Index verified_through = 0;
  /// Odd residue r in [1, P) -> value at k = r. Empty without a period.
  std::vector<std::pair<Index, Integer>> residue_classes;
  /// value(k) for odd k = 1, 3, ..., k_max.
  std::vector<std::pair<Index, Integer>> values;
};

/// Evaluates the power-1 or power-2 GCD on odd k <= k_max via closed forms
/// and searches even periods P <= k_max / 2 in increasing order for the
/// smallest one consistent with every computed value. Requires a primitive
/// seed, power in {1, 2} and odd k_max >= 31.
PeriodicityReport find_odd_k_period(const GibonacciSpec& spec, int power,
                                    Index k_max);

// ---------------------------------------------------------------------------
// Verification grid

struct VerifyOptions {
  Index max_seed = 10;
  Index max_k = 60;
  Index windows = kDefaultOracleWindows;
};

struct FamilyResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<std::string> first_counterexample;
};

struct VerifySummary {
  std::vector<FamilyResult> families;

  bool all_passed() const;
};

/// Runs the invariant families over every coprime seed with
/// |g0|, |g1| <= max_seed and 1 <= k <= max_k.
VerifySummary run_verification(const VerifyOptions& options);

}  // namespace gibgcd
