#include "gibgcd/gcd_engine.hpp"

#include <vector>

#include "gibgcd/errors.hpp"

namespace gibgcd {

namespace {

void require_k(Index k) {
  if (k < 1) throw PreconditionError("k must be >= 1");
}

Integer abs_two_mu(const GibonacciSpec& spec) {
  return abs(2 * characteristic(spec));
}

}  // namespace

OracleResult windowed_gcd(const GibonacciSpec& spec, Index k, Index power,
                          Index windows) {
  require_nondegenerate(spec);
  require_k(k);
  if (power < 1) throw PreconditionError("power must be >= 1");
  if (windows < 3) throw PreconditionError("oracle needs at least 3 windows");

  // Terms G_1 .. G_{windows + k - 1} by plain iteration from the seeds.
  const auto count = static_cast<std::size_t>(windows + k - 1);
  std::vector<Integer> powers;
  powers.reserve(count);
  Integer prev = spec.g0;
  Integer cur = spec.g1;
  for (std::size_t i = 0; i < count; ++i) {
    powers.push_back(pow(cur, static_cast<std::uint64_t>(power)));
    Integer next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }

  const Index settled_after = windows - (windows + 1) / 2;
  OracleResult result;
  result.windows = windows;
  Integer running = 0;
  Integer settled = 0;
  for (Index n = 0; n < windows; ++n) {
    Integer sum = 0;
    for (Index i = 0; i < k; ++i) sum += powers[static_cast<std::size_t>(n + i)];
    running = gcd(running, sum);
    if (n + 1 == settled_after) settled = running;
  }
  result.value = running;
  result.stable = settled == running;
  return result;
}

Integer gcd_power_bruteforce(const GibonacciSpec& spec, Index k, Index power,
                             Index windows) {
  return windowed_gcd(spec, k, power, windows).value;
}

Integer gcd_squares_closed(const GibonacciSpec& spec, Index k) {
  require_nondegenerate(spec);
  require_k(k);
  const Integer g0 = gib_term(spec, 0);
  const Integer g1 = gib_term(spec, 1);
  const Integer g2 = gib_term(spec, 2);
  const Integer gk = gib_term(spec, k);
  const Integer gk1 = gib_term(spec, k + 1);
  const Integer gk2 = gib_term(spec, k + 2);
  return gcd_of({gk * gk1 - g0 * g1, gk1 * gk1 - g1 * g1, gk2 * gk2 - g2 * g2});
}

Integer g_value(const GibonacciSpec& spec, Index k) {
  require_nondegenerate(spec);
  require_k(k);
  const Integer g1 = gib_term(spec, 1);
  const Integer g2 = gib_term(spec, 2);
  const Integer gk1 = gib_term(spec, k + 1);
  const Integer gk2 = gib_term(spec, k + 2);
  return gcd(gk1 * gk1 - g1 * g1, gk2 * gk2 - g2 * g2);
}

Integer gcd_squares_parity(const GibonacciSpec& spec, Index k) {
  const Integer g = g_value(spec, k);
  if (is_even(k)) return g;
  return gcd(abs_two_mu(spec), g);
}

Integer gcd_firstpower_closed(const GibonacciSpec& spec, Index k) {
  require_nondegenerate(spec);
  require_k(k);
  return gcd(gib_term(spec, k + 1) - gib_term(spec, 1),
             gib_term(spec, k + 2) - gib_term(spec, 2));
}

PrimitiveReduction reduce_to_primitive(const GibonacciSpec& spec) {
  require_nondegenerate(spec);
  PrimitiveReduction out;
  out.d = gcd(spec.g0, spec.g1);
  out.primitive = {spec.g0 / out.d, spec.g1 / out.d};
  return out;
}

std::string_view case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::kEvenFiveNotDividesMu:
      return "EvenFiveNotDividesMu";
    case CaseTag::kEvenFiveDividesMu:
      return "EvenFiveDividesMu";
    case CaseTag::kOddGeneral:
      return "OddGeneral";
  }
  throw InvariantError("unknown case tag");
}

GcdClassification gcd_squares_classified(const GibonacciSpec& spec, Index k,
                                         bool cross_check, Index windows) {
  require_k(k);
  const auto [d, primitive] = reduce_to_primitive(spec);

  GcdClassification out;
  out.k = k;
  out.spec = spec;
  out.scale_factor = d * d;

  Integer primitive_value;
  if (is_even(k)) {
    const bool five_divides_mu = divides(5, characteristic(primitive));
    out.case_tag = five_divides_mu ? CaseTag::kEvenFiveDividesMu
                                   : CaseTag::kEvenFiveNotDividesMu;
    primitive_value = five_divides_mu ? Integer(5 * fib(k)) : fib(k);
  } else {
    out.case_tag = CaseTag::kOddGeneral;
    primitive_value = gcd(abs_two_mu(primitive), g_value(primitive, k));
  }
  out.value = out.scale_factor * primitive_value;

  if (cross_check) {
    out.oracle_agrees = gcd_power_bruteforce(spec, k, 2, windows) == out.value;
  }
  return out;
}

Integer fib_closed(Index k) {
  require_k(k);
  if (is_even(k)) return fib(k);
  return k % 6 == 3 ? 2 : 1;
}

Integer lucas_closed(Index k) {
  require_k(k);
  if (is_even(k)) return 5 * fib(k);
  return k % 6 == 3 ? 2 : 1;
}

OddKReport odd_k_maximality(const GibonacciSpec& spec, Index k) {
  require_nondegenerate(spec);
  require_k(k);
  if (is_even(k)) throw PreconditionError("maximality test needs odd k");
  if (!spec.is_primitive()) {
    throw PreconditionError("maximality test needs a primitive seed " +
                            to_string(spec));
  }
  OddKReport out;
  out.k = k;
  out.ell_k = gcd_firstpower_closed(spec, k);
  out.two_mu = 2 * characteristic(spec);
  out.hypothesis_holds = divides(out.two_mu, out.ell_k);
  if (out.hypothesis_holds) out.predicted_value = abs(out.two_mu);
  return out;
}

}  // namespace gibgcd
