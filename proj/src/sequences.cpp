#include "gibgcd/sequences.hpp"

#include <array>
#include <bit>
#include <string>

#include "gibgcd/errors.hpp"

namespace gibgcd {

namespace {

// (F_n, F_{n+1}) for n >= 0, walking the bits of n from the top:
//   F_{2j}   = F_j (2 F_{j+1} - F_j)
//   F_{2j+1} = F_j^2 + F_{j+1}^2
std::pair<Integer, Integer> fib_pair_nonnegative(std::uint64_t n) {
  Integer a = 0;
  Integer b = 1;
  Integer even;
  Integer odd;
  for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
    even = a * (2 * b - a);
    odd = a * a + b * b;
    if ((n >> bit) & 1U) {
      a = odd;
      b = even + odd;
    } else {
      a = even;
      b = odd;
    }
  }
  return {a, b};
}

Integer square(const Integer& x) { return x * x; }

void require(bool condition, const char* message) {
  if (!condition) throw PreconditionError(message);
}

}  // namespace

std::string to_string(const GibonacciSpec& spec) {
  return "(" + spec.g0.get_str() + ", " + spec.g1.get_str() + ")";
}

void require_nondegenerate(const GibonacciSpec& spec) {
  if (spec.is_degenerate()) {
    throw DegenerateSequenceError(
        "seed (0, 0) generates the zero sequence; every GCD degenerates");
  }
}

void WindowSpec::validate() const {
  require(length >= 1, "window length k must be >= 1");
  require(power >= 1, "power must be >= 1");
  require(start >= 0, "window start must be >= 0");
}

std::pair<Integer, Integer> fib_pair(Index n) {
  if (n >= 0) return fib_pair_nonnegative(static_cast<std::uint64_t>(n));
  // F_{-m} = (-1)^{m+1} F_m, and F_{n+1} = F_{-(m-1)} = (-1)^m F_{m-1}.
  const auto m = static_cast<std::uint64_t>(-(n + 1)) + 1;
  auto [fm, fm1] = fib_pair_nonnegative(m);
  Integer f_prev = fm1 - fm;
  const bool m_even = (m % 2) == 0;
  Integer fn = m_even ? Integer(-fm) : fm;
  Integer fn1 = m_even ? f_prev : Integer(-f_prev);
  return {fn, fn1};
}

Integer fib(Index n) { return fib_pair(n).first; }

Integer lucas(Index n) {
  // L_n = F_{n-1} + F_{n+1} = 2 F_{n+1} - F_n.
  auto [fn, fn1] = fib_pair(n);
  return 2 * fn1 - fn;
}

Integer gib_term(const GibonacciSpec& spec, Index n) {
  auto [f_prev, fn] = fib_pair(n - 1);
  return spec.g0 * f_prev + spec.g1 * fn;
}

Integer characteristic(const GibonacciSpec& spec) {
  return spec.g1 * spec.g1 - spec.g0 * spec.g1 - spec.g0 * spec.g0;
}

Integer window_sum(const GibonacciSpec& spec, const WindowSpec& window) {
  window.validate();
  const auto power = static_cast<std::uint64_t>(window.power);
  Integer current = gib_term(spec, window.start + 1);
  Integer next = gib_term(spec, window.start + 2);
  Integer sum = 0;
  for (Index i = 0; i < window.length; ++i) {
    sum += pow(current, power);
    Integer after = current + next;
    current = std::move(next);
    next = std::move(after);
  }
  return sum;
}

Integer window_sum_squares_closed(const GibonacciSpec& spec, Index length,
                                  Index start) {
  require(length >= 1, "window length k must be >= 1");
  require(start >= 0, "window start must be >= 0");
  return gib_term(spec, start + length) * gib_term(spec, start + length + 1) -
         gib_term(spec, start) * gib_term(spec, start + 1);
}

Integer d_function(const GibonacciSpec& spec, Index n) {
  require(n >= 0, "D-function index must be >= 0");
  const Integer gn = gib_term(spec, n);
  const Integer gn1 = gib_term(spec, n + 1);
  return gn1 * gn1 - gn * gn1 - gn * gn;
}

Integer beta_term(const GibonacciSpec& spec, Index n) {
  require(n >= 0, "beta index must be >= 0");
  return square(spec.g0) * fib(n) + 2 * spec.g0 * spec.g1 * fib(n + 1) +
         square(spec.g1) * fib(n + 2);
}

Integer gamma_term(const GibonacciSpec& spec, Index k, Index ell) {
  require(k >= 0 && ell >= 0, "gamma needs k, ell >= 0");
  const Index base = k + 2 * ell;
  return square(spec.g0) * fib(base - 2) +
         2 * spec.g0 * spec.g1 * fib(base - 1) + square(spec.g1) * fib(base);
}

namespace {

constexpr std::array<std::pair<Identity, std::string_view>, 8> kIdentityNames{{
    {Identity::kCassini, "cassini"},
    {Identity::kCatalan, "catalan"},
    {Identity::kVajda8, "vajda8"},
    {Identity::kVajda20a, "vajda20a"},
    {Identity::kSumSquares, "sum_squares"},
    {Identity::kFibDiffSquares, "fib_diff_squares"},
    {Identity::kGibDiffSquares, "gib_diff_squares"},
    {Identity::kZeroVs4Mu, "zero_vs_4mu"},
}};

}  // namespace

std::string_view identity_name(Identity identity) {
  for (const auto& [id, name] : kIdentityNames) {
    if (id == identity) return name;
  }
  throw InvariantError("unknown identity enumerator");
}

Identity parse_identity(std::string_view name) {
  for (const auto& [id, known] : kIdentityNames) {
    if (known == name) return id;
  }
  throw PreconditionError("unknown identity '" + std::string(name) + "'");
}

IdentityResult identity_check(Identity identity, const IdentityParams& p) {
  IdentityResult out;
  const GibonacciSpec& s = p.spec;
  switch (identity) {
    case Identity::kCassini: {
      require(p.n >= 1, "cassini needs n >= 1");
      out.lhs = gib_term(s, p.n + 1) * gib_term(s, p.n - 1) -
                square(gib_term(s, p.n));
      out.rhs = minus_one_pow(p.n) * characteristic(s);
      break;
    }
    case Identity::kCatalan: {
      require(p.n >= p.r, "catalan needs n >= r");
      out.lhs = square(fib(p.n)) - fib(p.n - p.r) * fib(p.n + p.r);
      out.rhs = minus_one_pow(p.n - p.r) * square(fib(p.r));
      break;
    }
    case Identity::kVajda8: {
      out.lhs = gib_term(s, p.m + p.n);
      out.rhs = gib_term(s, p.m + 1) * fib(p.n) + gib_term(s, p.m) * fib(p.n - 1);
      break;
    }
    case Identity::kVajda20a: {
      require(p.a >= 0 && p.b >= 0 && p.c >= 0, "vajda20a needs a, b, c >= 0");
      out.lhs = fib(p.a + p.b) * fib(p.a + p.c) -
                minus_one_pow(p.a) * fib(p.b) * fib(p.c);
      out.rhs = fib(p.a) * fib(p.a + p.b + p.c);
      break;
    }
    case Identity::kSumSquares: {
      require(p.k >= 1, "sum_squares needs k >= 1");
      out.lhs = window_sum(s, WindowSpec{p.k, 2, 0});
      out.rhs = gib_term(s, p.k) * gib_term(s, p.k + 1) - s.g0 * s.g1;
      break;
    }
    case Identity::kFibDiffSquares: {
      require(p.k >= 0 && is_even(p.k), "fib_diff_squares needs even k >= 0");
      out.lhs = square(fib(p.k + p.ell)) - square(fib(p.ell));
      out.rhs = fib(p.k) * fib(p.k + 2 * p.ell);
      break;
    }
    case Identity::kGibDiffSquares: {
      require(p.k >= 0 && is_even(p.k) && p.ell >= 0,
              "gib_diff_squares needs even k >= 0 and ell >= 0");
      out.lhs = square(gib_term(s, p.k + p.ell)) - square(gib_term(s, p.ell));
      out.rhs = fib(p.k) * gamma_term(s, p.k, p.ell);
      break;
    }
    case Identity::kZeroVs4Mu: {
      require(p.k >= 1, "zero_vs_4mu needs k >= 1");
      auto m = [&](Index i) -> Integer {
        return square(gib_term(s, p.k + i)) - square(gib_term(s, i));
      };
      out.lhs = m(0) - 3 * m(1) + m(2);
      out.rhs = is_even(p.k) ? Integer(0) : Integer(4 * characteristic(s));
      break;
    }
  }
  out.holds = out.lhs == out.rhs;
  return out;
}

}  // namespace gibgcd
