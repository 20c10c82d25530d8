#include "gibgcd/explorer.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <iomanip>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "gibgcd/errors.hpp"
#include "gibgcd/pisano.hpp"

namespace gibgcd {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Tables

std::string table_case_label(Index k, const std::optional<Integer>& mu) {
  if (is_even(k)) {
    if (!mu) return "even";
    return divides(5, *mu) ? "even_5_divides_mu" : "even_5_not_divides_mu";
  }
  return k % 6 == 3 ? "odd_3_mod_6" : "odd_1_5_mod_6";
}

namespace {

TableRow build_row(Index k, const std::optional<GibonacciSpec>& spec,
                   Index windows) {
  auto mismatch = [k](const std::string& what, const Integer& closed,
                      const Integer& oracle) {
    return VerificationError("k=" + std::to_string(k) + " " + what +
                             ": closed form " + closed.get_str() +
                             " but oracle " + oracle.get_str());
  };

  TableRow row;
  row.k = k;
  row.fib_value = fib_closed(k);
  row.lucas_value = lucas_closed(k);

  const Integer fib_oracle =
      gcd_power_bruteforce(GibonacciSpec::fibonacci(), k, 2, windows);
  if (fib_oracle != row.fib_value) throw mismatch("fib", row.fib_value, fib_oracle);
  const Integer lucas_oracle =
      gcd_power_bruteforce(GibonacciSpec::lucas(), k, 2, windows);
  if (lucas_oracle != row.lucas_value) {
    throw mismatch("lucas", row.lucas_value, lucas_oracle);
  }

  std::optional<Integer> mu;
  if (spec) {
    const auto classified = gcd_squares_classified(*spec, k, true, windows);
    if (!*classified.oracle_agrees) {
      throw mismatch("gib " + to_string(*spec), classified.value,
                     gcd_power_bruteforce(*spec, k, 2, windows));
    }
    row.gib_value = classified.value;
    mu = characteristic(reduce_to_primitive(*spec).primitive);
  }
  row.case_label = table_case_label(k, mu);
  return row;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = text.find(sep, begin);
    parts.push_back(text.substr(begin, end - begin));
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  return parts;
}

Index parse_index(std::string_view text) {
  const Integer value = parse_integer(text);
  if (!value.fits_slong_p()) throw PreconditionError("index out of range");
  return value.get_si();
}

}  // namespace

std::vector<TableRow> build_table(Index k_min, Index k_max,
                                  const std::optional<GibonacciSpec>& spec,
                                  Index windows) {
  if (k_min < 1 || k_max < k_min) {
    throw PreconditionError("table needs 1 <= k_min <= k_max");
  }
  if (spec) require_nondegenerate(*spec);

  // Rows are independent; fan out in chunks and merge in k order.
  const Index total = k_max - k_min + 1;
  const Index workers = std::clamp<Index>(
      static_cast<Index>(std::thread::hardware_concurrency()), 1, 8);
  const Index chunk = (total + workers - 1) / workers;
  std::vector<std::future<std::vector<TableRow>>> tasks;
  for (Index first = k_min; first <= k_max; first += chunk) {
    const Index last = std::min(k_max, first + chunk - 1);
    tasks.push_back(std::async(std::launch::async, [first, last, &spec, windows] {
      std::vector<TableRow> rows;
      for (Index k = first; k <= last; ++k) rows.push_back(build_row(k, spec, windows));
      return rows;
    }));
  }
  std::vector<TableRow> rows;
  rows.reserve(static_cast<std::size_t>(total));
  for (auto& task : tasks) {
    auto part = task.get();
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << kTableCsvHeader << '\n';
  for (const auto& row : rows) {
    out << row.k << ',' << row.case_label << ',' << row.fib_value << ','
        << row.lucas_value << ',';
    if (row.gib_value) out << *row.gib_value;
    out << '\n';
  }
  return out.str();
}

std::string table_to_json(const std::vector<TableRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    out.push_back({
        {"k", row.k},
        {"case_tag", row.case_label},
        {"fib", row.fib_value.get_str()},
        {"lucas", row.lucas_value.get_str()},
        {"gib", row.gib_value ? json(row.gib_value->get_str()) : json(nullptr)},
        {"provenance", "closed form, oracle cross-checked"},
    });
  }
  return out.dump(2) + "\n";
}

std::string table_to_text(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(6) << "k" << std::setw(24) << "case"
      << std::setw(28) << "fib" << std::setw(28) << "lucas" << "gib\n";
  for (const auto& row : rows) {
    out << std::setw(6) << row.k << std::setw(24) << row.case_label
        << std::setw(28) << row.fib_value.get_str() << std::setw(28)
        << row.lucas_value.get_str()
        << (row.gib_value ? row.gib_value->get_str() : "-") << '\n';
  }
  return out.str();
}

std::vector<TableRow> table_from_csv(std::string_view text) {
  std::vector<TableRow> rows;
  bool header_seen = false;
  for (auto line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kTableCsvHeader) throw PreconditionError("bad CSV header");
      header_seen = true;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 5) throw PreconditionError("CSV row needs 5 fields");
    TableRow row;
    row.k = parse_index(fields[0]);
    row.case_label = std::string(fields[1]);
    row.fib_value = parse_integer(fields[2]);
    row.lucas_value = parse_integer(fields[3]);
    if (!fields[4].empty()) row.gib_value = parse_integer(fields[4]);
    rows.push_back(std::move(row));
  }
  if (!header_seen) throw PreconditionError("empty CSV");
  return rows;
}

std::vector<TableRow> table_from_json(std::string_view text) {
  const json doc = json::parse(text);
  if (!doc.is_array()) throw PreconditionError("table JSON must be an array");
  std::vector<TableRow> rows;
  for (const auto& item : doc) {
    TableRow row;
    row.k = item.at("k").get<Index>();
    row.case_label = item.at("case_tag").get<std::string>();
    row.fib_value = parse_integer(item.at("fib").get<std::string>());
    row.lucas_value = parse_integer(item.at("lucas").get<std::string>());
    if (!item.at("gib").is_null()) {
      row.gib_value = parse_integer(item.at("gib").get<std::string>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Cube conjectures

std::string_view setting_name(Setting setting) {
  return setting == Setting::kFibonacci ? "fibonacci" : "lucas";
}

Setting parse_setting(std::string_view name) {
  if (name == "fibonacci") return Setting::kFibonacci;
  if (name == "lucas") return Setting::kLucas;
  throw PreconditionError("setting must be 'fibonacci' or 'lucas'");
}

ConjectureReport conjecture_cube(Setting setting, Index k, Index windows) {
  if (k < 2 || !is_even(k)) {
    throw PreconditionError("cube conjecture covers even k >= 2 only");
  }
  const bool fibonacci = setting == Setting::kFibonacci;
  const GibonacciSpec seed =
      fibonacci ? GibonacciSpec::fibonacci() : GibonacciSpec::lucas();
  const Integer offset = fibonacci ? 1 : 9;

  ConjectureReport out;
  out.setting = setting;
  out.k = k;
  const OracleResult oracle = windowed_gcd(seed, k, 3, windows);
  out.oracle_value = oracle.value;
  out.oracle_stable = oracle.stable;

  const Integer x1 = fibonacci ? fib(k + 1) : lucas(k + 1);
  const Integer x2 = fibonacci ? fib(k + 2) : lucas(k + 2);
  out.base_gcd = gcd(pow(x1, 3) - 1, pow(x2, 3) - offset);
  out.factor_used = k % 6 == 0 ? Factor::kWhole : Factor::kHalf;
  if (out.factor_used == Factor::kWhole) {
    out.conjectured_value = out.base_gcd;
  } else if (divides(2, out.base_gcd)) {
    out.conjectured_value = out.base_gcd / 2;
  }
  out.agrees = out.conjectured_value && *out.conjectured_value == out.oracle_value;
  return out;
}

std::vector<ConjectureReport> conjecture_cubes(Setting setting, Index k_max,
                                               Index windows) {
  if (k_max < 2 || !is_even(k_max)) {
    throw PreconditionError("k_max must be even and >= 2");
  }
  std::vector<ConjectureReport> reports;
  for (Index k = 2; k <= k_max; k += 2) {
    reports.push_back(conjecture_cube(setting, k, windows));
  }
  return reports;
}

// ---------------------------------------------------------------------------
// Periodicity

PeriodicityReport find_odd_k_period(const GibonacciSpec& spec, int power,
                                    Index k_max) {
  require_nondegenerate(spec);
  if (!spec.is_primitive()) {
    throw PreconditionError("periodicity search needs a primitive seed; reduce " +
                            to_string(spec) + " first");
  }
  if (power != 1 && power != 2) throw PreconditionError("power must be 1 or 2");
  if (k_max < 31 || is_even(k_max)) {
    throw PreconditionError("k_max must be odd and >= 31");
  }

  PeriodicityReport out;
  out.spec = spec;
  out.power = power;
  out.k_max = k_max;
  out.verified_through = k_max;
  for (Index k = 1; k <= k_max; k += 2) {
    out.values.emplace_back(k, power == 1 ? gcd_firstpower_closed(spec, k)
                                          : gcd_squares_classified(spec, k).value);
  }
  // values[i] holds k = 2i + 1, so a stride of P in k is P / 2 in i.
  const auto& values = out.values;
  for (Index period = 2; period <= k_max / 2; period += 2) {
    const auto step = static_cast<std::size_t>(period / 2);
    bool consistent = true;
    for (std::size_t i = 0; i + step < values.size() && consistent; ++i) {
      consistent = values[i].second == values[i + step].second;
    }
    if (consistent) {
      out.candidate_period = period;
      for (std::size_t i = 0; i < step; ++i) out.residue_classes.push_back(values[i]);
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verification grid

bool VerifySummary::all_passed() const {
  return std::all_of(families.begin(), families.end(),
                     [](const FamilyResult& f) { return f.failed == 0; });
}

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    if (ok) {
      ++result_.passed;
      return;
    }
    ++result_.failed;
    if (!result_.first_counterexample) result_.first_counterexample = describe();
  }

  FamilyResult take() { return std::move(result_); }

 private:
  FamilyResult result_;
};

std::vector<GibonacciSpec> coprime_seeds(Index bound) {
  std::vector<GibonacciSpec> seeds;
  for (Index a = -bound; a <= bound; ++a) {
    for (Index b = -bound; b <= bound; ++b) {
      GibonacciSpec s{a, b};
      if (!s.is_degenerate() && s.is_primitive()) seeds.push_back(s);
    }
  }
  return seeds;
}

std::string where(const GibonacciSpec& s, Index k) {
  return "spec=" + to_string(s) + " k=" + std::to_string(k);
}

FamilyResult verify_oracle_squares(const std::vector<GibonacciSpec>& seeds,
                                   const VerifyOptions& o) {
  Tally t("oracle_vs_closed_squares");
  for (const auto& s : seeds) {
    for (Index k = 1; k <= o.max_k; ++k) {
      const Integer closed = gcd_squares_closed(s, k);
      const Integer parity = gcd_squares_parity(s, k);
      const Integer classified = gcd_squares_classified(s, k).value;
      for (Index n : {Index{3}, Index{5}, o.windows}) {
        const Integer oracle = gcd_power_bruteforce(s, k, 2, n);
        t.check(oracle == closed && closed == parity && parity == classified,
                [&] {
                  return where(s, k) + " N=" + std::to_string(n) + " oracle " +
                         oracle.get_str() + " closed " + closed.get_str() +
                         " parity " + parity.get_str() + " classified " +
                         classified.get_str();
                });
      }
    }
  }
  return t.take();
}

FamilyResult verify_first_power(const std::vector<GibonacciSpec>& seeds,
                                const VerifyOptions& o) {
  Tally t("first_power");
  for (const auto& s : seeds) {
    for (Index k = 1; k <= o.max_k; ++k) {
      const Integer closed = gcd_firstpower_closed(s, k);
      const Integer oracle = gcd_power_bruteforce(s, k, 1, o.windows);
      t.check(oracle == closed, [&] {
        return where(s, k) + " oracle " + oracle.get_str() + " closed " +
               closed.get_str();
      });
    }
  }
  return t.take();
}

FamilyResult verify_truncation(const std::vector<GibonacciSpec>& seeds,
                               const VerifyOptions& o) {
  Tally t("truncation_stability");
  for (const auto& s : seeds) {
    for (Index k = 1; k <= o.max_k; ++k) {
      for (Index p : {1, 2}) {
        const OracleResult full = windowed_gcd(s, k, p, o.windows);
        const Integer shortest = gcd_power_bruteforce(s, k, p, 3);
        t.check(full.stable && full.value == shortest, [&] {
          return where(s, k) + " p=" + std::to_string(p) + " N=3 gives " +
                 shortest.get_str() + ", N=" + std::to_string(o.windows) +
                 " gives " + full.value.get_str();
        });
      }
    }
  }
  return t.take();
}

FamilyResult verify_scaling(const std::vector<GibonacciSpec>& seeds,
                            const VerifyOptions& o) {
  Tally t("scaling_law");
  for (const auto& s : seeds) {
    for (Index k = 1; k <= o.max_k; ++k) {
      const Integer base = gcd_squares_closed(s, k);
      for (int d = 2; d <= 5; ++d) {
        const Integer scaled = gcd_squares_closed({d * s.g0, d * s.g1}, k);
        t.check(scaled == d * d * base, [&] {
          return where(s, k) + " d=" + std::to_string(d) + " scaled " +
                 scaled.get_str() + " base " + base.get_str();
        });
      }
    }
  }
  return t.take();
}

FamilyResult verify_odd_divisor(const std::vector<GibonacciSpec>& seeds,
                                const VerifyOptions& o) {
  Tally t("odd_k_divisor");
  for (const auto& s : seeds) {
    const Integer two_mu = abs(2 * characteristic(s));
    for (Index k = 1; k <= o.max_k; k += 2) {
      const auto c = gcd_squares_classified(s, k);
      t.check(c.case_tag == CaseTag::kOddGeneral && divides(c.value, two_mu), [&] {
        return where(s, k) + " value " + c.value.get_str() + " does not divide " +
               two_mu.get_str();
      });
    }
  }
  return t.take();
}

FamilyResult verify_fib_lucas(const VerifyOptions& o) {
  Tally t("fib_lucas_closed_forms");
  for (Index k = 1; k <= o.max_k; ++k) {
    const Integer f = gcd_squares_classified(GibonacciSpec::fibonacci(), k).value;
    const Integer l = gcd_squares_classified(GibonacciSpec::lucas(), k).value;
    t.check(f == fib_closed(k) && l == lucas_closed(k), [&] {
      return "k=" + std::to_string(k) + " fib " + f.get_str() + " lucas " +
             l.get_str();
    });
  }
  return t.take();
}

FamilyResult verify_maximality(const std::vector<GibonacciSpec>& seeds,
                               const VerifyOptions& o) {
  Tally t("maximality");
  auto check_case = [&](const GibonacciSpec& s, Index k) {
    const OddKReport report = odd_k_maximality(s, k);
    if (!report.hypothesis_holds) return;
    for (Index ell : {1, 3, 5, 7}) {
      const Integer value = gcd_squares_closed(s, k * ell);
      t.check(value == *report.predicted_value, [&] {
        return where(s, k * ell) + " value " + value.get_str() + " predicted " +
               report.predicted_value->get_str();
      });
    }
  };
  for (const auto& s : seeds) {
    for (Index k = 1; k <= o.max_k; k += 2) check_case(s, k);
  }
  // Worked example: seed (2, 7) at k = 15 reaches 62.
  const GibonacciSpec example{2, 7};
  check_case(example, 15);
  const OddKReport report = odd_k_maximality(example, 15);
  t.check(report.hypothesis_holds && report.ell_k == 62, [&] {
    return "spec=(2, 7) k=15 ell_k " + report.ell_k.get_str();
  });
  return t.take();
}

FamilyResult verify_sequences(const std::vector<GibonacciSpec>& seeds,
                              const VerifyOptions& o) {
  Tally t("sequence_invariants");
  const Index reach = std::min<Index>(o.max_k, 30);
  for (const auto& s : seeds) {
    const Integer mu = characteristic(s);
    const Integer seed_gcd = gcd(s.g0, s.g1);
    for (Index n = -50; n <= 200; ++n) {
      const Integer gn = gib_term(s, n);
      const Integer gn1 = gib_term(s, n + 1);
      t.check(gib_term(s, n + 2) == gn + gn1,
              [&] { return where(s, 0) + " recurrence fails at n=" + std::to_string(n); });
      if (n >= 0) {
        t.check(d_function(s, n) == minus_one_pow(n) * mu,
                [&] { return where(s, 0) + " D-invariance fails at n=" + std::to_string(n); });
        t.check(gcd(gn, gn1) == seed_gcd,
                [&] { return where(s, 0) + " consecutive gcd fails at n=" + std::to_string(n); });
      }
    }
    for (Index k = 1; k <= reach; ++k) {
      for (Index n = 0; n <= reach; ++n) {
        t.check(window_sum(s, {k, 2, n}) == window_sum_squares_closed(s, k, n),
                [&] { return where(s, k) + " window identity fails at n=" + std::to_string(n); });
      }
    }
  }
  return t.take();
}

FamilyResult verify_identities(const std::vector<GibonacciSpec>& seeds,
                               const VerifyOptions& o) {
  Tally t("identities");
  const Index reach = std::max<Index>(o.max_k, 2);
  for (const auto& s : seeds) {
    for (Index i = 1; i <= reach; ++i) {
      IdentityParams p;
      p.spec = s;
      p.n = i;
      p.r = i / 2;
      p.m = i - reach / 2;
      p.a = i;
      p.b = i / 3;
      p.c = reach - i;
      p.k = 2 * (i / 2);
      p.ell = i;
      for (Identity id : {Identity::kCassini, Identity::kCatalan, Identity::kVajda8,
                          Identity::kVajda20a, Identity::kFibDiffSquares,
                          Identity::kGibDiffSquares}) {
        t.check(identity_check(id, p).holds, [&] {
          return where(s, p.k) + " identity " + std::string(identity_name(id)) +
                 " i=" + std::to_string(i);
        });
      }
      p.k = i;
      for (Identity id : {Identity::kSumSquares, Identity::kZeroVs4Mu}) {
        t.check(identity_check(id, p).holds, [&] {
          return where(s, p.k) + " identity " + std::string(identity_name(id));
        });
      }
    }
  }
  return t.take();
}

FamilyResult verify_pisano(const std::vector<GibonacciSpec>& seeds) {
  Tally t("pisano");
  std::vector<std::uint64_t> fib_periods(51);
  for (std::uint64_t m = 2; m <= 50; ++m) fib_periods[m] = fib_pisano(m);
  for (const auto& s : seeds) {
    for (std::uint64_t m = 2; m <= 50; ++m) {
      const PisanoResult r = pisano_period(s, m);
      t.check(fib_periods[m] % r.period == 0, [&] {
        return "spec=" + to_string(s) + " m=" + std::to_string(m) + " period " +
               std::to_string(r.period) + " does not divide " +
               std::to_string(fib_periods[m]);
      });
    }
  }
  t.check(lucas_pisano(5) == 4, [] { return std::string("lucas period mod 5 is not 4"); });
  return t.take();
}

}  // namespace

VerifySummary run_verification(const VerifyOptions& options) {
  if (options.max_seed < 1 || options.max_k < 1 || options.windows < 3) {
    throw PreconditionError("verify needs max_seed >= 1, max_k >= 1, windows >= 3");
  }
  const auto seeds = coprime_seeds(options.max_seed);
  const auto& o = options;

  // Each family is a pure task; results are merged in a fixed order.
  std::vector<std::future<FamilyResult>> tasks;
  auto launch = [&tasks](auto fn) {
    tasks.push_back(std::async(std::launch::async, std::move(fn)));
  };
  launch([&] { return verify_oracle_squares(seeds, o); });
  launch([&] { return verify_truncation(seeds, o); });
  launch([&] { return verify_first_power(seeds, o); });
  launch([&] { return verify_scaling(seeds, o); });
  launch([&] { return verify_odd_divisor(seeds, o); });
  launch([&] { return verify_fib_lucas(o); });
  launch([&] { return verify_maximality(seeds, o); });
  launch([&] { return verify_sequences(seeds, o); });
  launch([&] { return verify_identities(seeds, o); });
  launch([&] { return verify_pisano(seeds); });

  VerifySummary summary;
  for (auto& task : tasks) summary.families.push_back(task.get());
  return summary;
}

}  // namespace gibgcd
