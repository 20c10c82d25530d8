// Command-line front end for the gibgcd library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gibgcd/errors.hpp"
#include "gibgcd/explorer.hpp"
#include "gibgcd/gcd_engine.hpp"
#include "gibgcd/pisano.hpp"
#include "gibgcd/sequences.hpp"

namespace {

using namespace gibgcd;
using json = nlohmann::json;

constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SeedArgs {
  std::string g0 = "0";
  std::string g1 = "1";
  bool given = false;

  void attach(CLI::App* cmd, bool required) {
    auto* a = cmd->add_option("--g0", g0, "initial term G_0 (decimal)");
    auto* b = cmd->add_option("--g1", g1, "initial term G_1 (decimal)");
    if (required) {
      a->required();
      b->required();
    }
    a->each([this](const std::string&) { given = true; });
    b->each([this](const std::string&) { given = true; });
  }

  GibonacciSpec spec() const { return {parse_integer(g0), parse_integer(g1)}; }
};

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
}

// Writes to --output when given, stdout otherwise.
void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!std::cout) throw IoError("failed writing to stdout");
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("failed writing '" + path + "'");
}

std::string yes_no(bool value) { return value ? "yes" : "no"; }

// gcd / gcd1 ----------------------------------------------------------------

struct GcdArgs {
  SeedArgs seed;
  Index k = 0;
  Index power = 2;
  Index windows = kDefaultOracleWindows;
  bool no_crosscheck = false;
  std::string format = "text";
};

int run_gcd(const GcdArgs& args) {
  const GibonacciSpec spec = args.seed.spec();
  json doc = {{"g0", spec.g0.get_str()}, {"g1", spec.g1.get_str()},
              {"k", args.k}, {"power", args.power}};
  std::ostringstream text;
  bool ok = true;

  if (args.power == 2) {
    const auto c =
        gcd_squares_classified(spec, args.k, !args.no_crosscheck, args.windows);
    doc["value"] = c.value.get_str();
    doc["case_tag"] = case_tag_name(c.case_tag);
    doc["scale_factor"] = c.scale_factor.get_str();
    doc["oracle_agrees"] = c.oracle_agrees ? json(*c.oracle_agrees) : json(nullptr);
    doc["provenance"] = "closed form (squares)";
    text << "value: " << c.value << "\ncase: " << case_tag_name(c.case_tag)
         << "\nscale_factor: " << c.scale_factor << '\n';
    if (c.oracle_agrees) {
      text << "oracle: " << (*c.oracle_agrees ? "agrees" : "DISAGREES")
           << " (N=" << args.windows << ")\n";
      ok = *c.oracle_agrees;
    }
  } else if (args.power == 1) {
    const Integer value = gcd_firstpower_closed(spec, args.k);
    doc["value"] = value.get_str();
    doc["case_tag"] = "FirstPower";
    doc["provenance"] = "closed form gcd(G_{k+1}-G_1, G_{k+2}-G_2)";
    text << "value: " << value << "\ncase: FirstPower\n";
    if (!args.no_crosscheck) {
      const Integer oracle = gcd_power_bruteforce(spec, args.k, 1, args.windows);
      ok = oracle == value;
      doc["oracle_agrees"] = ok;
      text << "oracle: " << (ok ? "agrees" : "DISAGREES") << " (N=" << args.windows
           << ")\n";
    } else {
      doc["oracle_agrees"] = nullptr;
    }
  } else {
    const OracleResult r = windowed_gcd(spec, args.k, args.power, args.windows);
    doc["value"] = r.value.get_str();
    doc["stable"] = r.stable;
    doc["windows"] = r.windows;
    doc["provenance"] = "conjectural: truncated oracle, no proven finite basis";
    text << "value: " << r.value << "\nstable: " << yes_no(r.stable)
         << "\nwindows: " << r.windows
         << "\nstatus: conjectural (truncated oracle, not a theorem)\n";
  }

  emit(args.format == "json" ? doc.dump(2) + "\n" : text.str(), "");
  return ok ? 0 : kExitVerification;
}

// table ---------------------------------------------------------------------

struct TableArgs {
  SeedArgs seed;
  Index k_min = 1;
  Index k_max = 12;
  Index windows = kDefaultOracleWindows;
  std::string format = "text";
  std::string output;
};

int run_table(const TableArgs& args) {
  std::optional<GibonacciSpec> spec;
  if (args.seed.given) spec = args.seed.spec();
  const auto rows = build_table(args.k_min, args.k_max, spec, args.windows);
  if (args.format == "csv") {
    emit(table_to_csv(rows), args.output);
  } else if (args.format == "json") {
    emit(table_to_json(rows), args.output);
  } else {
    emit(table_to_text(rows), args.output);
  }
  return 0;
}

// conjecture-cubes ----------------------------------------------------------

struct ConjectureArgs {
  std::string setting = "fibonacci";
  Index k_max = 30;
  Index windows = kDefaultOracleWindows;
  std::string format = "text";
};

int run_conjecture(const ConjectureArgs& args) {
  const auto reports =
      conjecture_cubes(parse_setting(args.setting), args.k_max, args.windows);
  std::size_t agreeing = 0;
  json doc = json::array();
  std::ostringstream text;
  text << "# empirical check of an open conjecture; disagreement is data, "
          "not an error\n";
  text << "k\toracle\tstable\tbase_gcd\tfactor\tconjectured\tagrees\n";
  for (const auto& r : reports) {
    agreeing += r.agrees ? 1 : 0;
    const std::string factor = r.factor_used == Factor::kWhole ? "1" : "1/2";
    const std::string conjectured = r.conjectured_value
                                        ? r.conjectured_value->get_str()
                                        : r.base_gcd.get_str() + "/2";
    text << r.k << '\t' << r.oracle_value << '\t' << yes_no(r.oracle_stable) << '\t'
         << r.base_gcd << '\t' << factor << '\t' << conjectured << '\t'
         << yes_no(r.agrees) << '\n';
    doc.push_back({{"setting", setting_name(r.setting)},
                   {"k", r.k},
                   {"oracle_value", r.oracle_value.get_str()},
                   {"oracle_stable", r.oracle_stable},
                   {"base_gcd", r.base_gcd.get_str()},
                   {"factor_used", factor},
                   {"conjectured_value", conjectured},
                   {"agrees", r.agrees},
                   {"provenance", "conjecture, not a theorem"}});
  }
  text << "agreement: " << agreeing << "/" << reports.size() << '\n';
  emit(args.format == "json" ? doc.dump(2) + "\n" : text.str(), "");
  return 0;
}

// periodicity ---------------------------------------------------------------

struct PeriodicityArgs {
  SeedArgs seed;
  int power = 2;
  Index k_max = 149;
  std::string format = "text";
};

int run_periodicity(const PeriodicityArgs& args) {
  const auto report = find_odd_k_period(args.seed.spec(), args.power, args.k_max);
  json classes = json::array();
  std::ostringstream text;
  text << "# heuristic: smallest even period consistent with odd k <= "
       << report.k_max << "; not a proof\n";
  if (report.candidate_period) {
    text << "candidate_period: " << *report.candidate_period << '\n';
    for (const auto& [residue, value] : report.residue_classes) {
      text << "  k = " << residue << " (mod " << *report.candidate_period
           << ") -> " << value << '\n';
      classes.push_back({{"residue", residue}, {"value", value.get_str()}});
    }
  } else {
    text << "candidate_period: none\n";
  }
  text << "verified_through: " << report.verified_through << '\n';
  json doc = {{"g0", report.spec.g0.get_str()},
              {"g1", report.spec.g1.get_str()},
              {"power", report.power},
              {"k_max", report.k_max},
              {"candidate_period", report.candidate_period
                                       ? json(*report.candidate_period)
                                       : json(nullptr)},
              {"verified_through", report.verified_through},
              {"residue_classes", classes},
              {"provenance", "heuristic period search"}};
  emit(args.format == "json" ? doc.dump(2) + "\n" : text.str(), "");
  return 0;
}

// verify --------------------------------------------------------------------

int run_verify(const VerifyOptions& options) {
  const VerifySummary summary = run_verification(options);
  for (const auto& f : summary.families) {
    std::cout << (f.failed == 0 ? "PASS " : "FAIL ") << f.name << ": " << f.passed
              << " passed, " << f.failed << " failed\n";
  }
  for (const auto& f : summary.families) {
    if (f.first_counterexample) {
      std::cout << "first counterexample (" << f.name
                << "): " << *f.first_counterexample << '\n';
      break;
    }
  }
  return summary.all_passed() ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GCDs of windowed power sums of Gibonacci sequences", "gibgcd"};
  app.require_subcommand(1);

  SeedArgs term_seed;
  Index term_n = 0;
  auto* term = app.add_subcommand("term", "print G_n");
  term_seed.attach(term, true);
  term->add_option("--n", term_n, "signed index")->required();

  SeedArgs mu_seed;
  auto* mu = app.add_subcommand("mu", "print the characteristic G_1^2 - G_0 G_1 - G_0^2");
  mu_seed.attach(mu, true);

  SeedArgs pisano_seed;
  std::uint64_t pisano_m = 0;
  auto* pisano = app.add_subcommand("pisano", "print the period of (G_n mod m)");
  pisano_seed.attach(pisano, true);
  pisano->add_option("--m", pisano_m, "modulus >= 2")->required();

  GcdArgs gcd_args;
  auto* gcd_cmd = app.add_subcommand("gcd", "GCD of all sums of k consecutive p-th powers");
  gcd_args.seed.attach(gcd_cmd, true);
  gcd_cmd->add_option("--k", gcd_args.k, "window length")->required();
  gcd_cmd->add_option("--power", gcd_args.power, "exponent p (default 2)");
  gcd_cmd->add_option("--oracle-windows", gcd_args.windows, "oracle window count");
  gcd_cmd->add_flag("--no-crosscheck", gcd_args.no_crosscheck, "skip the oracle");
  add_format(gcd_cmd, gcd_args.format);

  GcdArgs gcd1_args;
  gcd1_args.power = 1;
  auto* gcd1_cmd = app.add_subcommand("gcd1", "same as gcd --power 1");
  gcd1_args.seed.attach(gcd1_cmd, true);
  gcd1_cmd->add_option("--k", gcd1_args.k, "window length")->required();
  gcd1_cmd->add_option("--oracle-windows", gcd1_args.windows, "oracle window count");
  gcd1_cmd->add_flag("--no-crosscheck", gcd1_args.no_crosscheck, "skip the oracle");
  add_format(gcd1_cmd, gcd1_args.format);

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "closed-form table, oracle-checked per row");
  table_args.seed.attach(table, false);
  table->add_option("--k-min", table_args.k_min, "first k");
  table->add_option("--k-max", table_args.k_max, "last k");
  table->add_option("--oracle-windows", table_args.windows, "oracle window count");
  table->add_option("--output", table_args.output, "write to file instead of stdout");
  add_format(table, table_args.format);

  ConjectureArgs conj_args;
  auto* conj = app.add_subcommand("conjecture-cubes", "test the even-k cube conjecture");
  conj->add_option("--setting", conj_args.setting, "fibonacci or lucas")
      ->check(CLI::IsMember({"fibonacci", "lucas"}));
  conj->add_option("--k-max", conj_args.k_max, "largest even k");
  conj->add_option("--oracle-windows", conj_args.windows, "oracle window count");
  add_format(conj, conj_args.format);

  PeriodicityArgs per_args;
  auto* per = app.add_subcommand("periodicity", "search for a period on odd k");
  per_args.seed.attach(per, true);
  per->add_option("--power", per_args.power, "1 or 2")->check(CLI::IsMember({1, 2}));
  per->add_option("--k-max", per_args.k_max, "largest odd k (>= 31)");
  add_format(per, per_args.format);

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "run the invariant grid");
  verify->add_option("--max-seed", verify_opts.max_seed, "bound on |G_0|, |G_1|");
  verify->add_option("--max-k", verify_opts.max_k, "largest k");
  verify->add_option("--windows", verify_opts.windows, "oracle window count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*term) {
      std::cout << gib_term(term_seed.spec(), term_n) << '\n';
    } else if (*mu) {
      std::cout << characteristic(mu_seed.spec()) << '\n';
    } else if (*pisano) {
      std::cout << pisano_period(pisano_seed.spec(), pisano_m).period << '\n';
    } else if (*gcd_cmd) {
      return run_gcd(gcd_args);
    } else if (*gcd1_cmd) {
      return run_gcd(gcd1_args);
    } else if (*table) {
      return run_table(table_args);
    } else if (*conj) {
      return run_conjecture(conj_args);
    } else if (*per) {
      return run_periodicity(per_args);
    } else if (*verify) {
      return run_verify(verify_opts);
    }
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kExitVerification;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitVerification;
  }
  return 0;
}
