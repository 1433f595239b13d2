#include "cli/commands.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "cli/output.hpp"
#include "selsieve/analysis.hpp"
#include "selsieve/oracle.hpp"
#include "selsieve/sieve.hpp"

namespace selsieve::cli {

namespace {

#ifndef SELSIEVE_VERSION
#define SELSIEVE_VERSION "0.0.0"
#endif

struct CommonOptions {
  std::string format = "csv";
  std::string out_path;
};

struct Args {
  CommonOptions common;

  std::string range;
  std::string m_range;
  std::string mode = "restricted";
  std::string only;
  std::string method = "s2";
  bool all = false;

  std::uint64_t limit = 0;
  std::optional<std::uint64_t> m;
  std::vector<std::uint64_t> generate;
  std::uint32_t q = 0;
  std::uint64_t n = 0;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw std::invalid_argument(std::string("invalid ") + what + " '" + text + "'");
  }
  return value;
}

SieveOptions sieve_options_from_env() {
  SieveOptions opts;
  if (const char* cap = std::getenv(kMemCapEnv); cap != nullptr && *cap != '\0') {
    opts.memory_budget = static_cast<std::size_t>(parse_u64(cap, kMemCapEnv));
  }
  return opts;
}

std::string spectrum_class(std::uint64_t k, std::uint32_t count) {
  if (k == 0) return "UNIT";
  return count == 0 ? "PRIME" : "";
}

Table cmd_spectrum(const Args& args, const SieveOptions& opts) {
  if (args.range.empty() == args.m_range.empty()) {
    throw std::invalid_argument("spectrum: give exactly one of RANGE or --m-range");
  }
  std::uint64_t k_lo = 0;
  std::uint64_t k_hi = 0;
  if (!args.range.empty()) {
    std::tie(k_lo, k_hi) = parse_range(args.range);
  } else {
    const auto [m_lo, m_hi] = parse_range(args.m_range);
    if (m_hi < 1) throw std::invalid_argument("spectrum: --m-range contains no odd number");
    k_lo = m_lo / 2;  // first odd m >= m_lo
    k_hi = (m_hi - 1) / 2;
    if (k_lo > k_hi) throw std::invalid_argument("spectrum: --m-range contains no odd number");
  }
  const ScanMode mode = args.mode == "full" ? ScanMode::Full : ScanMode::Restricted;

  Table t;
  t.command = "spectrum";
  t.parameters = {{"k_lo", k_lo}, {"k_hi", k_hi}, {"mode", std::string(to_string(mode))}};
  t.headers = {"k", "K", "m", "class"};
  if (k_lo == 0) {
    t.rows.push_back({std::uint64_t{0}, std::uint64_t{0}, std::uint64_t{1}, std::string("UNIT")});
    if (k_hi == 0) return t;
    k_lo = 1;
  }
  const SpectrumS2 spectrum = build_s2_spectrum(k_lo, k_hi, mode, opts);
  for (std::uint64_t k = k_lo;; ++k) {
    const std::uint32_t count = spectrum.count(k);
    t.rows.push_back({k, std::uint64_t{count}, 2 * k + 1, spectrum_class(k, count)});
    if (k == k_hi) break;
  }
  return t;
}

Table cmd_s6(const Args& args, const SieveOptions& opts) {
  const auto [n_lo, n_hi] = parse_range(args.range);
  if (!args.only.empty() && args.only != "plus" && args.only != "minus" && args.only != "twin") {
    throw std::invalid_argument("s6: --only must be plus, minus or twin");
  }
  const SpectrumS6 spectrum = build_s6_spectrum(n_lo, n_hi, opts);
  Table t;
  t.command = "s6";
  t.parameters = {{"n_lo", n_lo}, {"n_hi", n_hi}, {"only", args.only}};
  t.headers = {"n", "K_minus", "6n-1", "K_plus", "6n+1", "K_sum", "twin"};
  for (std::uint64_t n = n_lo;; ++n) {
    const std::uint32_t km = spectrum.minus(n);
    const std::uint32_t kp = spectrum.plus(n);
    const bool keep = args.only.empty() || (args.only == "plus" && kp == 0) ||
                      (args.only == "minus" && km == 0) ||
                      (args.only == "twin" && km + kp == 0);
    if (keep) {
      t.rows.push_back({n, std::uint64_t{km}, 6 * n - 1, std::uint64_t{kp}, 6 * n + 1,
                        std::uint64_t{km} + kp, std::string(km + kp == 0 ? "TWIN" : "")});
    }
    if (n == n_hi) break;
  }
  return t;
}

Table cmd_primes(const Args& args, const SieveOptions& opts) {
  std::vector<std::uint64_t> primes;
  if (args.method == "s2") {
    primes = primes_via_s2(args.limit, opts);
  } else if (args.method == "s6") {
    primes = primes_via_s6(args.limit, opts);
  } else if (args.method == "s4") {
    primes = primes_via_s4(args.limit, opts);
  } else if (args.method == "oracle") {
    if (args.limit < 2) throw std::invalid_argument("primes: limit must be >= 2");
    primes = oracle::eratosthenes(args.limit, opts.memory_budget * 8).primes();
  } else {
    throw std::invalid_argument("primes: unknown method '" + args.method + "'");
  }
  Table t;
  t.command = "primes";
  t.parameters = {{"limit", args.limit}, {"method", args.method},
                  {"count", std::uint64_t{primes.size()}}};
  t.headers = {"p"};
  for (const std::uint64_t p : primes) t.rows.push_back({p});
  return t;
}

Table cmd_twins(const Args& args, const SieveOptions& opts) {
  Table t;
  t.command = "twins";
  t.parameters = {{"limit", args.limit}, {"all", std::string(args.all ? "true" : "false")}};
  t.headers = {"n", "6n-1", "6n+1", "class"};
  if (args.limit < 7) return t;
  const std::uint64_t n_hi = (args.limit - 1) / 6;
  const SpectrumS6 spectrum = build_s6_spectrum(1, n_hi, opts);
  for (std::uint64_t n = 1; n <= n_hi; ++n) {
    const TwinClass c = classify_twin(spectrum, n);
    if (args.all || c == TwinClass::N2) {
      t.rows.push_back({n, 6 * n - 1, 6 * n + 1, std::string(to_string(c))});
    }
  }
  return t;
}

std::string factor_string(std::uint64_t m) {
  std::string s;
  for (const auto& pp : oracle::factorize(m)) {
    for (std::uint32_t i = 0; i < pp.exponent; ++i) {
      if (!s.empty()) s += '*';
      s += std::to_string(pp.prime);
    }
  }
  return s;
}

Table cmd_order(const Args& args, const SieveOptions& opts) {
  Table t;
  t.command = "order";
  if (!args.generate.empty()) {
    const std::uint64_t big_n = args.generate.at(0);
    const std::uint64_t limit = args.generate.at(1);
    if (big_n == 0 || big_n > UINT32_MAX) throw std::invalid_argument("order: N out of range");
    t.parameters = {{"N", big_n}, {"limit", limit}};
    t.headers = {"m", "order"};
    for (const std::uint64_t m :
         generate_mN_hits(static_cast<std::uint32_t>(big_n), limit, opts.memory_budget)) {
      const OrderClass oc = order_of(m);
      if (oc.order < big_n) {
        throw InvariantViolation("order: generator hit " + std::to_string(m) + " has order " +
                                 std::to_string(oc.order));
      }
      t.rows.push_back({m, std::uint64_t{oc.order}});
    }
    return t;
  }
  if (!args.m) throw std::invalid_argument("order: give M or --generate N LIMIT");
  const OrderClass oc = order_of(*args.m);
  t.parameters = {{"m", *args.m}};
  t.headers = {"m", "order", "factors"};
  t.rows.push_back({oc.m, std::uint64_t{oc.order}, factor_string(oc.m)});
  return t;
}

Table cmd_fermat(const Args& args) {
  const FermatReport r = fermat_check(args.q);
  Table t;
  t.command = "fermat";
  t.parameters = {{"q", std::uint64_t{args.q}}};
  t.headers = {"q", "r", "F", "target_k", "verdict", "a", "b", "factor_1", "factor_2",
               "search_effort"};
  std::vector<Cell> row{std::uint64_t{r.q}, r.r, r.fermat, r.target_k,
                        std::string(r.verdict == FermatReport::Verdict::Prime ? "PRIME"
                                                                             : "COMPOSITE")};
  if (r.witness) {
    row.insert(row.end(), {r.witness->a, r.witness->b, r.factors->first, r.factors->second});
  } else {
    row.insert(row.end(), 4, Cell{});
  }
  row.push_back(r.search_effort);
  t.rows.push_back(std::move(row));
  return t;
}

Table cmd_coords(const Args& args) {
  const PrimeCoordinates c = prime_coords(args.n);
  std::string sparse = "{";
  for (const auto& [p, e] : c.exponents()) {
    if (sparse.size() > 1) sparse += ", ";
    sparse += std::to_string(p) + ":" + std::to_string(e);
  }
  sparse += "}";
  Table t;
  t.command = "coords";
  t.parameters = {{"n", args.n}, {"vector", sparse}};
  t.headers = {"prime", "index", "exponent"};
  const auto indexed = c.indexed();
  std::size_t i = 0;
  for (const auto& [p, e] : c.exponents()) {
    t.rows.push_back({p, indexed[i++].first, std::uint64_t{e}});
  }
  return t;
}

Table cmd_stats(const Args& args) {
  const DensityStats s = density_stats(args.lo, args.hi);
  const auto opt = [](const std::optional<std::uint64_t>& v) -> Cell {
    return v ? Cell{*v} : Cell{};
  };
  Table t;
  t.command = "stats";
  t.parameters = {{"lo", args.lo}, {"hi", args.hi}};
  t.headers = {"lo", "hi", "prime_count", "min_gap", "min_gap_lower", "min_gap_upper",
               "max_gap", "max_gap_lower", "max_gap_upper", "twin_pairs"};
  t.rows.push_back({s.lo, s.hi, std::uint64_t{s.prime_count}, opt(s.min_gap),
                    s.min_gap_pair ? Cell{s.min_gap_pair->first} : Cell{},
                    s.min_gap_pair ? Cell{s.min_gap_pair->second} : Cell{},
                    opt(s.max_gap),
                    s.max_gap_pair ? Cell{s.max_gap_pair->first} : Cell{},
                    s.max_gap_pair ? Cell{s.max_gap_pair->second} : Cell{},
                    std::uint64_t{s.twin_pairs.size()}});
  return t;
}

Table cmd_bench(const Args& args, const SieveOptions& opts) {
  const BenchReport report = bench_selector_sieves(args.limit, opts);
  Table t;
  t.command = "bench";
  t.parameters = {{"limit", args.limit}};
  t.headers = {"method", "seconds", "prime_count", "total_hits", "identical"};
  for (const auto& e : report.entries) {
    t.rows.push_back({e.method, e.seconds, std::uint64_t{e.prime_count},
                      e.total_hits ? Cell{*e.total_hits} : Cell{},
                      std::string(report.identical ? "true" : "false")});
  }
  return t;
}

void add_common(CLI::App* sub, CommonOptions& common) {
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "tsv"}));
  sub->add_option("--out", common.out_path, "Write output to FILE instead of stdout");
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("range must look like LO:HI, got '" + text + "'");
  }
  const std::uint64_t lo = parse_u64(text.substr(0, colon), "range bound");
  const std::uint64_t hi = parse_u64(text.substr(colon + 1), "range bound");
  if (lo > hi) throw std::invalid_argument("range " + text + " has LO > HI");
  return {lo, hi};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prime selector polynomials: spectra, sieves and analysis", "selsieve"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SELSIEVE_VERSION);
  Args a;

  auto* spectrum = app.add_subcommand("spectrum", "Multiplicity K of k = 2ab + a + b over a k range");
  spectrum->add_option("range", a.range, "LO:HI over k (k = 0 is reported as UNIT)");
  spectrum->add_option("--m-range", a.m_range, "LO:HI over odd m = 2k + 1 instead");
  spectrum->add_option("--mode", a.mode, "Scan mode")->check(CLI::IsMember({"full", "restricted"}));
  add_common(spectrum, a.common);

  auto* s6 = app.add_subcommand("s6", "K- and K+ counts for 6n -/+ 1 over an n range");
  s6->add_option("range", a.range, "LO:HI over n")->required();
  s6->add_option("--only", a.only, "Keep rows with K_plus = 0 (plus), K_minus = 0 (minus) or both (twin)");
  add_common(s6, a.common);

  auto* primes = app.add_subcommand("primes", "List primes up to LIMIT");
  primes->add_option("limit", a.limit, "Upper bound")->required();
  primes->add_option("--method", a.method, "Sieve")->check(CLI::IsMember({"s2", "s6", "s4", "oracle"}));
  add_common(primes, a.common);

  auto* twins = app.add_subcommand("twins", "Twin-prime order numbers n with 6n + 1 <= LIMIT");
  twins->add_option("limit", a.limit, "Upper bound")->required();
  twins->add_flag("--all", a.all, "List every n with its N0/N1Lower/N1Upper/N2 class");
  add_common(twins, a.common);

  auto* order = app.add_subcommand("order", "Generalized prime order of an odd number");
  order->add_option("m", a.m, "Odd number >= 3");
  order->add_option("--generate", a.generate, "N LIMIT: odd numbers hit by the N-fold product")
      ->expected(2);
  add_common(order, a.common);

  auto* fermat = app.add_subcommand("fermat", "Selector search for a factor of F(q)");
  fermat->add_option("q", a.q, "Exponent index, 0..5")->required();
  add_common(fermat, a.common);

  auto* coords = app.add_subcommand("coords", "Prime-exponent coordinates of N");
  coords->add_option("n", a.n, "Positive integer")->required();
  add_common(coords, a.common);

  auto* stats = app.add_subcommand("stats", "Prime count, gaps and twins inside [LO, HI]");
  stats->add_option("lo", a.lo, "Lower bound")->required();
  stats->add_option("hi", a.hi, "Upper bound")->required();
  add_common(stats, a.common);

  auto* bench = app.add_subcommand("bench", "Time the selector sieves against Eratosthenes");
  bench->add_option("limit", a.limit, "Upper bound, >= 100")->required();
  add_common(bench, a.common);

  std::vector<std::string> argv_storage{"selsieve"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << SELSIEVE_VERSION << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "selsieve: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const SieveOptions opts = sieve_options_from_env();
    const OutputFormat format = parse_format(a.common.format);
    Table table;
    if (spectrum->parsed()) {
      table = cmd_spectrum(a, opts);
    } else if (s6->parsed()) {
      table = cmd_s6(a, opts);
    } else if (primes->parsed()) {
      table = cmd_primes(a, opts);
    } else if (twins->parsed()) {
      table = cmd_twins(a, opts);
    } else if (order->parsed()) {
      table = cmd_order(a, opts);
    } else if (fermat->parsed()) {
      table = cmd_fermat(a);
    } else if (coords->parsed()) {
      table = cmd_coords(a);
    } else if (stats->parsed()) {
      table = cmd_stats(a);
    } else {
      table = cmd_bench(a, opts);
    }

    if (a.common.out_path.empty()) {
      write_table(out, table, format, SELSIEVE_VERSION);
    } else {
      std::ofstream file(a.common.out_path, std::ios::binary);
      if (!file) throw std::invalid_argument("cannot open --out file " + a.common.out_path);
      write_table(file, table, format, SELSIEVE_VERSION);
    }
    return kExitOk;
  } catch (...) {
    return report_error(std::current_exception(), err);
  }
}

int report_error(std::exception_ptr error, std::ostream& err) {
  try {
    std::rethrow_exception(error);
  } catch (const CapacityError& e) {
    err << "selsieve: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const InvariantViolation& e) {
    err << "selsieve: invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    err << "selsieve: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "selsieve: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OverflowError& e) {
    err << "selsieve: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedExponent& e) {
    err << "selsieve: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "selsieve: internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
}

}  // namespace selsieve::cli
