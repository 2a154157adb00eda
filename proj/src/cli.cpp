#include "hgsat/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hgsat/error.hpp"
#include "hgsat/hecke.hpp"
#include "hgsat/satotate.hpp"
#include "hgsat/sweep_kernels.hpp"
#include "hgsat/verify.hpp"

namespace hgsat {

namespace {

using nlohmann::ordered_json;

// Tables beyond p^3 ~ 1e9 words are slow to sweep; large p runs at N = 2.
constexpr std::uint64_t kPrecision3Limit = 1000;

struct RunConfig {
  std::uint64_t prime = 0;
  std::uint64_t pmin = 5;
  std::uint64_t pmax = 97;
  std::string function = "2g2";
  std::int64_t lambda = 0;
  unsigned weight = 4;
  unsigned level = 4;
  unsigned m_max = 6;
  unsigned bins = 20;
  int precision = 0;  // 0 picks 3, or 2 above kPrecision3Limit
  int threads = 0;
  std::string format = "csv";
  std::string output;
  std::string suite = "all";
};

int default_threads() {
  if (const char* env = std::getenv("HGSAT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 4096) return static_cast<int>(v);
  }
  return 0;
}

int precision_for(const RunConfig& cfg, std::uint64_t p) {
  if (cfg.precision != 0) return cfg.precision;
  return p <= kPrecision3Limit ? 3 : 2;
}

Family family_or_throw(const std::string& tag) {
  const auto f = parse_family(tag);
  if (!f) throw Error(ErrorKind::InvalidArgument, "unknown function '" + tag + "' (2g2, 6g6, 2g2t, 6g6t, ap)");
  return *f;
}

// A prime context, its table and evaluator, built together.
struct Engine {
  PrimeCtx ctx;
  GammaTable table;
  FamilyEvaluator ev;

  Engine(std::uint64_t p, int precision, int threads)
      : ctx(make_prime_ctx(p, precision)),
        table(build_gamma_table(ctx, 12, TableBuild::Parallel, threads)),
        ev(ctx, table) {}
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;
};

// Integers that fit in 64 bits go out as JSON numbers, larger ones as strings.
ordered_json json_integer(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

ordered_json json_real(double x) { return std::stod(format_real(x)); }

// Rows are collected as (key, csv text, json value) and emitted in one format.
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  struct Cell {
    std::string text;
    ordered_json json;
  };
  static Cell integer(const BigInt& v) { return {v.str(), json_integer(v)}; }
  static Cell integer(std::int64_t v) { return {std::to_string(v), v}; }
  static Cell integer(std::uint64_t v) { return {std::to_string(v), v}; }
  static Cell real(double v) { return {format_real(v), json_real(v)}; }

  void add(std::vector<Cell> row) { rows_.push_back(std::move(row)); }
  void set_trailer(std::string key, double value) { trailer_ = {std::move(key), value}; }

  void write(std::ostream& os, bool json) const {
    if (json) {
      ordered_json doc;
      doc["columns"] = columns_;
      ordered_json rows = ordered_json::array();
      for (const auto& row : rows_) {
        ordered_json obj;
        for (std::size_t i = 0; i < columns_.size(); ++i) obj[columns_[i]] = row[i].json;
        rows.push_back(std::move(obj));
      }
      doc["rows"] = std::move(rows);
      if (trailer_) doc[trailer_->first] = json_real(trailer_->second);
      os << doc.dump(2) << '\n';
      return;
    }
    for (std::size_t i = 0; i < columns_.size(); ++i) os << (i ? "," : "") << columns_[i];
    os << '\n';
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i].text;
      os << '\n';
    }
    if (trailer_) os << "# " << trailer_->first << '=' << format_real(trailer_->second) << '\n';
  }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
  std::optional<std::pair<std::string, double>> trailer_;
};

std::uint64_t reduce_lambda(std::int64_t lambda, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  const std::int64_t r = lambda % sp;
  return static_cast<std::uint64_t>(r < 0 ? r + sp : r);
}

int cmd_eval(const RunConfig& cfg, std::ostream& out) {
  const Family f = family_or_throw(cfg.function);
  const Engine e(cfg.prime, precision_for(cfg, cfg.prime), cfg.threads);
  const std::uint64_t l = reduce_lambda(cfg.lambda, cfg.prime);
  const std::int64_t v = e.ev.value(f, l);
  const double normalized = static_cast<double>(v) / std::sqrt(static_cast<double>(cfg.prime));
  if (cfg.format == "json") {
    ordered_json doc;
    doc["p"] = cfg.prime;
    doc["function"] = cfg.function;
    doc["lambda"] = l;
    doc["value"] = v;
    doc["normalized"] = json_real(normalized);
    out << doc.dump(2) << '\n';
  } else {
    out << v << '\n' << format_real(normalized) << '\n';
  }
  return 0;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const Family f = family_or_throw(cfg.function);
  const Engine e(cfg.prime, precision_for(cfg, cfg.prime), cfg.threads);
  e.ev.require(f);
  const auto sweep = kernels::family_sweep_omp(e.ev, f, cfg.threads);
  const double root = std::sqrt(static_cast<double>(cfg.prime));
  Table t({"lambda", "value", "normalized"});
  for (std::size_t i = 0; i < sweep.values.size(); ++i) {
    const std::int64_t v = sweep.values[i];
    t.add({Table::integer(sweep.first_lambda + i), Table::integer(v), Table::real(static_cast<double>(v) / root)});
  }
  t.write(out, cfg.format == "json");
  return 0;
}

int cmd_moments(const RunConfig& cfg, std::ostream& out) {
  const Family f = family_or_throw(cfg.function);
  const Engine e(cfg.prime, precision_for(cfg, cfg.prime), cfg.threads);
  e.ev.require(f);
  Table t({"m", "sum", "normalized", "expected"});
  for (const auto& r : moment_sums(e.ev, f, cfg.m_max, cfg.threads)) {
    t.add({Table::integer(std::uint64_t{r.m}), Table::integer(r.sum), Table::real(r.normalized),
           Table::real(r.expected)});
  }
  t.write(out, cfg.format == "json");
  return 0;
}

int cmd_distribution(const RunConfig& cfg, std::ostream& out) {
  const Family f = family_or_throw(cfg.function);
  if (cfg.bins == 0) throw Error(ErrorKind::InvalidArgument, "--bins must be positive");
  const Engine e(cfg.prime, precision_for(cfg, cfg.prime), cfg.threads);
  e.ev.require(f);
  const auto rep = distribution_report(e.ev, f, cfg.bins, cfg.threads);
  Table t({"bin_left", "bin_right", "count", "empirical_density", "semicircle_density"});
  const auto n = static_cast<double>(rep.sample_size);
  for (const auto& b : rep.bins) {
    const double width = b.right - b.left;
    const double mid = 0.5 * (b.left + b.right);
    t.add({Table::real(b.left), Table::real(b.right), Table::integer(b.count),
           Table::real(static_cast<double>(b.count) / (n * width)), Table::real(semicircle_density(mid))});
  }
  t.set_trailer("ks", rep.ks_distance);
  t.write(out, cfg.format == "json");
  return 0;
}

std::vector<std::uint64_t> primes_for(const RunConfig& cfg) {
  if (cfg.prime != 0) return {cfg.prime};
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = std::max<std::uint64_t>(cfg.pmin, 5); p <= cfg.pmax; ++p) {
    if (is_prime(p)) ps.push_back(p);
  }
  return ps;
}

int cmd_trace(const RunConfig& cfg, std::ostream& out) {
  Table t({"p", "k", "level", "trace"});
  for (std::uint64_t p : primes_for(cfg)) {
    const Engine e(p, precision_for(cfg, p), cfg.threads);
    const BigInt tr = trace(e.ev, {p, cfg.weight, cfg.level}, cfg.threads);
    t.add({Table::integer(p), Table::integer(std::uint64_t{cfg.weight}), Table::integer(std::uint64_t{cfg.level}),
           Table::integer(tr)});
  }
  t.write(out, cfg.format == "json");
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto suite = verify::parse_suite(cfg.suite);
  if (!suite) throw Error(ErrorKind::InvalidArgument, "unknown suite '" + cfg.suite + "'");
  if (cfg.pmin > cfg.pmax) throw Error(ErrorKind::InvalidArgument, "--pmin exceeds --pmax");
  const int precision = cfg.precision != 0 ? cfg.precision : (cfg.pmax <= kPrecision3Limit ? 3 : 2);
  const auto results = verify::run_suite(*suite, cfg.pmin, cfg.pmax, precision, cfg.threads);
  std::size_t failed = 0;
  for (const auto& r : results) {
    failed += r.passed ? 0 : 1;
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
  }
  out << (failed ? "FAIL" : "PASS") << " suite " << cfg.suite << ": " << results.size() - failed << "/"
      << results.size() << " checks passed\n";
  return failed ? 1 : 0;
}

bool usage_kind(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotPrime:
    case ErrorKind::PrimeTooSmall:
    case ErrorKind::BadPrecision:
    case ErrorKind::PrecisionOverflow:
    case ErrorKind::SingularLambda:
    case ErrorKind::WrongResidueClass:
    case ErrorKind::BadWeight:
    case ErrorKind::InvalidArgument:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  std::string s = buf;
  if (s.rfind("-0.", 0) == 0 && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.threads = default_threads();

  CLI::App app{"Finite-field hypergeometric functions, Legendre traces and Hecke traces"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--precision", cfg.precision, "p-adic working precision N >= 2 (default 3; 2 above p = 1000)")
        ->check(CLI::Range(2, 8));
    sub->add_option("--threads", cfg.threads, "worker threads (default $HGSAT_THREADS or all cores)")
        ->check(CLI::Range(0, 4096));
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", cfg.output, "write to this file instead of stdout");
  };
  auto function = [&](CLI::App* sub) {
    sub->add_option("--function", cfg.function, "2g2, 6g6, 2g2t, 6g6t or ap")->required();
  };

  auto* eval = app.add_subcommand("eval", "exact value of one function at one lambda");
  eval->add_option("--prime", cfg.prime)->required();
  function(eval);
  eval->add_option("--lambda", cfg.lambda)->required();
  common(eval);

  auto* sweep = app.add_subcommand("sweep", "values over every lambda");
  sweep->add_option("--prime", cfg.prime)->required();
  function(sweep);
  common(sweep);

  auto* moments = app.add_subcommand("moments", "exact moment sums and their normalizations");
  moments->add_option("--prime", cfg.prime)->required();
  function(moments);
  moments->add_option("--m-max", cfg.m_max)->check(CLI::Range(1, 64));
  common(moments);

  auto* dist = app.add_subcommand("distribution", "histogram and K-S distance to the semicircle");
  dist->add_option("--prime", cfg.prime)->required();
  function(dist);
  dist->add_option("--bins", cfg.bins)->check(CLI::Range(1, 100000));
  common(dist);

  auto* tr = app.add_subcommand("trace", "Hecke traces on Gamma0(4) or Gamma0(8)");
  auto* tr_prime = tr->add_option("--prime", cfg.prime);
  auto* tr_pmin = tr->add_option("--pmin", cfg.pmin);
  tr->add_option("--pmax", cfg.pmax)->needs(tr_pmin);
  tr_prime->excludes(tr_pmin);
  tr->add_option("--weight", cfg.weight)->required();
  tr->add_option("--level", cfg.level)->check(CLI::IsMember({4u, 8u}));
  common(tr);

  auto* ver = app.add_subcommand("verify", "run a verification suite over a prime range");
  ver->add_option("--pmin", cfg.pmin);
  ver->add_option("--pmax", cfg.pmax);
  ver->add_option("--suite", cfg.suite)->check(CLI::IsMember({"identities", "gamma", "gauss", "moments", "traces", "all"}));
  common(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      err << "error: cannot open " << cfg.output << " for writing\n";
      return 2;
    }
  }
  std::ostream& sink = cfg.output.empty() ? out : file;

  try {
    if (app.got_subcommand(eval)) return cmd_eval(cfg, sink);
    if (app.got_subcommand(sweep)) return cmd_sweep(cfg, sink);
    if (app.got_subcommand(moments)) return cmd_moments(cfg, sink);
    if (app.got_subcommand(dist)) return cmd_distribution(cfg, sink);
    if (app.got_subcommand(tr)) {
      if (cfg.prime == 0 && tr_pmin->count() == 0) {
        err << "error: trace needs --prime or --pmin/--pmax\n";
        return 2;
      }
      return cmd_trace(cfg, sink);
    }
    return cmd_verify(cfg, sink);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return usage_kind(e.kind()) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace hgsat
