#include "schwinger/cli.hpp"

#include "schwinger/classical.hpp"
#include "schwinger/coupled_boson.hpp"
#include "schwinger/spectra.hpp"
#include "schwinger/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace schwinger::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char *kToolName = "schwinger-cli";
constexpr const char *kToolVersion = "1.0.0";

/// Thrown for bad flag values that CLI11 cannot see (e.g. two_j = 0).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  int exit_code = kExitOk;
  std::string data;
  std::vector<std::string> diagnostics;
};

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string join_command(const std::vector<std::string> &args) {
  std::string out = kToolName;
  for (const auto &a : args)
    out += " " + a;
  return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

// Minimal CSV assembly: sections separated by a blank line, each with a
// header row.
class CsvDocument {
public:
  void section(std::vector<std::string> header) {
    if (!buf_.str().empty())
      buf_ << '\n';
    line(header);
  }
  void row(const std::vector<std::string> &cells) { line(cells); }
  std::string str() const { return buf_.str(); }

private:
  void line(const std::vector<std::string> &cells) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      buf_ << (i ? "," : "") << cells[i];
    buf_ << '\n';
  }
  std::ostringstream buf_;
};

std::string join_numbers(const std::vector<double> &values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i)
    out += (i ? ";" : "") + format_number(values[i]);
  return out;
}

std::string with_meta(const RunConfig &cfg, const std::vector<std::string> &args,
                      const std::string &csv) {
  if (!cfg.meta)
    return csv;
  std::string header = std::string("# ") + kToolName + " " + kToolVersion + "\n";
  header += "# generated_at: " + utc_timestamp() + "\n";
  header += "# command: " + join_command(args) + "\n";
  return header + csv;
}

std::string render_json(const RunConfig &cfg, const std::vector<std::string> &args,
                        Json body) {
  if (cfg.meta) {
    Json out;
    out["meta"] = {{"tool", kToolName},
                   {"version", kToolVersion},
                   {"generated_at", utc_timestamp()},
                   {"command", join_command(args)}};
    for (auto &[key, value] : body.items())
      out[key] = value;
    body = std::move(out);
  }
  return body.dump(2) + "\n";
}

std::string render(const RunConfig &cfg, const std::vector<std::string> &args,
                   const CsvDocument &csv, Json json) {
  return cfg.format == Format::csv ? with_meta(cfg, args, csv.str())
                                   : render_json(cfg, args, std::move(json));
}

void require_n_max(const RunConfig &cfg) {
  if (cfg.n_max < 0)
    throw UsageError("--nmax must be non-negative");
  if (cfg.n_max > kNMaxLimit && !cfg.force)
    throw UsageError("--nmax " + std::to_string(cfg.n_max) + " exceeds the limit of " +
                     std::to_string(kNMaxLimit) + " (use --force to override)");
}

// ---------------------------------------------------------------------------

Outcome cmd_verify(const RunConfig &cfg, const std::vector<std::string> &args,
                   const std::optional<InjectedFault> &fault) {
  require_n_max(cfg);
  VerifyConfig vc{.n_max = cfg.n_max,
                  .hbar = cfg.hbar,
                  .tol = cfg.tol,
                  .threads = cfg.threads,
                  .fault = fault};
  if (fault) {
    const auto dim = basis_dimension(cfg.n_max);
    if (fault->row >= dim || fault->col >= dim)
      throw UsageError("--inject-fault position outside the basis");
  }
  const auto report = run_verification(vc);

  CsvDocument csv;
  csv.section({"check", "max_residual", "threshold", "pass"});
  for (const auto &c : report.checks)
    csv.row({c.name, format_number(c.max_residual), format_number(c.threshold),
             bool_text(c.pass)});
  csv.section({"two_j", "casimir", "mean_square", "jz_spectrum", "sum_rule_pass"});
  for (const auto &b : report.blocks)
    csv.row({std::to_string(b.two_j), format_number(b.casimir),
             format_number(b.mean_square), join_numbers(b.jz_spectrum),
             bool_text(b.sum_rule_pass)});

  Json json;
  json["n_max"] = report.n_max;
  json["hbar"] = report.hbar;
  json["tol"] = report.tol;
  json["checks"] = Json::array();
  for (const auto &c : report.checks)
    json["checks"].push_back({{"name", c.name},
                              {"max_residual", c.max_residual},
                              {"threshold", c.threshold},
                              {"pass", c.pass}});
  json["blocks"] = Json::array();
  for (const auto &b : report.blocks)
    json["blocks"].push_back({{"two_j", b.two_j},
                              {"casimir", b.casimir},
                              {"mean_square", b.mean_square},
                              {"jz_spectrum", b.jz_spectrum},
                              {"sum_rule_pass", b.sum_rule_pass}});

  Outcome out;
  out.data = render(cfg, args, csv, std::move(json));
  for (const auto &c : report.checks)
    if (!c.pass)
      out.diagnostics.push_back("check failed: " + c.name + " (residual " +
                                format_number(c.max_residual) + " > threshold " +
                                format_number(c.threshold) + ")");
  out.exit_code = report.passed() ? kExitOk : kExitVerificationFailed;
  return out;
}

Outcome cmd_spectrum(RunConfig cfg, const std::vector<std::string> &args, int n) {
  if (n < 0)
    throw UsageError("--n must be non-negative");
  if (!cfg.n_max_given)
    cfg.n_max = n;
  require_n_max(cfg);
  if (n > cfg.n_max)
    throw UsageError("--n " + std::to_string(n) + " exceeds --nmax " +
                     std::to_string(cfg.n_max));

  const auto set = build_set(build_basis(cfg.n_max), cfg.hbar);
  const auto report = compute_spectrum(extract_block(set, n), cfg.tol);
  const double mean_square = mean_square_from_spectrum(report);
  const double scale = std::max(1.0, std::abs(report.casimir_value));
  const bool ok = report.casimir_spread <= cfg.tol * scale &&
                  report.jz_grid_deviation <= cfg.tol * std::max(1.0, cfg.hbar * report.two_j) &&
                  std::abs(mean_square - report.casimir_value) <= cfg.tol * scale;

  CsvDocument csv;
  csv.section({"two_j", "two_mj", "m_j", "jz_eigenvalue", "casimir", "mean_square"});
  for (std::size_t k = 0; k < report.jz_eigenvalues.size(); ++k) {
    const int two_mj = n - 2 * int(k);
    csv.row({std::to_string(n), std::to_string(two_mj), format_number(0.5 * two_mj),
             format_number(report.jz_eigenvalues[k]), format_number(report.casimir_value),
             format_number(mean_square)});
  }

  Json json;
  json["two_j"] = n;
  json["hbar"] = cfg.hbar;
  std::vector<int> two_mj;
  for (int m = n; m >= -n; m -= 2)
    two_mj.push_back(m);
  json["two_mj"] = two_mj;
  json["jz_spectrum"] = report.jz_eigenvalues;
  json["casimir"] = report.casimir_value;
  json["mean_square"] = mean_square;
  json["casimir_spread"] = report.casimir_spread;
  json["max_residual"] = report.max_residual;
  json["pass"] = ok;

  Outcome out;
  out.data = render(cfg, args, csv, std::move(json));
  if (!ok) {
    out.exit_code = kExitVerificationFailed;
    out.diagnostics.push_back("spectrum check failed for two_j = " + std::to_string(n) +
                              " (max residual " + format_number(report.max_residual) + ")");
  }
  return out;
}

Outcome cmd_sumrule(const RunConfig &cfg, const std::vector<std::string> &args,
                    int two_j_max) {
  if (two_j_max < 0 || two_j_max > kMaxSumRuleTwoJ)
    throw UsageError("--two-j-max must lie in [0, " + std::to_string(kMaxSumRuleTwoJ) + "]");
  CsvDocument csv;
  csv.section({"two_j", "lhs_quarters", "rhs_quarters", "pass"});
  Json rows = Json::array();
  bool all = true;
  for (int two_j = 0; two_j <= two_j_max; ++two_j) {
    const auto r = sum_rule_check(two_j);
    all = all && r.holds();
    csv.row({std::to_string(two_j), std::to_string(r.lhs), std::to_string(r.rhs),
             bool_text(r.holds())});
    rows.push_back({{"two_j", two_j},
                    {"lhs_quarters", r.lhs},
                    {"rhs_quarters", r.rhs},
                    {"pass", r.holds()}});
  }
  Json json;
  json["two_j_max"] = two_j_max;
  json["rows"] = std::move(rows);
  json["all_pass"] = all;
  Outcome out;
  out.data = render(cfg, args, csv, std::move(json));
  if (!all) {
    out.exit_code = kExitVerificationFailed;
    out.diagnostics.push_back("sum rule failed");
  }
  return out;
}

void require_angle_args(int two_j, double epsilon) {
  if (two_j < 1)
    throw UsageError("angle undefined at j = 0 (--two-j must be >= 1)");
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon))
    throw UsageError("--epsilon must be a non-negative number");
}

Outcome cmd_angle(const RunConfig &cfg, const std::vector<std::string> &args, int two_j,
                  double epsilon) {
  require_angle_args(two_j, epsilon);
  const auto rows = angle_table(two_j, epsilon);
  CsvDocument csv;
  csv.section({"two_j", "two_mj", "m_j", "epsilon", "cos_theta"});
  Json jrows = Json::array();
  for (const auto &r : rows) {
    csv.row({std::to_string(r.two_j), std::to_string(r.two_mj), format_number(0.5 * r.two_mj),
             format_number(r.epsilon), format_number(r.cos_theta)});
    jrows.push_back({{"two_j", r.two_j},
                     {"two_mj", r.two_mj},
                     {"epsilon", r.epsilon},
                     {"cos_theta", r.cos_theta}});
  }
  Json json;
  json["two_j"] = two_j;
  json["epsilon"] = epsilon;
  json["rows"] = std::move(jrows);
  Outcome out;
  out.data = render(cfg, args, csv, std::move(json));
  return out;
}

Outcome cmd_limit(const RunConfig &cfg, const std::vector<std::string> &args,
                  int two_j_max, double epsilon) {
  require_angle_args(two_j_max, epsilon);
  const auto rows = limit_scan(two_j_max, epsilon);

  CsvDocument csv;
  csv.section({"two_j", "j", "epsilon", "cos_theta", "one_minus_cos", "bound",
               "within_bound", "increasing"});
  Json jrows = Json::array();
  bool strictly_increasing = true, all_below_one = true, all_within = true,
       all_exactly_one = true;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto &r = rows[k];
    const double j = 0.5 * r.two_j;
    const double gap = 1.0 - r.cos_theta;
    // 1 - (1 + eps/j)^(-1/2) <= eps / (2j)
    const double bound = epsilon / (2.0 * j);
    const bool within = gap <= bound;
    const bool increasing = k == 0 || r.cos_theta > rows[k - 1].cos_theta;
    strictly_increasing = strictly_increasing && increasing;
    all_below_one = all_below_one && r.cos_theta < 1.0;
    all_within = all_within && within;
    all_exactly_one = all_exactly_one && r.cos_theta == 1.0;
    csv.row({std::to_string(r.two_j), format_number(j), format_number(epsilon),
             format_number(r.cos_theta), format_number(gap), format_number(bound),
             bool_text(within), bool_text(increasing)});
    jrows.push_back({{"two_j", r.two_j},
                     {"cos_theta", r.cos_theta},
                     {"one_minus_cos", gap},
                     {"bound", bound},
                     {"within_bound", within}});
  }
  const bool ok = epsilon > 0.0 ? (strictly_increasing && all_below_one && all_within)
                                : all_exactly_one;
  Json json;
  json["two_j_max"] = two_j_max;
  json["epsilon"] = epsilon;
  json["strictly_increasing"] = strictly_increasing;
  json["all_below_one"] = all_below_one;
  json["all_within_bound"] = all_within;
  json["rows"] = std::move(jrows);

  Outcome out;
  out.data = render(cfg, args, csv, std::move(json));
  if (!ok) {
    out.exit_code = kExitVerificationFailed;
    out.diagnostics.push_back("limit scan violates the expected classical-limit behaviour");
  }
  return out;
}

Outcome cmd_classical(const RunConfig &cfg, const std::vector<std::string> &args, int count,
                      double bound, int bins) {
  if (count < 1)
    throw UsageError("--count must be >= 1");
  if (!(bound > 0.0) || !std::isfinite(bound))
    throw UsageError("--bound must be positive");
  if (bins < 1)
    throw UsageError("--bins must be >= 1");

  const auto states = classical::sample_states(count, bound, cfg.seed, cfg.hbar);
  const double jtot_max = cfg.hbar * bound * bound;
  std::vector<long long> histogram(static_cast<std::size_t>(bins), 0);
  double worst = 0.0;
  long long non_half_integer = 0;

  CsvDocument states_csv;
  states_csv.section({"index", "alpha1_re", "alpha1_im", "alpha2_re", "alpha2_im", "jx", "jy",
                      "jz", "jtot", "relative_residual"});
  Json jstates = Json::array();
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto &s = states[i];
    const auto c = classical::classical_components(s);
    const double residual = classical::relative_identity_residual(c);
    worst = std::max(worst, residual);
    const double twice_j = 2.0 * c.jtot / cfg.hbar;
    if (twice_j != std::round(twice_j))
      ++non_half_integer;
    auto bin = static_cast<std::size_t>(c.jtot / jtot_max * bins);
    ++histogram[std::min(bin, histogram.size() - 1)];
    states_csv.row({std::to_string(i), format_number(s.alpha1.real()),
                    format_number(s.alpha1.imag()), format_number(s.alpha2.real()),
                    format_number(s.alpha2.imag()), format_number(c.jx), format_number(c.jy),
                    format_number(c.jz), format_number(c.jtot), format_number(residual)});
    jstates.push_back({{"alpha1", {s.alpha1.real(), s.alpha1.imag()}},
                       {"alpha2", {s.alpha2.real(), s.alpha2.imag()}},
                       {"jx", c.jx},
                       {"jy", c.jy},
                       {"jz", c.jz},
                       {"jtot", c.jtot},
                       {"relative_residual", residual}});
  }
  const bool ok = worst < cfg.tol;

  CsvDocument csv;
  csv.section({"count", "bound", "seed", "max_relative_residual", "non_half_integer_jtot",
               "pass"});
  csv.row({std::to_string(count), format_number(bound), std::to_string(cfg.seed),
           format_number(worst), std::to_string(non_half_integer), bool_text(ok)});
  std::string combined = csv.str() + "\n" + states_csv.str() + "\n";
  CsvDocument hist_csv;
  hist_csv.section({"bin_lo", "bin_hi", "count"});
  Json jhist = Json::array();
  for (int b = 0; b < bins; ++b) {
    const double lo = jtot_max * b / bins;
    const double hi = jtot_max * (b + 1) / bins;
    hist_csv.row({format_number(lo), format_number(hi), std::to_string(histogram[std::size_t(b)])});
    jhist.push_back({{"bin_lo", lo}, {"bin_hi", hi}, {"count", histogram[std::size_t(b)]}});
  }
  combined += hist_csv.str();

  Json json;
  json["count"] = count;
  json["bound"] = bound;
  json["seed"] = cfg.seed;
  json["hbar"] = cfg.hbar;
  json["max_relative_residual"] = worst;
  json["non_half_integer_jtot"] = non_half_integer;
  json["pass"] = ok;
  json["states"] = std::move(jstates);
  json["histogram"] = std::move(jhist);

  Outcome out;
  out.data = cfg.format == Format::csv ? with_meta(cfg, args, combined)
                                       : render_json(cfg, args, std::move(json));
  if (!ok) {
    out.exit_code = kExitVerificationFailed;
    out.diagnostics.push_back("classical identity residual " + format_number(worst) +
                              " is not below tol " + format_number(cfg.tol));
  }
  return out;
}

std::optional<InjectedFault> parse_fault(const std::string &text, double delta) {
  if (text.empty())
    return std::nullopt;
  // COMPONENT:ROW:COL
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw UsageError("--inject-fault expects COMPONENT:ROW:COL");
  const auto name = text.substr(0, first);
  InjectedFault fault;
  if (name == "jx")
    fault.component = Component::x;
  else if (name == "jy")
    fault.component = Component::y;
  else if (name == "jz")
    fault.component = Component::z;
  else if (name == "jtot")
    fault.component = Component::total;
  else
    throw UsageError("--inject-fault: unknown component '" + name + "'");
  try {
    fault.row = std::stoull(text.substr(first + 1, second - first - 1));
    fault.col = std::stoull(text.substr(second + 1));
  } catch (const std::exception &) {
    throw UsageError("--inject-fault: row and column must be non-negative integers");
  }
  fault.delta = delta;
  return fault;
}

int two_j_from_decimal(const std::string &text) {
  double j = 0.0;
  try {
    std::size_t used = 0;
    j = std::stod(text, &used);
    if (used != text.size())
      throw std::invalid_argument(text);
  } catch (const std::exception &) {
    throw UsageError("--j expects a number such as 1.5");
  }
  const double twice = 2.0 * j;
  if (!(j >= 0.0) || twice != std::floor(twice) || twice > 1e9)
    throw UsageError("--j must be a non-negative integer or half-integer");
  return static_cast<int>(twice);
}

Format parse_format(const std::string &text) {
  if (text == "csv")
    return Format::csv;
  if (text == "json")
    return Format::json;
  throw UsageError("--format must be csv or json");
}

} // namespace

unsigned default_thread_count() {
  if (const char *env = std::getenv("SCHWINGER_THREADS")) {
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1)
      return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Coupled-boson angular momentum: construction and verification"};
  app.name(kToolName);
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.threads = default_thread_count();
  std::string format_text = "csv";
  std::string out_path;

  auto *nmax_opt = app.add_option("--nmax", cfg.n_max, "Total-occupation cutoff n1 + n2 <= NMAX")
                       ->capture_default_str();
  app.add_option("--hbar", cfg.hbar, "Action scale")->capture_default_str();
  app.add_option("--tol", cfg.tol, "Verification tolerance")->capture_default_str();
  app.add_option("--format", format_text, "Output format: csv or json")->capture_default_str();
  app.add_option("--out", out_path, "Write data to PATH instead of stdout");
  app.add_option("--seed", cfg.seed, "Seed for the classical sampler")->capture_default_str();
  bool no_meta = false;
  app.add_flag("--no-meta", no_meta, "Omit the metadata header (tool, timestamp)");
  app.add_flag("--force", cfg.force, "Allow --nmax above the documented limit");

  auto *verify = app.add_subcommand("verify", "Run the full invariant battery");
  std::string fault_text;
  double fault_delta = 1e-6;
  verify->add_option("--inject-fault", fault_text, "Test hook: COMPONENT:ROW:COL")->group("");
  verify->add_option("--fault-delta", fault_delta, "Test hook: size of the injected error")
      ->group("");

  auto *spectrum = app.add_subcommand("spectrum", "J_z spectrum and Casimir of one sublet");
  int spectrum_n = 0;
  spectrum->add_option("--n", spectrum_n, "Total occupation n = 2j")->required();

  auto *sumrule = app.add_subcommand("sumrule", "Exact sum rule for two_j = 0..MAX");
  int sum_two_j_max = 0;
  sumrule->add_option("--two-j-max", sum_two_j_max, "Largest 2j")->required();

  auto *angle = app.add_subcommand("angle", "cos(theta_m) for m = j..-j");
  int angle_two_j = -1;
  std::string angle_j;
  double angle_epsilon = 1.0;
  auto *two_j_opt = angle->add_option("--two-j", angle_two_j, "Twice the angular momentum j");
  auto *j_opt = angle->add_option("--j", angle_j, "j as a decimal (integer or .5)");
  two_j_opt->excludes(j_opt);
  angle->add_option("--epsilon", angle_epsilon, "Commutator strength")->capture_default_str();

  auto *limit = app.add_subcommand("limit", "Extremal cos(theta_j) for two_j = 1..MAX");
  int limit_two_j_max = 0;
  double limit_epsilon = 1.0;
  limit->add_option("--two-j-max", limit_two_j_max, "Largest 2j")->required();
  limit->add_option("--epsilon", limit_epsilon, "Commutator strength")->capture_default_str();

  auto *classical_cmd = app.add_subcommand("classical", "Sampled epsilon = 0 identity check");
  int classical_count = 1000;
  double classical_bound = 5.0;
  int classical_bins = 20;
  classical_cmd->add_option("--count", classical_count, "Number of sampled states")
      ->capture_default_str();
  classical_cmd->add_option("--bound", classical_bound, "Amplitude radius")
      ->capture_default_str();
  classical_cmd->add_option("--bins", classical_bins, "Histogram bins over [0, hbar bound^2]")
      ->capture_default_str();

  for (auto *sub : {verify, spectrum, sumrule, angle, limit, classical_cmd})
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsageOrIo;
  }

  Outcome outcome;
  try {
    cfg.meta = !no_meta;
    cfg.n_max_given = nmax_opt->count() > 0;
    cfg.format = parse_format(format_text);
    if (!out_path.empty())
      cfg.output_path = out_path;
    if (!(cfg.hbar > 0.0) || !std::isfinite(cfg.hbar))
      throw UsageError("--hbar must be positive");
    if (!(cfg.tol > 0.0))
      throw UsageError("--tol must be positive");

    if (*verify)
      outcome = cmd_verify(cfg, args, parse_fault(fault_text, fault_delta));
    else if (*spectrum)
      outcome = cmd_spectrum(cfg, args, spectrum_n);
    else if (*sumrule)
      outcome = cmd_sumrule(cfg, args, sum_two_j_max);
    else if (*angle) {
      if (!angle_j.empty())
        angle_two_j = two_j_from_decimal(angle_j);
      else if (two_j_opt->count() == 0)
        throw UsageError("angle requires --two-j or --j");
      outcome = cmd_angle(cfg, args, angle_two_j, angle_epsilon);
    } else if (*limit)
      outcome = cmd_limit(cfg, args, limit_two_j_max, limit_epsilon);
    else if (*classical_cmd)
      outcome = cmd_classical(cfg, args, classical_count, classical_bound, classical_bins);
  } catch (const UsageError &e) {
    err << kToolName << ": usage error: " << e.what() << "\n";
    return kExitUsageOrIo;
  } catch (const std::bad_alloc &) {
    err << kToolName << ": out of memory\n";
    return kExitUsageOrIo;
  } catch (const std::exception &e) {
    err << kToolName << ": error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }

  if (cfg.output_path) {
    std::ofstream file(*cfg.output_path, std::ios::binary);
    file << outcome.data;
    file.flush();
    if (!file) {
      err << kToolName << ": cannot write " << *cfg.output_path << "\n";
      return kExitUsageOrIo;
    }
  } else {
    out << outcome.data;
    out.flush();
  }
  for (const auto &d : outcome.diagnostics)
    err << kToolName << ": " << d << "\n";
  return outcome.exit_code;
}

} // namespace schwinger::cli
