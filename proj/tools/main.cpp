// cuspsum: evaluate, scan and verify the partial sums
//   f_n(x) = sum_{k<=n} |sin(k pi x)|/k  and  g_n(x) = sum_{k<=n} |cos(k pi x)|/k.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cuspsum/continued_fraction.hpp"
#include "cuspsum/rational.hpp"
#include "cuspsum/scanner.hpp"
#include "cuspsum/series.hpp"
#include "cuspsum/slopes.hpp"
#include "cuspsum/verify.hpp"
#include "table.hpp"

namespace {

using cuspsum::cli::Cell;
using cuspsum::cli::OutputFormat;
using cuspsum::cli::Table;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::string format = "csv";
  std::string out;
  unsigned threads = 0;
  double budget = cuspsum::kDefaultTermBudget;
};

struct GridFlags {
  double from = 0.0;
  double to = 1.0;
  std::int64_t points = 2001;
};

void add_output_flags(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "plotdata"}))
      ->capture_default_str();
  sub->add_option("--out", c.out, "Output path (default: stdout)");
}

void add_parallel_flags(CLI::App* sub, Common& c) {
  sub->add_option("--threads", c.threads, "Worker threads, 0 = all cores (affects speed only)")
      ->capture_default_str();
  sub->add_option("--budget", c.budget, "Maximum points x n term evaluations")->capture_default_str();
}

void add_grid_flags(CLI::App* sub, GridFlags& g) {
  sub->add_option("--from", g.from, "Grid start")->capture_default_str();
  sub->add_option("--to", g.to, "Grid end")->capture_default_str();
  sub->add_option("--points", g.points, "Grid points, endpoints included")->capture_default_str();
}

cuspsum::GridOptions grid_options(const Common& c) { return {c.threads, c.budget}; }

json meta(const std::string& command, json flags) {
  json m;
  m["command"] = command;
  m["flags"] = std::move(flags);
  m["version"] = CUSPSUM_VERSION;
  return m;
}

json grid_json(const GridFlags& g) {
  return json{{"from", g.from}, {"to", g.to}, {"points", g.points}};
}

int emit(const Table& table, const Common& c) {
  const std::string text = cuspsum::cli::render(table, cuspsum::cli::parse_output_format(c.format));
  if (c.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return std::cout ? kExitOk : kExitFailure;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << c.out << " for writing\n";
    return kExitFailure;
  }
  file << text;
  return file ? kExitOk : kExitFailure;
}

cuspsum::Rational reduce_with_notice(std::int64_t p, std::int64_t q) {
  const cuspsum::Rational r = cuspsum::reduce(p, q);
  if (r.num() != p || r.den() != q) {
    std::cerr << "note: " << p << "/" << q << " reduced to " << r << "\n";
  }
  return r;
}

std::string quality_text(const std::vector<cuspsum::ApproxQuality>& quality) {
  std::string s;
  for (const auto& [q, value] : quality) {
    if (!s.empty()) s += ';';
    s += std::to_string(q) + ":" + cuspsum::cli::format_number(value, 6);
  }
  return s;
}

// eval ----------------------------------------------------------------------

struct EvalArgs {
  Common common;
  GridFlags grid;
  std::string kind = "sin";
  std::int64_t n = 1;
  std::optional<double> x;
};

int run_eval(const EvalArgs& a, bool format_given) {
  const auto kind = cuspsum::parse_series_kind(a.kind);
  if (a.x) {
    const double v = cuspsum::eval_point(kind, a.n, *a.x);
    if (!format_given && a.common.out.empty()) {
      std::cout << cuspsum::cli::format_number(v, 15) << '\n';
      return kExitOk;
    }
    Table t;
    t.columns = {"x", "value"};
    t.meta = meta("eval", json{{"kind", a.kind}, {"n", a.n}, {"x", *a.x}});
    t.comments = {"cuspsum eval kind=" + a.kind + " n=" + std::to_string(a.n)};
    t.add_row({*a.x, v});
    return emit(t, a.common);
  }

  const cuspsum::GridSpec grid(a.grid.from, a.grid.to, a.grid.points);
  const auto values = cuspsum::eval_grid(kind, a.n, grid, grid_options(a.common));
  Table t;
  t.columns = {"x", "value"};
  json flags{{"kind", a.kind}, {"n", a.n}};
  flags.update(grid_json(a.grid));
  t.meta = meta("eval", std::move(flags));
  t.comments = {"cuspsum eval kind=" + a.kind + " n=" + std::to_string(a.n) + " from=" +
                cuspsum::cli::format_number(a.grid.from, 15) + " to=" +
                cuspsum::cli::format_number(a.grid.to, 15) + " points=" + std::to_string(a.grid.points)};
  for (std::int64_t i = 0; i < grid.points(); ++i) {
    t.add_row({grid.at(i), values[static_cast<std::size_t>(i)]});
  }
  return emit(t, a.common);
}

// slopes --------------------------------------------------------------------

struct SlopesArgs {
  Common common;
  std::string kind = "sin";
  std::int64_t n = 1;
  std::int64_t p = 0;
  std::int64_t q = 1;
};

int run_slopes(const SlopesArgs& a) {
  const auto kind = cuspsum::parse_series_kind(a.kind);
  const cuspsum::Rational r = reduce_with_notice(a.p, a.q);
  const cuspsum::SlopeReport rep = cuspsum::one_sided_slopes(a.n, r, kind);
  Table t;
  t.columns = {"kind", "n", "p", "q", "A", "B", "left_slope", "right_slope", "classification"};
  t.meta = meta("slopes", json{{"kind", a.kind}, {"n", a.n}, {"p", a.p}, {"q", a.q}});
  t.comments = {"cuspsum slopes"};
  t.add_row({a.kind, a.n, r.num(), r.den(), rep.smooth_coeff, rep.cusp_count, rep.left_slope,
             rep.right_slope, std::string(cuspsum::to_string(rep.classification))});
  return emit(t, a.common);
}

// threshold -----------------------------------------------------------------

struct ThresholdArgs {
  Common common;
  std::string kind = "sin";
  std::optional<std::int64_t> p;
  std::optional<std::int64_t> q;
  std::optional<std::int64_t> sweep;
};

int run_threshold(const ThresholdArgs& a) {
  const auto kind = cuspsum::parse_series_kind(a.kind);
  Table t;
  t.comments = {"cuspsum threshold"};
  if (!a.sweep) {
    const cuspsum::Rational r = reduce_with_notice(*a.p, *a.q);
    const cuspsum::ThresholdReport rep = cuspsum::threshold(r, kind);
    t.columns = {"p", "q", "first_n", "stable_n", "q_squared", "sharp_estimate", "ratio"};
    t.meta = meta("threshold", json{{"kind", a.kind}, {"p", *a.p}, {"q", *a.q}});
    t.add_row({r.num(), r.den(), rep.first_n, rep.stable_n, rep.q_squared, rep.sharp_estimate,
               static_cast<double>(rep.stable_n) / static_cast<double>(rep.q_squared)});
    return emit(t, a.common);
  }

  const std::int64_t q_max = *a.sweep;
  if (q_max < 2 || q_max > cuspsum::kMaxDenominator) {
    std::cerr << "error: --sweep must lie in [2, " << cuspsum::kMaxDenominator << "]\n";
    return kExitUsage;
  }
  t.columns = {"p", "q", "first_n", "stable_n", "q_squared", "ratio", "max_ratio_for_q", "within_q_squared"};
  t.meta = meta("threshold", json{{"kind", a.kind}, {"sweep", q_max}});
  bool all_within = true;
  for (std::int64_t q = 2; q <= q_max; ++q) {
    if (kind == cuspsum::SeriesKind::AbsCos && q % 2 != 0) continue;
    std::vector<std::pair<cuspsum::Rational, cuspsum::ThresholdReport>> reports;
    double max_ratio = 0.0;
    for (std::int64_t p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const cuspsum::Rational r = cuspsum::reduce(p, q);
      const auto rep = cuspsum::threshold(r, kind);
      max_ratio = std::max(max_ratio, static_cast<double>(rep.stable_n) / static_cast<double>(rep.q_squared));
      reports.emplace_back(r, rep);
    }
    for (const auto& [r, rep] : reports) {
      const bool within = rep.stable_n <= rep.q_squared;
      all_within = all_within && within;
      t.add_row({r.num(), r.den(), rep.first_n, rep.stable_n, rep.q_squared,
                 static_cast<double>(rep.stable_n) / static_cast<double>(rep.q_squared), max_ratio,
                 std::string(within ? "yes" : "no")});
    }
  }
  std::cerr << (all_within ? "every row satisfies stable_n <= q^2\n" : "some rows violate stable_n <= q^2\n");
  return emit(t, a.common);
}

// scan ----------------------------------------------------------------------

struct ScanArgs {
  Common common;
  GridFlags grid;
  std::string kind = "sin";
  std::int64_t n = 1;
  double tau = cuspsum::kDefaultProminenceThreshold;
  std::int64_t q_max = 25;
};

int run_scan(const ScanArgs& a) {
  const auto kind = cuspsum::parse_series_kind(a.kind);
  const cuspsum::GridSpec grid(a.grid.from, a.grid.to, a.grid.points);
  const cuspsum::CuspScan scan = cuspsum::detect_cusps(kind, a.n, grid, a.tau, a.q_max, grid_options(a.common));
  if (scan.coarse_grid) {
    std::cerr << "warning: grid spacing " << scan.spacing << " exceeds 1/(2 qmax^2); matches may be ambiguous\n";
  }
  Table t;
  t.columns = {"rank", "grid_x", "prominence", "matched", "match_residual", "predicted_prominence"};
  json flags{{"kind", a.kind}, {"n", a.n}};
  flags.update(grid_json(a.grid));
  flags["tau"] = a.tau;
  flags["qmax"] = a.q_max;
  t.meta = meta("scan", std::move(flags));
  t.meta["coarse_grid"] = scan.coarse_grid;
  t.comments = {"cuspsum scan: candidates by descending prominence"};
  std::int64_t rank = 1;
  for (const auto& c : scan.candidates) {
    t.add_row({rank++, c.grid_x, c.prominence, c.matched ? c.matched->to_string() : std::string(),
               c.match_residual, c.predicted_prominence});
  }
  return emit(t, a.common);
}

// maxima --------------------------------------------------------------------

struct MaximaArgs {
  Common common;
  GridFlags grid;
  std::string kind = "sin";
  std::int64_t n = 1;
  int refine = 40;
  std::int64_t q_max = 1000;
};

int run_maxima(const MaximaArgs& a) {
  const auto kind = cuspsum::parse_series_kind(a.kind);
  const cuspsum::GridSpec grid(a.grid.from, a.grid.to, a.grid.points);
  const auto maxima = cuspsum::find_local_maxima(kind, a.n, grid, a.refine, a.q_max, grid_options(a.common));
  Table t;
  t.columns = {"location", "value", "continued_fraction", "quality"};
  json flags{{"kind", a.kind}, {"n", a.n}};
  flags.update(grid_json(a.grid));
  flags["refine"] = a.refine;
  flags["qmax"] = a.q_max;
  t.meta = meta("maxima", std::move(flags));
  t.meta["note"] = "exploratory diagnostics: q*||q x|| along convergents, no claim implied";
  t.comments = {"cuspsum maxima (exploratory): quality lists q:q*||q x|| along convergents"};
  for (const auto& m : maxima) {
    t.add_row({m.location, m.value, m.cf.to_string(), quality_text(m.quality)});
  }
  return emit(t, a.common);
}

// verify --------------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::int64_t q_max = 100;
  std::uint64_t seed = 1;
  std::string out;
};

int run_verify(const VerifyArgs& a) {
  const auto suite = cuspsum::parse_verify_suite(a.suite);
  const auto results = cuspsum::run_verify_suite(suite, a.q_max, a.seed);
  std::string text;
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed;
    text += std::string(r.passed ? "PASS " : "FAIL ") + r.name + " (" + r.detail + ")\n";
  }
  text += "suite " + a.suite + (ok ? ": all checks passed\n" : ": FAILED\n");
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream(a.out, std::ios::binary) << text;
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cuspsum: partial sums of |sin(k pi x)|/k and |cos(k pi x)|/k, their cusps and thresholds"};
  app.set_version_flag("--version", std::string(CUSPSUM_VERSION));
  app.require_subcommand(1);

  const auto kind_check = CLI::IsMember({"sin", "cos"});

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate f_n or g_n at a point or on a grid");
  eval_cmd->add_option("--kind", eval.kind, "Series: sin or cos")->check(kind_check)->capture_default_str();
  eval_cmd->add_option("--n", eval.n, "Number of terms")->required()->check(CLI::PositiveNumber);
  auto* x_opt = eval_cmd->add_option("--x", eval.x, "Single evaluation point");
  add_grid_flags(eval_cmd, eval.grid);
  for (const char* name : {"--from", "--to", "--points"}) x_opt->excludes(eval_cmd->get_option(name));
  add_output_flags(eval_cmd, eval.common);
  add_parallel_flags(eval_cmd, eval.common);

  SlopesArgs slopes;
  auto* slopes_cmd = app.add_subcommand("slopes", "One-sided slopes and classification at p/q");
  slopes_cmd->add_option("--kind", slopes.kind, "Series: sin or cos")->check(kind_check)->capture_default_str();
  slopes_cmd->add_option("--n", slopes.n, "Number of terms")->required()->check(CLI::PositiveNumber);
  slopes_cmd->add_option("--p", slopes.p, "Numerator")->required();
  slopes_cmd->add_option("--q", slopes.q, "Denominator (nonzero)")->required();
  add_output_flags(slopes_cmd, slopes.common);

  ThresholdArgs thr;
  auto* thr_cmd = app.add_subcommand("threshold", "First and stable n for a strict local minimum at p/q");
  thr_cmd->add_option("--kind", thr.kind, "Series: sin or cos")->check(kind_check)->capture_default_str();
  auto* p_opt = thr_cmd->add_option("--p", thr.p, "Numerator");
  auto* q_opt = thr_cmd->add_option("--q", thr.q, "Denominator (nonzero)");
  auto* sweep_opt = thr_cmd->add_option("--sweep", thr.sweep, "Tabulate every reduced p/q with q <= QMAX");
  p_opt->needs(q_opt);
  q_opt->needs(p_opt);
  sweep_opt->excludes(p_opt)->excludes(q_opt);
  add_output_flags(thr_cmd, thr.common);

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Detect cusps on a grid and match them to rationals");
  scan_cmd->add_option("--kind", scan.kind, "Series: sin or cos")->check(kind_check)->capture_default_str();
  scan_cmd->add_option("--n", scan.n, "Number of terms")->required()->check(CLI::PositiveNumber);
  add_grid_flags(scan_cmd, scan.grid);
  scan_cmd->add_option("--tau", scan.tau, "Prominence threshold")->capture_default_str();
  scan_cmd->add_option("--qmax", scan.q_max, "Largest denominator for matching")->capture_default_str();
  add_output_flags(scan_cmd, scan.common);
  add_parallel_flags(scan_cmd, scan.common);

  MaximaArgs maxima;
  auto* maxima_cmd = app.add_subcommand("maxima", "Locate local maxima with continued-fraction diagnostics");
  maxima_cmd->add_option("--kind", maxima.kind, "Series: sin or cos")->check(kind_check)->capture_default_str();
  maxima_cmd->add_option("--n", maxima.n, "Number of terms")->required()->check(CLI::PositiveNumber);
  add_grid_flags(maxima_cmd, maxima.grid);
  maxima_cmd->add_option("--refine", maxima.refine, "Golden-section iterations")->capture_default_str();
  maxima_cmd->add_option("--qmax", maxima.q_max, "Largest convergent denominator reported")->capture_default_str();
  add_output_flags(maxima_cmd, maxima.common);
  add_parallel_flags(maxima_cmd, maxima.common);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run an invariant suite and report pass/fail per check");
  verify_cmd->add_option("--suite", verify.suite, "identities | theorem | sharpness | oracle")->required();
  verify_cmd->add_option("--qmax", verify.q_max, "Largest denominator")->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Sampling seed")->capture_default_str();
  verify_cmd->add_option("--out", verify.out, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval_cmd) return run_eval(eval, eval_cmd->get_option("--format")->count() > 0);
    if (*slopes_cmd) {
      if (slopes.q == 0) {
        std::cerr << "usage error: --q must be nonzero\n";
        return kExitUsage;
      }
      return run_slopes(slopes);
    }
    if (*thr_cmd) {
      if (!thr.sweep && !thr.p) {
        std::cerr << "usage error: threshold needs --p and --q, or --sweep QMAX\n";
        return kExitUsage;
      }
      if (thr.q && *thr.q == 0) {
        std::cerr << "usage error: --q must be nonzero\n";
        return kExitUsage;
      }
      return run_threshold(thr);
    }
    if (*scan_cmd) return run_scan(scan);
    if (*maxima_cmd) return run_maxima(maxima);
    if (*verify_cmd) return run_verify(verify);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
