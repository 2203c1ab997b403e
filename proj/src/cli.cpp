#include "quaddiv/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <optional>
#include <ostream>

#include "quaddiv/bounds.hpp"
#include "quaddiv/divisor_sums.hpp"
#include "quaddiv/parallel.hpp"
#include "quaddiv/quadroots.hpp"
#include "quaddiv/spf_cache.hpp"
#include "quaddiv/verify.hpp"

namespace quaddiv {

namespace {

// Fixed 12-significant-digit rendering; no locale involvement.
std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Same 12-digit rounding for JSON numbers.
double round12(double v) { return std::strtod(fmt(v).c_str(), nullptr); }

const char* yes_no(bool v) { return v ? "true" : "false"; }

struct Options {
  unsigned threads = default_threads();

  // rho
  std::optional<u64> delta;
  std::optional<i64> b, c;
  u64 limit = 0;
  bool per_term = false;

  // tausum / bound
  i64 n_limit = 0;
  std::string format = "json";

  // scan
  i64 from = 0, to = 0;
  std::string grid = "geometric";
  std::optional<i64> step;
  double ratio = 2.0;
  bool fit = false;

  // verify
  std::string suite;
  std::string level = "quick";
};

DeltaDecomposition decomposition_from(const Options& o) {
  if (o.delta) {
    require(!o.b && !o.c, "give either --delta or --b/--c, not both");
    return decompose_delta_value(*o.delta);
  }
  require(o.b && o.c, "either --delta or both --b and --c are required");
  return decompose_delta(*o.b, *o.c);
}

int cmd_rho(const Options& o, std::ostream& out) {
  const auto dec = decomposition_from(o);
  require(o.limit >= 1, "--limit must be >= 1");
  const auto table = cached_spf_table(std::max<u64>(o.limit, 2));
  if (o.per_term) {
    const auto vals = rho_values(o.limit, dec, table.get());
    out << "lambda,rho\n";
    for (u64 l = 1; l <= o.limit; ++l) out << l << ',' << vals[l - 1] << '\n';
    return kExitOk;
  }
  const u64 sum = rho_partial_sum(o.limit, dec, table.get(), o.threads);
  const double over = rho_over_lambda_sum(o.limit, dec, table.get());
  out << "delta,b,c,limit,rho_sum,rho_over_lambda_sum\n"
      << dec.delta << ',' << dec.b << ',' << dec.c << ',' << o.limit << ',' << sum << ','
      << fmt(over) << '\n';
  return kExitOk;
}

int cmd_tausum(const Options& o, std::ostream& out, std::ostream& err) {
  const auto dec = decompose_delta(*o.b, *o.c);
  const u64 exact = tau_quad_sum_exact(dec.b, dec.c, o.n_limit, o.threads);
  std::string hyper_text;
  bool equal = true;
  try {
    const u64 hyper = tau_quad_sum_hyperbola(dec, o.n_limit);
    hyper_text = std::to_string(hyper);
    equal = hyper == exact;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Resource) throw;
    hyper_text = "skipped";
    err << "note: hyperbola path skipped: " << e.what() << '\n';
  }
  out << "b,c,limit,exact,hyperbola,equal\n"
      << dec.b << ',' << dec.c << ',' << o.n_limit << ',' << exact << ',' << hyper_text << ','
      << (hyper_text == "skipped" ? "n/a" : yes_no(equal)) << '\n';
  if (!equal) {
    err << "error: hyperbola and factorization paths disagree\n";
    return kExitRuntime;
  }
  return kExitOk;
}

int cmd_bound(const Options& o, std::ostream& out) {
  const auto rep = dominance_report(*o.b, *o.c, o.n_limit, o.threads);
  const auto& t = rep.theorem3;
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["command"] = "bound";
    j["b"] = t.b;
    j["c"] = t.c;
    j["N"] = t.N;
    j["delta"] = t.delta;
    j["Omega"] = t.omega;
    j["t"] = t.t;
    j["c_star"] = t.c_star;
    j["empty_range"] = t.empty_range;
    j["X"] = round12(t.X);
    j["C_omega"] = round12(t.c_omega);
    j["C1_omega"] = t.c1_omega.str();
    j["bound"] = round12(t.bound);
    j["exact"] = t.exact;
    j["dominates"] = rep.dominates;
    if (rep.corollary4_bound) {
      j["corollary4_bound"] = round12(*rep.corollary4_bound);
      j["corollary4_dominates"] = rep.corollary4_dominates;
    } else {
      j["corollary4_bound"] = nullptr;
      j["corollary4_dominates"] = nullptr;
    }
    out << j.dump(2) << '\n';
  } else {
    out << "b,c,N,delta,Omega,t,c_star,empty_range,X,C_omega,C1_omega,bound,exact,dominates,"
           "corollary4_bound,corollary4_dominates\n"
        << t.b << ',' << t.c << ',' << t.N << ',' << t.delta << ',' << t.omega << ',' << t.t
        << ',' << t.c_star << ',' << yes_no(t.empty_range) << ',' << fmt(t.X) << ','
        << fmt(t.c_omega) << ',' << t.c1_omega.str() << ',' << fmt(t.bound) << ',' << t.exact
        << ',' << yes_no(rep.dominates) << ','
        << (rep.corollary4_bound ? fmt(*rep.corollary4_bound) : "") << ','
        << (rep.corollary4_bound ? yes_no(rep.corollary4_dominates) : "") << '\n';
  }
  return rep.dominates ? kExitOk : kExitRuntime;
}

std::vector<i64> make_grid(const Options& o) {
  require(o.from >= 2, "--from must be >= 2");
  require(o.from <= o.to, "--from must not exceed --to");
  std::vector<i64> grid;
  if (o.grid == "linear") {
    const i64 step = o.step.value_or(o.from);
    require(step >= 1, "--step must be >= 1");
    for (i64 n = o.from; n <= o.to; n += step) grid.push_back(n);
  } else {
    require(o.ratio > 1.0, "--ratio must be > 1");
    double x = static_cast<double>(o.from);
    i64 last = 0;
    while (x <= static_cast<double>(o.to) + 0.5) {
      const i64 n = std::llround(x);
      if (n > last) grid.push_back(n);
      last = std::max(last, n);
      x *= o.ratio;
    }
  }
  return grid;
}

int cmd_scan(const Options& o, std::ostream& out) {
  const auto grid = make_grid(o);
  auto scan = asymptotic_scan(*o.b, *o.c, grid, o.threads);
  out << "N,S,ratio\n";
  for (const auto& row : scan.rows) out << row.N << ',' << row.exact << ',' << fmt(row.ratio) << '\n';
  if (o.fit) {
    const auto fit = fit_leading_coefficient(scan);
    out << "a=" << fmt(fit.a) << ",b2=" << fmt(fit.b2) << ",c3=" << fmt(fit.c3)
        << ",target=" << fmt(kSixOverPiSquared) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto level = o.level == "full" ? VerifyLevel::Full : VerifyLevel::Quick;
  const auto res = run_suite(o.suite, level);
  out << "suite,level,checks,failures,verdict\n"
      << res.name << ',' << o.level << ',' << res.checks << ',' << res.failures << ','
      << (res.passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& note : res.notes) out << "# " << note << '\n';
  return res.passed() ? kExitOk : kExitRuntime;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return kExitInvalid;
    case ErrorKind::HypothesisNotMet: return kExitHypothesis;
    case ErrorKind::Overflow:
    case ErrorKind::Resource: return kExitRuntime;
  }
  return kExitRuntime;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Divisor sums over reducible quadratics, root counts and explicit bounds",
               "quaddiv"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", o.threads, "worker threads for range sums")
      ->check(CLI::Range(1u, 1024u));

  auto* rho = app.add_subcommand("rho", "partial sums of rho_delta(lambda)");
  rho->add_option("--delta", o.delta, "delta = (b-c)^2/4, a positive perfect square");
  rho->add_option("--b", o.b, "root b of (n-b)(n-c)");
  rho->add_option("--c", o.c, "root c of (n-b)(n-c)");
  rho->add_option("--limit", o.limit, "sum over lambda <= limit")->required();
  rho->add_flag("--per-term", o.per_term, "emit lambda,rho rows instead of the sum");

  auto* tausum = app.add_subcommand("tausum", "S(N) by factorization and by the hyperbola method");
  tausum->add_option("--b", o.b)->required();
  tausum->add_option("--c", o.c)->required();
  tausum->add_option("--limit", o.n_limit)->required();

  auto* bound = app.add_subcommand("bound", "explicit upper bound against the exact S(N)");
  bound->add_option("--b", o.b)->required();
  bound->add_option("--c", o.c)->required();
  bound->add_option("--limit", o.n_limit)->required();
  bound->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* scan = app.add_subcommand("scan", "S(N) / (N ln^2 N) over a grid, optional fit");
  scan->add_option("--b", o.b)->required();
  scan->add_option("--c", o.c)->required();
  scan->add_option("--from", o.from)->required();
  scan->add_option("--to", o.to)->required();
  scan->add_option("--grid", o.grid)->check(CLI::IsMember({"geometric", "linear"}));
  scan->add_option("--step", o.step, "linear grid step (default: --from)");
  scan->add_option("--ratio", o.ratio, "geometric grid ratio (default: 2)");
  scan->add_flag("--fit", o.fit, "least-squares fit a N ln^2 N + b2 N ln N + c3 N");

  auto* verify = app.add_subcommand("verify", "run a self-check suite");
  verify->add_option("--suite", o.suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--level", o.level)->check(CLI::IsMember({"quick", "full"}));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    if (rho->parsed()) code = cmd_rho(o, out);
    else if (tausum->parsed()) code = cmd_tausum(o, out, err);
    else if (bound->parsed()) code = cmd_bound(o, out);
    else if (scan->parsed()) code = cmd_scan(o, out);
    else if (verify->parsed()) code = cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitRuntime;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << "# wall_time_s=" << fmt(secs) << '\n';
  return code;
}

}  // namespace quaddiv
