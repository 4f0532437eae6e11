// Command-line front end: exact formula tables, oracle cross-checks, Monte
// Carlo runs, environment census, coupling checks and SVG reports for the
// random walk on the d-dimensional Manhattan lattice.

#include "manhattan/exact.hpp"
#include "manhattan/formulas.hpp"
#include "manhattan/lattice.hpp"
#include "manhattan/report.hpp"
#include "manhattan/walk.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

namespace {

using manhattan::BigInt;
using manhattan::Dimension;
using manhattan::OrientationRule;
using manhattan::Rational;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct CommonOpts {
  int d = 2;
  std::string rule = "manhattan";
  std::string format = "csv";
  std::string out;
  std::uint64_t max_sites = manhattan::kDefaultMaxLiveSites;
};

OrientationRule parse_rule(const std::string& spec, Dimension d) {
  if (spec == "manhattan") return OrientationRule::manhattan(d);
  if (spec.rfind("iid:", 0) == 0) {
    const std::string seed_str = spec.substr(4);
    std::size_t used = 0;
    const std::uint64_t seed = std::stoull(seed_str, &used);
    if (used != seed_str.size()) {
      throw std::invalid_argument("bad seed in --rule " + spec);
    }
    return OrientationRule::iid_coin(d, seed);
  }
  throw std::invalid_argument("--rule must be 'manhattan' or 'iid:<seed>', got '" +
                              spec + "'");
}

void write_output(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file " + out_path);
  file << content;
}

std::string frac(const Rational& q) { return manhattan::fraction_string(q); }
std::string f17(double x) { return manhattan::format_g17(x); }

ordered_json rational_json(const Rational& q) {
  return {{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

void require_format(const std::string& format,
                    std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw std::invalid_argument("--format " + format + " not valid for this command");
}

// ---------------------------------------------------------------- formula --

int run_formula(const CommonOpts& opts, unsigned n_max) {
  require_format(opts.format, {"csv", "json"});
  const Dimension d(opts.d);

  if (opts.format == "csv") {
    std::ostringstream out;
    out << "# manhattan formula v1\n";
    out << "# d=" << opts.d << " n_max=" << n_max << "\n";
    out << "n,mean_coefficient,mean_coefficient_float,msd,msd_float\n";
    for (unsigned n = 0; n <= n_max; ++n) {
      const Rational c = manhattan::mean_coefficient(d, n);
      const Rational v = manhattan::msd(d, n);
      out << n << "," << frac(c) << "," << f17(manhattan::to_double(c)) << ","
          << frac(v) << "," << f17(manhattan::to_double(v)) << "\n";
    }
    write_output(out.str(), opts.out);
  } else {
    ordered_json j;
    j["schema"] = "manhattan-formula-v1";
    j["d"] = opts.d;
    j["n_max"] = n_max;
    j["diffusive_limit"] = rational_json(manhattan::diffusive_limit(d));
    j["records"] = ordered_json::array();
    for (unsigned n = 0; n <= n_max; ++n) {
      const Rational c = manhattan::mean_coefficient(d, n);
      const Rational v = manhattan::msd(d, n);
      j["records"].push_back({{"n", n},
                              {"mean_coefficient", rational_json(c)},
                              {"mean_coefficient_float", manhattan::to_double(c)},
                              {"msd", rational_json(v)},
                              {"msd_float", manhattan::to_double(v)}});
    }
    write_output(j.dump(2) + "\n", opts.out);
  }
  return kExitPass;
}

// ------------------------------------------------------------------ exact --

int run_exact(const CommonOpts& opts, unsigned n_max) {
  require_format(opts.format, {"csv", "json"});
  const Dimension d(opts.d);
  const OrientationRule rule = parse_rule(opts.rule, d);

  // Precheck the whole range so a budget failure happens before any output.
  const BigInt bound = manhattan::reachable_sites_bound(d, n_max);
  if (bound > opts.max_sites) {
    throw manhattan::ResourceError(
        "estimated " + bound.str() + " live sites at (d=" + std::to_string(opts.d) +
            ", n=" + std::to_string(n_max) + ") exceeds budget " +
            std::to_string(opts.max_sites) + "; raise --max-sites",
        opts.d, n_max);
  }

  std::ostringstream csv;
  ordered_json j;
  if (opts.format == "csv") {
    csv << "# manhattan exact v1\n";
    csv << "# d=" << opts.d << " rule=" << rule.name() << " n_max=" << n_max
        << " max_sites=" << opts.max_sites << "\n";
    csv << "n,msd,msd_float";
    for (int i = 0; i < opts.d; ++i) csv << ",mean_" << i;
    csv << ",return_prob\n";
  } else {
    j["schema"] = "manhattan-exact-v1";
    j["d"] = opts.d;
    j["rule"] = rule.name();
    j["n_max"] = n_max;
    j["records"] = ordered_json::array();
  }

  manhattan::PathDistribution dist = manhattan::origin_distribution(d);
  for (unsigned n = 0;; ++n) {
    const Rational v = manhattan::exact_msd(dist);
    const auto mean = manhattan::exact_mean(dist);
    std::optional<Rational> ret;
    if (n % 2 == 0) {
      const auto it = dist.counts.find(manhattan::Site(opts.d, 0));
      ret = Rational(it == dist.counts.end() ? BigInt(0) : it->second, dist.total);
    }

    if (opts.format == "csv") {
      csv << n << "," << frac(v) << "," << f17(manhattan::to_double(v));
      for (const auto& m : mean) csv << "," << frac(m);
      csv << "," << (ret ? frac(*ret) : "") << "\n";
    } else {
      ordered_json rec;
      rec["n"] = n;
      rec["msd"] = rational_json(v);
      rec["msd_float"] = manhattan::to_double(v);
      rec["mean"] = ordered_json::array();
      for (const auto& m : mean) rec["mean"].push_back(rational_json(m));
      rec["return_prob"] = ret ? rational_json(*ret) : ordered_json(nullptr);
      j["records"].push_back(std::move(rec));
    }

    if (n == n_max) break;
    dist = manhattan::evolve(dist, rule, opts.max_sites);
  }

  write_output(opts.format == "csv" ? csv.str() : j.dump(2) + "\n", opts.out);
  return kExitPass;
}

// --------------------------------------------------------------- simulate --

manhattan::SampleMoments run_simulation(const CommonOpts& opts, std::uint64_t n_steps,
                                        std::uint64_t chains, std::uint64_t seed,
                                        std::uint64_t stride,
                                        std::optional<bool> check_invariants,
                                        unsigned workers) {
  const Dimension d(opts.d);
  manhattan::SimConfig config(parse_rule(opts.rule, d));
  config.n_steps = n_steps;
  config.n_chains = chains;
  config.seed = seed;
  config.record_stride = stride;
  config.check_invariants = check_invariants;
  config.n_workers = workers;
  return manhattan::simulate(config);
}

int run_simulate(const CommonOpts& opts, std::uint64_t n_steps, std::uint64_t chains,
                 std::uint64_t seed, std::uint64_t stride,
                 std::optional<bool> check_invariants, unsigned workers) {
  require_format(opts.format, {"csv", "json"});
  const manhattan::SampleMoments moments =
      run_simulation(opts, n_steps, chains, seed, stride, check_invariants, workers);
  write_output(opts.format == "csv" ? moments.to_csv() : moments.to_json(), opts.out);
  return kExitPass;
}

// ----------------------------------------------------------------- census --

int run_census(const CommonOpts& opts, int radius) {
  require_format(opts.format, {"csv", "json"});
  const Dimension d(opts.d);
  const OrientationRule rule = parse_rule(opts.rule, d);
  const auto envs = manhattan::env_census(rule, radius);

  // The even/odd expected count applies to the Manhattan rule only.
  std::optional<BigInt> expected;
  if (rule.kind() == manhattan::RuleKind::kManhattan) {
    expected = manhattan::expected_manhattan_census(d);
  }
  const bool pass = !expected || BigInt(envs.size()) == *expected;
  const std::string verdict = expected ? (pass ? "PASS" : "FAIL") : "N/A";

  if (opts.format == "csv") {
    std::ostringstream out;
    out << "# manhattan census v1\n";
    out << "# d=" << opts.d << " rule=" << rule.name() << " radius=" << radius
        << " count=" << envs.size()
        << " expected=" << (expected ? expected->str() : "-") << " verdict=" << verdict
        << "\n";
    for (int i = 0; i < opts.d; ++i) out << (i ? "," : "") << "sign_" << i;
    out << "\n";
    for (const auto& env : envs) {
      for (std::size_t i = 0; i < env.size(); ++i) {
        out << (i ? "," : "") << static_cast<int>(env[i]);
      }
      out << "\n";
    }
    write_output(out.str(), opts.out);
  } else {
    ordered_json j;
    j["schema"] = "manhattan-census-v1";
    j["d"] = opts.d;
    j["rule"] = rule.name();
    j["radius"] = radius;
    j["count"] = envs.size();
    j["expected"] = expected ? ordered_json(expected->str()) : ordered_json(nullptr);
    j["verdict"] = verdict;
    j["environments"] = ordered_json::parse(manhattan::census_to_json(envs));
    write_output(j.dump(2) + "\n", opts.out);
  }
  return pass ? kExitPass : kExitVerificationFailure;
}

// --------------------------------------------------------------- coupling --

int run_coupling(const CommonOpts& opts, unsigned n_max) {
  require_format(opts.format, {"csv", "json"});
  const Dimension d(opts.d);
  if (opts.d != 2) {
    // Same reason the library gives: only in 2D can (2d)^n path counts match
    // a power of d.
    throw std::invalid_argument(
        "coupling requires --d 2: the floor-halving map matches a simple random "
        "walk only in two dimensions");
  }

  bool all_equal = true;
  std::ostringstream csv;
  ordered_json j;
  if (opts.format == "csv") {
    csv << "# manhattan coupling v1\n";
    csv << "# d=2 n_max=" << n_max << "\n";
    csv << "n,law_equal\n";
  } else {
    j["schema"] = "manhattan-coupling-v1";
    j["d"] = 2;
    j["n_max"] = n_max;
    j["records"] = ordered_json::array();
  }
  for (unsigned n = 0; n <= n_max; ++n) {
    const bool equal = manhattan::srw_coupling_check(d, n, opts.max_sites);
    all_equal = all_equal && equal;
    if (opts.format == "csv") {
      csv << n << "," << (equal ? 1 : 0) << "\n";
    } else {
      j["records"].push_back({{"n", n}, {"law_equal", equal}});
    }
  }
  if (opts.format == "json") j["all_equal"] = all_equal;
  write_output(opts.format == "csv" ? csv.str() : j.dump(2) + "\n", opts.out);
  return all_equal ? kExitPass : kExitVerificationFailure;
}

// ---------------------------------------------------------------- compare --

int run_compare(const CommonOpts& opts, unsigned n_max, std::uint64_t chains,
                std::uint64_t seed, unsigned workers) {
  require_format(opts.format, {"csv", "json"});
  const Dimension d(opts.d);
  if (opts.rule != "manhattan") {
    throw std::invalid_argument(
        "compare checks the Manhattan closed forms; --rule must be manhattan");
  }
  const OrientationRule rule = OrientationRule::manhattan(d);

  std::optional<manhattan::SampleMoments> mc;
  if (chains > 0) {
    mc = run_simulation(opts, n_max, chains, seed, 1, std::nullopt, workers);
  }

  std::ostringstream csv;
  ordered_json j;
  if (opts.format == "csv") {
    csv << "# manhattan compare v1\n";
    csv << "# d=" << opts.d << " rule=manhattan n_max=" << n_max
        << " chains=" << chains << " seed=" << seed << "\n";
    csv << "n,msd_formula,msd_oracle,msd_match,mean_formula,mean_oracle,mean_match,"
           "mc_msd,mc_msd_stderr,mc_msd_z,mc_mean_max_z,verdict\n";
  } else {
    j["schema"] = "manhattan-compare-v1";
    j["d"] = opts.d;
    j["rule"] = "manhattan";
    j["n_max"] = n_max;
    j["chains"] = chains;
    j["seed"] = seed;
    j["records"] = ordered_json::array();
  }

  bool all_exact = true;
  manhattan::PathDistribution dist = manhattan::origin_distribution(d);
  for (unsigned n = 0;; ++n) {
    const Rational v_formula = manhattan::msd(d, n);
    const Rational c_formula = manhattan::mean_coefficient(d, n);
    const Rational v_oracle = manhattan::exact_msd(dist);
    const auto mean_oracle = manhattan::exact_mean(dist);

    const bool msd_match = v_formula == v_oracle;
    bool mean_match = true;
    for (const auto& m : mean_oracle) mean_match = mean_match && (m == c_formula);
    const bool exact_ok = msd_match && mean_match;
    all_exact = all_exact && exact_ok;

    double mc_msd = 0, mc_stderr = 0, mc_z = 0, mc_mean_max_z = 0;
    if (mc) {
      const auto& rec = mc->records.at(n);  // stride 1: record r is step r
      const Rational est = mc->msd_estimate(rec);
      mc_msd = manhattan::to_double(est);
      mc_stderr = mc->msd_stderr(rec);
      const double diff = manhattan::to_double(est - v_formula);
      mc_z = mc_stderr > 0 ? diff / mc_stderr
                           : (diff == 0 ? 0 : std::numeric_limits<double>::infinity());
      for (int i = 0; i < opts.d; ++i) {
        const double md = manhattan::to_double(mc->mean_estimate(rec, i) - c_formula);
        const double ms = mc->mean_stderr(rec, i);
        const double z = ms > 0 ? std::abs(md) / ms
                                : (md == 0 ? 0 : std::numeric_limits<double>::infinity());
        mc_mean_max_z = std::max(mc_mean_max_z, z);
      }
    }

    if (opts.format == "csv") {
      csv << n << "," << frac(v_formula) << "," << frac(v_oracle) << ","
          << (msd_match ? 1 : 0) << "," << frac(c_formula) << ","
          << frac(mean_oracle[0]) << "," << (mean_match ? 1 : 0) << ",";
      if (mc) {
        csv << f17(mc_msd) << "," << f17(mc_stderr) << "," << f17(mc_z) << ","
            << f17(mc_mean_max_z);
      } else {
        csv << ",,,";
      }
      csv << "," << (exact_ok ? "PASS" : "FAIL") << "\n";
    } else {
      ordered_json rec;
      rec["n"] = n;
      rec["msd_formula"] = rational_json(v_formula);
      rec["msd_oracle"] = rational_json(v_oracle);
      rec["msd_match"] = msd_match;
      rec["mean_formula"] = rational_json(c_formula);
      rec["mean_oracle"] = rational_json(mean_oracle[0]);
      rec["mean_match"] = mean_match;
      if (mc) {
        rec["mc_msd"] = mc_msd;
        rec["mc_msd_stderr"] = mc_stderr;
        rec["mc_msd_z"] = mc_z;
        rec["mc_mean_max_z"] = mc_mean_max_z;
      }
      rec["verdict"] = exact_ok ? "PASS" : "FAIL";
      j["records"].push_back(std::move(rec));
    }

    if (n == n_max) break;
    dist = manhattan::evolve(dist, rule, opts.max_sites);
  }

  if (opts.format == "json") j["all_exact"] = all_exact;
  write_output(opts.format == "csv" ? csv.str() : j.dump(2) + "\n", opts.out);
  return all_exact ? kExitPass : kExitVerificationFailure;
}

// ----------------------------------------------------------------- report --

int run_report(const CommonOpts& opts, unsigned n_max, std::uint64_t chains,
               std::uint64_t seed, unsigned workers) {
  require_format(opts.format, {"svg"});
  const Dimension d(opts.d);
  const OrientationRule rule = OrientationRule::manhattan(d);

  manhattan::SvgPlotSpec spec;
  spec.title = "Manhattan lattice walk, d=" + std::to_string(opts.d) +
               ": mean square displacement";
  spec.x_label = "steps n";
  spec.y_label = "E|X_n|^2";
  spec.asymptote_slope =
      manhattan::to_double(manhattan::diffusive_limit(d));

  for (unsigned n = 0; n <= n_max; ++n) {
    spec.curve.push_back({double(n), manhattan::to_double(manhattan::msd(d, n))});
  }

  // Oracle points until the site budget runs out.
  try {
    manhattan::PathDistribution dist = manhattan::origin_distribution(d);
    for (unsigned n = 0;; ++n) {
      spec.oracle_points.push_back(
          {double(n), manhattan::to_double(manhattan::exact_msd(dist))});
      if (n == n_max) break;
      dist = manhattan::evolve(dist, rule, opts.max_sites);
    }
  } catch (const manhattan::ResourceError&) {
    // plot whatever fit in the budget
  }

  if (chains > 0) {
    const std::uint64_t stride = std::max<std::uint64_t>(1, n_max / 25);
    const manhattan::SampleMoments mc =
        run_simulation(opts, n_max, chains, seed, stride, std::nullopt, workers);
    for (const auto& rec : mc.records) {
      spec.mc_points.push_back({double(rec.n),
                                manhattan::to_double(mc.msd_estimate(rec)),
                                mc.msd_stderr(rec)});
    }
  }

  write_output(manhattan::render_svg_plot(spec), opts.out);
  return kExitPass;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_rule = true) {
  cmd->add_option("--d", opts.d, "lattice dimension (2..64)")
      ->envname("MANHATTAN_D");
  if (with_rule) {
    cmd->add_option("--rule", opts.rule, "orientation rule: manhattan | iid:<seed>")
        ->envname("MANHATTAN_RULE");
  }
  cmd->add_option("--format", opts.format, "output format")
      ->envname("MANHATTAN_FORMAT");
  cmd->add_option("--out", opts.out, "output path (default: stdout)")
      ->envname("MANHATTAN_OUT");
  cmd->add_option("--max-sites", opts.max_sites,
                  "budget for live sites in the exact engine")
      ->envname("MANHATTAN_MAX_SITES");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact formulas, exact oracles and Monte Carlo simulation for the random "
      "walk on the d-dimensional Manhattan lattice"};
  app.require_subcommand(1);

  // formula
  CommonOpts formula_opts;
  unsigned formula_n_max = 10;
  auto* cmd_formula =
      app.add_subcommand("formula", "closed-form mean and MSD table");
  add_common(cmd_formula, formula_opts, /*with_rule=*/false);
  cmd_formula->add_option("--n-max", formula_n_max, "largest step count")
      ->envname("MANHATTAN_N_MAX");

  // exact
  CommonOpts exact_opts;
  unsigned exact_n_max = 10;
  auto* cmd_exact =
      app.add_subcommand("exact", "exact moments and return probabilities");
  add_common(cmd_exact, exact_opts);
  cmd_exact->add_option("--n-max", exact_n_max, "largest step count")
      ->envname("MANHATTAN_N_MAX");

  // simulate
  CommonOpts sim_opts;
  std::uint64_t sim_n = 100, sim_chains = 10'000, sim_seed = 0, sim_stride = 1;
  unsigned sim_workers = 1;
  bool sim_check = false, sim_no_check = false;
  auto* cmd_sim = app.add_subcommand("simulate", "seeded Monte Carlo moments");
  add_common(cmd_sim, sim_opts);
  cmd_sim->add_option("--n", sim_n, "steps per chain")->envname("MANHATTAN_N");
  cmd_sim->add_option("--chains", sim_chains, "number of chains")
      ->envname("MANHATTAN_CHAINS");
  cmd_sim->add_option("--seed", sim_seed, "master seed")->envname("MANHATTAN_SEED");
  cmd_sim->add_option("--stride", sim_stride, "record every this many steps")
      ->envname("MANHATTAN_STRIDE");
  cmd_sim->add_flag("--check-invariants", sim_check,
                    "force per-step pathwise identity checks on")
      ->envname("MANHATTAN_CHECK_INVARIANTS");
  cmd_sim->add_flag("--no-check-invariants", sim_no_check,
                    "force per-step pathwise identity checks off");
  cmd_sim->add_option("--workers", sim_workers, "worker threads")
      ->envname("MANHATTAN_WORKERS");

  // census
  CommonOpts census_opts;
  int census_radius = 2;
  auto* cmd_census =
      app.add_subcommand("census", "distinct local environments in a box");
  add_common(cmd_census, census_opts);
  cmd_census->add_option("--radius", census_radius, "box radius (>= 2)")
      ->envname("MANHATTAN_RADIUS");

  // coupling
  CommonOpts coupling_opts;
  unsigned coupling_n_max = 10;
  auto* cmd_coupling = app.add_subcommand(
      "coupling", "compare floor(X_{2n}/2) with the 2D simple random walk");
  add_common(cmd_coupling, coupling_opts, /*with_rule=*/false);
  cmd_coupling->add_option("--n-max", coupling_n_max, "largest SRW step count")
      ->envname("MANHATTAN_N_MAX");

  // compare
  CommonOpts compare_opts;
  unsigned compare_n_max = 10;
  std::uint64_t compare_chains = 0, compare_seed = 0;
  unsigned compare_workers = 1;
  auto* cmd_compare = app.add_subcommand(
      "compare", "three-way table: formula vs exact oracle vs Monte Carlo");
  add_common(cmd_compare, compare_opts);
  cmd_compare->add_option("--n-max", compare_n_max, "largest step count")
      ->envname("MANHATTAN_N_MAX");
  cmd_compare->add_option("--chains", compare_chains, "Monte Carlo chains (0: skip)")
      ->envname("MANHATTAN_CHAINS");
  cmd_compare->add_option("--seed", compare_seed, "master seed")
      ->envname("MANHATTAN_SEED");
  cmd_compare->add_option("--workers", compare_workers, "worker threads")
      ->envname("MANHATTAN_WORKERS");

  // report
  CommonOpts report_opts;
  report_opts.format = "svg";
  unsigned report_n_max = 50;
  std::uint64_t report_chains = 10'000, report_seed = 0;
  unsigned report_workers = 1;
  auto* cmd_report = app.add_subcommand("report", "SVG plot of MSD versus n");
  add_common(cmd_report, report_opts, /*with_rule=*/false);
  cmd_report->add_option("--n-max", report_n_max, "largest step count")
      ->envname("MANHATTAN_N_MAX");
  cmd_report->add_option("--chains", report_chains, "Monte Carlo chains (0: skip)")
      ->envname("MANHATTAN_CHAINS");
  cmd_report->add_option("--seed", report_seed, "master seed")
      ->envname("MANHATTAN_SEED");
  cmd_report->add_option("--workers", report_workers, "worker threads")
      ->envname("MANHATTAN_WORKERS");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_formula->parsed()) return run_formula(formula_opts, formula_n_max);
    if (cmd_exact->parsed()) return run_exact(exact_opts, exact_n_max);
    if (cmd_sim->parsed()) {
      std::optional<bool> check;
      if (sim_check) check = true;
      else if (sim_no_check) check = false;
      return run_simulate(sim_opts, sim_n, sim_chains, sim_seed, sim_stride, check,
                          sim_workers);
    }
    if (cmd_census->parsed()) return run_census(census_opts, census_radius);
    if (cmd_coupling->parsed()) return run_coupling(coupling_opts, coupling_n_max);
    if (cmd_compare->parsed()) {
      return run_compare(compare_opts, compare_n_max, compare_chains, compare_seed,
                         compare_workers);
    }
    if (cmd_report->parsed()) {
      return run_report(report_opts, report_n_max, report_chains, report_seed,
                        report_workers);
    }
  } catch (const manhattan::ResourceError& e) {
    std::cerr << "resource budget exceeded: " << e.what() << "\n";
    return kExitResource;
  } catch (const manhattan::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
