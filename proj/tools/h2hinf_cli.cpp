// Experiment runner for the mixed H2/Hinf policy-optimization library.
//
// Subcommands: hinf | membership | optimize | game | modelfree | case-list.
// Configuration is a JSON file (matrices as row-major nested arrays); results
// go to stdout as JSON, iteration traces to a CSV file.
//
// Exit codes: 0 success, 2 config error, 3 infeasibility, 4 non-convergence.

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include <json.hpp>

#include "h2hinf/cases.hpp"
#include "h2hinf/leqg.hpp"
#include "h2hinf/lqgame.hpp"
#include "h2hinf/polgrad.hpp"
#include "h2hinf/zeroth.hpp"

using nlohmann::json;
using namespace h2hinf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitNoConvergence = 4;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Mat parse_matrix(const json& j, const std::string& name) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw ConfigError("matrix '" + name + "' must be a nested array (row-major)");
  }
  const size_t rows = j.size(), cols = j[0].size();
  Mat M(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      throw ConfigError("matrix '" + name + "' has ragged rows");
    }
    for (size_t k = 0; k < cols; ++k) M(i, k) = j[i][k].get<double>();
  }
  return M;
}

json matrix_to_json(const Mat& M) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) row.push_back(M(i, j));
    rows.push_back(row);
  }
  return rows;
}

struct Experiment {
  std::string case_name;
  Plant plant;
  TimeDomain domain = TimeDomain::discrete;
  bool gamma_explicit = true;
  json raw;
};

TimeDomain parse_domain(const std::string& s) {
  if (s == "discrete") return TimeDomain::discrete;
  if (s == "continuous") return TimeDomain::continuous;
  throw ConfigError("time_domain must be 'discrete' or 'continuous'");
}

Experiment load_experiment(const std::string& path, std::optional<double> gamma_override) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config parse failure: ") + e.what());
  }
  Experiment ex;
  ex.raw = j;
  ex.case_name = j.value("case", "custom");
  std::optional<double> gamma = gamma_override;
  if (!gamma && j.contains("gamma")) gamma = j["gamma"].get<double>();

  const bool has_matrices = j.contains("matrices");
  if (ex.case_name != "custom" && has_matrices) {
    throw ConfigError("built-in cases reject matrix overrides (only gamma may be set)");
  }
  if (ex.case_name == "case1") {
    // gamma may be induced from the initial gain during optimize; use a
    // placeholder level until then.
    ex.gamma_explicit = gamma.has_value();
    ex.plant = cases::case1(gamma.value_or(1.0));
    ex.domain = TimeDomain::discrete;
  } else if (ex.case_name == "case2") {
    ex.plant = gamma ? cases::case2().with_gamma(*gamma) : cases::case2();
    ex.domain = TimeDomain::discrete;
  } else if (ex.case_name == "case3") {
    if (!gamma) throw ConfigError("case3 requires gamma");
    ex.plant = cases::case3(*gamma);
    ex.domain = TimeDomain::continuous;
  } else if (ex.case_name == "nonconvex_discrete") {
    ex.plant = cases::nonconvex_plant(gamma.value_or(1.0));
    ex.domain = TimeDomain::discrete;
  } else if (ex.case_name == "nonconvex_continuous") {
    ex.plant = cases::nonconvex_plant(gamma.value_or(1.0));
    ex.domain = TimeDomain::continuous;
  } else if (ex.case_name == "nocoercivity_1d") {
    ex.plant = gamma ? cases::nocoercivity_1d().with_gamma(*gamma) : cases::nocoercivity_1d();
    ex.domain = TimeDomain::discrete;
  } else if (ex.case_name == "custom") {
    if (!has_matrices) throw ConfigError("custom case requires the full matrix set");
    const json& m = j["matrices"];
    for (const char* key : {"A", "B", "D", "R"}) {
      if (!m.contains(key)) throw ConfigError(std::string("matrices missing '") + key + "'");
    }
    if (!m.contains("CtC") && !m.contains("C")) {
      throw ConfigError("matrices must provide 'CtC' or 'C'");
    }
    if (!gamma) throw ConfigError("custom case requires gamma");
    try {
      if (m.contains("CtC")) {
        ex.plant = make_plant(parse_matrix(m["A"], "A"), parse_matrix(m["B"], "B"),
                              parse_matrix(m["D"], "D"), parse_matrix(m["CtC"], "CtC"),
                              parse_matrix(m["R"], "R"), *gamma);
      } else {
        ex.plant = make_plant_from_output(parse_matrix(m["A"], "A"), parse_matrix(m["B"], "B"),
                                          parse_matrix(m["D"], "D"), parse_matrix(m["C"], "C"),
                                          parse_matrix(m["R"], "R"), *gamma);
      }
    } catch (const DimensionError& e) {
      throw ConfigError(e.what());
    }
    if (!j.contains("time_domain")) throw ConfigError("custom case requires time_domain");
    ex.domain = parse_domain(j["time_domain"].get<std::string>());
  } else {
    throw ConfigError("unknown case: " + ex.case_name);
  }
  if (j.contains("time_domain")) ex.domain = parse_domain(j["time_domain"].get<std::string>());
  return ex;
}

Mat required_gain(const Experiment& ex) {
  if (!ex.raw.contains("K")) throw ConfigError("this command requires a gain 'K' in the config");
  return parse_matrix(ex.raw["K"], "K");
}

OptimizerConfig parse_algorithm(const json& j) {
  OptimizerConfig cfg;
  if (!j.contains("algorithm")) return cfg;
  const json& a = j["algorithm"];
  const std::string rule = a.value("rule", "npg");
  if (rule == "pg") {
    cfg.rule = UpdateRule::policy_gradient;
  } else if (rule == "npg") {
    cfg.rule = UpdateRule::natural_pg;
  } else if (rule == "gn") {
    cfg.rule = UpdateRule::gauss_newton;
  } else {
    throw ConfigError("algorithm.rule must be pg|npg|gn");
  }
  if (a.contains("stepsize")) {
    if (a["stepsize"].is_string()) {
      if (a["stepsize"].get<std::string>() != "theorem") {
        throw ConfigError("algorithm.stepsize must be a number or \"theorem\"");
      }
      cfg.stepsize_rule = StepsizeRule::theorem;
    } else {
      cfg.stepsize_rule = StepsizeRule::fixed;
      cfg.eta = a["stepsize"].get<double>();
    }
  }
  if (cfg.rule == UpdateRule::policy_gradient && cfg.stepsize_rule == StepsizeRule::theorem) {
    throw ConfigError("theorem stepsize is defined only for npg/gn");
  }
  const std::string form = a.value("cost_form", "logdet");
  if (form == "trace") {
    cfg.cost_form = CostForm::trace;
  } else if (form == "logdet") {
    cfg.cost_form = CostForm::logdet;
  } else if (form == "trace_inv") {
    cfg.cost_form = CostForm::trace_inv;
  } else {
    throw ConfigError("algorithm.cost_form must be trace|logdet|trace_inv");
  }
  cfg.tol = a.value("tol", 1e-12);
  cfg.max_iter = a.value("max_iter", 10000);
  cfg.pg_backtracking = a.value("pg_backtracking", false);
  return cfg;
}

std::string rule_name(UpdateRule r) {
  switch (r) {
    case UpdateRule::policy_gradient: return "pg";
    case UpdateRule::natural_pg: return "npg";
    case UpdateRule::gauss_newton: return "gn";
  }
  return "?";
}

// ---------------------------------------------------------------------------

int cmd_case_list() {
  json out = json::array();
  out.push_back({{"name", "case1"}, {"domain", "discrete"}, {"states", 3},
                 {"gamma", "seed-derived or explicit"}});
  out.push_back({{"name", "case2"}, {"domain", "discrete"}, {"states", 2}, {"gamma", 10.0}});
  out.push_back({{"name", "case3"}, {"domain", "continuous"}, {"states", 3},
                 {"gamma", "typically 5, 3, or 1"}});
  out.push_back({{"name", "nonconvex_discrete"}, {"domain", "discrete"}, {"states", 3}});
  out.push_back({{"name", "nonconvex_continuous"}, {"domain", "continuous"}, {"states", 3}});
  out.push_back({{"name", "nocoercivity_1d"}, {"domain", "discrete"}, {"states", 1}});
  out.push_back({{"name", "custom"}, {"domain", "config"}, {"states", "config"}});
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_hinf(const Experiment& ex) {
  const Mat K = required_gain(ex);
  const int n_points = ex.raw.value("n_points", 4096);
  const HinfResult grid = hinf_grid(ex.plant, K, ex.domain, n_points);
  const HinfResult bisect = hinf_bisect(ex.plant, K, ex.domain, 1e-6);
  const double delta = std::abs(grid.value - bisect.value);
  json out;
  out["bisection"] = bisect.value;
  out["grid"] = grid.value;
  out["grid_points"] = n_points;
  out["witness_freq"] = grid.witness_freq.value_or(0.0);
  out["cross_method_delta"] = delta;
  out["cross_method_ok"] = delta <= 1e-3 * (1.0 + grid.value);
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_membership(const Experiment& ex) {
  if (!ex.gamma_explicit) throw ConfigError("membership requires an explicit gamma");
  const Mat K = required_gain(ex);
  const MembershipCertificate cert = membership(ex.plant, K, ex.domain);
  json out;
  out["in_set"] = cert.in_set;
  out["stabilizing"] = cert.stabilizing;
  out["gamma"] = ex.plant.gamma;
  switch (cert.reason) {
    case MembershipReason::ok: out["reason"] = "ok"; break;
    case MembershipReason::unstable: out["reason"] = "unstable"; break;
    case MembershipReason::hinf_violation: out["reason"] = "hinf_violation"; break;
  }
  if (cert.riccati) {
    out["brl_margin"] = cert.riccati->brl_margin;
    out["closedloop_radius"] = cert.riccati->closedloop_radius;
    out["riccati_residual"] = cert.riccati->residual;
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

struct TrialResult {
  IterationTrace trace;
  double gamma = 0.0;
  double elapsed_seconds = 0.0;
  bool search_failed = false;
  bool infeasible = false;
};

int cmd_optimize(const Experiment& ex, std::uint64_t seed, int trials,
                 const std::string& out_path, int hinf_every) {
  OptimizerConfig cfg = parse_algorithm(ex.raw);
  cfg.hinf_every = hinf_every;
  if (ex.domain == TimeDomain::continuous && !ex.raw.contains("algorithm")) {
    cfg.cost_form = CostForm::trace;
  }
  const json init = ex.raw.value("init", json::object());
  const double box = init.value("box_half_width", 0.25);
  const double slack = init.value("gamma_slack", 1e-5);
  const int max_tries = init.value("max_tries", 100000);
  const bool induce = init.value("induce_gamma", !ex.gamma_explicit);

  std::vector<TrialResult> results(static_cast<size_t>(trials));
  const SplitMix64 root(seed);

  auto run_trial = [&](int trial) {
    TrialResult& tr = results[static_cast<size_t>(trial)];
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const std::uint64_t trial_seed = root.stream(static_cast<std::uint64_t>(trial)).next();
      const FeasibleInit fi =
          find_feasible_init(ex.plant, ex.domain, box, slack, max_tries, trial_seed, induce);
      const Plant plant = ex.plant.with_gamma(fi.gamma);
      tr.gamma = fi.gamma;
      if (cfg.max_iter == 0) {
        tr.trace.converged = false;
        tr.trace.stop_reason = "not-run";
      } else {
        tr.trace = run_optimizer(plant, fi.K, cfg, ex.domain);
      }
    } catch (const SearchError&) {
      tr.search_failed = true;
    } catch (const InfeasibilityError&) {
      tr.infeasible = true;
    }
    tr.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  // Trials across worker threads; each owns its RNG stream and trace buffer.
  const unsigned n_workers =
      std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                         static_cast<unsigned>(trials));
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < n_workers; ++w) {
    workers.emplace_back([&] {
      for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1)) run_trial(t);
    });
  }
  for (std::thread& w : workers) w.join();

  // Serialized CSV write, trial order fixed.
  std::ofstream csv(out_path);
  if (!csv) throw ConfigError("cannot open output path: " + out_path);
  csv << "trial,iteration,cost,grad_norm_sq,hinf,brl_margin,wall_clock_seconds\n";
  for (int t = 0; t < trials; ++t) {
    for (const TraceRow& row : results[static_cast<size_t>(t)].trace.rows) {
      csv << t << ',' << row.iteration << ',' << format_double(row.cost) << ','
          << format_double(row.grad_norm_sq) << ',' << format_double(row.hinf) << ','
          << format_double(row.brl_margin) << ','
          << format_double(results[static_cast<size_t>(t)].elapsed_seconds) << '\n';
    }
  }
  csv.close();

  int converged_count = 0, failed_search = 0, infeasible_count = 0;
  json trial_json = json::array();
  for (int t = 0; t < trials; ++t) {
    const TrialResult& tr = results[static_cast<size_t>(t)];
    json jt;
    jt["trial"] = t;
    jt["gamma"] = tr.gamma;
    if (tr.search_failed) {
      jt["verdict"] = "init-search-failed";
      ++failed_search;
    } else if (tr.infeasible) {
      jt["verdict"] = "infeasible";
      ++infeasible_count;
    } else if (tr.trace.stop_reason == "not-run") {
      jt["verdict"] = "not-run";
    } else {
      jt["verdict"] = tr.trace.converged ? "converged" : tr.trace.stop_reason;
      jt["iterations"] = tr.trace.rows.empty() ? 0 : tr.trace.rows.back().iteration;
      if (!tr.trace.rows.empty()) {
        jt["final_cost"] = tr.trace.rows.back().cost;
        jt["final_grad_norm_sq"] = tr.trace.rows.back().grad_norm_sq;
      }
      if (tr.trace.converged) ++converged_count;
    }
    trial_json.push_back(jt);
  }

  json out;
  out["case"] = ex.case_name;
  out["algorithm"] = rule_name(cfg.rule);
  out["eta"] = cfg.stepsize_rule == StepsizeRule::theorem ? json("theorem") : json(cfg.eta);
  out["seed"] = seed;
  out["trials"] = trials;
  out["converged"] = converged_count == trials && trials > 0 && cfg.max_iter > 0;
  if (cfg.max_iter == 0) out["converged"] = "not-run";
  out["converged_count"] = converged_count;
  out["trace_csv"] = out_path;
  out["trial_results"] = trial_json;
  const TrialResult* last_ok = nullptr;
  for (int t = trials - 1; t >= 0; --t) {
    const TrialResult& tr = results[static_cast<size_t>(t)];
    if (!tr.search_failed && !tr.infeasible && !tr.trace.rows.empty()) {
      last_ok = &tr;
      break;
    }
  }
  if (last_ok) {
    const TraceRow& fin = last_ok->trace.rows.back();
    out["gamma"] = last_ok->gamma;
    out["final_cost"] = fin.cost;
    out["final_K"] = matrix_to_json(fin.K);
    out["iterations"] = fin.iteration;
    const Plant plant = ex.plant.with_gamma(last_ok->gamma);
    out["final_hinf"] = hinf_bisect(plant, fin.K, ex.domain, 1e-6).value;
    bool implicit_reg = true;
    for (const TraceRow& row : last_ok->trace.rows) implicit_reg &= row.brl_margin > 0.0;
    out["implicit_regularization"] = implicit_reg;
  } else {
    out["gamma"] = ex.plant.gamma;
  }
  std::cout << out.dump(2) << "\n";

  if (failed_search == trials && trials > 0) return kExitInfeasible;
  if (cfg.max_iter == 0) return kExitOk;
  if (failed_search + infeasible_count > 0) return kExitInfeasible;
  if (converged_count < trials) return kExitNoConvergence;
  return kExitOk;
}

GameSpec game_from_config(const Experiment& ex) {
  if (ex.raw.contains("game_matrices")) {
    const json& m = ex.raw["game_matrices"];
    for (const char* key : {"A", "B", "D", "Q", "Ru", "Rv"}) {
      if (!m.contains(key)) throw ConfigError(std::string("game_matrices missing '") + key + "'");
    }
    const Mat A = parse_matrix(m["A"], "A");
    const Mat Sigma0 = m.contains("Sigma0") ? parse_matrix(m["Sigma0"], "Sigma0")
                                            : Mat(Mat::Identity(A.rows(), A.rows()));
    return make_game(A, parse_matrix(m["B"], "B"), parse_matrix(m["D"], "D"),
                     parse_matrix(m["Q"], "Q"), parse_matrix(m["Ru"], "Ru"),
                     parse_matrix(m["Rv"], "Rv"), Sigma0);
  }
  return game_from_plant(ex.plant);
}

int cmd_game(const Experiment& ex) {
  const GameSpec spec = game_from_config(ex);
  const NashSolution ne = solve_gare(spec, 1e-12);
  json out;
  out["K_star"] = matrix_to_json(ne.K_star);
  out["L_star"] = matrix_to_json(ne.L_star);
  out["P_star_trace"] = ne.P_star.trace();
  out["gare_residual"] = ne.gare_residual;
  out["certified"] = ne.value_matrix_certified;
  out["value"] = (ne.P_star * spec.Sigma0).trace();
  if (!ex.raw.contains("game_matrices")) {
    // Equivalence with the mixed-design optimum on the same data.
    const OptimalGain mixed = solve_optimal_modified_riccati(ex.plant, 1e-12);
    out["mixed_K"] = matrix_to_json(mixed.K);
    out["gain_delta"] = (ne.K_star - mixed.K).norm();
    out["equivalence_ok"] = (ne.K_star - mixed.K).norm() <= 1e-6;
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_modelfree(const Experiment& ex, std::uint64_t seed) {
  const GameSpec spec = game_from_config(ex);
  const json mf = ex.raw.value("modelfree", json::object());
  RolloutConfig cfg;
  cfg.m_traj = mf.value("m_traj", 50);
  cfg.horizon = mf.value("horizon", 100);
  cfg.radius = mf.value("radius", 0.1);
  cfg.seed = seed;
  cfg.exact_oracle = mf.value("exact_oracle", false);
  const int n_outer = mf.value("n_outer", 200);
  const int n_inner = mf.value("n_inner", 100);
  const double eta = mf.value("eta", 0.05);
  const double alpha = mf.value("alpha", 0.05);
  const double tol = mf.value("distance_tol", 1e-3);
  const std::string variant_name = mf.value("variant", "npg");
  const GameUpdate variant =
      variant_name == "pg" ? GameUpdate::policy_gradient : GameUpdate::natural_pg;

  Mat K0;
  if (ex.raw.contains("K")) {
    K0 = parse_matrix(ex.raw["K"], "K");
  } else {
    K0 = Mat::Zero(spec.B.cols(), spec.A.rows());
  }

  const NashSolution ne = solve_gare(spec, 1e-12);
  const IterationTrace trace =
      outer_ng(spec, K0, cfg, n_outer, n_inner, eta, alpha, variant);
  const double dist = (trace.rows.back().K - ne.K_star).norm();

  json out;
  out["seed"] = seed;
  out["variant"] = variant_name;
  out["exact_oracle"] = cfg.exact_oracle;
  out["n_outer"] = n_outer;
  out["final_K"] = matrix_to_json(trace.rows.back().K);
  out["K_star"] = matrix_to_json(ne.K_star);
  out["distance_to_nash"] = dist;
  out["left_feasible_set"] = trace.stop_reason == "left game-feasible set";
  out["verdict"] = dist <= tol ? "converged" : "not-converged";
  std::cout << out.dump(2) << "\n";
  if (trace.stop_reason == "left game-feasible set") return kExitInfeasible;
  return dist <= tol ? kExitOk : kExitNoConvergence;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Policy optimization for mixed H2/Hinf control design"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path = "trace.csv";
  std::uint64_t seed = 1;
  int trials = 1;
  int hinf_every = 1;
  double gamma_flag = -1.0;

  auto add_common = [&](CLI::App* cmd, bool needs_config) {
    auto* opt = cmd->add_option("--config", config_path, "JSON experiment config");
    if (needs_config) opt->required();
    cmd->add_option("--seed", seed, "base RNG seed");
    cmd->add_option("--gamma", gamma_flag, "override the attenuation level");
  };

  CLI::App* c_list = app.add_subcommand("case-list", "list built-in cases");
  CLI::App* c_hinf = app.add_subcommand("hinf", "Hinf norm by bisection and grid");
  add_common(c_hinf, true);
  CLI::App* c_mem = app.add_subcommand("membership", "feasible-set membership certificate");
  add_common(c_mem, true);
  CLI::App* c_opt = app.add_subcommand("optimize", "run a policy-optimization experiment");
  add_common(c_opt, true);
  c_opt->add_option("--out", out_path, "CSV trace path");
  c_opt->add_option("--trials", trials, "number of independent trials");
  c_opt->add_option("--hinf-every", hinf_every,
                    "compute the Hinf column every N iterations (0 = never)");
  CLI::App* c_game = app.add_subcommand("game", "solve the zero-sum LQ game");
  add_common(c_game, true);
  CLI::App* c_mf = app.add_subcommand("modelfree", "zeroth-order nested natural gradient");
  add_common(c_mf, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_list->parsed()) return cmd_case_list();
    const std::optional<double> gamma_override =
        gamma_flag > 0.0 ? std::optional<double>(gamma_flag) : std::nullopt;
    Experiment ex = load_experiment(config_path, gamma_override);
    bool seed_from_flag = false;
    for (CLI::App* sub : app.get_subcommands()) {
      if (sub->count("--seed") > 0) seed_from_flag = true;
    }
    if (ex.raw.contains("seed") && !seed_from_flag) seed = ex.raw["seed"].get<std::uint64_t>();
    if (c_hinf->parsed()) return cmd_hinf(ex);
    if (c_mem->parsed()) return cmd_membership(ex);
    if (c_opt->parsed()) {
      if (ex.raw.contains("trials") && trials == 1) trials = ex.raw["trials"].get<int>();
      if (ex.raw.contains("output_path") && out_path == "trace.csv") {
        out_path = ex.raw["output_path"].get<std::string>();
      }
      return cmd_optimize(ex, seed, trials, out_path, hinf_every);
    }
    if (c_game->parsed()) return cmd_game(ex);
    if (c_mf->parsed()) return cmd_modelfree(ex, seed);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DimensionError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InfeasibilityError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const SearchError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const InstabilityError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const ConvergenceError& e) {
    std::cerr << "non-convergence: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const EstimationError& e) {
    std::cerr << "non-convergence: " << e.what() << "\n";
    return kExitNoConvergence;
  }
  return kExitConfig;
}
