#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "fraclab/fraclab.hpp"
#include "fraclab/parallel.hpp"

#ifndef FRACLAB_GIT_DESCRIBE
#define FRACLAB_GIT_DESCRIBE "unknown"
#endif

namespace fraclab::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kModels = {"langevin", "market", "memoryless", "noise-only"};

std::string path_stem(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "path_%04zu", i);
  return buf;
}

unsigned default_workers() {
  if (const char* env = std::getenv("FRACLAB_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) throw UsageError("FRACLAB_WORKERS must be a positive integer");
    return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

json read_json_arg(const std::string& source, const char* what) {
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) {
    try {
      return json::parse(source);
    } catch (const json::parse_error& e) {
      throw UsageError(std::string(what) + ": invalid JSON: " + e.what());
    }
  }
  std::ifstream is(source);
  if (!is) throw IoError(std::string(what) + ": cannot read " + source);
  try {
    return json::parse(is);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string(what) + ": invalid JSON in " + source + ": " + e.what());
  }
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw UsageError(where + " must be an object");
  for (const auto& [k, v] : obj.items()) {
    if (!allowed.count(k)) throw UsageError("unknown key '" + k + "' in " + where);
  }
}

double num(const json& obj, const char* key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_number()) throw UsageError(where + "." + key + " must be a number");
  return v.get<double>();
}

std::int64_t integer(const json& obj, const char* key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw UsageError(where + "." + key + " must be an integer");
  return v.get<std::int64_t>();
}

LangevinParams langevin_params(const json& p) {
  check_keys(p, {"mass", "gamma", "kbt", "hurst", "init_velocity"}, "params");
  LangevinParams lp;
  lp.mass = num(p, "mass", "params");
  lp.gamma = num(p, "gamma", "params");
  lp.kbt = num(p, "kbt", "params");
  lp.hurst = num(p, "hurst", "params");
  lp.init_velocity = num(p, "init_velocity", "params");
  lp.validate();
  return lp;
}

MarketParams market_params(const json& p) {
  check_keys(p, {"lambda", "beta", "a", "kbt", "alpha", "init_velocity"}, "params");
  MarketParams mp;
  mp.lambda = num(p, "lambda", "params");
  mp.beta = num(p, "beta", "params");
  mp.a = num(p, "a", "params");
  mp.kbt = num(p, "kbt", "params");
  mp.alpha = num(p, "alpha", "params");
  if (!p.at("init_velocity").is_null()) mp.init_velocity = num(p, "init_velocity", "params");
  mp.validate();
  return mp;
}

struct RunSpec {
  std::string model;
  json params;
  Eigen::Index n_steps = 0;
  double t_end = 0.0;
  mcsolve::SolverConfig solver;
  std::vector<std::pair<double, double>> windows;
  Eigen::Index volatility_steps = 100;
};

RunSpec parse_run_spec(const json& cfg) {
  check_keys(cfg, {"model", "params", "grid", "solver", "windows", "volatility_steps"}, "config");
  RunSpec s;
  s.model = cfg.at("model").get<std::string>();
  s.params = cfg.at("params");
  const json& g = cfg.at("grid");
  check_keys(g, {"n", "t_end"}, "grid");
  s.n_steps = integer(g, "n", "grid");
  s.t_end = num(g, "t_end", "grid");
  if (s.n_steps < 2 || !(s.t_end > 0.0)) throw ValidationError("grid: need n >= 2 and t_end > 0");

  const json& sv = cfg.at("solver");
  check_keys(sv, {"tolerance", "max_steps", "step_fraction", "group_size"}, "solver");
  s.solver.tolerance = num(sv, "tolerance", "solver");
  s.solver.max_steps = integer(sv, "max_steps", "solver");
  s.solver.step_fraction = num(sv, "step_fraction", "solver");
  s.solver.group_size = static_cast<int>(integer(sv, "group_size", "solver"));
  s.solver.validate();

  for (const json& w : cfg.at("windows")) {
    if (!w.is_array() || w.size() != 2 || !w[0].is_number() || !w[1].is_number()) {
      throw UsageError("windows must be a list of [t_lo, t_hi] pairs");
    }
    s.windows.emplace_back(w[0].get<double>(), w[1].get<double>());
  }
  s.volatility_steps = integer(cfg, "volatility_steps", "config");
  return s;
}

// Validates params up front; the returned builder is pure in the seed.
std::function<mcsolve::ResidualProblem(std::uint64_t)> problem_builder(const RunSpec& s) {
  const Eigen::Index n = s.n_steps;
  const double t_end = s.t_end;
  if (s.model == "langevin") {
    const LangevinParams lp = langevin_params(s.params);
    return [=](std::uint64_t seed) { return models::make_langevin_problem(lp, n, t_end, seed); };
  }
  if (s.model == "market") {
    const MarketParams mp = market_params(s.params);
    return [=](std::uint64_t seed) {
      return models::make_market_problem(mp, n, t_end, random::derive_seed(seed, 0), random::derive_seed(seed, 1));
    };
  }
  if (s.model == "memoryless") {
    const MarketParams mp = market_params(s.params);
    return [=](std::uint64_t seed) { return models::make_memoryless_problem(mp, n, t_end, seed); };
  }
  if (s.model == "noise-only") {
    check_keys(s.params, {"hurst", "init_velocity"}, "params");
    const double h = num(s.params, "hurst", "params");
    if (!(h > 0.0 && h < 1.0)) throw ValidationError("params.hurst must lie in (0, 1)");
    const double v0 = num(s.params, "init_velocity", "params");
    return [=](std::uint64_t seed) { return models::make_noise_only_problem(fbm::Hurst(h), n, t_end, seed, v0); };
  }
  throw UsageError("unknown model '" + s.model + "'");
}

fs::path prepare_out_dir(const std::string& out) {
  const fs::path dir(out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory " + out);
  return dir;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stod(item, &used));
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + item + "'");
    }
    if (used != item.size()) throw UsageError("not a number: '" + item + "'");
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

json slope_entry(const std::string& label, const analysis::MsdCurve& curve, double lo, double hi) {
  json e{{"label", label}};
  try {
    e["fit"] = io::to_json(analysis::loglog_slope(curve, lo, hi));
  } catch (const DomainError& ex) {
    e["t_lo"] = lo;
    e["t_hi"] = hi;
    e["error"] = ex.what();
  }
  return e;
}

json slopes_for(const analysis::MsdCurve& curve, const std::vector<std::pair<double, double>>& windows) {
  json slopes = json::array();
  for (std::size_t i = 0; i < windows.size(); ++i) {
    slopes.push_back(slope_entry("window_" + std::to_string(i), curve, windows[i].first, windows[i].second));
  }
  const auto segments = analysis::segment_regions(curve);
  for (std::size_t i = 0; i < segments.size(); ++i) {
    slopes.push_back({{"label", "segment_" + std::to_string(i)}, {"fit", io::to_json(segments[i])}});
  }
  slopes.push_back({{"label", "plateau"}, {"detected", analysis::has_plateau(segments)}});
  return slopes;
}

// ---------------------------------------------------------------------------

struct FbmArgs {
  double hurst = 0.5;
  long steps = 0;
  double t_end = 1.0;
  long paths = 1;
  std::uint64_t seed = 0;
  std::string out;
  unsigned workers = 0;
};

int cmd_fbm(const FbmArgs& a, std::ostream& err) {
  if (!(a.hurst > 0.0 && a.hurst < 1.0)) throw UsageError("--hurst must lie in (0, 1)");
  if (a.steps < 2) throw UsageError("--steps must be >= 2");
  if (!(a.t_end > 0.0)) throw UsageError("--t-end must be positive");
  if (a.paths < 1) throw UsageError("--paths must be >= 1");
  const fs::path dir = prepare_out_dir(a.out);

  const fbm::Hurst h(a.hurst);
  const fbm::FbmGenerator gen(h, a.steps, a.t_end);
  const auto np = static_cast<std::size_t>(a.paths);
  Eigen::VectorXd end_sq(static_cast<Eigen::Index>(np));
  std::mutex log_mutex;
  parallel_for(np, a.workers, [&](std::size_t i) {
    const fbm::FbmPath p = gen.generate(random::derive_seed(a.seed, i));
    io::write_path_csv(dir / (path_stem(i) + ".csv"), p.path);
    const double e = p.path.values[p.path.size() - 1];
    end_sq[static_cast<Eigen::Index>(i)] = e * e;
    if ((i + 1) % 100 == 0 || i + 1 == np) {
      std::lock_guard lock(log_mutex);
      err << "fbm: " << (i + 1) << " paths written\n";
    }
  });

  const double mean = end_sq.mean();
  const double se = np > 1 ? std::sqrt((end_sq.array() - mean).square().sum() / double(np - 1) / double(np)) : 0.0;
  const double theory = fbm::theory_msd_fbm(h, a.t_end);
  json summary{{"hurst", a.hurst},
               {"steps", a.steps},
               {"t_end", a.t_end},
               {"paths", a.paths},
               {"seed", a.seed},
               {"git_describe", FRACLAB_GIT_DESCRIBE},
               {"empirical_msd_end", mean},
               {"empirical_stderr", se},
               {"theory_msd_end", theory},
               {"ratio", mean / theory},
               {"ratio_stderr", se / theory},
               {"z_score", se > 0.0 ? json((mean - theory) / se) : json(nullptr)},
               {"within_3_stderr", se > 0.0 && std::abs(mean - theory) <= 3.0 * se}};
  io::write_text(dir / "summary.json", io::dump(summary));
  return kOk;
}

// ---------------------------------------------------------------------------

struct SolveArgs {
  std::string model;
  std::string config = "defaults";
  long paths = 1;
  unsigned workers = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_solve(const SolveArgs& a, std::ostream& err) {
  if (a.paths < 1) throw UsageError("--paths must be >= 1");
  const json cfg = load_config(a.config, a.model);
  const RunSpec run = parse_run_spec(cfg);
  const auto build = problem_builder(run);
  const fs::path dir = prepare_out_dir(a.out);

  const auto np = static_cast<std::size_t>(a.paths);
  std::vector<SampledPath> solutions(np);
  std::vector<json> per_path(np);
  std::mutex log_mutex;
  parallel_for(np, a.workers, [&](std::size_t i) {
    const std::uint64_t seed = random::derive_seed(a.seed, i);
    mcsolve::SolverConfig sc = run.solver;
    sc.seed = random::derive_seed(seed, 2);
    const mcsolve::SolveReport rep = mcsolve::solve(build(seed), sc);

    json j{{"index", i}, {"seed", seed}};
    j.update(io::to_json(rep));
    io::write_text(dir / (path_stem(i) + ".json"), io::dump(j));
    io::write_path_csv(dir / (path_stem(i) + ".csv"), rep.solution);
    per_path[i] = {{"index", i},
                   {"seed", seed},
                   {"converged", rep.converged},
                   {"mc_steps_used", rep.mc_steps_used},
                   {"max_residual", rep.max_residual}};
    solutions[i] = rep.solution;
    std::lock_guard lock(log_mutex);
    err << "solve: path " << i << (rep.converged ? " converged" : " NOT converged") << " after "
        << rep.mc_steps_used << " steps\n";
  });

  const analysis::MsdCurve curve = analysis::msd(solutions);
  io::write_msd_csv(dir / "msd.csv", curve);

  json run_cfg = cfg;
  run_cfg["paths"] = a.paths;
  run_cfg["master_seed"] = a.seed;
  json report{{"config", run_cfg},
              {"git_describe", FRACLAB_GIT_DESCRIBE},
              {"per_path", per_path},
              {"msd", io::to_json(curve)},
              {"slopes", slopes_for(curve, run.windows)}};
  if (run.volatility_steps > 0 && run.volatility_steps < curve.size()) {
    report["volatility"] = {{"window_steps", run.volatility_steps},
                            {"value", analysis::realized_volatility(curve, run.volatility_steps)},
                            {"stderr", analysis::realized_volatility_stderr(curve, run.volatility_steps)}};
  }
  io::write_text(dir / "report.json", io::dump(report));

  const auto failed = std::count_if(per_path.begin(), per_path.end(), [](const json& j) { return !j["converged"]; });
  if (failed > 0) err << "solve: warning: " << failed << " of " << np << " paths did not converge\n";
  return kOk;
}

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
  std::vector<std::string> inputs;
  std::string windows;
  long volatility_steps = 100;
  std::string out;
};

std::vector<SampledPath> load_ensemble(const std::string& in, std::ostream& err) {
  if (!fs::is_directory(in)) throw UsageError("--in " + in + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(in)) {
    if (e.is_regular_file() && e.path().extension() == ".csv") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<SampledPath> paths;
  for (const auto& f : files) {
    std::ifstream is(f, std::ios::binary);
    std::string header;
    std::getline(is, header);
    if (!header.empty() && header.back() == '\r') header.pop_back();
    if (header != "t,value") continue;
    try {
      paths.push_back(io::read_path_csv(f));
    } catch (const IoError& e) {
      throw UsageError(std::string("malformed path file: ") + e.what());
    }
  }
  if (paths.empty()) throw UsageError("no path CSVs (header t,value) in " + in);
  for (const auto& p : paths) {
    if (!same_grid(p.grid(), paths.front().grid())) throw UsageError("paths in " + in + " do not share a grid");
  }
  err << "analyze: " << paths.size() << " paths from " << in << "\n";
  return paths;
}

int cmd_analyze(const AnalyzeArgs& a, std::ostream& err) {
  std::vector<std::pair<double, double>> windows;
  if (!a.windows.empty()) {
    const json w = read_json_arg(a.windows, "--windows");
    if (!w.is_array()) throw UsageError("--windows must be a JSON list of [t_lo, t_hi] pairs");
    for (const json& p : w) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
        throw UsageError("--windows must be a JSON list of [t_lo, t_hi] pairs");
      }
      windows.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
  }
  if (a.volatility_steps < 1) throw UsageError("--volatility-steps must be >= 1");

  std::vector<std::vector<SampledPath>> ensembles;
  for (const auto& in : a.inputs) ensembles.push_back(load_ensemble(in, err));
  const fs::path dir = prepare_out_dir(a.out);

  io::Table vol{{"ensemble", "n_paths", "window_steps", "t", "volatility", "stderr"}, std::vector<std::vector<double>>(6)};
  json slopes = json::array();
  for (std::size_t k = 0; k < ensembles.size(); ++k) {
    const analysis::MsdCurve curve = analysis::msd(ensembles[k]);
    const std::string name = ensembles.size() == 1 ? "msd.csv" : "msd_" + std::to_string(k) + ".csv";
    io::write_msd_csv(dir / name, curve);
    slopes.push_back({{"ensemble", k}, {"input", a.inputs[k]}, {"slopes", slopes_for(curve, windows)}});

    const Eigen::Index w = std::min<Eigen::Index>(a.volatility_steps, curve.size() - 1);
    if (w != a.volatility_steps) err << "analyze: warning: volatility window clipped to " << w << " steps\n";
    vol.columns[0].push_back(double(k));
    vol.columns[1].push_back(double(curve.n_paths));
    vol.columns[2].push_back(double(w));
    vol.columns[3].push_back(curve.t[w]);
    vol.columns[4].push_back(analysis::realized_volatility(curve, w));
    vol.columns[5].push_back(analysis::realized_volatility_stderr(curve, w));
  }
  io::write_text(dir / "slopes.json", io::dump(slopes));
  std::ofstream vs(dir / "volatility.csv", std::ios::binary);
  io::write_table(vs, vol);
  if (!vs.flush()) throw IoError("failed writing volatility.csv");
  return kOk;
}

// ---------------------------------------------------------------------------

struct TuneArgs {
  std::string model;
  std::string config = "defaults";
  std::string fractions;
  int repeats = 5;
  int noise_draws = 1;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_tune(const TuneArgs& a, std::ostream& out, std::ostream& err) {
  const std::vector<double> fractions = parse_list(a.fractions);
  if (a.repeats < 1) throw UsageError("--repeats must be >= 1");
  if (a.noise_draws < 1) throw UsageError("--noise-draws must be >= 1");
  const json cfg = load_config(a.config, a.model);
  const RunSpec run = parse_run_spec(cfg);
  const auto build = problem_builder(run);
  if (a.repeats == 1) err << "tune: warning: repeats = 1, standard deviation left empty\n";

  std::ostringstream csv;
  csv << "noise_draw,step_fraction,mean_steps,std_steps,repeats,n_censored\n";
  for (int d = 0; d < a.noise_draws; ++d) {
    mcsolve::SolverConfig base = run.solver;
    base.seed = random::derive_seed(a.seed, 1000 + static_cast<std::uint64_t>(d));
    const auto rows = mcsolve::tune_step_size(build(random::derive_seed(a.seed, d)), fractions, a.repeats, base);
    for (const auto& r : rows) {
      csv << d << ',' << io::format_double(r.step_fraction) << ',' << io::format_double(r.mean_steps) << ','
          << (std::isnan(r.std_steps) ? "" : io::format_double(r.std_steps)) << ',' << r.repeats << ','
          << r.n_censored << '\n';
      if (r.n_censored > 0) err << "tune: warning: " << r.n_censored << " censored runs at " << r.step_fraction << "\n";
    }
    err << "tune: noise draw " << d << " done\n";
  }
  if (a.out.empty() || a.out == "-") {
    out << csv.str();
  } else {
    std::ofstream os(a.out, std::ios::binary);
    if (!os) throw IoError("cannot open " + a.out);
    os << csv.str();
    if (!os.flush()) throw IoError("failed writing " + a.out);
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct FracDerivArgs {
  std::string in;
  double order = 0.5;
  bool caputo = false;
  std::string out;
};

int cmd_fracderiv(const FracDerivArgs& a) {
  SampledPath p;
  try {
    p = io::read_path_csv(fs::path(a.in));
  } catch (const IoError& e) {
    if (!fs::exists(a.in)) throw;
    throw UsageError(e.what());
  }
  SampledPath d = fraccalc::gl_derivative(p, a.order);
  if (a.caputo) {
    const double f0 = p.values[0];
    d = fraccalc::caputo_from_rl(d, std::span<const double>(&f0, 1), a.order, p.t0);
  }
  io::write_path_csv(fs::path(a.out), d);
  return kOk;
}

}  // namespace

// ---------------------------------------------------------------------------

json default_config(const std::string& model) {
  json solver{{"tolerance", 1e-3}, {"max_steps", 200'000'000}, {"step_fraction", 1e-3}, {"group_size", 4}};
  json market_params{{"lambda", 500.0}, {"beta", 1.0}, {"a", 1.0}, {"kbt", 1.0}, {"alpha", 0.5}, {"init_velocity", nullptr}};
  if (model == "langevin") {
    return {{"model", model},
            {"params", {{"mass", 1.0}, {"gamma", 1.0}, {"kbt", 1.0}, {"hurst", 0.75}, {"init_velocity", 0.0}}},
            {"grid", {{"n", 200}, {"t_end", 20.0}}},
            {"solver", solver},
            {"windows", json::array()},
            {"volatility_steps", 100}};
  }
  if (model == "market" || model == "memoryless") {
    solver["tolerance"] = 1e-2;
    return {{"model", model},
            {"params", market_params},
            {"grid", {{"n", 1000}, {"t_end", 100.0}}},
            {"solver", solver},
            {"windows", json::array({json::array({0.1, 0.5}), json::array({10.0, 100.0})})},
            {"volatility_steps", 100}};
  }
  if (model == "noise-only") {
    return {{"model", model},
            {"params", {{"hurst", 0.75}, {"init_velocity", 0.0}}},
            {"grid", {{"n", 199}, {"t_end", 20.0}}},
            {"solver", solver},
            {"windows", json::array()},
            {"volatility_steps", 100}};
  }
  throw std::invalid_argument("unknown model '" + model + "'");
}

json load_config(const std::string& source, const std::string& model) {
  json cfg;
  try {
    cfg = default_config(model);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (source == "defaults") return cfg;
  const json user = read_json_arg(source, "--config");
  if (!user.is_object()) throw UsageError("--config must be a JSON object");
  if (user.contains("model") && user["model"] != model) {
    throw UsageError("--config model '" + user["model"].dump() + "' does not match --model " + model);
  }
  check_keys(user, {"model", "params", "grid", "solver", "windows", "volatility_steps"}, "config");
  for (const auto& [k, v] : user.items()) {
    if (v.is_object() && cfg[k].is_object()) {
      check_keys(v, [&] {
        std::set<std::string> keys;
        for (const auto& [kk, vv] : cfg[k].items()) keys.insert(kk);
        return keys;
      }(), k);
      for (const auto& [kk, vv] : v.items()) cfg[k][kk] = vv;
    } else {
      cfg[k] = v;
    }
  }
  return cfg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fraclab: fractional Brownian motion, fractional calculus and Monte Carlo SDE solving"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(FRACLAB_GIT_DESCRIBE));

  unsigned workers = 0;
  FbmArgs fa;
  auto* fbm_cmd = app.add_subcommand("fbm", "generate fractional Brownian motion paths");
  fbm_cmd->add_option("--hurst", fa.hurst, "Hurst parameter in (0, 1)")->required();
  fbm_cmd->add_option("--steps", fa.steps, "steps per path")->required();
  fbm_cmd->add_option("--t-end", fa.t_end, "end time")->required();
  fbm_cmd->add_option("--paths", fa.paths, "number of paths")->default_val(1);
  fbm_cmd->add_option("--seed", fa.seed, "master seed")->required();
  fbm_cmd->add_option("--out", fa.out, "output directory")->required();
  fbm_cmd->add_option("--workers", workers, "worker threads (default FRACLAB_WORKERS)");

  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "Monte Carlo solve an ensemble of problems");
  solve_cmd->add_option("--model", sa.model, "langevin | market | memoryless | noise-only")->required();
  solve_cmd->add_option("--config", sa.config, "'defaults', a JSON file or inline JSON")->default_val("defaults");
  solve_cmd->add_option("--paths", sa.paths, "ensemble size")->default_val(1);
  solve_cmd->add_option("--workers", workers, "worker threads (default FRACLAB_WORKERS)");
  solve_cmd->add_option("--seed", sa.seed, "master seed")->required();
  solve_cmd->add_option("--out", sa.out, "output directory")->required();

  AnalyzeArgs aa;
  auto* analyze_cmd = app.add_subcommand("analyze", "MSD, slope fits and volatility of path ensembles");
  analyze_cmd->add_option("--in", aa.inputs, "directory of t,value path CSVs (repeatable)")->required();
  analyze_cmd->add_option("--windows", aa.windows, "JSON list of [t_lo, t_hi] pairs, inline or file");
  analyze_cmd->add_option("--volatility-steps", aa.volatility_steps, "volatility window in steps")->default_val(100);
  analyze_cmd->add_option("--out", aa.out, "output directory")->required();

  TuneArgs ta;
  auto* tune_cmd = app.add_subcommand("tune", "mean Monte Carlo steps against proposal size");
  tune_cmd->add_option("--model", ta.model, "model to tune")->required();
  tune_cmd->add_option("--step-fractions", ta.fractions, "comma-separated list")->required();
  tune_cmd->add_option("--repeats", ta.repeats, "solves per fraction")->default_val(5);
  tune_cmd->add_option("--noise-draws", ta.noise_draws, "independent forcing draws")->default_val(1);
  tune_cmd->add_option("--config", ta.config, "'defaults', a JSON file or inline JSON")->default_val("defaults");
  tune_cmd->add_option("--seed", ta.seed, "master seed")->default_val(0);
  tune_cmd->add_option("--out", ta.out, "output CSV (default standard output)");

  FracDerivArgs da;
  auto* deriv_cmd = app.add_subcommand("fracderiv", "Grünwald-Letnikov derivative of a path CSV");
  deriv_cmd->add_option("--in", da.in, "input t,value CSV")->required();
  deriv_cmd->add_option("--order", da.order, "order in [-1, 1]")->required();
  deriv_cmd->add_flag("--caputo", da.caputo, "subtract the f(t0) boundary term");
  deriv_cmd->add_option("--out", da.out, "output CSV")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (workers == 0) workers = default_workers();
    fa.workers = workers;
    sa.workers = workers;
    if (*fbm_cmd) return cmd_fbm(fa, err);
    if (*solve_cmd) return cmd_solve(sa, err);
    if (*analyze_cmd) return cmd_analyze(aa, err);
    if (*tune_cmd) return cmd_tune(ta, out, err);
    if (*deriv_cmd) return cmd_fracderiv(da);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: config: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const ValidationError& e) {
    err << "error: validation: " << e.what() << "\n";
    return kValidation;
  } catch (const DomainError& e) {
    err << "error: validation: " << e.what() << "\n";
    return kValidation;
  }
  return kUsage;
}

}  // namespace fraclab::cli
