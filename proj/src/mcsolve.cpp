#include "fraclab/mcsolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "fraclab/fraccalc.hpp"
#include "fraclab/parallel.hpp"
#include "fraclab/random.hpp"

namespace fraclab::mcsolve {

namespace {

// Pieces of the discrete operator shared by residual evaluation and the solver.
struct Stencil {
  double dt;
  double mass;
  double friction;
  double frac_scale = 0.0;  // c dt^-q
  Eigen::VectorXd w;        // GL weights, empty without a fractional term

  explicit Stencil(const ResidualProblem& p) : dt(p.grid.dt), mass(p.mass), friction(p.friction) {
    if (p.frac) {
      frac_scale = p.frac->coefficient * std::pow(dt, -p.frac->order);
      w = fraccalc::gl_weights(p.frac->order, p.grid.size);
    }
  }

  double own() const { return mass / (dt * dt) + friction / dt; }

  double defect(const Eigen::VectorXd& x, const Eigen::VectorXd& f, Eigen::Index i) const {
    double r = mass * (x[i + 1] - 2.0 * x[i] + x[i - 1]) / (dt * dt) + friction * (x[i + 1] - x[i]) / dt;
    if (w.size() > 0) r += frac_scale * w.head(i + 1).dot(x.head(i + 1).reverse());
    return r - f[i];
  }

  // d(defect at index k - 1 + d) / d x[k], d = 0, 1, 2, ...
  Eigen::VectorXd sensitivities(Eigen::Index n) const {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(n + 1);
    c[0] = own();
    if (n >= 1) c[1] = -2.0 * mass / (dt * dt) - friction / dt;
    if (n >= 2) c[2] = mass / (dt * dt);
    if (w.size() > 0) {
      for (Eigen::Index d = 1; d <= n && d - 1 < w.size(); ++d) c[d] += frac_scale * w[d - 1];
    }
    return c;
  }
};

bool finite(double v) { return std::isfinite(v); }

}  // namespace

void ResidualProblem::validate() const {
  if (grid.size < 2) throw ValidationError("ResidualProblem: grid needs at least 2 samples");
  if (!(grid.dt > 0.0) || !finite(grid.dt)) throw ValidationError("ResidualProblem: dt must be positive");
  if (forcing.size() != grid.size) throw ValidationError("ResidualProblem: forcing must cover the grid");
  if (!forcing.allFinite()) throw ValidationError("ResidualProblem: forcing must be finite");
  if (!finite(mass) || !finite(friction) || !finite(init_position) || !finite(init_velocity)) {
    throw ValidationError("ResidualProblem: coefficients must be finite");
  }
  if (frac) {
    if (!(frac->order > 0.0 && frac->order <= 1.0)) {
      throw ValidationError("ResidualProblem: fractional order must lie in (0, 1]");
    }
    if (!finite(frac->coefficient)) throw ValidationError("ResidualProblem: fractional coefficient must be finite");
  }
  if (mass / (grid.dt * grid.dt) + friction / grid.dt == 0.0) {
    throw ValidationError("ResidualProblem: highest-order coefficient vanishes");
  }
}

void SolverConfig::validate() const {
  if (!(tolerance > 0.0)) throw ValidationError("SolverConfig: tolerance must be positive");
  if (max_steps < 1) throw ValidationError("SolverConfig: max_steps must be >= 1");
  if (!(step_fraction > 0.0 && step_fraction < 1.0)) {
    throw ValidationError("SolverConfig: step_fraction must lie in (0, 1)");
  }
  if (group_size < 1) throw ValidationError("SolverConfig: group_size must be >= 1");
}

Eigen::VectorXd signed_residuals(const ResidualProblem& problem, const SampledPath& candidate) {
  problem.validate();
  require_same_grid(problem.grid, candidate.grid(), "residuals");
  const Stencil st(problem);
  const Eigen::Index n = problem.grid.size;
  Eigen::VectorXd r = Eigen::VectorXd::Zero(n);
  for (Eigen::Index i = 1; i + 1 < n; ++i) r[i] = st.defect(candidate.values, problem.forcing, i);
  return r;
}

Eigen::VectorXd residuals(const ResidualProblem& problem, const SampledPath& candidate) {
  return signed_residuals(problem, candidate).cwiseAbs();
}

SolveReport solve(const ResidualProblem& problem, const SolverConfig& config, const MoveObserver& observer) {
  problem.validate();
  config.validate();

  const Eigen::Index n = problem.grid.size;
  const double dt = problem.grid.dt;
  const double tol = config.tolerance;
  const double span = config.step_fraction * dt;
  const Stencil st(problem);
  const Eigen::VectorXd sens = st.sensitivities(n);
  const double a_own = sens[0];
  const random::CounterRng rng(config.seed);
  const Eigen::VectorXd& f = problem.forcing;

  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  x[0] = problem.init_position;
  x[1] = problem.init_position + problem.init_velocity * dt;

  // r[k] caches the defect owned by sample k (index k - 1), valid on [front, tracked_end).
  Eigen::VectorXd r = Eigen::VectorXd::Zero(n);
  Eigen::Index front = 2;
  Eigen::Index tracked_end = 2;
  auto track_through = [&](Eigen::Index k) {
    for (; tracked_end <= k; ++tracked_end) r[tracked_end] = st.defect(x, f, tracked_end - 1);
  };
  auto window_max = [&] {
    double m = 0.0;
    for (Eigen::Index k = front; k < tracked_end; ++k) m = std::max(m, std::abs(r[k]));
    return m;
  };
  auto advance_front = [&] {
    const Eigen::Index before = front;
    while (front < n) {
      track_through(front);
      if (std::abs(r[front]) > tol) break;
      r[front] = st.defect(x, f, front - 1);
      if (std::abs(r[front]) > tol) break;
      ++front;
    }
    return front != before;
  };

  SolveReport report;
  advance_front();
  report.residual_history.push_back({0, window_max()});

  std::int64_t step = 0;
  std::uint64_t counter = 0;
  std::vector<Eigen::Index> active;
  active.reserve(static_cast<std::size_t>(config.group_size));

  while (front < n && step < config.max_steps) {
    active.clear();
    for (Eigen::Index k = front; k < n && static_cast<int>(active.size()) < config.group_size; ++k) {
      track_through(k);
      if (std::abs(r[k]) > tol) active.push_back(k);
    }
    for (const Eigen::Index k : active) {
      const double delta = rng.uniform(counter++, -span, span);
      const double old_r = r[k];
      const double new_r = old_r + a_own * delta;
      const bool accept = std::abs(new_r) <= std::abs(old_r);
      if (observer) observer({step, front, k, std::abs(old_r), std::abs(new_r), accept});
      if (!accept) continue;
      x[k] += delta;
      for (Eigen::Index o = k; o < tracked_end; ++o) r[o] += sens[o - k] * delta;
    }
    ++step;
    if (advance_front()) report.residual_history.push_back({step, window_max()});
  }

  report.solution = SampledPath(problem.grid, std::move(x));
  report.mc_steps_used = step;
  report.converged = front >= n;
  report.max_residual = n > 2 ? residuals(problem, report.solution).maxCoeff() : 0.0;
  report.residual_history.push_back({step, report.max_residual});
  return report;
}

std::vector<TuneRow> tune_step_size(const ResidualProblem& problem, std::span<const double> candidates,
                                    int repeats, const SolverConfig& base) {
  if (repeats < 1) throw ValidationError("tune_step_size: repeats must be >= 1");
  if (candidates.empty()) throw ValidationError("tune_step_size: no candidates");
  problem.validate();

  const std::size_t nc = candidates.size();
  const auto nr = static_cast<std::size_t>(repeats);
  std::vector<SolveReport> runs(nc * nr);
  parallel_for(runs.size(), std::max(1u, std::thread::hardware_concurrency()), [&](std::size_t idx) {
    SolverConfig cfg = base;
    cfg.step_fraction = candidates[idx / nr];
    cfg.seed = random::derive_seed(base.seed, idx % nr);
    runs[idx] = solve(problem, cfg);
  });

  std::vector<TuneRow> rows;
  for (std::size_t c = 0; c < nc; ++c) {
    TuneRow row;
    row.step_fraction = candidates[c];
    row.repeats = repeats;
    Eigen::VectorXd steps(repeats);
    for (std::size_t r = 0; r < nr; ++r) {
      const SolveReport& rep = runs[c * nr + r];
      steps[static_cast<Eigen::Index>(r)] = static_cast<double>(rep.mc_steps_used);
      if (!rep.converged) ++row.n_censored;
    }
    row.mean_steps = steps.mean();
    row.std_steps = repeats > 1
                        ? std::sqrt((steps.array() - row.mean_steps).square().sum() / (repeats - 1))
                        : std::numeric_limits<double>::quiet_NaN();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace fraclab::mcsolve
