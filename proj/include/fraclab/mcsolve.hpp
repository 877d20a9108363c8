#pragma once

// Monte Carlo residual minimisation for
//   mass x'' + friction x' + c D^q x = f(t),   x(t0) = x0, x'(t0) = v0
// on a uniform grid. The defect at interior sample i (1 <= i <= n-2) is
//   mass (x[i+1] - 2x[i] + x[i-1]) / dt^2 + friction (x[i+1] - x[i]) / dt
//     + c dt^-q sum_{j<=i} w_j x[i-j] - f[i],
// with w_j the Grünwald-Letnikov weights of order q. Sample k >= 2 "owns" the
// defect at k-1, the last one in which it appears; x[0] and x[1] = x0 + v0 dt
// are pinned.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "fraclab/sampled_path.hpp"

namespace fraclab::mcsolve {

struct FracTerm {
  double coefficient = 0.0;
  double order = 1.0;  // in (0, 1]
};

struct ResidualProblem {
  TimeGrid grid;
  double mass = 1.0;
  double friction = 0.0;
  std::optional<FracTerm> frac;
  Eigen::VectorXd forcing;  // f on every grid point
  double init_position = 0.0;
  double init_velocity = 0.0;

  /// Throws ValidationError for an inconsistent problem, including a zero
  /// coefficient on the owning sample (mass / dt^2 + friction / dt == 0).
  void validate() const;
};

struct SolverConfig {
  double tolerance = 1e-3;
  std::int64_t max_steps = 100'000'000;
  double step_fraction = 1e-3;
  int group_size = 4;
  std::uint64_t seed = 0;

  void validate() const;
};

struct ResidualSample {
  std::int64_t step = 0;
  double max_residual = 0.0;
};

struct SolveReport {
  SampledPath solution;
  std::int64_t mc_steps_used = 0;
  std::vector<ResidualSample> residual_history;
  bool converged = false;
  double max_residual = 0.0;  // over all samples, recomputed at the end
};

struct MoveEvent {
  std::int64_t step;
  Eigen::Index front;  // earliest sample not yet frozen
  Eigen::Index point;
  double old_residual;  // |defect| owned by `point` before the proposal
  double new_residual;  // after, had it been accepted
  bool accepted;
};
using MoveObserver = std::function<void(const MoveEvent&)>;

/// Signed defects on every grid point; the first and last are 0.
Eigen::VectorXd signed_residuals(const ResidualProblem& problem, const SampledPath& candidate);
/// |signed_residuals|.
Eigen::VectorXd residuals(const ResidualProblem& problem, const SampledPath& candidate);

/// Start from zeros (plus the pinned samples) and move the earliest
/// out-of-tolerance samples, group_size at a time, by uniform proposals in
/// [-step_fraction dt, step_fraction dt]. A proposal is accepted iff it does
/// not increase the magnitude of the sample's own defect; earlier defects do
/// not depend on the sample, so they are untouched. One Monte Carlo step is
/// one sweep over the active group. Samples whose defect is within tolerance
/// and that precede every out-of-tolerance sample are frozen.
SolveReport solve(const ResidualProblem& problem, const SolverConfig& config,
                  const MoveObserver& observer = {});

struct TuneRow {
  double step_fraction = 0.0;
  double mean_steps = 0.0;
  double std_steps = 0.0;  // NaN when repeats == 1
  int repeats = 0;
  int n_censored = 0;  // runs that hit max_steps; counted at max_steps
};

/// Solve `repeats` times per candidate with seeds derive_seed(base.seed, r)
/// and report the mean and sample standard deviation of mc_steps_used.
std::vector<TuneRow> tune_step_size(const ResidualProblem& problem, std::span<const double> candidates,
                                    int repeats, const SolverConfig& base = {});

}  // namespace fraclab::mcsolve
