#pragma once

// Ensemble statistics over paths that share a time grid.

#include <span>
#include <vector>

#include <Eigen/Core>

#include "fraclab/sampled_path.hpp"

namespace fraclab::analysis {

struct MsdCurve {
  Eigen::VectorXd t;
  Eigen::VectorXd msd;        // <|x(t) - x(t0)|^2>
  Eigen::VectorXd std_error;  // standard error of the mean; 0 for a single path
  Eigen::Index n_paths = 0;

  Eigen::Index size() const { return t.size(); }
};

struct SlopeFit {
  double t_lo = 0.0;
  double t_hi = 0.0;
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  Eigen::Index n_samples = 0;
};

MsdCurve msd(std::span<const SampledPath> paths);

/// sqrt(msd) at sample `window_steps`.
double realized_volatility(const MsdCurve& curve, Eigen::Index window_steps);
/// Delta-method standard error of realized_volatility.
double realized_volatility_stderr(const MsdCurve& curve, Eigen::Index window_steps);

/// Least squares of log(y) on log(t) over samples with t_lo <= t <= t_hi and t > 0.
/// Throws DomainError for fewer than 5 samples or non-positive y in the window.
SlopeFit loglog_fit(const Eigen::VectorXd& t, const Eigen::VectorXd& y, double t_lo, double t_hi);
SlopeFit loglog_slope(const MsdCurve& curve, double t_lo, double t_hi);

/// Uncentred increment autocovariance by lag, averaged over time and paths:
/// c_k = mean_{p,i} d_i d_{i+k}, with d the increments of each path.
Eigen::VectorXd autocovariance(std::span<const SampledPath> paths, Eigen::Index max_lag);
/// autocovariance normalised by its lag-0 value.
Eigen::VectorXd autocorrelation(std::span<const SampledPath> paths, Eigen::Index max_lag);

/// Fits over the log-time windows [0, 5%], [5%, 30%], [30%, 100%] between
/// the first positive time and the last; windows with < 5 samples are skipped.
std::vector<SlopeFit> segment_regions(const MsdCurve& curve);
/// True when any segment slope is <= threshold.
bool has_plateau(std::span<const SlopeFit> segments, double threshold = 0.2);

}  // namespace fraclab::analysis
