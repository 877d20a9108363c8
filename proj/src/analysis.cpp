#include "fraclab/analysis.hpp"

#include <cmath>
#include <string>

namespace fraclab::analysis {

namespace {

void require_ensemble(std::span<const SampledPath> paths, const char* what) {
  if (paths.empty()) throw DomainError(std::string(what) + ": need at least one path");
  const TimeGrid g = paths.front().grid();
  for (const SampledPath& p : paths) require_same_grid(g, p.grid(), what);
}

}  // namespace

MsdCurve msd(std::span<const SampledPath> paths) {
  require_ensemble(paths, "msd");
  const Eigen::Index n = paths.front().size();
  const auto np = static_cast<Eigen::Index>(paths.size());

  Eigen::ArrayXd sum = Eigen::ArrayXd::Zero(n);
  for (const SampledPath& p : paths) sum += (p.values.array() - p.values[0]).square();
  const Eigen::ArrayXd mean = sum / static_cast<double>(np);

  Eigen::ArrayXd ss = Eigen::ArrayXd::Zero(n);
  for (const SampledPath& p : paths) ss += ((p.values.array() - p.values[0]).square() - mean).square();

  MsdCurve c;
  c.t = paths.front().times();
  c.msd = mean;
  c.std_error = np > 1 ? Eigen::VectorXd((ss / static_cast<double>(np - 1)).sqrt() / std::sqrt(double(np)))
                       : Eigen::VectorXd::Zero(n);
  c.n_paths = np;
  return c;
}

double realized_volatility(const MsdCurve& curve, Eigen::Index window_steps) {
  if (window_steps < 0 || window_steps >= curve.size()) {
    throw DomainError("realized_volatility: window longer than the curve");
  }
  return std::sqrt(curve.msd[window_steps]);
}

double realized_volatility_stderr(const MsdCurve& curve, Eigen::Index window_steps) {
  const double v = realized_volatility(curve, window_steps);
  return v > 0.0 ? curve.std_error[window_steps] / (2.0 * v) : 0.0;
}

SlopeFit loglog_fit(const Eigen::VectorXd& t, const Eigen::VectorXd& y, double t_lo, double t_hi) {
  if (t.size() != y.size()) throw GridMismatch("loglog_fit: t and y differ in length");
  if (!(t_lo < t_hi)) throw DomainError("loglog_fit: requires t_lo < t_hi");

  std::vector<double> lx, ly;
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    if (t[i] <= 0.0 || t[i] < t_lo || t[i] > t_hi) continue;
    if (!(y[i] > 0.0)) throw DomainError("loglog_fit: non-positive value inside the window");
    lx.push_back(std::log(t[i]));
    ly.push_back(std::log(y[i]));
  }
  const auto m = static_cast<Eigen::Index>(lx.size());
  if (m < 5) throw DomainError("loglog_fit: window holds fewer than 5 samples");

  const Eigen::Map<const Eigen::VectorXd> X(lx.data(), m), Y(ly.data(), m);
  const double mx = X.mean(), my = Y.mean();
  const Eigen::VectorXd dx = X.array() - mx, dy = Y.array() - my;
  const double sxx = dx.squaredNorm(), syy = dy.squaredNorm(), sxy = dx.dot(dy);
  if (sxx == 0.0) throw DomainError("loglog_fit: degenerate window");

  SlopeFit fit;
  fit.t_lo = t_lo;
  fit.t_hi = t_hi;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy > 0.0 ? std::min(1.0, sxy * sxy / (sxx * syy)) : 1.0;
  fit.n_samples = m;
  return fit;
}

SlopeFit loglog_slope(const MsdCurve& curve, double t_lo, double t_hi) {
  return loglog_fit(curve.t, curve.msd, t_lo, t_hi);
}

Eigen::VectorXd autocovariance(std::span<const SampledPath> paths, Eigen::Index max_lag) {
  require_ensemble(paths, "autocovariance");
  const Eigen::Index m = paths.front().size() - 1;  // increments per path
  if (max_lag < 0 || max_lag >= m) throw DomainError("autocovariance: lag out of range");

  Eigen::VectorXd c = Eigen::VectorXd::Zero(max_lag + 1);
  for (const SampledPath& p : paths) {
    const Eigen::VectorXd d = p.values.tail(m) - p.values.head(m);
    for (Eigen::Index k = 0; k <= max_lag; ++k) {
      c[k] += d.head(m - k).dot(d.tail(m - k)) / static_cast<double>(m - k);
    }
  }
  return c / static_cast<double>(paths.size());
}

Eigen::VectorXd autocorrelation(std::span<const SampledPath> paths, Eigen::Index max_lag) {
  const Eigen::VectorXd c = autocovariance(paths, max_lag);
  if (c[0] == 0.0) throw DomainError("autocorrelation: constant paths");
  return c / c[0];
}

std::vector<SlopeFit> segment_regions(const MsdCurve& curve) {
  Eigen::Index first = 0;
  while (first < curve.size() && curve.t[first] <= 0.0) ++first;
  if (curve.size() - first < 2) throw DomainError("segment_regions: curve too short");
  const double l0 = std::log(curve.t[first]);
  const double l1 = std::log(curve.t[curve.size() - 1]);

  std::vector<SlopeFit> out;
  const double cuts[] = {0.0, 0.05, 0.30, 1.0};
  for (int s = 0; s < 3; ++s) {
    const double lo = std::exp(l0 + cuts[s] * (l1 - l0));
    const double hi = std::exp(l0 + cuts[s + 1] * (l1 - l0));
    try {
      // guard the interval ends against rounding in exp(log(t))
      out.push_back(loglog_slope(curve, lo * (1.0 - 1e-12), hi * (1.0 + 1e-12)));
    } catch (const DomainError&) {
    }
  }
  return out;
}

bool has_plateau(std::span<const SlopeFit> segments, double threshold) {
  for (const SlopeFit& s : segments) {
    if (s.slope <= threshold) return true;
  }
  return false;
}

}  // namespace fraclab::analysis
