#pragma once

#include <cmath>
#include <Eigen/Core>

#include "fraclab/error.hpp"

namespace fraclab {

/// Uniform time grid t_i = t0 + i * dt, i = 0 .. size - 1.
struct TimeGrid {
  double t0 = 0.0;
  double dt = 1.0;
  Eigen::Index size = 0;

  double time(Eigen::Index i) const { return t0 + static_cast<double>(i) * dt; }
  double t_end() const { return time(size - 1); }
  Eigen::VectorXd times() const {
    return t0 + Eigen::VectorXd::LinSpaced(size, 0.0, static_cast<double>(size - 1)).array() * dt;
  }
  bool operator==(const TimeGrid&) const = default;
};

/// Uniform grid of [0, t_end] with n_steps steps (n_steps + 1 samples).
inline TimeGrid uniform_grid(Eigen::Index n_steps, double t_end) {
  if (n_steps < 1 || !(t_end > 0.0)) {
    throw DomainError("uniform_grid: need n_steps >= 1 and t_end > 0");
  }
  return {0.0, t_end / static_cast<double>(n_steps), n_steps + 1};
}

/// A real-valued series sampled on a uniform grid: values[i] = x(t0 + i * dt).
struct SampledPath {
  double t0 = 0.0;
  double dt = 1.0;
  Eigen::VectorXd values;

  SampledPath() = default;
  SampledPath(double t0_, double dt_, Eigen::VectorXd v) : t0(t0_), dt(dt_), values(std::move(v)) {
    if (!(dt > 0.0)) throw DomainError("SampledPath: dt must be positive");
  }
  SampledPath(const TimeGrid& g, Eigen::VectorXd v) : SampledPath(g.t0, g.dt, std::move(v)) {
    if (values.size() != g.size) throw GridMismatch("SampledPath: value count does not match grid");
  }

  Eigen::Index size() const { return values.size(); }
  double time(Eigen::Index i) const { return t0 + static_cast<double>(i) * dt; }
  TimeGrid grid() const { return {t0, dt, values.size()}; }
  Eigen::VectorXd times() const { return grid().times(); }
};

/// Grids agree in size and, to a relative 1e-12, in origin and step.
inline bool same_grid(const TimeGrid& a, const TimeGrid& b) {
  if (a.size != b.size) return false;
  const double scale = std::max(std::abs(a.dt), std::abs(b.dt));
  return std::abs(a.dt - b.dt) <= 1e-12 * scale && std::abs(a.t0 - b.t0) <= 1e-12 * scale;
}

inline void require_same_grid(const TimeGrid& a, const TimeGrid& b, const char* what) {
  if (!same_grid(a, b)) throw GridMismatch(std::string(what) + ": grid mismatch");
}

}  // namespace fraclab
