#pragma once

// Fractional Brownian motion from the Volterra representation
//   B_H(t) = int_0^t K_H(t, s) dB(s),
//   K_H(t, s) = (t - s)^(H - 1/2) / Gamma(H + 1/2) 2F1(H - 1/2, 1/2 - H; H + 1/2; 1 - t/s),
// plus the matching theoretical moments and noise scales.

#include <cstdint>
#include <memory>

#include <Eigen/Core>

#include "fraclab/params.hpp"
#include "fraclab/sampled_path.hpp"

namespace fraclab::fbm {

class Hurst {
 public:
  explicit Hurst(double h);
  double value() const { return h_; }
  operator double() const { return h_; }

 private:
  double h_;
};

struct FbmPath {
  double hurst = 0.5;
  SampledPath path;                     // path.values[0] == 0
  Eigen::VectorXd driving_increments;  // dB_i, one per step
  std::uint64_t seed = 0;
};

struct NoisePair {
  SampledPath white;    // b_W * eta
  SampledPath colored;  // b_C * xi
  double scale_white = 0.0;
  double scale_colored = 0.0;
};

/// K_H(t, s) for 0 < s <= t. Exactly 1 at h = 1/2; 0 at s = t for h > 1/2.
double volterra_kernel(Hurst h, double t, double s);

/// Kernel integrated over the panel [s_lo, s_hi], 0 <= s_lo < s_hi <= t.
/// Endpoint singularities at s = 0 and s = t are removed by substitution
/// before 16-point Gauss-Legendre quadrature.
double kernel_panel_integral(Hurst h, double t, double s_lo, double s_hi);

/// Path generator for a fixed (H, grid). Builds the lower-triangular matrix
/// W(j-1, i) = (1/dt) int_{t_i}^{t_{i+1}} K_H(t_j, s) ds once, so that
/// B_H(t_j) = sum_i W(j-1, i) dB_i. Weight matrices are cached process-wide
/// per (H, n_steps) and shared between generators.
class FbmGenerator {
 public:
  FbmGenerator(Hurst h, Eigen::Index n_steps, double t_end);

  FbmPath generate(std::uint64_t seed) const;
  /// Path driven by caller-supplied increments (length n_steps).
  FbmPath from_increments(const Eigen::VectorXd& increments, std::uint64_t seed = 0) const;

  TimeGrid grid() const { return grid_; }
  double hurst() const { return h_; }
  /// Weight matrix at the generator's step size.
  Eigen::MatrixXd weights() const;

 private:
  double h_;
  TimeGrid grid_;
  double scale_;  // dt^(H - 1/2); cached weights are for dt = 1
  std::shared_ptr<const Eigen::MatrixXd> unit_weights_;
};

/// One path on [0, t_end] with n_steps steps (n_steps >= 2). dB_i = sqrt(dt) N(0, 1).
FbmPath generate_fbm(Hurst h, Eigen::Index n_steps, double t_end, std::uint64_t seed);

/// Forward differences / dt, on the first n-1 grid points.
SampledPath fgn_from_fbm(const SampledPath& path);
SampledPath fgn_from_fbm(const FbmPath& path);

/// Unit fractional Gaussian noise on the n_steps + 1 points of [0, t_end]:
/// the fGn of an fBm with one extra step. At H = 1/2 this is N(0, 1)/sqrt(dt).
SampledPath unit_fgn(Hurst h, Eigen::Index n_steps, double t_end, std::uint64_t seed);
/// Unit white noise N(0, 1)/sqrt(dt) on the n_steps + 1 points of [0, t_end].
SampledPath unit_white_noise(Eigen::Index n_steps, double t_end, std::uint64_t seed);

/// E[B_H(t)^2] = Gamma(2-2H) / (2H Gamma(3/2-H) Gamma(1/2+H)) t^(2H).
double theory_msd_fbm(Hurst h, double t);
/// E[B_H(t) B_H(s)] = Gamma(2-2H) / (4H Gamma(3/2-H) Gamma(1/2+H)) (t^2H + s^2H - |t-s|^2H).
double theory_covariance(Hurst h, double t, double s);

/// alpha = 2 - 2H.
double alpha_from_hurst(Hurst h);
Hurst hurst_from_alpha(double alpha);

/// eps = sqrt(2 gamma kbt Gamma(3/2-H) Gamma(1/2+H) / (Gamma(2H) Gamma(2-2H))).
double epsilon_fdt(double gamma, double kbt, Hurst h);

/// b_W = sqrt(2 beta lambda kbt).
double white_noise_scale(const MarketParams& p);
/// b_C = sqrt(a kbt 2 Gamma((1+alpha)/2) Gamma((3-alpha)/2) / (Gamma(2-alpha) Gamma(alpha))).
double colored_noise_scale(const MarketParams& p);

/// b_W eta and b_C xi_alpha on the n_steps + 1 points of [0, t_end], with
/// xi_alpha the unit fGn at H = 1 - alpha/2.
NoisePair financial_noise(const MarketParams& params, Eigen::Index n_steps, double t_end,
                          std::uint64_t seed_white, std::uint64_t seed_colored);

}  // namespace fraclab::fbm
