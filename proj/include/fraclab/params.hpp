#pragma once

#include <optional>

namespace fraclab {

/// M x'' + gamma D^(2-2H) x = eps xi_H, with eps fixed by kbt.
struct LangevinParams {
  double mass = 1.0;
  double gamma = 1.0;
  double kbt = 1.0;
  double hurst = 0.75;
  double init_velocity = 0.0;

  /// Throws ValidationError on out-of-range fields.
  void validate() const;
};

/// lambda x'' + beta lambda x' - a D^alpha x = b_W eta - b_C xi_alpha.
struct MarketParams {
  double lambda = 500.0;  // market depth
  double beta = 1.0;      // market-maker rate
  double a = 1.0;         // trend impact
  double kbt = 1.0;       // trading-activity energy
  double alpha = 0.5;     // memory order in (0, 1)
  std::optional<double> init_velocity;  // default sqrt(kbt / lambda)

  double v0() const;
  /// Throws ValidationError on out-of-range fields or beta * lambda < a.
  void validate() const;
};

}  // namespace fraclab
