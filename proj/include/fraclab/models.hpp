#pragma once

// Concrete equations packaged as ResidualProblems, with closed-form references.

#include <cstdint>
#include <optional>

#include "fraclab/fbm.hpp"
#include "fraclab/mcsolve.hpp"
#include "fraclab/params.hpp"

namespace fraclab::models {

/// Fractional Langevin solution with x(0) = 0:
///   x = (eps/M) (xi * G)(t) + v0 G(t),  G(t) = t E_{2H,2}(-(gamma/M) t^(2H)).
/// `unit_noise` is the unscaled xi_H on `grid` (the problem forcing is eps xi_H);
/// the convolution uses the trapezoid rule on the grid. Without noise only the
/// homogeneous term remains.
SampledPath langevin_analytic(const LangevinParams& params, const TimeGrid& grid,
                              const std::optional<SampledPath>& unit_noise = std::nullopt);

/// Unit fGn at params.hurst that make_langevin_problem scales by eps.
SampledPath langevin_noise(const LangevinParams& params, Eigen::Index n_steps, double t_end, std::uint64_t seed);

/// M x'' + gamma D^(2-2H) x = eps xi_H on [0, t_end], x(0) = 0, x'(0) = init_velocity.
mcsolve::ResidualProblem make_langevin_problem(const LangevinParams& params, Eigen::Index n_steps, double t_end,
                                               std::uint64_t seed);

/// lambda x'' + beta lambda x' - a D^alpha x = b_W eta - b_C xi_alpha, x'(0) = v0.
mcsolve::ResidualProblem make_market_problem(const MarketParams& params, Eigen::Index n_steps, double t_end,
                                             std::uint64_t seed_white, std::uint64_t seed_colored);

/// lambda x'' + (beta lambda - a) x' = b_W eta, x'(0) = v0.
mcsolve::ResidualProblem make_memoryless_problem(const MarketParams& params, Eigen::Index n_steps,
                                                 double t_end, std::uint64_t seed);

/// x'' = xi_H with x(0) = 0, x'(0) = init_velocity.
mcsolve::ResidualProblem make_noise_only_problem(fbm::Hurst h, Eigen::Index n_steps, double t_end,
                                                 std::uint64_t seed, double init_velocity = 0.0);

/// Noise-free memoryless solution v0 lambda / (beta lambda - a) (1 - exp(-(beta lambda - a) t / lambda)),
/// or v0 t when beta lambda == a.
SampledPath memoryless_analytic(const MarketParams& params, const TimeGrid& grid);

/// Theta_1 = beta kbt / lambda.
double theta1(const MarketParams& params);
/// Theta_2 = a kbt / (2 lambda^2 Gamma(1 - alpha)).
double theta2(const MarketParams& params);

}  // namespace fraclab::models
