#include "fraclab/models.hpp"

#include <cmath>
#include <string>

#include "fraclab/specfn.hpp"

namespace fraclab {

void LangevinParams::validate() const {
  if (!(mass > 0.0) || !std::isfinite(mass)) throw ValidationError("langevin: mass must be positive");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw ValidationError("langevin: gamma must be >= 0");
  if (!(kbt >= 0.0) || !std::isfinite(kbt)) throw ValidationError("langevin: kbt must be >= 0");
  if (!(hurst > 0.0 && hurst < 1.0)) throw ValidationError("langevin: hurst must lie in (0, 1)");
  if (!std::isfinite(init_velocity)) throw ValidationError("langevin: init_velocity must be finite");
}

double MarketParams::v0() const { return init_velocity ? *init_velocity : std::sqrt(kbt / lambda); }

void MarketParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ValidationError(std::string("market: ") + name + " must be positive");
  };
  positive(lambda, "lambda");
  positive(beta, "beta");
  positive(a, "a");
  positive(kbt, "kbt");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ValidationError("market: alpha must lie in (0, 1)");
  if (beta * lambda < a) throw ValidationError("market: requires beta * lambda >= a");
  if (init_velocity && !std::isfinite(*init_velocity)) throw ValidationError("market: init_velocity must be finite");
}

}  // namespace fraclab

namespace fraclab::models {

SampledPath langevin_analytic(const LangevinParams& params, const TimeGrid& grid,
                              const std::optional<SampledPath>& unit_noise) {
  params.validate();
  if (grid.size < 1 || grid.t0 != 0.0) throw DomainError("langevin_analytic: grid must start at t = 0");
  if (unit_noise) require_same_grid(grid, unit_noise->grid(), "langevin_analytic");

  const double h = params.hurst;
  const specfn::MittagLefflerParams ml{2.0 * h, 2.0};
  const double rate = params.gamma / params.mass;
  const Eigen::Index n = grid.size;

  Eigen::VectorXd g(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double t = grid.time(i);
    g[i] = t == 0.0 ? 0.0 : t * specfn::mittag_leffler(ml, -rate * std::pow(t, 2.0 * h));
  }

  Eigen::VectorXd x = params.init_velocity * g;
  if (unit_noise) {
    const double eps = fbm::epsilon_fdt(params.gamma, params.kbt, fbm::Hurst(h));
    const Eigen::VectorXd& xi = unit_noise->values;
    for (Eigen::Index i = 1; i < n; ++i) {
      // trapezoid over tau in [0, t_i] of xi(tau) G(t_i - tau); G(0) = 0
      double acc = 0.5 * xi[0] * g[i];
      for (Eigen::Index j = 1; j < i; ++j) acc += xi[j] * g[i - j];
      x[i] += eps / params.mass * grid.dt * acc;
    }
  }
  return {grid, std::move(x)};
}

SampledPath langevin_noise(const LangevinParams& params, Eigen::Index n_steps, double t_end, std::uint64_t seed) {
  params.validate();
  return fbm::unit_fgn(fbm::Hurst(params.hurst), n_steps, t_end, seed);
}

mcsolve::ResidualProblem make_langevin_problem(const LangevinParams& params, Eigen::Index n_steps, double t_end,
                                               std::uint64_t seed) {
  const fbm::Hurst h(params.hurst);
  const double eps = fbm::epsilon_fdt(params.gamma, params.kbt, h);
  mcsolve::ResidualProblem p;
  p.grid = uniform_grid(n_steps, t_end);
  p.mass = params.mass;
  p.friction = 0.0;
  p.frac = mcsolve::FracTerm{params.gamma, fbm::alpha_from_hurst(h)};
  p.forcing = eps * langevin_noise(params, n_steps, t_end, seed).values;
  p.init_velocity = params.init_velocity;
  return p;
}

mcsolve::ResidualProblem make_market_problem(const MarketParams& params, Eigen::Index n_steps, double t_end,
                                             std::uint64_t seed_white, std::uint64_t seed_colored) {
  params.validate();
  const fbm::NoisePair noise = fbm::financial_noise(params, n_steps, t_end, seed_white, seed_colored);
  mcsolve::ResidualProblem p;
  p.grid = uniform_grid(n_steps, t_end);
  p.mass = params.lambda;
  p.friction = params.beta * params.lambda;
  p.frac = mcsolve::FracTerm{-params.a, params.alpha};
  p.forcing = noise.white.values - noise.colored.values;
  p.init_velocity = params.v0();
  return p;
}

mcsolve::ResidualProblem make_memoryless_problem(const MarketParams& params, Eigen::Index n_steps,
                                                 double t_end, std::uint64_t seed) {
  params.validate();
  mcsolve::ResidualProblem p;
  p.grid = uniform_grid(n_steps, t_end);
  p.mass = params.lambda;
  p.friction = params.beta * params.lambda - params.a;
  p.forcing = fbm::white_noise_scale(params) * fbm::unit_white_noise(n_steps, t_end, seed).values;
  p.init_velocity = params.v0();
  return p;
}

mcsolve::ResidualProblem make_noise_only_problem(fbm::Hurst h, Eigen::Index n_steps, double t_end,
                                                 std::uint64_t seed, double init_velocity) {
  mcsolve::ResidualProblem p;
  p.grid = uniform_grid(n_steps, t_end);
  p.mass = 1.0;
  p.forcing = fbm::unit_fgn(h, n_steps, t_end, seed).values;
  p.init_velocity = init_velocity;
  return p;
}

SampledPath memoryless_analytic(const MarketParams& params, const TimeGrid& grid) {
  params.validate();
  const double k = params.beta * params.lambda - params.a;
  const double v0 = params.v0();
  Eigen::VectorXd x(grid.size);
  for (Eigen::Index i = 0; i < grid.size; ++i) {
    const double t = grid.time(i);
    x[i] = k == 0.0 ? v0 * t : -v0 * params.lambda / k * std::expm1(-k * t / params.lambda);
  }
  return {grid, std::move(x)};
}

double theta1(const MarketParams& params) { return params.beta * params.kbt / params.lambda; }

double theta2(const MarketParams& params) {
  return params.a * params.kbt * specfn::rgamma(1.0 - params.alpha) / (2.0 * params.lambda * params.lambda);
}

}  // namespace fraclab::models
