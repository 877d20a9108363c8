#include "fraclab/fraccalc.hpp"

#include <cmath>
#include <string>

#include "fraclab/specfn.hpp"

namespace fraclab::fraccalc {

FracOrder::FracOrder(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("FracOrder: alpha must lie in (0, 1], got " + std::to_string(alpha));
  }
}

Eigen::VectorXd gl_weights(double order, Eigen::Index count) {
  Eigen::VectorXd w(count);
  if (count == 0) return w;
  w[0] = 1.0;
  for (Eigen::Index j = 1; j < count; ++j) {
    w[j] = w[j - 1] * (static_cast<double>(j) - 1.0 - order) / static_cast<double>(j);
  }
  return w;
}

SampledPath gl_derivative(const SampledPath& path, double order) {
  if (!(order >= -1.0 && order <= 1.0)) {
    throw DomainError("gl_derivative: order must lie in [-1, 1], got " + std::to_string(order));
  }
  const Eigen::Index n = path.size();
  if (n < 2) throw DomainError("gl_derivative: path needs at least 2 samples");

  const Eigen::VectorXd w = gl_weights(order, n);
  const double scale = std::pow(path.dt, -order);
  const Eigen::VectorXd& x = path.values;

  Eigen::VectorXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    // w_j x[i-j], j = 0..i  ==  w.head(i+1) . reverse(x.head(i+1))
    out[i] = scale * w.head(i + 1).dot(x.head(i + 1).reverse());
  }
  if (order > 0.0) out[0] = 0.0;
  return {path.t0, path.dt, std::move(out)};
}

double rl_power_law(double sigma, double order, double t, double a) {
  if (!(sigma > -1.0)) throw DomainError("rl_power_law: sigma must exceed -1");
  if (t < a) throw DomainError("rl_power_law: t must not precede the lower terminal");
  const double r = specfn::rgamma(sigma - order + 1.0);
  if (r == 0.0) return 0.0;
  return specfn::gamma(sigma + 1.0) * r * std::pow(t - a, sigma - order);
}

SampledPath caputo_from_rl(const SampledPath& rl, std::span<const double> init_values, double order,
                           double a) {
  if (!(order > 0.0 && order < 1.0)) {
    throw DomainError("caputo_from_rl: order must lie in (0, 1), got " + std::to_string(order));
  }
  if (init_values.empty()) throw DomainError("caputo_from_rl: init_values must hold f(a)");

  const double fa = init_values[0];
  SampledPath out = rl;
  if (fa == 0.0) return out;

  const double c = fa * specfn::rgamma(1.0 - order);
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    const double tau = rl.time(i) - a;
    if (tau < 0.0) throw DomainError("caputo_from_rl: grid starts before the lower terminal");
    out.values[i] = tau == 0.0 ? 0.0 : out.values[i] - c * std::pow(tau, -order);
  }
  return out;
}

}  // namespace fraclab::fraccalc
