#pragma once

// Fractional derivatives and integrals of uniformly sampled paths.

#include <span>

#include <Eigen/Core>

#include "fraclab/sampled_path.hpp"

namespace fraclab::fraccalc {

/// Derivative order restricted to (0, 1]; 1 is the memoryless limit.
class FracOrder {
 public:
  explicit FracOrder(double alpha);
  double value() const { return alpha_; }

 private:
  double alpha_;
};

/// Grünwald-Letnikov weights w_j = (-1)^j binom(order, j), j < count, from the
/// recurrence w_0 = 1, w_j = w_{j-1} (j - 1 - order) / j. Negative orders give
/// the fractional-integral weights binom(j - order - 1, j).
Eigen::VectorXd gl_weights(double order, Eigen::Index count);

/// Grünwald-Letnikov derivative (order > 0) or integral (order < 0) of
/// `path`, lower terminal at path.t0. Sample i sums the full history
/// 0..i: dt^-order * sum_j w_j x[i - j].
///
/// For order > 0 the sample at t = t0 is reported as 0 (the operator is
/// singular there unless x(t0) = 0).
///
/// Throws DomainError unless order is in [-1, 1] and the path has >= 2 samples.
SampledPath gl_derivative(const SampledPath& path, double order);

/// Analytic Riemann-Liouville derivative of (t - a)^sigma:
/// Gamma(sigma + 1) / Gamma(sigma - order + 1) * (t - a)^(sigma - order).
/// Returns 0 when sigma - order + 1 is a Gamma pole (e.g. derivative of a constant).
double rl_power_law(double sigma, double order, double t, double a);

/// Caputo derivative from a Riemann-Liouville derivative sampled on a grid:
/// subtracts f(a) (t - a)^-order / Gamma(1 - order). `init_values[0]` is f(a).
/// When f(a) != 0 the singular sample at t = a is reported as 0.
SampledPath caputo_from_rl(const SampledPath& rl, std::span<const double> init_values, double order,
                           double a);

}  // namespace fraclab::fraccalc
