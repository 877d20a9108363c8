#pragma once

// Scalar special functions used throughout fraclab: Gamma, the two-parameter
// Mittag-Leffler function, the generalized binomial coefficient, the Gauss
// hypergeometric function 2F1 and Gauss-Legendre quadrature rules.
//
// All functions are pure and thread-safe.

#include <Eigen/Core>

namespace fraclab::specfn {

/// Gamma(z) for real z. Throws PoleError at z = 0, -1, -2, ...
double gamma(double z);

/// 1 / Gamma(z); entire, so it returns 0 at the poles of Gamma instead of throwing.
double rgamma(double z);

/// log |Gamma(z)|.
double lgamma(double z);

struct MittagLefflerParams {
  double alpha;
  double beta;
};

/// Two-parameter Mittag-Leffler function E_{alpha,beta}(z) = sum_k z^k / Gamma(alpha k + beta).
///
/// Small |z| and moderate positive z use the Kahan-summed power series;
/// everything else goes through numerical inversion of the Laplace transform
/// s^(alpha-beta) / (s^alpha - z) on an optimal parabolic contour. alpha = 1
/// with beta in {1, 2} uses the closed forms exp(z) and expm1(z)/z.
///
/// Throws DomainError unless alpha > 0, beta > 0 and z finite; throws
/// ConvergenceError if the series hits its term cap.
double mittag_leffler(MittagLefflerParams p, double z);

/// Generalized binomial coefficient Gamma(alpha+1) / (Gamma(n+1) Gamma(alpha-n+1)).
///
/// Evaluated by the product prod_{j<n} (alpha - j) / (j + 1), which is the
/// analytic continuation through the Gamma poles: for a non-negative integer
/// alpha < n the result is exactly 0, and for a negative integer alpha it is
/// the limit (-1)^n binom(n - alpha - 1, n).
double binom(double alpha, int n);

/// Gauss hypergeometric function 2F1(a, b; c; z) for real z < 1.
///
/// Throws DomainError for z >= 1 and PoleError if c is a non-positive integer.
double hyp2f1(double a, double b, double c, double z);

namespace detail {
// Individual branches of hyp2f1, exposed for cross-checking on overlaps.
double hyp2f1_maclaurin(double a, double b, double c, double z);
double hyp2f1_pfaff(double a, double b, double c, double z);
double hyp2f1_reciprocal(double a, double b, double c, double z);

// Branches of mittag_leffler.
double mittag_leffler_series(double alpha, double beta, double z);
double mittag_leffler_laplace(double alpha, double beta, double z);
}  // namespace detail

struct QuadratureRule {
  Eigen::VectorXd nodes;    // strictly increasing, in (-1, 1)
  Eigen::VectorXd weights;  // positive, sum to 2

  Eigen::Index size() const { return nodes.size(); }

  /// Integrate f over [lo, hi] with the rule mapped affinely onto the interval.
  template <class F>
  double integrate(F&& f, double lo, double hi) const {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < nodes.size(); ++i) {
      acc += weights[i] * f(mid + half * nodes[i]);
    }
    return half * acc;
  }
};

/// n-point Gauss-Legendre rule on (-1, 1), exact for polynomials up to degree 2n-1.
QuadratureRule gauss_legendre(int n);

}  // namespace fraclab::specfn
