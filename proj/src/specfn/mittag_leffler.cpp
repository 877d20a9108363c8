#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "fraclab/error.hpp"
#include "fraclab/specfn.hpp"

namespace fraclab::specfn {

namespace {

using cplx = std::complex<double>;

constexpr int kSeriesTermCap = 10000;
constexpr double kSeriesRadius = 50.0;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;
// log(DBL_EPSILON)
constexpr double kLogMachineEps = -36.043653389117154;

struct ContourParams {
  double mu = 0.0;
  double h = 0.0;
  double nodes = kInf;  // half-number of quadrature nodes
};

// Parabolic contour between two singularities with real parts
// phi_lo < phi_hi (after the phi(s) = (Re s + |s|) / 2 mapping).
ContourParams optimal_bounded(double t, double phi_lo, double phi_hi, double p, double q,
                              double log_eps) {
  constexpr double fac = 1.01;
  const double f_max = std::exp(log_eps - kLogMachineEps);

  const double sq_lo = std::sqrt(phi_lo);
  const double threshold = 2.0 * std::sqrt((log_eps - kLogMachineEps) / t);
  const double sq_hi = std::min(std::sqrt(phi_hi), threshold - sq_lo);

  double sqbar_lo = 0.0;
  double sqbar_hi = 0.0;
  double f_bar = 1.0;
  bool admissible = false;

  if (p < 1e-14 && q < 1e-14) {
    sqbar_lo = sq_lo;
    sqbar_hi = sq_hi;
    admissible = true;
  } else if (p < 1e-14) {
    sqbar_lo = sq_lo;
    const double f_min = sq_lo > 0.0 ? fac * std::pow(sq_lo / (sq_hi - sq_lo), q) : fac;
    if (f_min < f_max) {
      f_bar = f_min + f_min / f_max * (f_max - f_min);
      const double fq = std::pow(f_bar, -1.0 / q);
      sqbar_hi = (2.0 * sq_hi - fq * sq_lo) / (2.0 + fq);
      admissible = true;
    }
  } else if (q < 1e-14) {
    sqbar_hi = sq_hi;
    const double f_min = fac * std::pow(sq_hi / (sq_hi - sq_lo), p);
    if (f_min < f_max) {
      f_bar = f_min + f_min / f_max * (f_max - f_min);
      const double fp = std::pow(f_bar, -1.0 / p);
      sqbar_lo = (2.0 * sq_lo + fp * sq_hi) / (2.0 - fp);
      admissible = true;
    }
  } else {
    double f_min = fac * (sq_lo + sq_hi) / std::pow(sq_hi - sq_lo, std::max(p, q));
    if (f_min < f_max) {
      f_min = std::max(f_min, 1.5);
      f_bar = f_min + f_min / f_max * (f_max - f_min);
      const double fp = std::pow(f_bar, -1.0 / p);
      const double fq = std::pow(f_bar, -1.0 / q);
      const double w = -phi_hi * t / log_eps;
      const double den = 2.0 + w - (1.0 + w) * fp + fq;
      sqbar_lo = ((2.0 + w + fq) * sq_lo + fp * sq_hi) / den;
      sqbar_hi = (-(1.0 + w) * fq * sq_lo + (2.0 + w - (1.0 + w) * fp) * sq_hi) / den;
      admissible = true;
    }
  }

  if (!admissible) return {};

  log_eps -= std::log(f_bar);
  const double w = -sqbar_hi * sqbar_hi * t / log_eps;
  ContourParams out;
  out.mu = std::pow(((1.0 + w) * sqbar_lo + sqbar_hi) / (2.0 + w), 2);
  out.h = -2.0 * kPi / log_eps * (sqbar_hi - sqbar_lo) / ((1.0 + w) * sqbar_lo + sqbar_hi);
  out.nodes = std::ceil(std::sqrt(1.0 - log_eps / t / out.mu) / out.h);
  return out;
}

// Parabolic contour to the right of the last singularity.
ContourParams optimal_unbounded(double t, double phi_lo, double p, double log_eps) {
  const double sq_phi = std::sqrt(phi_lo);
  double phibar = phi_lo > 0.0 ? phi_lo * 1.01 : 0.01;
  double sq_phibar = std::sqrt(phibar);

  constexpr double f_min = 1.0;
  constexpr double f_max = 10.0;
  constexpr double f_tar = 5.0;

  double nodes = 0.0;
  double a_coef = 0.0;
  double sq_mu = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double phi_t = phibar * t;
    const double log_eps_phi_t = log_eps / phi_t;
    nodes = std::ceil(phi_t / kPi * (1.0 - 1.5 * log_eps_phi_t + std::sqrt(1.0 - 2.0 * log_eps_phi_t)));
    a_coef = kPi * nodes / phi_t;
    sq_mu = sq_phibar * std::abs(4.0 - a_coef) / std::abs(7.0 - std::sqrt(1.0 + 12.0 * a_coef));
    const double fbar = std::pow((sq_phibar - sq_phi) / sq_mu, -p);
    if (p < 1e-14 || (f_min < fbar && fbar < f_max)) break;
    sq_phibar = std::pow(f_tar, -1.0 / p) * sq_mu + sq_phi;
    phibar = sq_phibar * sq_phibar;
  }

  ContourParams out;
  out.mu = sq_mu * sq_mu;
  out.h = (-3.0 * a_coef - 2.0 + 2.0 * std::sqrt(1.0 + 12.0 * a_coef)) / (4.0 - a_coef) / nodes;
  out.nodes = nodes;

  // Keep round-off under control when the contour would sit too far right.
  const double threshold = (log_eps - kLogMachineEps) / t;
  if (out.mu > threshold) {
    const double q_shift = std::abs(p) < 1e-14 ? 0.0 : std::pow(f_tar, -1.0 / p) * std::sqrt(out.mu);
    phibar = std::pow(q_shift + sq_phi, 2);
    if (phibar < threshold) {
      const double w = std::sqrt(kLogMachineEps / (kLogMachineEps - log_eps));
      const double u = std::sqrt(-phibar * t / kLogMachineEps);
      out.mu = threshold;
      out.nodes = std::ceil(w * log_eps / 2.0 / kPi / (u * w - 1.0));
      out.h = std::sqrt(kLogMachineEps / (kLogMachineEps - log_eps)) / out.nodes;
    } else {
      out.nodes = kInf;
      out.h = 0.0;
    }
  }
  return out;
}

}  // namespace

namespace detail {

double mittag_leffler_series(double alpha, double beta, double z) {
  if (z == 0.0) return rgamma(beta);
  const double log_abs_z = std::log(std::abs(z));
  const bool negative = z < 0.0;

  // Kahan-compensated partial sums.
  double sum = 0.0;
  double comp = 0.0;
  double prev_mag = kInf;
  for (int k = 0; k < kSeriesTermCap; ++k) {
    const double mag = std::exp(k * log_abs_z - std::lgamma(alpha * k + beta));
    const double term = (negative && (k & 1)) ? -mag : mag;
    const double y = term - comp;
    const double next = sum + y;
    comp = (next - sum) - y;
    sum = next;
    if (!std::isfinite(sum)) {
      throw ConvergenceError("mittag_leffler: series overflow at z = " + std::to_string(z));
    }
    const bool decreasing = mag <= prev_mag;
    if (k > 0 && decreasing && mag <= 1e-17 * std::abs(sum)) return sum;
    if (k > 0 && decreasing && mag == 0.0) return sum;
    prev_mag = mag;
  }
  throw ConvergenceError("mittag_leffler: series did not converge within " +
                         std::to_string(kSeriesTermCap) + " terms at z = " + std::to_string(z));
}

double mittag_leffler_laplace(double alpha, double beta, double z) {
  constexpr double t = 1.0;
  double log_eps = std::log(1e-15);

  // Poles s^alpha = z on the principal sheet of s^alpha.
  const double theta = z < 0.0 ? kPi : 0.0;
  const auto k_min = static_cast<int>(std::ceil(-alpha / 2.0 - theta / (2.0 * kPi)));
  const auto k_max = static_cast<int>(std::floor(alpha / 2.0 - theta / (2.0 * kPi)));

  struct Singularity {
    cplx s;
    double phi;
  };
  std::vector<Singularity> poles;
  const double radius = std::pow(std::abs(z), 1.0 / alpha);
  for (int k = k_min; k <= k_max; ++k) {
    const cplx s = std::polar(radius, (theta + 2.0 * k * kPi) / alpha);
    const double phi = 0.5 * (s.real() + std::abs(s));
    if (phi > 1e-15) poles.push_back({s, phi});
  }
  std::stable_sort(poles.begin(), poles.end(),
                   [](const Singularity& l, const Singularity& r) { return l.phi < r.phi; });

  // The branch point at the origin leads the list.
  std::vector<Singularity> sing;
  sing.push_back({cplx(0.0, 0.0), 0.0});
  sing.insert(sing.end(), poles.begin(), poles.end());
  const std::size_t n_sing = sing.size();

  std::vector<double> p(n_sing, 1.0);
  std::vector<double> q(n_sing, 1.0);
  p[0] = std::max(0.0, -2.0 * (alpha - beta + 1.0));
  q[n_sing - 1] = kInf;
  std::vector<double> phi(n_sing + 1);
  for (std::size_t j = 0; j < n_sing; ++j) phi[j] = sing[j].phi;
  phi[n_sing] = kInf;

  std::vector<std::size_t> regions;
  for (std::size_t j = 0; j < n_sing; ++j) {
    if (phi[j] < (log_eps - kLogMachineEps) / t && phi[j] < phi[j + 1]) regions.push_back(j);
  }

  std::vector<ContourParams> params(n_sing);
  std::size_t best = 0;
  for (int relax = 0;; ++relax) {
    double min_nodes = kInf;
    for (std::size_t j : regions) {
      params[j] = (j + 1 < n_sing) ? optimal_bounded(t, phi[j], phi[j + 1], p[j], q[j], log_eps)
                                   : optimal_unbounded(t, phi[j], p[j], log_eps);
      if (params[j].nodes < min_nodes) {
        min_nodes = params[j].nodes;
        best = j;
      }
    }
    if (min_nodes <= 200.0) break;
    if (relax > 10) {
      throw ConvergenceError("mittag_leffler: no admissible integration contour at z = " +
                             std::to_string(z));
    }
    log_eps += std::log(10.0);
  }

  const ContourParams& cp = params[best];
  const auto n_nodes = static_cast<int>(cp.nodes);
  cplx integral(0.0, 0.0);
  for (int k = -n_nodes; k <= n_nodes; ++k) {
    const double u = cp.h * k;
    const cplx s = cp.mu * std::pow(cplx(1.0, u), 2);
    const cplx ds = cplx(-2.0 * cp.mu * u, 2.0 * cp.mu);
    const cplx f = std::pow(s, alpha - beta) / (std::pow(s, alpha) - z) * ds;
    integral += std::exp(s * t) * f;
  }
  integral *= cp.h / (2.0 * kPi * cplx(0.0, 1.0));

  cplx residues(0.0, 0.0);
  for (std::size_t j = best + 1; j < n_sing; ++j) {
    const cplx s = sing[j].s;
    residues += std::pow(s, 1.0 - beta) * std::exp(s * t) / alpha;
  }
  return (integral + residues).real();
}

}  // namespace detail

double mittag_leffler(MittagLefflerParams p, double z) {
  if (!(p.alpha > 0.0) || !(p.beta > 0.0)) {
    throw DomainError("mittag_leffler: alpha and beta must be positive");
  }
  if (!std::isfinite(z)) throw DomainError("mittag_leffler: argument must be finite");
  if (z == 0.0) return rgamma(p.beta);

  if (p.alpha == 1.0 && p.beta == 1.0) return std::exp(z);
  if (p.alpha == 1.0 && p.beta == 2.0) return std::expm1(z) / z;

  const bool series_ok = std::abs(z) <= 1.0 || (z > 0.0 && z <= kSeriesRadius);
  if (series_ok) return detail::mittag_leffler_series(p.alpha, p.beta, z);
  return detail::mittag_leffler_laplace(p.alpha, p.beta, z);
}

}  // namespace fraclab::specfn
