#include <cmath>
#include <string>

#include "fraclab/error.hpp"
#include "fraclab/specfn.hpp"

namespace fraclab::specfn {

namespace {

constexpr int kTermCap = 200000;

bool is_integer(double x) { return x == std::floor(x); }

// Plain power series; the caller guarantees |z| < 1.
double series(double a, double b, double c, double z) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < kTermCap; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    sum += term;
    if (term == 0.0 || std::abs(term) <= 1e-17 * std::abs(sum)) return sum;
  }
  throw ConvergenceError("hyp2f1: series did not converge at z = " + std::to_string(z));
}

}  // namespace

namespace detail {

double hyp2f1_maclaurin(double a, double b, double c, double z) { return series(a, b, c, z); }

// 2F1(a, b; c; z) = (1 - z)^(-a) 2F1(a, c - b; c; z / (z - 1)), for z < 0.
double hyp2f1_pfaff(double a, double b, double c, double z) {
  const double w = z / (z - 1.0);
  return std::pow(1.0 - z, -a) * series(a, c - b, c, w);
}

// Connection formula to 1/z for z < -1; needs b - a non-integer.
double hyp2f1_reciprocal(double a, double b, double c, double z) {
  const double inv = 1.0 / z;
  const double mz = -z;
  const double gc = gamma(c);
  const double t1 = gc * gamma(b - a) * rgamma(b) * rgamma(c - a) * std::pow(mz, -a) *
                    series(a, a - c + 1.0, a - b + 1.0, inv);
  const double t2 = gc * gamma(a - b) * rgamma(a) * rgamma(c - b) * std::pow(mz, -b) *
                    series(b, b - c + 1.0, b - a + 1.0, inv);
  return t1 + t2;
}

}  // namespace detail

double hyp2f1(double a, double b, double c, double z) {
  if (std::isnan(z) || z >= 1.0) {
    throw DomainError("hyp2f1: requires z < 1, got " + std::to_string(z));
  }
  if (c <= 0.0 && is_integer(c)) {
    throw PoleError("hyp2f1: c must not be a non-positive integer");
  }
  if (a == 0.0 || b == 0.0 || z == 0.0) return 1.0;

  if (z >= -0.9) return series(a, b, c, z);

  const double w = z / (z - 1.0);
  if (w <= 0.9) return detail::hyp2f1_pfaff(a, b, c, z);
  if (!is_integer(b - a)) return detail::hyp2f1_reciprocal(a, b, c, z);

  // Integer b - a: the connection formula is a removable limit. Average
  // b +- d and b +- 2d, then extrapolate away the d^2 term.
  constexpr double d = 1e-4;
  auto sym = [&](double e) {
    return 0.5 * (detail::hyp2f1_reciprocal(a, b + e, c, z) + detail::hyp2f1_reciprocal(a, b - e, c, z));
  };
  return (4.0 * sym(d) - sym(2.0 * d)) / 3.0;
}

}  // namespace fraclab::specfn
