#include <cmath>
#include <string>

#include "fraclab/error.hpp"
#include "fraclab/specfn.hpp"

namespace fraclab::specfn {

namespace {

bool is_nonpositive_integer(double z) { return z <= 0.0 && z == std::floor(z); }

}  // namespace

double gamma(double z) {
  if (std::isnan(z)) throw DomainError("gamma: argument is NaN");
  if (is_nonpositive_integer(z)) {
    throw PoleError("gamma: pole at z = " + std::to_string(z));
  }
  return std::tgamma(z);
}

double rgamma(double z) {
  if (is_nonpositive_integer(z)) return 0.0;
  return 1.0 / std::tgamma(z);
}

double lgamma(double z) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("lgamma: pole at z = " + std::to_string(z));
  }
  return std::lgamma(z);
}

double binom(double alpha, int n) {
  if (n < 0) throw DomainError("binom: n must be non-negative");
  double acc = 1.0;
  for (int j = 0; j < n; ++j) {
    acc *= (alpha - j) / (j + 1);
  }
  return acc;
}

}  // namespace fraclab::specfn
