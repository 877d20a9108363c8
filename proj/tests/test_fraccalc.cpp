#include <array>
#include <cmath>
#include <numbers>

#include <doctest.h>

#include "fraclab/fraccalc.hpp"
#include "fraclab/specfn.hpp"
#include "test_util.hpp"

using namespace fraclab;
using namespace fraclab::fraccalc;
using testutil::rel_err;

namespace {

SampledPath sample(double t_end, double dt, double (*f)(double)) {
  const auto n = static_cast<Eigen::Index>(std::llround(t_end / dt)) + 1;
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = f(static_cast<double>(i) * dt);
  return {0.0, dt, v};
}

double cube(double t) { return t * t * t; }
double square(double t) { return t * t; }
double one(double) { return 1.0; }

// max |GL - closed form| over (0, 1]
double cube_error(double order, double dt) {
  const SampledPath d = gl_derivative(sample(1.0, dt, cube), order);
  double worst = 0.0;
  for (Eigen::Index i = 1; i < d.size(); ++i) {
    worst = std::max(worst, std::abs(d.values[i] - rl_power_law(3.0, order, d.time(i), 0.0)));
  }
  return worst;
}

}  // namespace

TEST_CASE("FracOrder range") {
  CHECK(FracOrder(0.5).value() == 0.5);
  CHECK(FracOrder(1.0).value() == 1.0);
  CHECK_THROWS_AS(FracOrder(0.0), DomainError);
  CHECK_THROWS_AS(FracOrder(1.5), DomainError);
}

TEST_CASE("GL weights") {
  const Eigen::VectorXd w = gl_weights(0.5, 6);
  for (int j = 0; j < 6; ++j) CHECK(rel_err(w[j], std::pow(-1.0, j) * specfn::binom(0.5, j)) < 1e-14);
  const Eigen::VectorXd one_w = gl_weights(1.0, 5);
  CHECK(one_w[0] == 1.0);
  CHECK(one_w[1] == -1.0);
  CHECK(one_w.tail(3).isZero(0.0));
  // integral weights binom(j + q - 1, j) for order -q
  const Eigen::VectorXd iw = gl_weights(-0.5, 5);
  for (int j = 0; j < 5; ++j) {
    const double want = specfn::gamma(j + 0.5) / (specfn::gamma(0.5) * specfn::gamma(j + 1.0));
    CHECK(rel_err(iw[j], want) < 1e-14);
  }
}

TEST_CASE("integer order recovers d/dt") {
  const SampledPath d = gl_derivative(sample(1.0, 1e-3, square), 1.0);
  double worst = 0.0;
  for (Eigen::Index i = 1; i < d.size(); ++i) worst = std::max(worst, std::abs(d.values[i] - 2.0 * d.time(i)));
  CHECK(worst <= 5e-3);
  CHECK(d.values[0] == 0.0);
}

TEST_CASE("half derivative of t^3") {
  const SampledPath d = gl_derivative(sample(1.0, 1e-3, cube), 0.5);
  CHECK(rl_power_law(3.0, 0.5, 1.0, 0.0) == doctest::Approx(1.80541).epsilon(1e-5));
  CHECK(d.values[d.size() - 1] == doctest::Approx(1.80541).epsilon(2e-3));
}

TEST_CASE("first integral of unity") {
  const double dt = 1e-3;
  const SampledPath d = gl_derivative(sample(2.0, dt, one), -1.0);
  for (Eigen::Index i = 0; i < d.size(); i += 100) CHECK(std::abs(d.values[i] - d.time(i)) <= dt * (1 + 1e-9));
}

TEST_CASE("first-order convergence") {
  const std::array<double, 3> dts{1e-2, 5e-3, 2.5e-3};
  for (double order : {0.1, 0.5, 0.9}) {
    const double e0 = cube_error(order, dts[0]);
    const double e1 = cube_error(order, dts[1]);
    const double e2 = cube_error(order, dts[2]);
    CAPTURE(order);
    CHECK(e0 / e1 == doctest::Approx(2.0).epsilon(0.1));
    CHECK(e1 / e2 == doctest::Approx(2.0).epsilon(0.1));
  }
}

TEST_CASE("semigroup of fractional integrals") {
  const SampledPath f = sample(1.0, 1e-3, [](double t) { return 1.0 + std::sin(3.0 * t); });
  for (double p : {0.25, 0.5}) {
    for (double q : {0.25, 0.5}) {
      const SampledPath two_step = gl_derivative(gl_derivative(f, -p), -q);
      const SampledPath one_step = gl_derivative(f, -(p + q));
      CHECK((two_step.values - one_step.values).cwiseAbs().maxCoeff() <= 5e-3);
    }
  }
}

TEST_CASE("linearity") {
  const SampledPath f = sample(1.0, 1e-3, cube);
  const SampledPath g = sample(1.0, 1e-3, [](double t) { return std::cos(t); });
  for (double order : {-0.7, 0.3, 1.0}) {
    const SampledPath df = gl_derivative(f, order), dg = gl_derivative(g, order);
    SampledPath scaled = f;
    scaled.values *= 4.0;
    CHECK((gl_derivative(scaled, order).values.array() == (4.0 * df.values).array()).all());

    SampledPath sum = f;
    sum.values += g.values;
    const Eigen::VectorXd ds = gl_derivative(sum, order).values;
    const Eigen::VectorXd expect = df.values + dg.values;
    CHECK((ds - expect).cwiseAbs().maxCoeff() <= 1e-12 * expect.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("causality") {
  const SampledPath f = sample(1.0, 1e-2, cube);
  SampledPath g = f;
  const Eigen::Index j = 37;
  g.values[j] += 0.5;
  for (double order : {-0.5, 0.5, 1.0}) {
    const SampledPath df = gl_derivative(f, order), dg = gl_derivative(g, order);
    CHECK((df.values.head(j).array() == dg.values.head(j).array()).all());
    CHECK(df.values[j] != dg.values[j]);
  }
}

TEST_CASE("gl_derivative preconditions") {
  const SampledPath f = sample(1.0, 0.1, cube);
  CHECK_THROWS_AS(gl_derivative(f, -1.2), DomainError);
  CHECK_THROWS_AS(gl_derivative(f, 1.2), DomainError);
  CHECK_THROWS_AS(gl_derivative(SampledPath(0.0, 0.1, Eigen::VectorXd::Ones(1)), 0.5), DomainError);
}

TEST_CASE("rl_power_law") {
  CHECK(rl_power_law(3.0, 0.5, 1.0, 0.0) == doctest::Approx(specfn::gamma(4.0) / specfn::gamma(3.5)).epsilon(1e-14));
  CHECK(rl_power_law(2.0, 1.0, 3.0, 0.0) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(rl_power_law(1.0, 1.0, 5.0, 2.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rl_power_law(0.0, 1.0, 2.0, 0.0) == 0.0);
  CHECK_THROWS_AS(rl_power_law(2.0, 0.5, 1.0, 2.0), DomainError);
}

TEST_CASE("caputo conversion") {
  const double dt = 1e-3;
  SUBCASE("vanishing boundary term leaves the path unchanged") {
    const SampledPath rl = gl_derivative(sample(1.0, dt, cube), 0.5);
    const double f0 = 0.0;
    const SampledPath c = caputo_from_rl(rl, std::span<const double>(&f0, 1), 0.5, 0.0);
    CHECK((c.values.array() == rl.values.array()).all());
  }
  SUBCASE("exponential") {
    const SampledPath f = sample(2.0, dt, [](double t) { return std::exp(t); });
    const SampledPath rl = gl_derivative(f, 0.5);
    const double f0 = 1.0;
    const SampledPath c = caputo_from_rl(rl, std::span<const double>(&f0, 1), 0.5, 0.0);
    for (Eigen::Index i = 1; i < c.size(); i += 97) {
      const double t = c.time(i);
      CHECK(c.values[i] == doctest::Approx(rl.values[i] - 1.0 / (std::sqrt(std::numbers::pi * t))).epsilon(1e-12));
    }
    CHECK(c.values[0] == 0.0);
  }
  SUBCASE("constant has zero Caputo derivative") {
    const double k = 3.0;
    const SampledPath f = sample(2.0, dt, [](double) { return 3.0; });
    const SampledPath rl = gl_derivative(f, 0.4);
    const SampledPath c = caputo_from_rl(rl, std::span<const double>(&k, 1), 0.4, 0.0);
    for (Eigen::Index i = 100; i < c.size(); ++i) {
      const double rl_exact = k * std::pow(c.time(i), -0.4) / specfn::gamma(0.6);
      CHECK(std::abs(c.values[i]) <= 1e-2 * rl_exact);
    }
  }
  const double f0 = 1.0;
  const SampledPath rl = gl_derivative(sample(1.0, dt, cube), 0.5);
  CHECK_THROWS_AS(caputo_from_rl(rl, std::span<const double>(&f0, 1), 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(caputo_from_rl(rl, std::span<const double>(), 0.5, 0.0), DomainError);
}
