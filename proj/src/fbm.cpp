#include "fraclab/fbm.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <utility>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "fraclab/parallel.hpp"
#include "fraclab/random.hpp"
#include "fraclab/specfn.hpp"

namespace fraclab::fbm {

namespace {

constexpr int kPanelNodes = 16;

const specfn::QuadratureRule& panel_rule() {
  static const specfn::QuadratureRule rule = specfn::gauss_legendre(kPanelNodes);
  return rule;
}

double kernel_hyp(double h, double t, double s) {
  return specfn::hyp2f1(h - 0.5, 0.5 - h, h + 0.5, 1.0 - t / s);
}

// Endpoint panels carry algebraic singularities; double-exponential quadrature absorbs them.
boost::math::quadrature::tanh_sinh<double>& end_rule() {
  thread_local boost::math::quadrature::tanh_sinh<double> rule;
  return rule;
}

double head_panel(double h, double t, double s_hi) {
  return end_rule().integrate(
      [&](double s) { return s > 0.0 ? volterra_kernel(Hurst(h), t, s) : 0.0; }, 0.0, s_hi, 1e-13);
}

// w = t - s keeps the (t - s)^(H - 1/2) factor resolved near s = t.
double tail_panel(double h, double t, double s_lo) {
  const double c = specfn::rgamma(h + 0.5);
  return c * end_rule().integrate(
                 [&](double w) { return w > 0.0 ? std::pow(w, h - 0.5) * kernel_hyp(h, t, t - w) : 0.0; }, 0.0,
                 t - s_lo, 1e-13);
}

Eigen::MatrixXd build_unit_weights(double h, Eigen::Index n) {
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  parallel_for(static_cast<std::size_t>(n), workers, [&](std::size_t r) {
    const auto row = static_cast<Eigen::Index>(r);
    const double t = static_cast<double>(row + 1);
    for (Eigen::Index i = 0; i <= row; ++i) {
      w(row, i) = kernel_panel_integral(Hurst(h), t, static_cast<double>(i), static_cast<double>(i + 1));
    }
  });
  return w;
}

std::shared_ptr<const Eigen::MatrixXd> cached_unit_weights(double h, Eigen::Index n) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, Eigen::Index>, std::shared_ptr<const Eigen::MatrixXd>> cache;
  const auto key = std::make_pair(std::bit_cast<std::uint64_t>(h), n);
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto w = std::make_shared<const Eigen::MatrixXd>(build_unit_weights(h, n));
  cache.emplace(key, w);
  return w;
}

double msd_coefficient(double h) {
  return specfn::gamma(2.0 - 2.0 * h) * specfn::rgamma(1.5 - h) * specfn::rgamma(0.5 + h) / (2.0 * h);
}

}  // namespace

Hurst::Hurst(double h) : h_(h) {
  if (!(h > 0.0 && h < 1.0)) throw DomainError("Hurst: h must lie in (0, 1), got " + std::to_string(h));
}

double volterra_kernel(Hurst hurst, double t, double s) {
  if (!(s > 0.0) || s > t) throw DomainError("volterra_kernel: requires 0 < s <= t");
  const double h = hurst;
  if (h == 0.5) return 1.0;
  if (s == t) return h > 0.5 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::pow(t - s, h - 0.5) * specfn::rgamma(h + 0.5) * kernel_hyp(h, t, s);
}

double kernel_panel_integral(Hurst hurst, double t, double s_lo, double s_hi) {
  if (!(s_lo >= 0.0 && s_lo < s_hi && s_hi <= t)) {
    throw DomainError("kernel_panel_integral: requires 0 <= s_lo < s_hi <= t");
  }
  const double h = hurst;
  if (h == 0.5) return s_hi - s_lo;
  const bool at_origin = s_lo == 0.0;
  const bool at_t = s_hi == t;
  if (at_origin && at_t) {
    const double mid = 0.5 * t;
    return head_panel(h, t, mid) + tail_panel(h, t, mid);
  }
  if (at_origin) return head_panel(h, t, s_hi);
  if (at_t) return tail_panel(h, t, s_lo);
  return panel_rule().integrate([&](double s) { return volterra_kernel(hurst, t, s); }, s_lo, s_hi);
}

FbmGenerator::FbmGenerator(Hurst h, Eigen::Index n_steps, double t_end)
    : h_(h), grid_(uniform_grid(n_steps, t_end)) {
  if (n_steps < 2) throw DomainError("FbmGenerator: n_steps must be >= 2");
  scale_ = std::pow(grid_.dt, h_ - 0.5);
  if (h_ != 0.5) unit_weights_ = cached_unit_weights(h_, n_steps);
}

Eigen::MatrixXd FbmGenerator::weights() const {
  const Eigen::Index n = grid_.size - 1;
  if (!unit_weights_) return Eigen::MatrixXd::Ones(n, n).triangularView<Eigen::Lower>();
  return scale_ * *unit_weights_;
}

FbmPath FbmGenerator::from_increments(const Eigen::VectorXd& increments, std::uint64_t seed) const {
  const Eigen::Index n = grid_.size - 1;
  if (increments.size() != n) throw GridMismatch("FbmGenerator: need one increment per step");
  Eigen::VectorXd values(n + 1);
  values[0] = 0.0;
  if (!unit_weights_) {
    for (Eigen::Index i = 0; i < n; ++i) values[i + 1] = values[i] + increments[i];
  } else {
    values.tail(n).noalias() = unit_weights_->triangularView<Eigen::Lower>() * increments;
    values.tail(n) *= scale_;
  }
  return {h_, SampledPath(grid_, std::move(values)), increments, seed};
}

FbmPath FbmGenerator::generate(std::uint64_t seed) const {
  const Eigen::Index n = grid_.size - 1;
  const Eigen::VectorXd db = std::sqrt(grid_.dt) * random::CounterRng(seed).normals(n);
  return from_increments(db, seed);
}

FbmPath generate_fbm(Hurst h, Eigen::Index n_steps, double t_end, std::uint64_t seed) {
  return FbmGenerator(h, n_steps, t_end).generate(seed);
}

SampledPath fgn_from_fbm(const SampledPath& path) {
  const Eigen::Index n = path.size();
  if (n < 2) throw DomainError("fgn_from_fbm: path needs at least 2 samples");
  Eigen::VectorXd d = (path.values.tail(n - 1) - path.values.head(n - 1)) / path.dt;
  return {path.t0, path.dt, std::move(d)};
}

SampledPath fgn_from_fbm(const FbmPath& path) { return fgn_from_fbm(path.path); }

SampledPath unit_fgn(Hurst h, Eigen::Index n_steps, double t_end, std::uint64_t seed) {
  const TimeGrid g = uniform_grid(n_steps, t_end);
  return fgn_from_fbm(generate_fbm(h, n_steps + 1, t_end + g.dt, seed));
}

SampledPath unit_white_noise(Eigen::Index n_steps, double t_end, std::uint64_t seed) {
  const TimeGrid g = uniform_grid(n_steps, t_end);
  return {g, random::CounterRng(seed).normals(g.size) / std::sqrt(g.dt)};
}

double theory_msd_fbm(Hurst h, double t) {
  if (t < 0.0) throw DomainError("theory_msd_fbm: t must be >= 0");
  return msd_coefficient(h) * std::pow(t, 2.0 * h);
}

double theory_covariance(Hurst h, double t, double s) {
  if (t < 0.0 || s < 0.0) throw DomainError("theory_covariance: t, s must be >= 0");
  const double e = 2.0 * h;
  return 0.5 * msd_coefficient(h) * (std::pow(t, e) + std::pow(s, e) - std::pow(std::abs(t - s), e));
}

double alpha_from_hurst(Hurst h) { return 2.0 - 2.0 * h; }

Hurst hurst_from_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw DomainError("hurst_from_alpha: alpha must lie in (0, 2), got " + std::to_string(alpha));
  }
  return Hurst(1.0 - 0.5 * alpha);
}

double epsilon_fdt(double gamma, double kbt, Hurst h) {
  if (!(gamma >= 0.0) || !(kbt >= 0.0)) throw DomainError("epsilon_fdt: gamma, kbt must be >= 0");
  const double g = specfn::gamma(1.5 - h) * specfn::gamma(0.5 + h) * specfn::rgamma(2.0 * h) *
                   specfn::rgamma(2.0 - 2.0 * h);
  return std::sqrt(2.0 * gamma * kbt * g);
}

double white_noise_scale(const MarketParams& p) { return std::sqrt(2.0 * p.beta * p.lambda * p.kbt); }

double colored_noise_scale(const MarketParams& p) {
  const double al = p.alpha;
  const double g = 2.0 * specfn::gamma(0.5 * (1.0 + al)) * specfn::gamma(0.5 * (3.0 - al)) *
                   specfn::rgamma(2.0 - al) * specfn::rgamma(al);
  return std::sqrt(p.a * p.kbt * g);
}

NoisePair financial_noise(const MarketParams& params, Eigen::Index n_steps, double t_end,
                          std::uint64_t seed_white, std::uint64_t seed_colored) {
  params.validate();
  NoisePair out;
  out.scale_white = white_noise_scale(params);
  out.scale_colored = colored_noise_scale(params);
  out.white = unit_white_noise(n_steps, t_end, seed_white);
  out.white.values *= out.scale_white;
  out.colored = unit_fgn(hurst_from_alpha(params.alpha), n_steps, t_end, seed_colored);
  out.colored.values *= out.scale_colored;
  return out;
}

}  // namespace fraclab::fbm
