#pragma once

// Counter-based random streams: the k-th variate of a stream depends only on
// (seed, k), so results do not depend on evaluation order or thread layout.

#include <cstdint>

#include <Eigen/Core>

namespace fraclab::random {

std::uint64_t splitmix64(std::uint64_t x);

/// Seed for the index-th member of a family rooted at `master`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed);

  std::uint64_t bits(std::uint64_t counter) const;
  /// Uniform on (0, 1).
  double uniform(std::uint64_t counter) const;
  /// Uniform on [lo, hi).
  double uniform(std::uint64_t counter, double lo, double hi) const;
  /// Standard normal (Box-Muller over counters 2k and 2k+1).
  double normal(std::uint64_t counter) const;

  /// Standard normals for counters 0 .. n-1.
  Eigen::VectorXd normals(Eigen::Index n) const;

 private:
  std::uint64_t key_;
};

}  // namespace fraclab::random
