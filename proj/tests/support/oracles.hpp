#pragma once

// Reference computations that share no code path with the character-sum
// machinery: explicit transition matrices, dense eigendecomposition, and
// step-by-step convolution.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "abelmix/group.hpp"

namespace abelmix::testing {

inline Eigen::MatrixXd transition_matrix(const WalkSpec& walk) {
  const auto& g = walk.group();
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  // Enumerate the 2r+1 symbols one by one so coincidences accumulate here
  // independently of WalkSpec::step().
  const double w = 1.0 / static_cast<double>(2 * walk.rank() + 1);
  for (Eigen::Index x = 0; x < n; ++x) {
    const auto xe = g.element(x);
    p(x, x) += w;
    for (const auto& a : walk.generators()) {
      std::vector<std::int64_t> plus = xe.coords;
      std::vector<std::int64_t> minus = xe.coords;
      for (std::size_t j = 0; j < plus.size(); ++j) {
        plus[j] += a.coords[j];
        minus[j] -= a.coords[j];
      }
      p(x, g.index_of(g.reduce(plus))) += w;
      p(x, g.index_of(g.reduce(minus))) += w;
    }
  }
  return p;
}

inline std::vector<double> dense_eigenvalues(const WalkSpec& walk) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(transition_matrix(walk), Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(out.begin(), out.end());
  return out;
}

/// |P^t delta_0 - uniform|_1 by repeated matrix-vector products with the explicit matrix.
inline std::vector<double> matrix_power_curve(const WalkSpec& walk, std::int64_t t_max) {
  const Eigen::MatrixXd p = transition_matrix(walk);
  const auto n = p.rows();
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  v(0) = 1.0;
  std::vector<double> out;
  for (std::int64_t t = 0; t <= t_max; ++t) {
    out.push_back((v.array() - 1.0 / static_cast<double>(n)).abs().sum());
    v = p.transpose() * v;
  }
  return out;
}

/// Same quantity from the direct-convolution evolve().
inline double direct_distance(const WalkSpec& walk, std::int64_t t) {
  const auto d = evolve(walk, point_mass(walk.group()), t);
  const double u = 1.0 / static_cast<double>(d.mass.size());
  double s = 0.0;
  for (double m : d.mass) s += std::abs(m - u);
  return s;
}

/// Forward scan of t(level) = max{t : d(t) >= level}, stepping the convolution.
inline std::int64_t direct_threshold(const WalkSpec& walk, double level, std::int64_t cap) {
  auto d = point_mass(walk.group());
  const double u = 1.0 / static_cast<double>(d.mass.size());
  for (std::int64_t t = 1; t <= cap; ++t) {
    d = evolve(walk, d, 1);
    double s = 0.0;
    for (double m : d.mass) s += std::abs(m - u);
    if (s < level) return t - 1;
  }
  return -1;
}

}  // namespace abelmix::testing
