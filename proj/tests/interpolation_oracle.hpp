#pragma once

// Poses sampled from a constructed cubic and the 1-d search that finds the
// constructed motion inside an interpolation family.

#include <array>
#include <cmath>
#include <limits>

#include "kinefac/error.hpp"
#include "kinefac/interpolation.hpp"
#include "support.hpp"

namespace kinefac::test {

struct ConstructedProblem {
  MotionPolynomial cubic;
  std::array<double, 3> sigma;
  Pose base;
  std::array<Pose, 4> raw;
};

inline ConstructedProblem constructed_problem(Rng& rng) {
  for (;;) {
    MotionPolynomial c = random_cubic(rng);
    std::array<double, 3> sigma{uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -3, 3)};
    std::sort(sigma.begin(), sigma.end());
    if (sigma[1] - sigma[0] < 0.3 || sigma[2] - sigma[1] < 0.3) continue;
    const Pose base = random_pose(rng);
    std::array<Pose, 4> raw;
    raw[0] = base;
    for (int i = 0; i < 3; ++i) raw[i + 1] = base * Pose::from_study(c(sigma[i]), 1e-9);
    return {c, sigma, base, raw};
  }
}

/// Residual of the affine fit t_i = a sigma_i + b (three points, two
/// unknowns), relative to the spread of t.
inline double affine_fit_residual(const std::array<double, 3>& sigma, const std::array<double, 3>& t, double* a = nullptr,
                                  double* b = nullptr) {
  const double aa = (t[2] - t[0]) / (sigma[2] - sigma[0]);
  const double bb = t[0] - aa * sigma[0];
  if (a) *a = aa;
  if (b) *b = bb;
  const double spread = std::max({std::abs(t[0]), std::abs(t[1]), std::abs(t[2]), 1e-300});
  return std::abs(aa * sigma[1] + bb - t[1]) / spread;
}

/// a^3 C((t - b) / a): the constructed cubic in the family's parameter.
inline DQPolynomiald reparametrize(const MotionPolynomial& c, double a, double b) {
  // C(u) = sum c_k u^k with u = (t - b) / a
  const DQPolynomiald u({DualQuaterniond::Real(-b / a), DualQuaterniond::Real(1.0 / a)});
  DQPolynomiald acc;
  DQPolynomiald power = DQPolynomiald::constant(DualQuaterniond::Identity());
  for (int k = 0; k <= c.degree(); ++k) {
    acc = acc + c.poly().coeff(k) * power;
    power = power * u;
  }
  return acc * (a * a * a);
}

struct Recovery {
  double lambda = 0.0;
  double distance = std::numeric_limits<double>::infinity();
};

/// Coarse angular grid followed by golden-section refinement around the
/// best few grid points.
inline Recovery search_lambda(const InterpolationFamily& fam, const PoseProblem& prob, const DQPolynomiald& target,
                              int grid = 2001) {
  auto dist = [&](double theta) {
    try {
      return projective_poly_distance(cubic_through(fam, prob, std::tan(theta)).poly(), target);
    } catch (const Error&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  std::vector<std::pair<double, int>> scores;
  const double h = M_PI / (grid + 1);
  for (int j = 0; j < grid; ++j) scores.push_back({dist(-M_PI / 2 + h * (j + 1)), j});
  std::sort(scores.begin(), scores.end());
  Recovery best;
  const double g = (std::sqrt(5.0) - 1) / 2;
  for (int c = 0; c < 5 && c < grid; ++c) {
    double lo = -M_PI / 2 + h * scores[c].second;
    double hi = lo + 2 * h;
    double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    double f1 = dist(x1), f2 = dist(x2);
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      if (f1 < f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - g * (hi - lo);
        f1 = dist(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + g * (hi - lo);
        f2 = dist(x2);
      }
    }
    const double th = f1 < f2 ? x1 : x2;
    const double f = std::min(f1, f2);
    if (f < best.distance) best = {std::tan(th), f};
  }
  return best;
}

}  // namespace kinefac::test
