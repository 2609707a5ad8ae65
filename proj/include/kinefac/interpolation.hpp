#pragma once

#include <array>
#include <vector>

#include "kinefac/motion_polynomial.hpp"
#include "kinefac/pose.hpp"

namespace kinefac {

/// Four poses with the first one moved to the identity.
struct PoseProblem {
  std::array<Pose, 4> poses;
  /// The original first pose; raw pose i equals base_transform * poses[i].
  Pose base_transform;
};

struct SpanTolerances {
  /// Smallest/largest singular value ratio of the 8x4 coordinate matrix.
  double rank = 1e-9;
  /// Same ratio for the 4x4 matrix of primal parts (span meets E).
  double exceptional = 1e-9;
};

/// Left-multiplies every pose by the inverse of the first.
PoseProblem normalize_poses(const std::array<Pose, 4>& raw, const SpanTolerances& tol = {});

struct HalfTurnResult {
  /// Zero or two half-turns (one doubled solution is reported twice), ordered
  /// by the root (alpha : beta) of the binary quadratic in the nullspace basis.
  /// Each is scaled so its coefficient on the first pose (= 1) is exactly 1.
  std::vector<DualQuaterniond> halfturns;
  /// Discriminant of the binary quadratic, normalized by |S11 S22| + S12^2.
  double discriminant = 0.0;
  /// Discriminant in (0, 1e-10): the two rulings nearly coincide.
  bool near_double_root = false;
};

HalfTurnResult half_turns(const PoseProblem& prob);

enum class Ruling { First, Second };

struct InterpolationFamily {
  DualQuaterniond halfturn;
  DualQuaterniond other_halfturn;
  /// t2, t3, t4; t1 = inf.
  std::array<double, 3> params{};
  Ruling family_id = Ruling::First;
};

/// t_i = q(k, p_i) / q(1, p_i) for i = 2, 3, 4.
InterpolationFamily parameter_values(const DualQuaterniond& k, const DualQuaterniond& other, const PoseProblem& prob,
                                     Ruling id = Ruling::First, double tol = 1e-12);

/// inf, t2, t3, t4 is not monotone on the projective line, i.e. t2, t3, t4
/// are not strictly monotone.
bool has_order_defect(const InterpolationFamily& fam);

struct CubicOptions {
  double node_tol = 1e-8;
  /// RankDefect when sigma4 - sigma5 < rank_factor * eps * sigma1.
  double rank_factor = 1e6;
  double motion_tol = 1e-8;
};

/// Cubic motion polynomial C with C(inf) = 1, C(t_i) ~ p_i and
/// C(lambda) ~ lambda - k.
MotionPolynomial cubic_through(const InterpolationFamily& fam, const PoseProblem& prob, double lambda,
                               const CubicOptions& opts = {});

/// Largest projective distance at the five interpolation nodes.
double interpolation_residual(const MotionPolynomial& c, const InterpolationFamily& fam, const PoseProblem& prob,
                              double lambda);

}  // namespace kinefac
