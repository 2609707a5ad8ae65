#pragma once

#include <array>
#include <vector>

#include "kinefac/interpolation.hpp"
#include "kinefac/motion_polynomial.hpp"
#include "kinefac/pose.hpp"
#include "kinefac/real_polynomial.hpp"

namespace kinefac {

/// Rotation angle of the displacement t - h at parameter t, where M is the
/// minimal polynomial of h: phi = 2 arccot((2t + r) / sqrt(4s - r^2)) with
/// arccot ranging over (0, pi). phi(+inf) = 0, phi(-inf) = 2 pi, strictly
/// decreasing in t. The rotation is about -axis_of(h).
double rotation_angle(const QuadraticFactor& m, double t);

/// |r| / sqrt(4s - r^2).
double angle_characteristic(const QuadraticFactor& m);

/// Largest angle characteristic among the quadratic factors of C conj(C).
double max_angle_characteristic(const MotionPolynomial& c);

enum class Direction { Descending, Ascending };

/// Path on the projective parameter line from `from` to `to` moving in the
/// given direction (through infinity when needed). Either end may be
/// +-infinity, which denotes the single point at infinity.
struct ParameterSegment {
  double from = 0.0;
  double to = 0.0;
  Direction direction = Direction::Descending;
};

/// Segment from t1 = inf through t2, t3 to t4; SegmentUndefined on an
/// order defect.
ParameterSegment fairness_segment(const InterpolationFamily& fam);

/// Arc length of the trajectory of `point` under C over the segment.
/// QuadratureFailure when the adaptive rule misses `abs_tol`.
double arc_length(const MotionPolynomial& c, const Vector3d& point, const ParameterSegment& seg, double abs_tol = 1e-6);

/// Sum of arc lengths of the origin and the three unit points.
double fairness(const MotionPolynomial& c, const ParameterSegment& seg, double abs_tol = 1e-6);
double fairness(const MotionPolynomial& c, const InterpolationFamily& fam, double abs_tol = 1e-6);

/// Signed joint angle increments (one per sorted norm factor) from the
/// identity at t = inf to t4, moving along `direction`.
std::vector<double> joint_angle_vector(const MotionPolynomial& c, double t4, Direction direction = Direction::Descending);

}  // namespace kinefac
