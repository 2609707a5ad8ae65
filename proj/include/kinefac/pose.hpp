#pragma once

#include <Eigen/Core>

#include "kinefac/dual_quaternion.hpp"

namespace kinefac {

using Vector3d = Eigen::Vector3d;
using Matrix3d = Eigen::Matrix3d;

enum class Classification { Rotation, Translation, HalfTurn, Generic, OnExceptional };

const char* to_string(Classification c) noexcept;

/// Projective classification of a dual quaternion. The argument is scaled to
/// unit 8-norm first, so the result does not depend on the representative.
/// The exact scalar 1 reports Generic, not Translation.
Classification classify(const DualQuaterniond& a, double tol = 1e-9);

/// Line in Pluecker coordinates, unit direction, moment = point x direction.
struct PlueckerLine {
  Vector3d direction = Vector3d::UnitZ();
  Vector3d moment = Vector3d::Zero();

  static PlueckerLine through(const Vector3d& point, const Vector3d& direction);

  /// Point on the line closest to the origin.
  Vector3d point() const { return direction.cross(moment); }
  double distance_to(const Vector3d& p) const;
};

/// Rotation axis of a rotation quaternion. Invariant under real scaling of h
/// and under adding real multiples of 1.
PlueckerLine axis_of(const DualQuaterniond& h, double tol = 1e-8);

/// Unit rotation quaternion for a rotation by `angle` about `axis`
/// (right-handed about axis.direction).
DualQuaterniond rotation_about(const PlueckerLine& axis, double angle);

/// Unit dual quaternion of a pure translation.
DualQuaterniond translation(const Vector3d& offset);

/// Rigid displacement of a point by an arbitrary dual quaternion with nonzero
/// primal part: x -> (r x r~ - 2 b r~) / |r|^2 for g = r + eps b.
Vector3d transform_point(const DualQuaterniond& g, const Vector3d& p);

/// Line displaced by g.
PlueckerLine transform_line(const DualQuaterniond& g, const PlueckerLine& line);

/// A rigid displacement: a point of the Study quadric off the exceptional
/// three-space. The stored representative has unit primal part and a
/// nonnegative primal scalar part, and is projected exactly onto the quadric.
class Pose {
 public:
  Pose() : rep_(DualQuaterniond::Identity()) {}

  /// Validates Study condition (relative to |primal|^2) and |primal| within
  /// `tol`, then projects onto the quadric.
  static Pose from_study(const DualQuaterniond& q, double tol = 1e-6);
  static Pose identity() { return Pose(); }

  const DualQuaterniond& rep() const { return rep_; }

  Pose operator*(const Pose& o) const;
  Pose inverse() const;

 private:
  explicit Pose(const DualQuaterniond& unit) : rep_(unit) {}
  DualQuaterniond rep_;
};

Vector3d act_on_point(const Pose& g, const Vector3d& p);

/// Requires R orthogonal with det 1 within `tol` (NotARotationMatrix).
Pose pose_from_matrix(const Matrix3d& R, const Vector3d& t, double tol = 1e-6);

struct RigidTransform {
  Matrix3d rotation = Matrix3d::Identity();
  Vector3d translation = Vector3d::Zero();
};

RigidTransform pose_to_matrix(const Pose& g);

}  // namespace kinefac
