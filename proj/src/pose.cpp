#include "kinefac/pose.hpp"

#include <cmath>

#include <Eigen/Geometry>

#include "kinefac/error.hpp"

namespace kinefac {

const char* to_string(Classification c) noexcept {
  switch (c) {
    case Classification::Rotation: return "Rotation";
    case Classification::Translation: return "Translation";
    case Classification::HalfTurn: return "HalfTurn";
    case Classification::Generic: return "Generic";
    case Classification::OnExceptional: return "OnExceptional";
  }
  return "Unknown";
}

Classification classify(const DualQuaterniond& a, double tol) {
  const double n = a.norm();
  if (n == 0.0) throw Error(ErrorKind::ZeroInput, "cannot classify the zero dual quaternion");
  const DualQuaterniond u = a / n;
  const Quaterniond& p = u.primal();
  const Quaterniond& d = u.dual();
  if (p.norm() <= tol) return Classification::OnExceptional;

  const bool on_quadric = std::abs(p.dot(d)) <= tol;
  const bool dual_scalar_zero = std::abs(d.w()) <= tol;
  if (!on_quadric || !dual_scalar_zero) return Classification::Generic;

  if (p.vec().norm() > tol) {
    return std::abs(p.w()) <= tol ? Classification::HalfTurn : Classification::Rotation;
  }
  // Vanishing primal vector part: translation unless the dual part vanishes too.
  return d.vec().norm() > tol ? Classification::Translation : Classification::Generic;
}

PlueckerLine PlueckerLine::through(const Vector3d& point, const Vector3d& direction) {
  PlueckerLine l;
  l.direction = direction.normalized();
  l.moment = point.cross(l.direction);
  return l;
}

double PlueckerLine::distance_to(const Vector3d& p) const {
  return (p - point()).cross(direction).norm();
}

PlueckerLine axis_of(const DualQuaterniond& h, double tol) {
  const Classification c = classify(h, tol);
  if (c != Classification::Rotation && c != Classification::HalfTurn) {
    throw Error(ErrorKind::NotARotation, std::string("axis requested for a ") + to_string(c) + " quaternion");
  }
  const double s = h.primal().vec().norm();
  PlueckerLine l;
  l.direction = h.primal().vec() / s;
  l.moment = -h.dual().vec() / s;
  l.moment -= l.moment.dot(l.direction) * l.direction;
  return l;
}

DualQuaterniond rotation_about(const PlueckerLine& axis, double angle) {
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  return DualQuaterniond(Quaterniond(c, s * axis.direction), Quaterniond::Pure(-s * axis.moment));
}

DualQuaterniond translation(const Vector3d& offset) {
  // b = -t r / 2 with r = 1
  return DualQuaterniond(Quaterniond::Identity(), Quaterniond::Pure(-0.5 * offset));
}

Vector3d transform_point(const DualQuaterniond& g, const Vector3d& p) {
  const Quaterniond& r = g.primal();
  const double n2 = r.squaredNorm();
  if (n2 == 0.0) throw Error(ErrorKind::OnExceptional, "displacement has vanishing primal part");
  const Quaterniond rc = r.conjugate();
  const Vector3d rotated = (r * Quaterniond::Pure(p) * rc).vec();
  const Vector3d shift = -2.0 * (g.dual() * rc).vec();
  return (rotated + shift) / n2;
}

PlueckerLine transform_line(const DualQuaterniond& g, const PlueckerLine& line) {
  const Vector3d p = transform_point(g, line.point());
  const Vector3d q = transform_point(g, line.point() + line.direction);
  return PlueckerLine::through(p, q - p);
}

Pose Pose::from_study(const DualQuaterniond& q, double tol) {
  const double n = q.norm();
  if (n == 0.0) throw Error(ErrorKind::ZeroInput, "pose has all Study parameters zero");
  const double pn = q.primal().norm();
  if (pn <= tol * n) throw Error(ErrorKind::OnExceptional, "pose lies on the exceptional three-space");
  const Quaterniond p = q.primal() / pn;
  Quaterniond d = q.dual() / pn;
  const double residual = p.dot(d);
  if (std::abs(residual) > tol) {
    throw Error(ErrorKind::InvalidArgument,
                "pose violates the Study condition (residual " + std::to_string(residual) + ")");
  }
  d -= p * residual;
  return Pose(canonical_sign(DualQuaterniond(p, d)));
}

Pose Pose::operator*(const Pose& o) const { return from_study(rep_ * o.rep_, 1e-6); }

Pose Pose::inverse() const { return from_study(rep_.conjugate(), 1e-6); }

Vector3d act_on_point(const Pose& g, const Vector3d& p) { return transform_point(g.rep(), p); }

Pose pose_from_matrix(const Matrix3d& R, const Vector3d& t, double tol) {
  if ((R.transpose() * R - Matrix3d::Identity()).norm() > tol || std::abs(R.determinant() - 1.0) > tol) {
    throw Error(ErrorKind::NotARotationMatrix, "matrix is not a proper rotation");
  }
  Eigen::Quaterniond e(R);
  e.normalize();
  Quaterniond r(e.w(), e.x(), e.y(), e.z());
  if (r.w() < 0) r = -r;
  const Quaterniond b = Quaterniond::Pure(-0.5 * t) * r;
  return Pose::from_study(DualQuaterniond(r, b), tol);
}

RigidTransform pose_to_matrix(const Pose& g) {
  const Quaterniond& r = g.rep().primal();
  RigidTransform out;
  out.rotation = Eigen::Quaterniond(r.w(), r.x(), r.y(), r.z()).toRotationMatrix();
  out.translation = transform_point(g.rep(), Vector3d::Zero());
  return out;
}

}  // namespace kinefac
