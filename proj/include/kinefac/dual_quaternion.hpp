#pragma once

#include <cmath>
#include <ostream>

#include <Eigen/Core>

#include "kinefac/quaternion.hpp"

namespace kinefac {

/// Dual quaternion primal + eps * dual with eps^2 = 0. As an 8-vector
/// (primal w, x, y, z, dual w, x, y, z) it is a point of P^7 in Study
/// parameters; real multiples represent the same displacement.
template <typename Scalar>
class DualQuaternion {
 public:
  using Quat = Quaternion<Scalar>;
  using Vector8 = Eigen::Matrix<Scalar, 8, 1>;

  DualQuaternion() = default;
  DualQuaternion(const Quat& primal, const Quat& dual) : primal_(primal), dual_(dual) {}

  static DualQuaternion Identity() { return DualQuaternion(Quat::Identity(), Quat::Zero()); }
  static DualQuaternion Zero() { return DualQuaternion(); }
  static DualQuaternion Real(Scalar s) { return DualQuaternion(Quat(s, 0, 0, 0), Quat::Zero()); }
  static DualQuaternion FromCoeffs(const Vector8& c) {
    return DualQuaternion(Quat::FromCoeffs(c.template head<4>()), Quat::FromCoeffs(c.template tail<4>()));
  }

  const Quat& primal() const { return primal_; }
  const Quat& dual() const { return dual_; }

  Vector8 coeffs() const {
    Vector8 c;
    c << primal_.coeffs(), dual_.coeffs();
    return c;
  }

  /// Quaternion conjugate applied to both parts; conj(pq) = conj(q) conj(p).
  DualQuaternion conjugate() const { return DualQuaternion(primal_.conjugate(), dual_.conjugate()); }

  /// Requires a nonzero primal part.
  DualQuaternion inverse() const {
    const Quat pinv = primal_.inverse();
    return DualQuaternion(pinv, -(pinv * dual_ * pinv));
  }

  /// Euclidean norm of the 8-vector.
  Scalar norm() const { return std::sqrt(primal_.squaredNorm() + dual_.squaredNorm()); }
  Scalar squaredNorm() const { return primal_.squaredNorm() + dual_.squaredNorm(); }

  DualQuaternion operator+(const DualQuaternion& o) const {
    return DualQuaternion(primal_ + o.primal_, dual_ + o.dual_);
  }
  DualQuaternion operator-(const DualQuaternion& o) const {
    return DualQuaternion(primal_ - o.primal_, dual_ - o.dual_);
  }
  DualQuaternion operator-() const { return DualQuaternion(-primal_, -dual_); }
  DualQuaternion operator*(Scalar s) const { return DualQuaternion(primal_ * s, dual_ * s); }
  DualQuaternion operator/(Scalar s) const { return DualQuaternion(primal_ / s, dual_ / s); }

  // (a + eps b)(c + eps d) = ac + eps (ad + bc)
  DualQuaternion operator*(const DualQuaternion& o) const {
    return DualQuaternion(primal_ * o.primal_, primal_ * o.dual_ + dual_ * o.primal_);
  }

  DualQuaternion& operator+=(const DualQuaternion& o) { return *this = *this + o; }
  DualQuaternion& operator-=(const DualQuaternion& o) { return *this = *this - o; }
  DualQuaternion& operator*=(Scalar s) { return *this = *this * s; }

  template <typename Other>
  DualQuaternion<Other> cast() const {
    return DualQuaternion<Other>(primal_.template cast<Other>(), dual_.template cast<Other>());
  }

 private:
  Quat primal_;
  Quat dual_;
};

template <typename Scalar>
DualQuaternion<Scalar> operator*(Scalar s, const DualQuaternion<Scalar>& q) {
  return q * s;
}

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const DualQuaternion<Scalar>& q) {
  return os << q.primal() << " + eps" << q.dual();
}

using DualQuaterniond = DualQuaternion<double>;

template <typename Scalar>
DualQuaternion<Scalar> conjugate(const DualQuaternion<Scalar>& a) {
  return a.conjugate();
}

/// Polar form of the Study quadric: primal(a).dual(b) + dual(a).primal(b).
template <typename Scalar>
Scalar study_bilinear(const DualQuaternion<Scalar>& a, const DualQuaternion<Scalar>& b) {
  return a.primal().dot(b.dual()) + a.dual().dot(b.primal());
}

/// Study quadratic form S(a) = primal(a).dual(a) = study_bilinear(a, a) / 2.
template <typename Scalar>
Scalar study_form(const DualQuaternion<Scalar>& a) {
  return a.primal().dot(a.dual());
}

/// Angle in radians between the projective classes of a and b (0 iff a ~ b).
template <typename Scalar>
Scalar projective_distance(const DualQuaternion<Scalar>& a, const DualQuaternion<Scalar>& b) {
  using Vector8 = typename DualQuaternion<Scalar>::Vector8;
  const Scalar na = a.norm();
  const Scalar nb = b.norm();
  if (na == Scalar(0) || nb == Scalar(0)) return (na == nb) ? Scalar(0) : Scalar(M_PI / 2);
  const Vector8 ua = a.coeffs() / na;
  const Vector8 ub = b.coeffs() / nb;
  const Scalar c = ua.dot(ub);
  return std::atan2((ub - c * ua).norm(), std::abs(c));
}

/// Deterministic projective representative: unit 8-norm, primal scalar part
/// positive where nonzero, else first nonzero coordinate positive.
template <typename Scalar>
DualQuaternion<Scalar> canonical_sign(const DualQuaternion<Scalar>& a, Scalar zero_tol = Scalar(1e-12)) {
  const auto c = a.coeffs();
  for (int i = 0; i < 8; ++i) {
    if (std::abs(c(i)) > zero_tol * c.norm()) return c(i) < 0 ? -a : a;
  }
  return a;
}

}  // namespace kinefac
