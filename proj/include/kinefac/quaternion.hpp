#pragma once

#include <cmath>
#include <ostream>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace kinefac {

// General (not necessarily unit) real quaternion w + x i + y j + z k.
template <typename Scalar>
class Quaternion {
 public:
  using Vector3 = Eigen::Matrix<Scalar, 3, 1>;
  using Vector4 = Eigen::Matrix<Scalar, 4, 1>;

  Quaternion() : w_(0), v_(Vector3::Zero()) {}
  Quaternion(Scalar w, Scalar x, Scalar y, Scalar z) : w_(w), v_(x, y, z) {}
  Quaternion(Scalar w, const Vector3& v) : w_(w), v_(v) {}

  static Quaternion Identity() { return Quaternion(Scalar(1), 0, 0, 0); }
  static Quaternion Zero() { return Quaternion(); }
  static Quaternion Pure(const Vector3& v) { return Quaternion(Scalar(0), v); }
  static Quaternion FromCoeffs(const Vector4& c) { return Quaternion(c(0), c(1), c(2), c(3)); }

  Scalar w() const { return w_; }
  Scalar x() const { return v_(0); }
  Scalar y() const { return v_(1); }
  Scalar z() const { return v_(2); }
  const Vector3& vec() const { return v_; }

  /// Coefficients in (w, x, y, z) order.
  Vector4 coeffs() const { return Vector4(w_, v_(0), v_(1), v_(2)); }

  Quaternion conjugate() const { return Quaternion(w_, -v_); }
  Scalar squaredNorm() const { return w_ * w_ + v_.squaredNorm(); }
  Scalar norm() const { return std::sqrt(squaredNorm()); }
  Scalar dot(const Quaternion& o) const { return w_ * o.w_ + v_.dot(o.v_); }

  Quaternion inverse() const {
    const Scalar n2 = squaredNorm();
    return Quaternion(w_ / n2, -v_ / n2);
  }

  Quaternion operator+(const Quaternion& o) const { return Quaternion(w_ + o.w_, v_ + o.v_); }
  Quaternion operator-(const Quaternion& o) const { return Quaternion(w_ - o.w_, v_ - o.v_); }
  Quaternion operator-() const { return Quaternion(-w_, -v_); }
  Quaternion operator*(Scalar s) const { return Quaternion(w_ * s, v_ * s); }
  Quaternion operator/(Scalar s) const { return Quaternion(w_ / s, v_ / s); }

  // Hamilton product.
  Quaternion operator*(const Quaternion& o) const {
    return Quaternion(w_ * o.w_ - v_.dot(o.v_), w_ * o.v_ + o.w_ * v_ + v_.cross(o.v_));
  }

  Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
  Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }

  template <typename Other>
  Quaternion<Other> cast() const {
    return Quaternion<Other>(Other(w_), v_.template cast<Other>());
  }

 private:
  Scalar w_;
  Vector3 v_;
};

template <typename Scalar>
Quaternion<Scalar> operator*(Scalar s, const Quaternion<Scalar>& q) {
  return q * s;
}

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const Quaternion<Scalar>& q) {
  return os << '(' << q.w() << ", " << q.x() << ", " << q.y() << ", " << q.z() << ')';
}

using Quaterniond = Quaternion<double>;

}  // namespace kinefac
