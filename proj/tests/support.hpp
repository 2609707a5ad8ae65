#pragma once

#include <array>
#include <cmath>
#include <random>

#include "kinefac/factorization.hpp"
#include "kinefac/motion_polynomial.hpp"
#include "kinefac/pose.hpp"

namespace kinefac::test {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

inline Vector3d random_vector(Rng& rng, double scale = 1.0) {
  return {uniform(rng, -scale, scale), uniform(rng, -scale, scale), uniform(rng, -scale, scale)};
}

inline Vector3d random_direction(Rng& rng) {
  Vector3d v;
  do {
    v = random_vector(rng);
  } while (v.norm() < 0.1 || v.norm() > 1.0);
  return v.normalized();
}

inline PlueckerLine random_line(Rng& rng) { return PlueckerLine::through(random_vector(rng, 2.0), random_direction(rng)); }

inline DualQuaterniond random_dq(Rng& rng) {
  Eigen::Matrix<double, 8, 1> c;
  for (int i = 0; i < 8; ++i) c(i) = uniform(rng, -1, 1);
  return DualQuaterniond::FromCoeffs(c);
}

/// Rotation quaternion (not unit, with a random real shift) about a random
/// line, angle bounded away from 0 and 2 pi.
inline DualQuaterniond random_rotation(Rng& rng) {
  const DualQuaterniond u = rotation_about(random_line(rng), uniform(rng, 0.3, 2 * M_PI - 0.3));
  return u * uniform(rng, 0.5, 2.0) + DualQuaterniond::Real(uniform(rng, -1.0, 1.0));
}

inline Pose random_pose(Rng& rng) {
  const DualQuaterniond g = translation(random_vector(rng, 2.0)) * rotation_about(random_line(rng), uniform(rng, 0, 2 * M_PI));
  return Pose::from_study(g);
}

inline DQPolynomiald product_of_linear(const std::vector<DualQuaterniond>& hs) {
  DQPolynomiald p = DQPolynomiald::constant(DualQuaterniond::Identity());
  for (const auto& h : hs) p = p * DQPolynomiald::linear(h);
  return p;
}

inline MotionPolynomial random_cubic(Rng& rng, std::array<DualQuaterniond, 3>* hs = nullptr) {
  std::vector<DualQuaterniond> v{random_rotation(rng), random_rotation(rng), random_rotation(rng)};
  if (hs) *hs = {v[0], v[1], v[2]};
  return MotionPolynomial::from(product_of_linear(v));
}

inline DQPolynomiald random_poly(Rng& rng, int degree) {
  std::vector<DualQuaterniond> c;
  for (int k = 0; k <= degree; ++k) c.push_back(random_dq(rng));
  return DQPolynomiald(c);
}

// Component-level oracles, written out independently of the library.

using Q4 = std::array<double, 4>;
using Q8 = std::array<double, 8>;

inline Q4 hamilton(const Q4& a, const Q4& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3], a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1], a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

inline Q8 to_q8(const DualQuaterniond& q) {
  Q8 out;
  for (int i = 0; i < 8; ++i) out[i] = q.coeffs()(i);
  return out;
}

inline Q8 dq_product(const Q8& a, const Q8& b) {
  const Q4 ap{a[0], a[1], a[2], a[3]}, ad{a[4], a[5], a[6], a[7]};
  const Q4 bp{b[0], b[1], b[2], b[3]}, bd{b[4], b[5], b[6], b[7]};
  const Q4 p = hamilton(ap, bp);
  const Q4 d1 = hamilton(ap, bd);
  const Q4 d2 = hamilton(ad, bp);
  return {p[0], p[1], p[2], p[3], d1[0] + d2[0], d1[1] + d2[1], d1[2] + d2[2], d1[3] + d2[3]};
}

inline double max_diff(const Q8& a, const Q8& b) {
  double m = 0;
  for (int i = 0; i < 8; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

/// Polynomial product by explicit double loop over the component oracle.
inline std::vector<Q8> poly_product(const DQPolynomiald& p, const DQPolynomiald& q) {
  std::vector<Q8> out(std::max(p.degree() + q.degree() + 1, 0), Q8{});
  for (int i = 0; i <= p.degree(); ++i) {
    for (int j = 0; j <= q.degree(); ++j) {
      const Q8 c = dq_product(to_q8(p.coeff(i)), to_q8(q.coeff(j)));
      for (int k = 0; k < 8; ++k) out[i + j][k] += c[k];
    }
  }
  return out;
}

/// Projective distance between two coefficient lists taken as one vector.
inline double projective_poly_distance(const DQPolynomiald& a, const DQPolynomiald& b) {
  const int n = std::max(a.degree(), b.degree()) + 1;
  Eigen::VectorXd va(8 * n), vb(8 * n);
  for (int k = 0; k < n; ++k) {
    va.segment<8>(8 * k) = a.coeff(k).coeffs();
    vb.segment<8>(8 * k) = b.coeff(k).coeffs();
  }
  va.normalize();
  vb.normalize();
  const double c = va.dot(vb);
  return std::atan2((vb - c * va).norm(), std::abs(c));
}

/// Rotation angle of t - h read off the unit quaternion: the displacement
/// turns by -phi about axis_of(h).
inline double angle_oracle(const DualQuaterniond& h, double t) {
  const Quaterniond p = Quaterniond(t, 0, 0, 0) - h.primal();
  const Vector3d d = axis_of(h).direction;
  double psi = 2.0 * std::atan2(p.vec().dot(d), p.w());
  double phi = -psi;
  while (phi <= 0) phi += 2 * M_PI;
  while (phi >= 2 * M_PI) phi -= 2 * M_PI;
  return phi;
}

}  // namespace kinefac::test
