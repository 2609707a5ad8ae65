#include "kinefac/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "kinefac/error.hpp"
#include "kinefac/quadrature.hpp"

namespace kinefac {

namespace {

constexpr double kMinDiscriminant = 1e-10;

double root_discriminant(const QuadraticFactor& m) {
  const double d = 4.0 * m.s - m.r * m.r;
  if (!(d > kMinDiscriminant)) {
    throw Error(ErrorKind::DegenerateFactor, "quadratic factor has 4s - r^2 = " + format_number(d));
  }
  return std::sqrt(d);
}

// Velocity of the trajectory x(t) = (r x r~ - 2 b r~) / |r|^2 of a fixed point.
class TrajectorySpeed {
 public:
  TrajectorySpeed(const MotionPolynomial& c, const Vector3d& point)
      : c_(c.poly()), dc_(c.poly().derivative()), x_(Quaterniond::Pure(point)) {}

  double operator()(double t) const {
    const DualQuaterniond g = c_(t);
    const DualQuaterniond dg = dc_(t);
    const Quaterniond& r = g.primal();
    const Quaterniond& dr = dg.primal();
    const Quaterniond rc = r.conjugate();
    const Quaterniond drc = dr.conjugate();
    const Vector3d num = (r * x_ * rc).vec() - 2.0 * (g.dual() * rc).vec();
    const Vector3d dnum = (dr * x_ * rc + r * x_ * drc).vec() - 2.0 * (dg.dual() * rc + g.dual() * drc).vec();
    const double den = r.squaredNorm();
    const double dden = 2.0 * r.dot(dr);
    return ((dnum * den - num * dden) / (den * den)).norm();
  }

 private:
  DQPolynomiald c_;
  DQPolynomiald dc_;
  Quaterniond x_;
};

// Integral of speed over t = anchor + sign (1 - x) / x, x in (0, 1], i.e.
// from the point at infinity on the `sign` side down to the anchor.
double integrate_to_infinity(const TrajectorySpeed& speed, double anchor, double sign, double tol) {
  const auto r = integrate(
      [&](double x) { return speed(anchor + sign * (1.0 - x) / x) / (x * x); }, 0.0, 1.0, tol);
  if (!r.converged) {
    throw Error(ErrorKind::QuadratureFailure, "arc length estimate error " + format_number(r.error));
  }
  return r.value;
}

double integrate_finite(const TrajectorySpeed& speed, double a, double b, double tol) {
  const auto r = integrate(speed, std::min(a, b), std::max(a, b), tol);
  if (!r.converged) {
    throw Error(ErrorKind::QuadratureFailure, "arc length estimate error " + format_number(r.error));
  }
  return r.value;
}

}  // namespace

double rotation_angle(const QuadraticFactor& m, double t) {
  const double root = root_discriminant(m);
  if (std::isinf(t)) return t > 0 ? 0.0 : 2.0 * M_PI;
  return 2.0 * std::atan2(root, 2.0 * t + m.r);
}

double angle_characteristic(const QuadraticFactor& m) { return std::abs(m.r) / root_discriminant(m); }

double max_angle_characteristic(const MotionPolynomial& c) {
  double worst = 0.0;
  for (const auto& m : quadratic_factors(c.norm()).factors) worst = std::max(worst, angle_characteristic(m));
  return worst;
}

ParameterSegment fairness_segment(const InterpolationFamily& fam) {
  if (has_order_defect(fam)) {
    throw Error(ErrorKind::SegmentUndefined, "parameter values are not monotone (order defect)");
  }
  const auto& t = fam.params;
  return {std::numeric_limits<double>::infinity(), t[2],
          t[0] > t[1] ? Direction::Descending : Direction::Ascending};
}

double arc_length(const MotionPolynomial& c, const Vector3d& point, const ParameterSegment& seg, double abs_tol) {
  const TrajectorySpeed speed(c, point);
  const bool desc = seg.direction == Direction::Descending;
  const bool from_inf = std::isinf(seg.from);
  const bool to_inf = std::isinf(seg.to);
  if (from_inf && to_inf) throw Error(ErrorKind::InvalidArgument, "segment has no extent");
  if (from_inf) return integrate_to_infinity(speed, seg.to, desc ? 1.0 : -1.0, abs_tol);
  if (to_inf) return integrate_to_infinity(speed, seg.from, desc ? -1.0 : 1.0, abs_tol);

  const bool wraps = desc ? seg.from < seg.to : seg.from > seg.to;
  if (!wraps) return integrate_finite(speed, seg.from, seg.to, abs_tol);
  return integrate_to_infinity(speed, seg.from, desc ? -1.0 : 1.0, 0.5 * abs_tol) +
         integrate_to_infinity(speed, seg.to, desc ? 1.0 : -1.0, 0.5 * abs_tol);
}

double fairness(const MotionPolynomial& c, const ParameterSegment& seg, double abs_tol) {
  const std::array<Vector3d, 4> points{Vector3d::Zero(), Vector3d::UnitX(), Vector3d::UnitY(), Vector3d::UnitZ()};
  double total = 0.0;
  for (const auto& p : points) total += arc_length(c, p, seg, 0.25 * abs_tol);
  return total;
}

double fairness(const MotionPolynomial& c, const InterpolationFamily& fam, double abs_tol) {
  return fairness(c, fairness_segment(fam), abs_tol);
}

std::vector<double> joint_angle_vector(const MotionPolynomial& c, double t4, Direction direction) {
  std::vector<double> out;
  for (const auto& m : quadratic_factors(c.norm()).factors) {
    const double phi = rotation_angle(m, t4);
    out.push_back(direction == Direction::Descending ? phi : phi - 2.0 * M_PI);
  }
  return out;
}

}  // namespace kinefac
