#include "kinefac/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/SVD>

#include "kinefac/error.hpp"

namespace kinefac {

namespace {

using Matrix84 = Eigen::Matrix<double, 8, 4>;

Matrix84 coordinate_matrix(const PoseProblem& prob) {
  Matrix84 a;
  for (int i = 0; i < 4; ++i) a.col(i) = prob.poses[i].rep().coeffs();
  return a;
}

double singular_ratio(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  return s(0) > 0 ? s(s.size() - 1) / s(0) : 0.0;
}

}  // namespace

PoseProblem normalize_poses(const std::array<Pose, 4>& raw, const SpanTolerances& tol) {
  PoseProblem prob;
  prob.base_transform = raw[0];
  const Pose inv = raw[0].inverse();
  prob.poses[0] = Pose::identity();
  for (int i = 1; i < 4; ++i) prob.poses[i] = inv * raw[i];

  const Matrix84 a = coordinate_matrix(prob);
  if (singular_ratio(a) < tol.rank) {
    throw Error(ErrorKind::DegenerateSpan, "the four poses do not span a projective three-space");
  }
  if (singular_ratio(a.topRows<4>()) < tol.exceptional) {
    throw Error(ErrorKind::SpanMeetsExceptional, "span of the poses meets the exceptional three-space");
  }
  Eigen::Matrix4d gram;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) gram(i, j) = study_bilinear(prob.poses[i].rep(), prob.poses[j].rep());
  }
  if (gram.cwiseAbs().maxCoeff() < tol.rank) {
    throw Error(ErrorKind::DegenerateSpan, "span of the poses lies in the Study quadric");
  }
  return prob;
}

HalfTurnResult half_turns(const PoseProblem& prob) {
  const Matrix84 a = coordinate_matrix(prob);
  // Vanishing primal and dual scalar parts of k = sum x_i p_i.
  Eigen::Matrix<double, 2, 4> linear;
  linear.row(0) = a.row(0);
  linear.row(1) = a.row(4);
  Eigen::JacobiSVD<Eigen::Matrix<double, 2, 4>> svd(linear, Eigen::ComputeFullV);
  if (svd.singularValues()(1) < 1e-12 * std::max(svd.singularValues()(0), 1.0)) {
    throw Error(ErrorKind::DegenerateSpan, "scalar-part conditions are dependent");
  }
  const Eigen::Vector4d n1 = svd.matrixV().col(2);
  const Eigen::Vector4d n2 = svd.matrixV().col(3);
  const DualQuaterniond b1 = DualQuaterniond::FromCoeffs(a * n1);
  const DualQuaterniond b2 = DualQuaterniond::FromCoeffs(a * n2);

  // S(alpha b1 + beta b2) = s11 alpha^2 + 2 s12 alpha beta + s22 beta^2
  const double s11 = study_form(b1);
  const double s12 = 0.5 * study_bilinear(b1, b2);
  const double s22 = study_form(b2);
  const double disc = s12 * s12 - s11 * s22;
  const double scale = s12 * s12 + std::abs(s11 * s22);

  HalfTurnResult out;
  out.discriminant = scale > 0 ? disc / scale : 0.0;
  if (scale == 0.0) throw Error(ErrorKind::DegenerateSpan, "Study form vanishes on the half-turn pencil");
  if (disc < 0) return out;
  out.near_double_root = out.discriminant < 1e-10;

  // Roots as unit (alpha, beta) with beta >= 0, using the stable pairing
  // q = -(s12 + sign(s12) sqrt(disc)).
  const double root = std::sqrt(disc);
  const double q = -(s12 + std::copysign(root, s12));
  std::array<Eigen::Vector2d, 2> ab;
  if (q == 0.0) {
    // s12 = disc = 0 and hence s11 s22 = 0: the double root is the axis
    // where the nonzero diagonal term vanishes.
    ab[0] = ab[1] = std::abs(s11) >= std::abs(s22) ? Eigen::Vector2d(0, 1) : Eigen::Vector2d(1, 0);
  } else {
    // alpha/beta = q/s11 and s22/q; beta/alpha = s11/q and q/s22.
    ab[0] = Eigen::Vector2d(q, s11);
    ab[1] = Eigen::Vector2d(s22, q);
  }
  for (auto& v : ab) {
    v.normalize();
    if (v(1) < 0 || (v(1) == 0 && v(0) < 0)) v = -v;
  }
  // alpha/beta ascending = polar angle of (alpha, beta) descending.
  std::sort(ab.begin(), ab.end(),
            [](const auto& x, const auto& y) { return std::atan2(x(1), x(0)) > std::atan2(y(1), y(0)); });

  for (const auto& v : ab) {
    const Eigen::Vector4d x = v(0) * n1 + v(1) * n2;
    DualQuaterniond k = v(0) * b1 + v(1) * b2;
    if (std::abs(x(0)) > 1e-12 * x.norm()) {
      k = k / x(0);
    } else {
      k = canonical_sign(k / k.primal().norm());
    }
    out.halfturns.push_back(k);
  }
  return out;
}

InterpolationFamily parameter_values(const DualQuaterniond& k, const DualQuaterniond& other, const PoseProblem& prob,
                                     Ruling id, double tol) {
  InterpolationFamily fam;
  fam.halfturn = k;
  fam.other_halfturn = other;
  fam.family_id = id;
  const DualQuaterniond one = DualQuaterniond::Identity();
  for (int i = 1; i < 4; ++i) {
    const DualQuaterniond& p = prob.poses[i].rep();
    const double denom = study_bilinear(one, p);
    if (std::abs(denom) <= tol * p.norm()) {
      throw Error(ErrorKind::InfiniteParameter, "pose " + std::to_string(i + 1) + " is on a ruling through p1");
    }
    fam.params[i - 1] = study_bilinear(k, p) / denom;
  }
  return fam;
}

bool has_order_defect(const InterpolationFamily& fam) {
  const auto& t = fam.params;
  const bool increasing = t[0] < t[1] && t[1] < t[2];
  const bool decreasing = t[0] > t[1] && t[1] > t[2];
  return !(increasing || decreasing);
}

MotionPolynomial cubic_through(const InterpolationFamily& fam, const PoseProblem& prob, double lambda,
                               const CubicOptions& opts) {
  if (!std::isfinite(lambda)) throw Error(ErrorKind::InvalidArgument, "lambda must be finite");
  const auto& t = fam.params;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (std::abs(t[i] - t[j]) <= opts.node_tol * std::max(1.0, std::abs(t[i]))) {
        throw Error(ErrorKind::DegenerateFamily, "interpolation nodes coincide");
      }
    }
    if (std::abs(lambda - t[i]) <= opts.node_tol * std::max(1.0, std::abs(t[i]))) {
      throw Error(ErrorKind::RankDefect, "lambda coincides with interpolation node t" + std::to_string(i + 2));
    }
  }

  // Node forms in s = 1/u: s for p1 (s = 0), t_j s - 1 for p_j. Their
  // homogeneous values at u = lambda are 1 and t_j - lambda.
  std::array<RealPolynomial, 4> forms{RealPolynomial{0.0, 1.0}, RealPolynomial{-1.0, t[0]},
                                      RealPolynomial{-1.0, t[1]}, RealPolynomial{-1.0, t[2]}};
  const std::array<double, 4> at_lambda{1.0, t[0] - lambda, t[1] - lambda, t[2] - lambda};

  Eigen::Matrix<double, 8, 5> m;
  std::array<double, 4> column_scale{};
  for (int i = 0; i < 4; ++i) {
    double beta = 1.0;
    for (int j = 0; j < 4; ++j) {
      if (j != i) beta *= at_lambda[j];
    }
    const Eigen::Matrix<double, 8, 1> col = beta * prob.poses[i].rep().coeffs();
    column_scale[i] = col.norm();
    m.col(i) = col / column_scale[i];
  }
  const DualQuaterniond p5 = DualQuaterniond::Real(lambda) - fam.halfturn;
  m.col(4) = -p5.coeffs() / p5.norm();

  Eigen::JacobiSVD<Eigen::Matrix<double, 8, 5>> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv(3) - sv(4) < opts.rank_factor * std::numeric_limits<double>::epsilon() * sv(0)) {
    throw Error(ErrorKind::RankDefect, "fifth-point conditions do not determine the weights");
  }
  const Eigen::Matrix<double, 5, 1> v = svd.matrixV().col(4);

  DQPolynomiald cs;
  for (int i = 0; i < 4; ++i) {
    RealPolynomial basis{1.0};
    for (int j = 0; j < 4; ++j) {
      if (j != i) basis = basis * forms[j];
    }
    cs = cs + prob.poses[i].rep() * DQPolynomiald::from_real(basis * (v(i) / column_scale[i]));
  }
  return reverse_and_monicize(cs, 3, opts.motion_tol);
}

double interpolation_residual(const MotionPolynomial& c, const InterpolationFamily& fam, const PoseProblem& prob,
                              double lambda) {
  double worst = projective_distance(c(std::numeric_limits<double>::infinity()), prob.poses[0].rep());
  for (int i = 1; i < 4; ++i) {
    worst = std::max(worst, projective_distance(c(fam.params[i - 1]), prob.poses[i].rep()));
  }
  const DualQuaterniond p5 = DualQuaterniond::Real(lambda) - fam.halfturn;
  return std::max(worst, projective_distance(c(lambda), p5));
}

}  // namespace kinefac
