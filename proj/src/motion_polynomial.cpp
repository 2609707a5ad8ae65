#include "kinefac/motion_polynomial.hpp"

#include <string>

#include "kinefac/pose.hpp"

namespace kinefac {

namespace {

double non_real_part(const DualQuaterniond& q) {
  return std::max(q.primal().vec().norm(), q.dual().norm());
}

}  // namespace

double norm_residual(const DQPolynomiald& c) {
  const DQPolynomiald n = c * c.conjugate();
  double worst = 0.0;
  for (const auto& q : n.coeffs()) worst = std::max(worst, non_real_part(q));
  const double scale = n.scale();
  return scale > 0 ? worst / scale : 0.0;
}

RealPolynomial norm_polynomial(const DQPolynomiald& c, double tol) {
  const DQPolynomiald n = c * c.conjugate();
  const double residual = norm_residual(c);
  if (residual > tol) {
    throw Error(ErrorKind::NotAMotionPolynomial,
                "norm polynomial is not real (largest non-real coefficient part " + format_number(residual) +
                    " relative)");
  }
  Eigen::VectorXd coeffs(n.degree() + 1);
  for (int k = 0; k <= n.degree(); ++k) coeffs(k) = n.coeff(k).primal().w();
  return RealPolynomial(std::move(coeffs));
}

MotionPolynomial MotionPolynomial::from(const DQPolynomiald& poly, double tol) {
  if (poly.degree() < 1) throw Error(ErrorKind::NotAMotionPolynomial, "degree must be positive");
  if ((poly.lcoeff() - DualQuaterniond::Identity()).norm() > tol) {
    throw Error(ErrorKind::NotAMotionPolynomial, "leading coefficient is not 1");
  }
  norm_polynomial(poly, tol);
  return MotionPolynomial(poly, tol);
}

MotionPolynomial reverse_and_monicize(const DQPolynomiald& c, int n, double tol) {
  if (c.degree() > n) throw Error(ErrorKind::InvalidArgument, "degree exceeds the requested reversal degree");
  const DualQuaterniond lead = c.coeff(0);
  const double w = lead.primal().w();
  if (lead.norm() == 0.0 || non_real_part(lead) > tol * lead.norm()) {
    throw Error(ErrorKind::NonRealLeadingCoefficient, "constant coefficient is not a real multiple of 1");
  }
  std::vector<DualQuaterniond> reversed(n + 1, DualQuaterniond::Zero());
  for (int k = 0; k <= n; ++k) reversed[n - k] = c.coeff(k) / w;
  reversed[n] = DualQuaterniond::Identity();
  return MotionPolynomial::from(DQPolynomiald(std::move(reversed)), tol);
}

QuadraticFactor minimal_polynomial(const DualQuaterniond& h, double tol) {
  const Classification cls = classify(h, tol);
  if (cls != Classification::Rotation && cls != Classification::HalfTurn) {
    throw Error(ErrorKind::NotARotation, std::string("minimal polynomial of a ") + to_string(cls) + " quaternion");
  }
  const DualQuaterniond sum = h + h.conjugate();
  const DualQuaterniond prod = h * h.conjugate();
  const double scale = h.norm();
  if (non_real_part(sum) > tol * scale || non_real_part(prod) > tol * scale * scale) {
    throw Error(ErrorKind::NonRealCoefficients, "h + conj(h) or h conj(h) is not real");
  }
  return {-sum.primal().w(), prod.primal().w()};
}

}  // namespace kinefac
