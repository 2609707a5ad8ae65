#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <vector>

#include "kinefac/dual_quaternion.hpp"
#include "kinefac/error.hpp"
#include "kinefac/real_polynomial.hpp"

namespace kinefac {

/// Left polynomial sum c_k t^k with dual quaternion coefficients written to
/// the left of the indeterminate; t commutes with every coefficient.
/// Trailing coefficients below 1e-12 of the largest coefficient norm are
/// dropped, so floating noise never inflates the degree.
template <typename Scalar>
class DQPolynomial {
 public:
  using Coeff = DualQuaternion<Scalar>;

  DQPolynomial() = default;
  explicit DQPolynomial(std::vector<Coeff> ascending) : c_(std::move(ascending)) { trim(); }
  DQPolynomial(std::initializer_list<Coeff> ascending) : c_(ascending) { trim(); }

  static DQPolynomial constant(const Coeff& c) { return DQPolynomial({c}); }
  /// t - h
  static DQPolynomial linear(const Coeff& h) { return DQPolynomial({-h, Coeff::Identity()}); }
  /// c t^k
  static DQPolynomial monomial(const Coeff& c, int k) {
    std::vector<Coeff> v(k + 1, Coeff::Zero());
    v[k] = c;
    return DQPolynomial(std::move(v));
  }
  static DQPolynomial from_real(const RealPolynomial& p) {
    std::vector<Coeff> v;
    for (Eigen::Index k = 0; k < p.coeffs().size(); ++k) v.push_back(Coeff::Real(Scalar(p.coeffs()(k))));
    return DQPolynomial(std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Coeff>& coeffs() const { return c_; }
  Coeff coeff(int k) const { return k >= 0 && k <= degree() ? c_[k] : Coeff::Zero(); }
  Coeff lcoeff() const { return c_.empty() ? Coeff::Zero() : c_.back(); }

  /// Largest coefficient norm.
  Scalar scale() const {
    Scalar m(0);
    for (const auto& c : c_) m = std::max(m, c.norm());
    return m;
  }

  DQPolynomial conjugate() const {
    std::vector<Coeff> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(c.conjugate());
    return DQPolynomial(std::move(v));
  }

  DQPolynomial operator+(const DQPolynomial& o) const {
    std::vector<Coeff> v(std::max(c_.size(), o.c_.size()), Coeff::Zero());
    for (std::size_t k = 0; k < c_.size(); ++k) v[k] += c_[k];
    for (std::size_t k = 0; k < o.c_.size(); ++k) v[k] += o.c_[k];
    return DQPolynomial(std::move(v));
  }
  DQPolynomial operator-(const DQPolynomial& o) const { return *this + o * Scalar(-1); }
  DQPolynomial operator-() const { return *this * Scalar(-1); }

  DQPolynomial operator*(Scalar s) const {
    std::vector<Coeff> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(c * s);
    return DQPolynomial(std::move(v));
  }

  /// Cauchy product, coefficients multiplied left operand first.
  DQPolynomial operator*(const DQPolynomial& o) const {
    if (is_zero() || o.is_zero()) return DQPolynomial();
    std::vector<Coeff> v(c_.size() + o.c_.size() - 1, Coeff::Zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return DQPolynomial(std::move(v));
  }

  /// Multiplies every coefficient from the left by q.
  friend DQPolynomial operator*(const Coeff& q, const DQPolynomial& p) {
    std::vector<Coeff> v;
    v.reserve(p.c_.size());
    for (const auto& c : p.c_) v.push_back(q * c);
    return DQPolynomial(std::move(v));
  }

  /// Multiplies every coefficient from the right by q.
  friend DQPolynomial operator*(const DQPolynomial& p, const Coeff& q) {
    std::vector<Coeff> v;
    v.reserve(p.c_.size());
    for (const auto& c : p.c_) v.push_back(c * q);
    return DQPolynomial(std::move(v));
  }

  DQPolynomial derivative() const {
    std::vector<Coeff> v;
    for (std::size_t k = 1; k < c_.size(); ++k) v.push_back(c_[k] * Scalar(k));
    return DQPolynomial(std::move(v));
  }

  /// Value at real t; t = +-inf yields the leading coefficient (the
  /// projective limit).
  Coeff operator()(Scalar t) const {
    if (std::isinf(t)) return lcoeff();
    Coeff acc = Coeff::Zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  /// Largest coefficient deviation.
  Scalar distance(const DQPolynomial& o) const { return (*this - o).scale(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back().norm() == Scalar(0)) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const DQPolynomial<Scalar>& p) {
  for (int k = 0; k <= p.degree(); ++k) os << (k ? " + " : "") << p.coeff(k) << " t^" << k;
  return os;
}

using DQPolynomiald = DQPolynomial<double>;

template <typename Scalar>
DQPolynomial<Scalar> conjugate(const DQPolynomial<Scalar>& p) {
  return p.conjugate();
}

template <typename Scalar>
DualQuaternion<Scalar> evaluate(const DQPolynomial<Scalar>& p, Scalar t) {
  return p(t);
}

template <typename Scalar>
struct Division {
  DQPolynomial<Scalar> quotient;
  DQPolynomial<Scalar> remainder;
};

/// Right division A = Q B + R with deg R < deg B; B must be monic.
template <typename Scalar>
Division<Scalar> qr_divide(const DQPolynomial<Scalar>& a, const DQPolynomial<Scalar>& b) {
  using Coeff = DualQuaternion<Scalar>;
  if (b.is_zero() || (b.lcoeff() - Coeff::Identity()).norm() > Scalar(1e-9)) {
    throw Error(ErrorKind::NonMonicDivisor, "divisor must have leading coefficient 1");
  }
  const int db = b.degree();
  std::vector<Coeff> q(std::max(a.degree() - db + 1, 0), Coeff::Zero());
  std::vector<Coeff> r = a.coeffs();
  for (int dr = static_cast<int>(r.size()) - 1; dr >= db; --dr) {
    const Coeff l = r[dr];
    const int shift = dr - db;
    q[shift] += l;
    for (int j = 0; j < db; ++j) r[shift + j] -= l * b.coeff(j);
    r.pop_back();
  }
  return {DQPolynomial<Scalar>(std::move(q)), DQPolynomial<Scalar>(std::move(r))};
}

// ---------------------------------------------------------------------------
// Motion polynomials (double precision).

/// Largest non-real part among the coefficients of C conj(C), relative to
/// the largest coefficient of the product.
double norm_residual(const DQPolynomiald& c);

/// C conj(C) as a real polynomial (primal scalar parts). Throws
/// NotAMotionPolynomial when the non-real residue exceeds `tol`.
RealPolynomial norm_polynomial(const DQPolynomiald& c, double tol = 1e-8);

/// Monic left polynomial of positive degree with real norm polynomial.
class MotionPolynomial {
 public:
  /// Validates the invariants with relative tolerance `tol`.
  static MotionPolynomial from(const DQPolynomiald& poly, double tol = 1e-8);

  const DQPolynomiald& poly() const { return poly_; }
  int degree() const { return poly_.degree(); }
  DualQuaterniond operator()(double t) const { return poly_(t); }
  RealPolynomial norm() const { return norm_polynomial(poly_, tol_); }

 private:
  MotionPolynomial(DQPolynomiald p, double tol) : poly_(std::move(p)), tol_(tol) {}
  DQPolynomiald poly_;
  double tol_;
};

/// u^n C(1/u) for the s-polynomial C, divided by its (real) leading
/// coefficient. Throws NonRealLeadingCoefficient when C(0) is not a real
/// multiple of 1 within `tol`.
MotionPolynomial reverse_and_monicize(const DQPolynomiald& c, int n, double tol = 1e-8);

/// t^2 + r t + s with M(h) = 0; r = -(h + conj h), s = h conj h.
QuadraticFactor minimal_polynomial(const DualQuaterniond& h, double tol = 1e-8);

}  // namespace kinefac
