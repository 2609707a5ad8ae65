#pragma once

#include <complex>
#include <initializer_list>
#include <ostream>
#include <vector>

#include <Eigen/Core>

namespace kinefac {

/// Dense real polynomial, coefficients in ascending powers.
class RealPolynomial {
 public:
  RealPolynomial() = default;
  explicit RealPolynomial(Eigen::VectorXd coeffs);
  RealPolynomial(std::initializer_list<double> ascending);

  const Eigen::VectorXd& coeffs() const { return coeffs_; }
  double coeff(int k) const { return k < coeffs_.size() ? coeffs_(k) : 0.0; }

  /// -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return degree() < 0; }
  double leading() const;

  RealPolynomial monic() const;
  RealPolynomial operator*(const RealPolynomial& o) const;
  RealPolynomial operator+(const RealPolynomial& o) const;
  RealPolynomial operator-(const RealPolynomial& o) const;
  RealPolynomial operator*(double s) const;

  double operator()(double t) const;
  std::complex<double> operator()(std::complex<double> z) const;

  /// Largest absolute coefficient.
  double scale() const;

 private:
  Eigen::VectorXd coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RealPolynomial& p);

/// Monic real quadratic t^2 + r t + s.
struct QuadraticFactor {
  double r = 0.0;
  double s = 0.0;

  double discriminant() const { return r * r - 4.0 * s; }
  RealPolynomial polynomial() const { return RealPolynomial{s, r, 1.0}; }
  double operator()(double t) const { return (t + r) * t + s; }

  friend bool operator==(const QuadraticFactor&, const QuadraticFactor&) = default;
};

std::ostream& operator<<(std::ostream& os, const QuadraticFactor& m);

/// All complex roots with multiplicity. Conjugate pairs are returned as exact
/// conjugates; roots within 1e-8 of the real axis are snapped to it.
/// Sorted by real part, then imaginary part.
std::vector<std::complex<double>> roots(const RealPolynomial& p);

struct QuadraticFactorList {
  std::vector<QuadraticFactor> factors;
  /// Two factors lie within 1e-6 of each other in (r, s).
  bool near_coincident = false;
};

/// The Factors procedure: splits a nonnegative real polynomial of even
/// degree into monic quadratics with at most one real root each. The list is
/// sorted by r, then s (r values closer than 1e-9 count as equal).
QuadraticFactorList quadratic_factors(const RealPolynomial& p);

/// Product of the factors.
RealPolynomial expand(const std::vector<QuadraticFactor>& factors);

}  // namespace kinefac
