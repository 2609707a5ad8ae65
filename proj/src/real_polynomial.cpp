#include "kinefac/real_polynomial.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "kinefac/error.hpp"

namespace kinefac {

namespace {

constexpr double kRealSnap = 1e-8;
constexpr double kDoubleRootPairing = 1e-6;
constexpr double kNearCoincident = 1e-6;
constexpr double kSortTieTolerance = 1e-9;

std::complex<double> polish(const RealPolynomial& p, std::complex<double> z) {
  const auto& c = p.coeffs();
  const int n = p.degree();
  for (int iter = 0; iter < 4; ++iter) {
    std::complex<double> f = c(n);
    std::complex<double> df = 0.0;
    for (int k = n - 1; k >= 0; --k) {
      df = df * z + f;
      f = f * z + c(k);
    }
    if (df == 0.0) break;
    const std::complex<double> next = z - f / df;
    if (std::abs(p(next)) >= std::abs(f)) break;
    z = next;
  }
  return z;
}

}  // namespace

RealPolynomial::RealPolynomial(Eigen::VectorXd coeffs) : coeffs_(std::move(coeffs)) {}

RealPolynomial::RealPolynomial(std::initializer_list<double> ascending)
    : coeffs_(static_cast<Eigen::Index>(ascending.size())) {
  Eigen::Index i = 0;
  for (double c : ascending) coeffs_(i++) = c;
}

int RealPolynomial::degree() const {
  for (Eigen::Index k = coeffs_.size() - 1; k >= 0; --k) {
    if (coeffs_(k) != 0.0) return static_cast<int>(k);
  }
  return -1;
}

double RealPolynomial::leading() const {
  const int d = degree();
  return d < 0 ? 0.0 : coeffs_(d);
}

RealPolynomial RealPolynomial::monic() const {
  const int d = degree();
  if (d < 0) throw Error(ErrorKind::ZeroPolynomial, "cannot normalize the zero polynomial");
  return RealPolynomial(Eigen::VectorXd(coeffs_.head(d + 1) / coeffs_(d)));
}

RealPolynomial RealPolynomial::operator*(const RealPolynomial& o) const {
  if (coeffs_.size() == 0 || o.coeffs_.size() == 0) return RealPolynomial();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(coeffs_.size() + o.coeffs_.size() - 1);
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i) {
    for (Eigen::Index j = 0; j < o.coeffs_.size(); ++j) out(i + j) += coeffs_(i) * o.coeffs_(j);
  }
  return RealPolynomial(std::move(out));
}

RealPolynomial RealPolynomial::operator+(const RealPolynomial& o) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(std::max(coeffs_.size(), o.coeffs_.size()));
  out.head(coeffs_.size()) += coeffs_;
  out.head(o.coeffs_.size()) += o.coeffs_;
  return RealPolynomial(std::move(out));
}

RealPolynomial RealPolynomial::operator-(const RealPolynomial& o) const { return *this + o * -1.0; }

RealPolynomial RealPolynomial::operator*(double s) const { return RealPolynomial(Eigen::VectorXd(coeffs_ * s)); }

double RealPolynomial::operator()(double t) const {
  double acc = 0.0;
  for (Eigen::Index k = coeffs_.size() - 1; k >= 0; --k) acc = acc * t + coeffs_(k);
  return acc;
}

std::complex<double> RealPolynomial::operator()(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (Eigen::Index k = coeffs_.size() - 1; k >= 0; --k) acc = acc * z + coeffs_(k);
  return acc;
}

double RealPolynomial::scale() const { return coeffs_.size() ? coeffs_.cwiseAbs().maxCoeff() : 0.0; }

std::ostream& operator<<(std::ostream& os, const RealPolynomial& p) {
  os << '[';
  for (Eigen::Index k = 0; k < p.coeffs().size(); ++k) os << (k ? ", " : "") << p.coeffs()(k);
  return os << ']';
}

std::ostream& operator<<(std::ostream& os, const QuadraticFactor& m) {
  return os << "t^2 + (" << m.r << ")t + (" << m.s << ')';
}

std::vector<std::complex<double>> roots(const RealPolynomial& p) {
  const int n = p.degree();
  if (n < 0) throw Error(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<std::complex<double>> out;
  if (n == 0) return out;

  // Exact zero roots first; the companion matrix only sees the rest.
  int zeros = 0;
  while (p.coeffs()(zeros) == 0.0) ++zeros;
  const int m = n - zeros;
  out.assign(zeros, 0.0);

  if (m > 0) {
    const Eigen::VectorXd c = p.coeffs().segment(zeros, m + 1) / p.coeffs()(n);
    const RealPolynomial reduced(c);
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(m, m);
    companion.bottomLeftCorner(m - 1, m - 1).setIdentity();
    companion.col(m - 1) = -c.head(m);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    if (solver.info() != Eigen::Success) {
      throw Error(ErrorKind::InvalidArgument, "companion eigenvalue iteration did not converge");
    }

    std::vector<std::complex<double>> upper;
    std::vector<std::complex<double>> lower;
    for (Eigen::Index i = 0; i < m; ++i) {
      std::complex<double> z = polish(reduced, solver.eigenvalues()(i));
      if (std::abs(z.imag()) <= kRealSnap * std::max(1.0, std::abs(z))) {
        out.emplace_back(z.real(), 0.0);
      } else if (z.imag() > 0) {
        upper.push_back(z);
      } else {
        lower.push_back(z);
      }
    }
    // Pair every upper root with the mirror image of its nearest lower root.
    while (!upper.empty() && !lower.empty()) {
      const std::complex<double> z = upper.back();
      upper.pop_back();
      auto it = std::min_element(lower.begin(), lower.end(), [&](auto a, auto b) {
        return std::abs(z - std::conj(a)) < std::abs(z - std::conj(b));
      });
      const std::complex<double> avg = 0.5 * (z + std::conj(*it));
      lower.erase(it);
      out.push_back(avg);
      out.push_back(std::conj(avg));
    }
    for (auto z : upper) out.emplace_back(z.real(), 0.0);
    for (auto z : lower) out.emplace_back(z.real(), 0.0);
  }

  std::sort(out.begin(), out.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

QuadraticFactorList quadratic_factors(const RealPolynomial& p) {
  const int n = p.degree();
  if (n < 0) throw Error(ErrorKind::ZeroPolynomial, "quadratic factors of the zero polynomial");
  if (n % 2 != 0) throw Error(ErrorKind::OddDegree, "polynomial of odd degree " + std::to_string(n));
  const RealPolynomial monic = p.monic();

  QuadraticFactorList out;
  std::vector<double> reals;
  for (const auto& z : roots(monic)) {
    if (z.imag() > 0) {
      out.factors.push_back({-2.0 * z.real(), std::norm(z)});
    } else if (z.imag() == 0.0) {
      reals.push_back(z.real());
    }
  }
  std::sort(reals.begin(), reals.end());
  for (std::size_t i = 0; i < reals.size(); i += 2) {
    if (i + 1 >= reals.size() ||
        std::abs(reals[i + 1] - reals[i]) > kDoubleRootPairing * std::max(1.0, std::abs(reals[i]))) {
      throw Error(ErrorKind::NegativePolynomial,
                  "real root " + format_number(reals[i]) + " has odd multiplicity");
    }
    const double mid = 0.5 * (reals[i] + reals[i + 1]);
    out.factors.push_back({-2.0 * mid, mid * mid});
  }

  // Sort by r, treating nearly equal r as ties broken by s.
  auto& f = out.factors;
  std::sort(f.begin(), f.end(), [](const auto& a, const auto& b) { return a.r < b.r; });
  for (std::size_t begin = 0; begin < f.size();) {
    std::size_t end = begin + 1;
    while (end < f.size() && f[end].r - f[end - 1].r <= kSortTieTolerance * (1.0 + std::abs(f[end].r))) ++end;
    std::sort(f.begin() + begin, f.begin() + end, [](const auto& a, const auto& b) { return a.s < b.s; });
    begin = end;
  }

  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (std::max(std::abs(f[i].r - f[j].r), std::abs(f[i].s - f[j].s)) < kNearCoincident) {
        out.near_coincident = true;
      }
    }
  }
  return out;
}

RealPolynomial expand(const std::vector<QuadraticFactor>& factors) {
  RealPolynomial out{1.0};
  for (const auto& m : factors) out = out * m.polynomial();
  return out;
}

}  // namespace kinefac
