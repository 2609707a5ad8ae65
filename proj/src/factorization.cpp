#include "kinefac/factorization.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "kinefac/error.hpp"

namespace kinefac {

namespace {

struct Tag {
  QuadraticFactor factor;
  int index;
};

// Matches the freshly computed factors of the current norm polynomial to the
// tags inherited from the caller so that tag identity is stable across
// recursion levels. Returns the fresh factors in tag order.
std::vector<QuadraticFactor> match_tags(const std::vector<QuadraticFactor>& fresh, const std::vector<Tag>& tags) {
  std::vector<bool> used(fresh.size(), false);
  std::vector<QuadraticFactor> out;
  out.reserve(tags.size());
  for (const auto& tag : tags) {
    std::size_t best = fresh.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < fresh.size(); ++j) {
      if (used[j]) continue;
      const double d = std::hypot(fresh[j].r - tag.factor.r, fresh[j].s - tag.factor.s);
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    used[best] = true;
    out.push_back(fresh[best]);
  }
  return out;
}

std::vector<Factorization> fac_recursive(const DQPolynomiald& c, const std::vector<Tag>& tags,
                                         const FactorizationOptions& opts) {
  const int n = c.degree();
  if (n == 0) return {Factorization{}};

  const auto fresh = quadratic_factors(norm_polynomial(c, opts.norm_tol)).factors;
  if (static_cast<int>(fresh.size()) != n || static_cast<int>(tags.size()) != n) {
    throw Error(ErrorKind::FactorizationFails, "norm polynomial does not split into deg C quadratics");
  }
  const auto factors = match_tags(fresh, tags);

  std::vector<Factorization> out;
  for (int i = 0; i < n; ++i) {
    const DQPolynomiald l = qr_divide(c, DQPolynomiald::from_real(factors[i].polynomial())).remainder;
    const DualQuaterniond lead = l.coeff(1);
    if (lead.primal().norm() <= opts.invertibility_tol * std::max(l.scale(), 1e-300)) {
      throw Error(ErrorKind::FactorizationFails,
                  "leading coefficient of the linear remainder is not invertible (factor " +
                      std::to_string(tags[i].index + 1) + ")");
    }
    const DualQuaterniond h = -(lead.inverse() * l.coeff(0));

    const Division<double> div = qr_divide(c, DQPolynomiald::linear(h));
    const double rem = div.remainder.scale() / c.scale();
    if (rem > opts.remainder_tol) {
      throw Error(ErrorKind::NonZeroRemainder, "division by t - h leaves relative remainder " + format_number(rem));
    }

    std::vector<Tag> rest;
    for (int j = 0; j < n; ++j) {
      if (j != i) rest.push_back({factors[j], tags[j].index});
    }
    for (auto& f : fac_recursive(div.quotient, rest, opts)) {
      f.factors.push_back({h, tags[i].factor, tags[i].index});
      out.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace

std::vector<int> Factorization::signature() const {
  std::vector<int> s;
  for (const auto& f : factors) s.push_back(f.tag_index);
  return s;
}

DQPolynomiald Factorization::product() const {
  DQPolynomiald p = DQPolynomiald::constant(DualQuaterniond::Identity());
  for (const auto& f : factors) p = p * DQPolynomiald::linear(f.h);
  return p;
}

std::vector<Factorization> fac(const MotionPolynomial& c, const FactorizationOptions& opts) {
  // Work with C(sigma u) / sigma^n, sigma a power of two bounding the root
  // moduli, so the factored polynomial has coefficients of order one.
  const int n = c.degree();
  double bound = 1.0;
  for (int k = 0; k < n; ++k) bound = std::max(bound, std::pow(c.poly().coeff(k).norm(), 1.0 / (n - k)));
  const double sigma = std::isfinite(bound) ? std::exp2(std::ceil(std::log2(bound))) : 1.0;

  std::vector<DualQuaterniond> scaled(n + 1);
  for (int k = 0; k <= n; ++k) scaled[k] = c.poly().coeff(k) / std::pow(sigma, n - k);
  const DQPolynomiald u_poly(std::move(scaled));

  const auto sorted = quadratic_factors(norm_polynomial(u_poly, opts.norm_tol)).factors;
  std::vector<Tag> tags;
  for (std::size_t i = 0; i < sorted.size(); ++i) tags.push_back({sorted[i], static_cast<int>(i)});
  auto out = fac_recursive(u_poly, tags, opts);
  for (auto& f : out) {
    for (auto& lf : f.factors) {
      lf.h = lf.h * sigma;
      lf.tag = {lf.tag.r * sigma, lf.tag.s * sigma * sigma};
    }
  }
  return out;
}

double verify_factorization(const MotionPolynomial& c, const Factorization& f) {
  return c.poly().distance(f.product()) / c.poly().scale();
}

OpenChain open_chain(const Factorization& f) {
  OpenChain chain;
  for (const auto& lf : f.factors) {
    chain.axes.push_back(axis_of(lf.h));
    chain.joints.push_back(lf.h);
  }
  return chain;
}

}  // namespace kinefac
