#pragma once

#include <vector>

#include "kinefac/motion_polynomial.hpp"
#include "kinefac/pose.hpp"
#include "kinefac/real_polynomial.hpp"

namespace kinefac {

/// Linear factor t - h with h a rotation quaternion, tagged by its minimal
/// polynomial, a quadratic factor of the norm polynomial.
struct LinearFactor {
  DualQuaterniond h;
  QuadraticFactor tag;
  /// Position of `tag` in the sorted quadratic factor list of the
  /// factored polynomial (0-based).
  int tag_index = -1;
};

/// Ordered linear factors, leftmost (base-proximal) first.
struct Factorization {
  std::vector<LinearFactor> factors;

  /// Tag indices, leftmost first.
  std::vector<int> signature() const;
  /// Left-to-right product of the factors.
  DQPolynomiald product() const;
};

struct FactorizationOptions {
  double norm_tol = 1e-8;
  /// |primal(lcoeff(L))| must exceed this times |L|.
  double invertibility_tol = 1e-10;
  /// Relative remainder tolerance for the exact division by t - h.
  double remainder_tol = 1e-8;
};

/// All factorizations of C into linear rotation factors. With sorted norm
/// factors [M1, M2, M3] the output signatures (1-based, leftmost first) are
/// (3,2,1), (2,3,1), (3,1,2), (1,3,2), (2,1,3), (1,2,3).
std::vector<Factorization> fac(const MotionPolynomial& c, const FactorizationOptions& opts = {});

/// Max coefficient deviation between C and the product of F, relative to
/// C's largest coefficient.
double verify_factorization(const MotionPolynomial& c, const Factorization& f);

/// Open serial chain encoded by a factorization; axes are in the zero
/// position C(inf) = 1.
struct OpenChain {
  std::vector<PlueckerLine> axes;
  std::vector<DualQuaterniond> joints;
};

OpenChain open_chain(const Factorization& f);

}  // namespace kinefac
