#pragma once

#include <array>
#include <utility>
#include <vector>

#include "kinefac/factorization.hpp"
#include "kinefac/motion_polynomial.hpp"
#include "kinefac/pose.hpp"

namespace kinefac {

enum class LinkageType { AngleSymmetric, DoubleBennettHybrid };

const char* to_string(LinkageType t) noexcept;

/// 1-based index pair into the factorization list returned by fac().
using PairIndex = std::pair<int, int>;

/// The nine pairs whose chains share neither the base nor the coupler link.
const std::vector<PairIndex>& valid_pairs();
bool is_valid_pair(PairIndex pair);
LinkageType linkage_type(PairIndex pair);

struct DHRecord {
  double distance = 0.0;
  double twist = 0.0;
  double offset = 0.0;
};

/// Common perpendicular of two lines; `parallel` when the directions are
/// parallel within 1e-8, in which case the feet are left unset.
struct CommonPerpendicular {
  Vector3d foot_first = Vector3d::Zero();
  Vector3d foot_second = Vector3d::Zero();
  double distance = 0.0;
  double twist = 0.0;
  bool parallel = false;
};

CommonPerpendicular common_perpendicular(const PlueckerLine& a, const PlueckerLine& b);

/// DH table of a closed loop of six axes; record i describes axes i, i+1
/// (cyclic) with the offset measured along axis i.
std::vector<DHRecord> dh_parameters(const std::vector<PlueckerLine>& axes);

/// Sum of distances, plus |offset| unless `distances_only`.
double linkage_extent(const std::vector<DHRecord>& dh, bool distances_only = false);

struct Linkage6R {
  PairIndex pair_index{1, 4};
  LinkageType type = LinkageType::DoubleBennettHybrid;
  Factorization fa;
  Factorization fb;
  OpenChain chain_a;
  OpenChain chain_b;
  /// h1, h2, h3, g3, g2, g1.
  std::vector<PlueckerLine> axes_cycle;
  std::vector<DHRecord> dh;
  double extent = 0.0;
  bool distances_only = false;
  /// Monic coupler motion in the normalized frame.
  DQPolynomiald coupler;
  /// Coupler motion is base * coupler(t).
  DualQuaterniond base = DualQuaterniond::Identity();
  double closure_residual = 0.0;
};

struct AssemblyOptions {
  double factor_tol = 1e-8;
  double closure_tol = 1e-8;
  int closure_samples = 50;
  bool distances_only = false;
};

Linkage6R assemble_linkage(const MotionPolynomial& c, const Factorization& fa, const Factorization& fb, PairIndex pair,
                           const AssemblyOptions& opts = {});

/// Largest projective distance between the two chain products at `samples`
/// parameter values tan(theta) on a uniform open grid in (-pi/2, pi/2).
double closure_residual(const Linkage6R& l, int samples = 50);

/// Moves the whole linkage by `base`.
Linkage6R embed_linkage(const Linkage6R& l, const Pose& base);

}  // namespace kinefac
