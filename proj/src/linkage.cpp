#include "kinefac/linkage.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kinefac/error.hpp"

namespace kinefac {

namespace {

constexpr double kParallelTol = 1e-8;
constexpr double kCoincidentTol = 1e-8;

Vector3d project_onto(const PlueckerLine& l, const Vector3d& x) {
  const Vector3d p0 = l.point();
  return p0 + (x - p0).dot(l.direction) * l.direction;
}

DQPolynomiald chain_product(const std::vector<DualQuaterniond>& joints) {
  DQPolynomiald p = DQPolynomiald::constant(DualQuaterniond::Identity());
  for (const auto& h : joints) p = p * DQPolynomiald::linear(h);
  return p;
}

std::string pair_label(PairIndex pair) {
  return "(" + std::to_string(pair.first) + "," + std::to_string(pair.second) + ")";
}

}  // namespace

const char* to_string(LinkageType t) noexcept {
  return t == LinkageType::AngleSymmetric ? "AngleSymmetric" : "DoubleBennettHybrid";
}

const std::vector<PairIndex>& valid_pairs() {
  static const std::vector<PairIndex> pairs{{1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4},
                                            {2, 6}, {3, 5}, {3, 6}, {4, 5}};
  return pairs;
}

bool is_valid_pair(PairIndex pair) {
  const auto& v = valid_pairs();
  return std::find(v.begin(), v.end(), pair) != v.end();
}

LinkageType linkage_type(PairIndex pair) {
  if (!is_valid_pair(pair)) throw Error(ErrorKind::InvalidPair, "pair " + pair_label(pair) + " is not valid");
  const bool symmetric = pair == PairIndex{1, 6} || pair == PairIndex{2, 4} || pair == PairIndex{3, 5};
  return symmetric ? LinkageType::AngleSymmetric : LinkageType::DoubleBennettHybrid;
}

CommonPerpendicular common_perpendicular(const PlueckerLine& a, const PlueckerLine& b) {
  CommonPerpendicular out;
  const Vector3d n = a.direction.cross(b.direction);
  const double cosang = a.direction.dot(b.direction);
  out.twist = std::atan2(n.norm(), cosang);
  if (n.norm() < kParallelTol) {
    out.parallel = true;
    out.distance = b.distance_to(a.point());
    return out;
  }
  const Vector3d pa = a.point();
  const Vector3d pb = b.point();
  const Vector3d w = pa - pb;
  const double d = a.direction.dot(w);
  const double e = b.direction.dot(w);
  const double denom = 1.0 - cosang * cosang;
  const double s = (cosang * e - d) / denom;
  const double u = (e - cosang * d) / denom;
  out.foot_first = pa + s * a.direction;
  out.foot_second = pb + u * b.direction;
  out.distance = (out.foot_first - out.foot_second).norm();
  return out;
}

std::vector<DHRecord> dh_parameters(const std::vector<PlueckerLine>& axes) {
  const int n = static_cast<int>(axes.size());
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "need at least two axes");
  std::vector<CommonPerpendicular> perp(n);
  for (int i = 0; i < n; ++i) {
    perp[i] = common_perpendicular(axes[i], axes[(i + 1) % n]);
    if (perp[i].parallel && perp[i].distance < kCoincidentTol) {
      throw Error(ErrorKind::CoincidentAxes,
                  "axes " + std::to_string(i + 1) + " and " + std::to_string((i + 1) % n + 1) + " coincide");
    }
  }
  // Parallel pairs: take the normal that starts where the previous
  // perpendicular ended, so that the offset on the shared axis vanishes.
  for (int i = 0; i < n; ++i) {
    if (!perp[i].parallel) continue;
    const auto& prev = perp[(i + n - 1) % n];
    const bool prev_resolved = !prev.parallel || i > 0;
    const Vector3d anchor = prev_resolved ? prev.foot_second : axes[i].point();
    perp[i].foot_first = anchor;
    perp[i].foot_second = project_onto(axes[(i + 1) % n], anchor);
  }

  std::vector<DHRecord> dh(n);
  for (int i = 0; i < n; ++i) {
    const auto& prev = perp[(i + n - 1) % n];
    dh[i].distance = perp[i].distance;
    dh[i].twist = perp[i].twist;
    dh[i].offset = (perp[i].foot_first - prev.foot_second).dot(axes[i].direction);
  }
  return dh;
}

double linkage_extent(const std::vector<DHRecord>& dh, bool distances_only) {
  double sum = 0.0;
  for (const auto& r : dh) sum += r.distance + (distances_only ? 0.0 : std::abs(r.offset));
  return sum;
}

double closure_residual(const Linkage6R& l, int samples) {
  const DQPolynomiald pa = chain_product(l.chain_a.joints);
  const DQPolynomiald pb = chain_product(l.chain_b.joints);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double theta = -M_PI / 2 + M_PI * (i + 1) / (samples + 1);
    const double t = std::tan(theta);
    worst = std::max(worst, projective_distance(pa(t), pb(t)));
  }
  return worst;
}

Linkage6R assemble_linkage(const MotionPolynomial& c, const Factorization& fa, const Factorization& fb, PairIndex pair,
                           const AssemblyOptions& opts) {
  if (!is_valid_pair(pair)) {
    throw Error(ErrorKind::InvalidPair, "pair " + pair_label(pair) + " shares a link with the base or coupler");
  }
  for (const Factorization* f : {&fa, &fb}) {
    const double r = verify_factorization(c, *f);
    if (!(r < opts.factor_tol)) {
      throw Error(ErrorKind::ClosureViolation, "factorization residual " + format_number(r));
    }
  }
  Linkage6R l;
  l.pair_index = pair;
  l.type = linkage_type(pair);
  l.fa = fa;
  l.fb = fb;
  l.chain_a = open_chain(fa);
  l.chain_b = open_chain(fb);
  l.axes_cycle = l.chain_a.axes;
  l.axes_cycle.insert(l.axes_cycle.end(), l.chain_b.axes.rbegin(), l.chain_b.axes.rend());
  l.coupler = c.poly();
  l.closure_residual = closure_residual(l, opts.closure_samples);
  if (!(l.closure_residual < opts.closure_tol)) {
    throw Error(ErrorKind::ClosureViolation, "loop closure residual " + format_number(l.closure_residual));
  }
  l.dh = dh_parameters(l.axes_cycle);
  l.distances_only = opts.distances_only;
  l.extent = linkage_extent(l.dh, l.distances_only);
  return l;
}

Linkage6R embed_linkage(const Linkage6R& l, const Pose& base) {
  const DualQuaterniond g = base.rep();
  const DualQuaterniond gi = base.inverse().rep();
  Linkage6R out = l;
  for (Factorization* f : {&out.fa, &out.fb}) {
    for (auto& lf : f->factors) lf.h = g * lf.h * gi;
  }
  for (OpenChain* ch : {&out.chain_a, &out.chain_b}) {
    for (auto& h : ch->joints) h = g * h * gi;
    for (auto& a : ch->axes) a = transform_line(g, a);
  }
  for (auto& a : out.axes_cycle) a = transform_line(g, a);
  out.base = g * l.base;
  out.dh = dh_parameters(out.axes_cycle);
  out.extent = linkage_extent(out.dh, out.distances_only);
  out.closure_residual = closure_residual(out);
  return out;
}

}  // namespace kinefac
