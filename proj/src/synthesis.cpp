#include "kinefac/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kinefac/error.hpp"

namespace kinefac {

namespace {

double max_twist(const Linkage6R& l) {
  double m = 0.0;
  for (const auto& r : l.dh) m = std::max(m, r.twist);
  return m;
}

double max_distance(const Linkage6R& l) {
  double m = 0.0;
  for (const auto& r : l.dh) m = std::max(m, r.distance);
  return m;
}

SweepRow evaluate_row(const InterpolationFamily& fam, const PoseProblem& prob, double lambda,
                      const SynthesisConfig& cfg) {
  SweepRow row;
  row.lambda = lambda;
  for (double t : fam.params) {
    if (std::abs(lambda - t) < cfg.node_exclusion) {
      row.failure = "NearNode";
      return row;
    }
  }
  try {
    const MotionPolynomial c = cubic_through(fam, prob, lambda, cfg.cubic);
    row.max_angle_characteristic = max_angle_characteristic(c);
    row.fairness = fairness(c, fam, cfg.quad_tol);
    row.feasible = std::isfinite(row.fairness) && std::isfinite(row.max_angle_characteristic);
    if (!row.feasible) row.failure = "NonFinite";
  } catch (const Error& e) {
    row.failure = std::string(to_string(e.kind()));
  }
  return row;
}

}  // namespace

const char* to_string(RankBy r) noexcept {
  switch (r) {
    case RankBy::MinExtent: return "extent";
    case RankBy::MinMaxTwist: return "max-twist";
    case RankBy::MinMaxDistance: return "max-distance";
  }
  return "?";
}

std::optional<RankBy> rank_by_from_string(const std::string& s) {
  for (RankBy r : {RankBy::MinExtent, RankBy::MinMaxTwist, RankBy::MinMaxDistance}) {
    if (s == to_string(r)) return r;
  }
  return std::nullopt;
}

void SynthesisConfig::validate() const {
  if (grid_size < 3) throw Error(ErrorKind::InvalidArgument, "grid size must be at least 3");
  if (!(quartile > 0.0 && quartile <= 1.0)) throw Error(ErrorKind::InvalidArgument, "quartile must lie in (0, 1]");
  if (!(quad_tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "quadrature tolerance must be positive");
}

std::vector<double> lambda_grid(int size) {
  std::vector<double> out(size);
  for (int j = 0; j < size; ++j) out[j] = std::tan(-M_PI / 2 + M_PI * (j + 1) / (size + 1));
  return out;
}

void sweep_family(FamilyReport& fr, const PoseProblem& prob, const SynthesisConfig& cfg) {
  fr.sweep.clear();
  fr.chosen = -1;
  for (double lambda : lambda_grid(cfg.grid_size)) fr.sweep.push_back(evaluate_row(fr.family, prob, lambda, cfg));

  std::vector<double> values;
  for (const auto& r : fr.sweep) {
    if (r.feasible) values.push_back(r.fairness);
  }
  if (values.empty()) return;
  std::sort(values.begin(), values.end());
  const auto rank = static_cast<std::size_t>(std::ceil(cfg.quartile * static_cast<double>(values.size())));
  fr.accepted_min = values.front();
  fr.accepted_max = values[std::clamp<std::size_t>(rank, 1, values.size()) - 1];

  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < static_cast<int>(fr.sweep.size()); ++i) {
    const auto& r = fr.sweep[i];
    if (r.feasible && r.fairness <= fr.accepted_max && r.max_angle_characteristic < best) {
      best = r.max_angle_characteristic;
      fr.chosen = i;
    }
  }
}

int rank_candidates(const std::vector<Linkage6R>& candidates, RankBy rule) {
  if (candidates.empty()) throw Error(ErrorKind::InvalidArgument, "no candidates to rank");
  auto score = [rule](const Linkage6R& l) {
    switch (rule) {
      case RankBy::MinMaxTwist: return max_twist(l);
      case RankBy::MinMaxDistance: return max_distance(l);
      case RankBy::MinExtent: break;
    }
    return l.extent;
  };
  int best = 0;
  for (int i = 1; i < static_cast<int>(candidates.size()); ++i) {
    if (score(candidates[i]) < score(candidates[best])) best = i;
  }
  return best;
}

SynthesisReport synthesize(const std::array<Pose, 4>& raw, const SynthesisConfig& cfg) {
  cfg.validate();
  SynthesisReport rep;
  rep.problem = normalize_poses(raw, cfg.span);
  rep.halfturns = half_turns(rep.problem);
  if (rep.halfturns.halfturns.size() != 2) {
    throw Error(ErrorKind::SynthesisInfeasible, "the span of the poses contains no real half-turn");
  }

  const auto& ht = rep.halfturns.halfturns;
  for (int i = 0; i < 2; ++i) {
    FamilyReport fr;
    fr.family = parameter_values(ht[i], ht[1 - i], rep.problem, i == 0 ? Ruling::First : Ruling::Second);
    fr.order_defect = has_order_defect(fr.family);
    if (!fr.order_defect) sweep_family(fr, rep.problem, cfg);
    rep.families.push_back(std::move(fr));
  }

  const bool u0 = rep.families[0].usable();
  const bool u1 = rep.families[1].usable();
  if (!u0 && !u1) {
    if (rep.families[0].order_defect && rep.families[1].order_defect) {
      throw Error(ErrorKind::OrderDefect,
                  "both families visit the poses out of order; the input poses must be changed");
    }
    throw Error(ErrorKind::SynthesisInfeasible, "no feasible lambda in either family");
  }
  if (u0 && u1) {
    const auto& a = rep.families[0].sweep[rep.families[0].chosen];
    const auto& b = rep.families[1].sweep[rep.families[1].chosen];
    if (a.fairness <= b.fairness && a.max_angle_characteristic <= b.max_angle_characteristic) {
      rep.chosen_family = 0;
    } else if (b.fairness <= a.fairness && b.max_angle_characteristic <= a.max_angle_characteristic) {
      rep.chosen_family = 1;
    } else {
      rep.chosen_family = a.max_angle_characteristic <= b.max_angle_characteristic ? 0 : 1;
    }
  } else {
    rep.chosen_family = u0 ? 0 : 1;
  }

  const FamilyReport& fr = rep.chosen();
  rep.lambda = fr.sweep[fr.chosen].lambda;
  rep.coupler = cubic_through(fr.family, rep.problem, rep.lambda, cfg.cubic);
  rep.factorizations = fac(*rep.coupler, cfg.factorization);

  AssemblyOptions aopts = cfg.assembly;
  aopts.distances_only = cfg.extent_distances_only;
  std::vector<Linkage6R> local;
  for (const auto& pair : valid_pairs()) {
    local.push_back(assemble_linkage(*rep.coupler, rep.factorizations[pair.first - 1],
                                     rep.factorizations[pair.second - 1], pair, aopts));
  }
  rep.winner = rank_candidates(local, cfg.rank_by);
  for (const auto& l : local) rep.candidates.push_back(embed_linkage(l, rep.problem.base_transform));

  const auto seg = fairness_segment(fr.family);
  rep.joint_angles = joint_angle_vector(*rep.coupler, fr.family.params[2], seg.direction);
  return rep;
}

}  // namespace kinefac
