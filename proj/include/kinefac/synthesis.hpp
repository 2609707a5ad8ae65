#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kinefac/factorization.hpp"
#include "kinefac/interpolation.hpp"
#include "kinefac/linkage.hpp"
#include "kinefac/measures.hpp"

namespace kinefac {

enum class RankBy { MinExtent, MinMaxTwist, MinMaxDistance };

const char* to_string(RankBy r) noexcept;
std::optional<RankBy> rank_by_from_string(const std::string& s);

struct SynthesisConfig {
  /// lambda = tan(theta), theta on a uniform open grid of this size in
  /// (-pi/2, pi/2).
  int grid_size = 721;
  double quartile = 0.25;
  double quad_tol = 1e-6;
  /// Grid points this close to an interpolation node are skipped.
  double node_exclusion = 1e-6;
  RankBy rank_by = RankBy::MinExtent;
  bool extent_distances_only = false;
  SpanTolerances span;
  CubicOptions cubic;
  FactorizationOptions factorization;
  AssemblyOptions assembly;

  /// InvalidArgument unless grid_size >= 3 and quartile in (0, 1].
  void validate() const;
};

/// The angular grid of lambda values.
std::vector<double> lambda_grid(int size);

struct SweepRow {
  double lambda = 0.0;
  double fairness = 0.0;
  double max_angle_characteristic = 0.0;
  bool feasible = false;
  /// Why the row is infeasible (error kind), empty when feasible.
  std::string failure;
};

struct FamilyReport {
  InterpolationFamily family;
  bool order_defect = false;
  std::vector<SweepRow> sweep;
  /// Fairness range of the accepted quartile.
  double accepted_min = 0.0;
  double accepted_max = 0.0;
  /// Index into `sweep` of the chosen row, -1 when no row is feasible.
  int chosen = -1;

  bool usable() const { return !order_defect && chosen >= 0; }
};

struct SynthesisReport {
  PoseProblem problem;
  HalfTurnResult halfturns;
  std::vector<FamilyReport> families;
  int chosen_family = -1;
  double lambda = 0.0;
  std::optional<MotionPolynomial> coupler;
  std::vector<Factorization> factorizations;
  /// Embedded in the frame of the raw poses.
  std::vector<Linkage6R> candidates;
  int winner = -1;
  std::vector<double> joint_angles;

  const FamilyReport& chosen() const { return families.at(chosen_family); }
  const Linkage6R& winning_linkage() const { return candidates.at(winner); }
};

/// Fills the lambda sweep of a family and picks its row.
void sweep_family(FamilyReport& fr, const PoseProblem& prob, const SynthesisConfig& cfg);

/// Index of the best candidate under `rule`.
int rank_candidates(const std::vector<Linkage6R>& candidates, RankBy rule);

/// Full pipeline: normalize, half-turns, parameter values, lambda sweep,
/// family choice, factorization, nine candidate linkages, ranking, embedding.
SynthesisReport synthesize(const std::array<Pose, 4>& raw, const SynthesisConfig& cfg = {});

}  // namespace kinefac
