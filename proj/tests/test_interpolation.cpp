#include <doctest.h>

#include "interpolation_oracle.hpp"
#include "kinefac/error.hpp"
#include "kinefac/interpolation.hpp"
#include "kinefac/io.hpp"
#include "support.hpp"
#include "worked_example.hpp"

using namespace kinefac;
using namespace kinefac::test;

namespace {

double max_component_gap(const DualQuaterniond& a, const std::array<double, 8>& printed) {
  const Eigen::Matrix<double, 8, 1> pa = a.coeffs() / a.norm();
  const DualQuaterniond b = example::dq(printed);
  const Eigen::Matrix<double, 8, 1> pb = b.coeffs() / b.norm();
  return std::min((pa - pb).cwiseAbs().maxCoeff(), (pa + pb).cwiseAbs().maxCoeff());
}

}  // namespace

TEST_CASE("normalization") {
  const auto prob = normalize_poses(example::poses());
  CHECK((prob.base_transform.rep() - DualQuaterniond::Identity()).norm() < 1e-15);
  for (int i = 0; i < 4; ++i) CHECK(projective_distance(prob.poses[i].rep(), example::dq(example::kPoses[i])) < 5e-3);

  Rng rng(51);
  const Pose g = random_pose(rng);
  std::array<Pose, 4> moved;
  for (int i = 0; i < 4; ++i) moved[i] = g * example::poses()[i];
  const auto back = normalize_poses(moved);
  CHECK(projective_distance(back.base_transform.rep(), g.rep()) < 1e-12);
  for (int i = 0; i < 4; ++i) CHECK(projective_distance(back.poses[i].rep(), prob.poses[i].rep()) < 1e-12);
}

TEST_CASE("degenerate spans") {
  Rng rng(52);
  const Pose a = random_pose(rng), b = random_pose(rng);
  CHECK_THROWS_AS(normalize_poses({Pose::identity(), a, b, a}), Error);
  // All poses translations: span meets the exceptional three-space.
  const auto t = [&] { return Pose::from_study(translation(random_vector(rng))); };
  try {
    normalize_poses({Pose::identity(), t(), t(), t()});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::SpanMeetsExceptional || e.kind() == ErrorKind::DegenerateSpan));
  }
}

TEST_CASE("worked example half-turns and parameters") {
  const auto prob = normalize_poses(example::poses());
  const auto ht = half_turns(prob);
  REQUIRE(ht.halfturns.size() == 2);
  CHECK(ht.discriminant > 0);
  const auto& h = ht.halfturns;
  const double direct = std::max(max_component_gap(h[0], example::kHalfTurn1), max_component_gap(h[1], example::kHalfTurn2));
  const double swapped = std::max(max_component_gap(h[1], example::kHalfTurn1), max_component_gap(h[0], example::kHalfTurn2));
  CHECK(std::min(direct, swapped) < 1e-2);
  for (const auto& k : h) CHECK(classify(k, 1e-9) == Classification::HalfTurn);

  std::array<InterpolationFamily, 2> fams{parameter_values(h[0], h[1], prob, Ruling::First),
                                          parameter_values(h[1], h[0], prob, Ruling::Second)};
  int found_u = 0, found_v = 0;
  for (const auto& f : fams) {
    CHECK_FALSE(has_order_defect(f));
    bool u = true, v = true;
    for (int i = 0; i < 3; ++i) {
      u = u && std::abs(f.params[i] - example::kParamsU[i]) < 5e-3;
      v = v && std::abs(f.params[i] - example::kParamsV[i]) < 5e-3;
    }
    found_u += u;
    found_v += v;
    // defining relation q(t_i - k, p_i) = 0
    for (int i = 1; i < 4; ++i) {
      const DualQuaterniond lhs = DualQuaterniond::Real(f.params[i - 1]) - f.halfturn;
      CHECK(std::abs(study_bilinear(lhs, prob.poses[i].rep())) < 1e-12);
    }
  }
  CHECK(found_u == 1);
  CHECK(found_v == 1);
}

TEST_CASE("half-turns invariant under rescaling pose representatives") {
  // Scaling a Study vector changes nothing once it is a Pose; check the
  // projective invariance at the level of the raw input.
  std::array<Pose, 4> scaled;
  for (int i = 0; i < 4; ++i) {
    scaled[i] = Pose::from_study(example::dq(example::kPoses[i]) * (i % 2 ? -2.5 : 0.3), example::kStudyTol);
  }
  const auto a = half_turns(normalize_poses(example::poses())).halfturns;
  const auto b = half_turns(normalize_poses(scaled)).halfturns;
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(projective_distance(a[i], b[i]) < 1e-12);
}

TEST_CASE("no half-turns for the stored infeasible quadruple") {
  const auto pf = io::read_pose_file(KINEFAC_DATA_DIR "/infeasible.json");
  const auto prob = normalize_poses({pf.poses[0], pf.poses[1], pf.poses[2], pf.poses[3]});
  const auto ht = half_turns(prob);
  CHECK(ht.halfturns.empty());
  CHECK(ht.discriminant < 0);
}

TEST_CASE("order defect") {
  InterpolationFamily f;
  f.params = {1, 3, 2};
  CHECK(has_order_defect(f));
  f.params = {-1, 0, 1};
  CHECK_FALSE(has_order_defect(f));
  f.params = {0.660, 0.368, -0.034};
  CHECK_FALSE(has_order_defect(f));
  f.params = {1, 1, 2};
  CHECK(has_order_defect(f));
}

TEST_CASE("constructed cubics: parameters, residuals, recovery") {
  Rng rng(53);
  for (int n = 0; n < 20; ++n) {
    const auto cp = constructed_problem(rng);
    const auto prob = normalize_poses(cp.raw);
    const auto ht = half_turns(prob);
    REQUIRE(ht.halfturns.size() == 2);
    int matched = 0;
    for (int f = 0; f < 2; ++f) {
      const auto fam = parameter_values(ht.halfturns[f], ht.halfturns[1 - f], prob);
      for (int s = 0; s < 5; ++s) {
        const double lambda = uniform(rng, -5, 5);
        const auto c = cubic_through(fam, prob, lambda);
        CHECK(interpolation_residual(c, fam, prob, lambda) < 1e-8);
        for (int k = 0; k < 50; ++k) {
          const DualQuaterniond x = c(uniform(rng, -20, 20));
          CHECK(std::abs(study_form(x)) < 1e-8 * x.squaredNorm());
        }
        // parameter values do not depend on lambda
        const auto again = parameter_values(ht.halfturns[f], ht.halfturns[1 - f], prob);
        CHECK(again.params == fam.params);
      }
      double a = 0, b = 0;
      if (affine_fit_residual(cp.sigma, fam.params, &a, &b) < 1e-8) {
        ++matched;
        const auto rec = search_lambda(fam, prob, reparametrize(cp.cubic, a, b), 401);
        CHECK(rec.distance < 1e-6);
      }
    }
    CHECK(matched >= 1);
  }
}

TEST_CASE("cubic_through rejects nodes") {
  const auto prob = normalize_poses(example::poses());
  const auto ht = half_turns(prob).halfturns;
  const auto fam = parameter_values(ht[0], ht[1], prob);
  CHECK_THROWS_AS(cubic_through(fam, prob, fam.params[0]), Error);
  CHECK_THROWS_AS(cubic_through(fam, prob, std::numeric_limits<double>::infinity()), Error);
  CHECK_NOTHROW(cubic_through(fam, prob, 0.0));
}

TEST_CASE("worked example cubic against the printed coefficients") {
  const auto prob = normalize_poses(example::poses());
  const auto ht = half_turns(prob).halfturns;
  for (int f = 0; f < 2; ++f) {
    const auto fam = parameter_values(ht[f], ht[1 - f], prob);
    const bool is_u = std::abs(fam.params[0] - example::kParamsU[0]) < 5e-3;
    const auto printed = example::printed(is_u ? example::kCoeffsC : example::kCoeffsD);
    const auto rec = search_lambda(fam, prob, printed, 721);
    const auto c = cubic_through(fam, prob, rec.lambda);
    double worst = 0;
    for (int k = 0; k < 3; ++k) worst = std::max(worst, (c.poly().coeff(k) - printed.coeff(k)).coeffs().cwiseAbs().maxCoeff());
    CHECK(worst < 2e-2);
  }
}
