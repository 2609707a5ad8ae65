#pragma once

// Reference data of the four-pose example (three-decimal rounding).

#include <array>

#include "kinefac/motion_polynomial.hpp"
#include "kinefac/pose.hpp"

namespace kinefac::test::example {

inline constexpr double kStudyTol = 5e-3;

inline const std::array<std::array<double, 8>, 4> kPoses{{
    {1, 0, 0, 0, 0, 0, 0, 0},
    {-0.575, 0.598, 0.397, 0.393, 0.374, -0.194, 0.310, 0.529},
    {-0.312, 0.903, 0.189, 0.225, 0.939, 0.116, 0.219, 0.653},
    {-0.688, 0.719, -0.098, 0.012, 0.808, 0.678, -0.686, 0.086},
}};

inline const std::array<double, 8> kHalfTurn1{0, 0.546, 0.583, 0.602, 0, -0.115, -0.174, 0.273};
inline const std::array<double, 8> kHalfTurn2{0, 0.810, 0.252, 0.530, 0, 1.575, -3.011, -0.973};

inline const std::array<double, 3> kParamsU{0.660, 0.368, -0.034};
inline const std::array<double, 3> kParamsV{-0.294, 0.304, 0.575};

// Ascending coefficients c0, c1, c2; c3 = 1.
inline const std::array<std::array<double, 8>, 3> kCoeffsC{{
    {0.050, -0.055, 0.010, 0.002, -0.065, -0.052, 0.048, -0.008},
    {-0.104, 0.035, 0.064, 0.075, -0.063, 0.045, -0.160, -0.054},
    {-0.242, -0.321, -0.381, -0.377, -0.000, 0.177, -0.071, -0.247},
}};
inline const std::array<std::array<double, 8>, 3> kCoeffsD{{
    {0.260, -0.411, -0.208, -0.205, -0.336, 0.112, -0.264, -0.384},
    {-0.884, 0.511, 0.559, 0.533, 0.115, -0.380, 0.389, 0.525},
    {0.870, -0.374, -0.244, -0.320, -0.000, -0.363, 0.815, 0.162},
}};

inline constexpr double kFairnessC = 28.629;
inline constexpr double kCharC = 1.268;
inline constexpr double kFairnessD = 36.298;
inline constexpr double kCharD = 2.041;
inline constexpr std::array<double, 2> kQuartileC{27.609, 28.629};
inline constexpr std::array<double, 2> kQuartileD{26.917, 72.816};

inline DualQuaterniond dq(const std::array<double, 8>& c) {
  return DualQuaterniond::FromCoeffs(Eigen::Map<const Eigen::Matrix<double, 8, 1>>(c.data()));
}

inline std::array<Pose, 4> poses() {
  std::array<Pose, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = Pose::from_study(dq(kPoses[i]), kStudyTol);
  return out;
}

inline DQPolynomiald printed(const std::array<std::array<double, 8>, 3>& c) {
  return DQPolynomiald({dq(c[0]), dq(c[1]), dq(c[2]), DualQuaterniond::Identity()});
}

}  // namespace kinefac::test::example
