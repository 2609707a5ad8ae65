#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "kinefac/linkage.hpp"
#include "kinefac/measures.hpp"
#include "kinefac/synthesis.hpp"

namespace kinefac::io {

inline constexpr int kFormatVersion = 1;

/// Malformed input file; the message carries the source name and, for
/// syntax errors, line and column.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PoseFile {
  std::vector<Pose> poses;
  double study_tol = 1e-6;
};

PoseFile parse_pose_file(const std::string& text, const std::string& source = "<input>");
PoseFile read_pose_file(const std::string& path);

struct MotionFile {
  DQPolynomiald poly;
  /// t2, t3, t4 when given; defines the segment from inf to t4.
  std::optional<std::array<double, 3>> params;
  std::optional<Direction> direction;

  /// Segment from inf to t4 in the given (or implied) direction.
  std::optional<ParameterSegment> segment() const;
};

MotionFile parse_motion_file(const std::string& text, const std::string& source = "<input>");
MotionFile read_motion_file(const std::string& path);
nlohmann::json motion_to_json(const DQPolynomiald& p);

nlohmann::json to_json(const DualQuaterniond& q);
nlohmann::json to_json(const PlueckerLine& l);

/// Winner (or any candidate) in the linkage output format.
nlohmann::json linkage_to_json(const Linkage6R& l, const std::vector<double>& joint_angles);

/// What a linkage file carries back.
struct LinkageRecord {
  PairIndex pair_index{0, 0};
  std::string type;
  std::vector<PlueckerLine> axes;
  std::vector<DHRecord> dh;
  double extent = 0.0;
  std::vector<double> joint_angles;
  DQPolynomiald coupler;
  DualQuaterniond base = DualQuaterniond::Identity();
  std::vector<DualQuaterniond> chain_a;
  std::vector<DualQuaterniond> chain_b;
};

LinkageRecord linkage_from_json(const nlohmann::json& j, const std::string& source = "<input>");

/// Projective closure residual of the two stored chains at `samples` values.
double closure_residual(const LinkageRecord& r, int samples = 50);

nlohmann::json report_to_json(const SynthesisReport& rep, const SynthesisConfig& cfg);

inline constexpr const char* kSweepHeader = "lambda,fairness,max_angle_characteristic,feasible";
std::string sweep_csv(const std::vector<SweepRow>& rows);

std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace kinefac::io
