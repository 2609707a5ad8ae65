#include "kinefac/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "kinefac/error.hpp"

namespace kinefac::io {

using nlohmann::json;

namespace {

std::string location(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte points one past the offending character.
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw FormatError(source + ": " + location(text, at) + ": syntax error");
  }
}

void check_version(const json& j, const std::string& source) {
  if (!j.is_object()) throw FormatError(source + ": top level must be an object");
  if (!j.contains("format_version")) throw FormatError(source + ": missing format_version");
  if (!j["format_version"].is_number_integer() || j["format_version"].get<int>() != kFormatVersion) {
    throw FormatError(source + ": unsupported format_version (expected " + std::to_string(kFormatVersion) + ")");
  }
}

std::vector<double> numbers(const json& j, std::size_t n, const std::string& what) {
  if (!j.is_array()) throw FormatError(what + ": expected an array of " + std::to_string(n) + " numbers");
  if (j.size() != n) {
    throw FormatError(what + ": expected " + std::to_string(n) + " numbers, got " + std::to_string(j.size()));
  }
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) throw FormatError(what + ": non-numeric entry");
    out.push_back(v.get<double>());
  }
  return out;
}

DualQuaterniond dq_from(const json& j, const std::string& what) {
  const auto v = numbers(j, 8, what);
  return DualQuaterniond::FromCoeffs(Eigen::Map<const Eigen::Matrix<double, 8, 1>>(v.data()));
}

Vector3d vec3_from(const json& j, const std::string& what) {
  const auto v = numbers(j, 3, what);
  return {v[0], v[1], v[2]};
}

json vec_json(const Vector3d& v) { return json::array({v.x(), v.y(), v.z()}); }

double round3(double x) { return std::round(x * 1000.0) / 1000.0; }

double max_of(const std::vector<DHRecord>& dh, double DHRecord::*field) {
  double m = 0.0;
  for (const auto& r : dh) m = std::max(m, r.*field);
  return m;
}

}  // namespace

PoseFile parse_pose_file(const std::string& text, const std::string& source) {
  const json j = parse_json(text, source);
  check_version(j, source);
  PoseFile out;
  if (j.contains("study_tolerance")) {
    if (!j["study_tolerance"].is_number() || !(j["study_tolerance"].get<double>() > 0)) {
      throw FormatError(source + ": study_tolerance must be a positive number");
    }
    out.study_tol = j["study_tolerance"].get<double>();
  }
  if (!j.contains("poses") || !j["poses"].is_array()) throw FormatError(source + ": missing array \"poses\"");
  int index = 0;
  for (const auto& e : j["poses"]) {
    ++index;
    const std::string what = source + ": pose " + std::to_string(index);
    if (!e.is_object()) throw FormatError(what + ": expected an object");
    try {
      if (e.contains("study")) {
        out.poses.push_back(Pose::from_study(dq_from(e["study"], what + " study"), out.study_tol));
      } else if (e.contains("rotation") && e.contains("translation")) {
        const auto r = numbers(e["rotation"], 9, what + " rotation");
        Matrix3d m;
        m << r[0], r[1], r[2], r[3], r[4], r[5], r[6], r[7], r[8];
        out.poses.push_back(pose_from_matrix(m, vec3_from(e["translation"], what + " translation"), out.study_tol));
      } else {
        throw FormatError(what + ": needs \"study\" or \"rotation\" with \"translation\"");
      }
    } catch (const Error& err) {
      throw Error(err.kind(), what + ": " + err.what());
    }
  }
  return out;
}

PoseFile read_pose_file(const std::string& path) { return parse_pose_file(read_text(path), path); }

std::optional<ParameterSegment> MotionFile::segment() const {
  if (!params) return std::nullopt;
  const auto& t = *params;
  ParameterSegment seg;
  seg.from = std::numeric_limits<double>::infinity();
  seg.to = t[2];
  seg.direction = direction.value_or(t[0] > t[1] ? Direction::Descending : Direction::Ascending);
  return seg;
}

MotionFile parse_motion_file(const std::string& text, const std::string& source) {
  const json j = parse_json(text, source);
  check_version(j, source);
  if (!j.contains("coefficients") || !j["coefficients"].is_array() || j["coefficients"].empty()) {
    throw FormatError(source + ": missing non-empty array \"coefficients\"");
  }
  MotionFile out;
  std::vector<DualQuaterniond> cs;
  int index = 0;
  for (const auto& c : j["coefficients"]) cs.push_back(dq_from(c, source + ": coefficient " + std::to_string(index++)));
  out.poly = DQPolynomiald(cs);
  if (j.contains("parameters")) {
    const auto p = numbers(j["parameters"], 3, source + ": parameters");
    out.params = std::array<double, 3>{p[0], p[1], p[2]};
  }
  if (j.contains("direction")) {
    const auto d = j["direction"].is_string() ? j["direction"].get<std::string>() : std::string();
    if (d == "descending") {
      out.direction = Direction::Descending;
    } else if (d == "ascending") {
      out.direction = Direction::Ascending;
    } else {
      throw FormatError(source + ": direction must be \"descending\" or \"ascending\"");
    }
  }
  return out;
}

MotionFile read_motion_file(const std::string& path) { return parse_motion_file(read_text(path), path); }

json to_json(const DualQuaterniond& q) {
  json a = json::array();
  const auto c = q.coeffs();
  for (int i = 0; i < 8; ++i) a.push_back(c(i));
  return a;
}

json to_json(const PlueckerLine& l) { return {{"direction", vec_json(l.direction)}, {"moment", vec_json(l.moment)}}; }

json motion_to_json(const DQPolynomiald& p) {
  json a = json::array();
  for (int i = 0; i <= p.degree(); ++i) a.push_back(to_json(p.coeff(i)));
  return a;
}

json linkage_to_json(const Linkage6R& l, const std::vector<double>& joint_angles) {
  json axes = json::array();
  for (const auto& a : l.axes_cycle) axes.push_back(to_json(a));
  json dh = json::array();
  for (const auto& r : l.dh) dh.push_back({{"a", r.distance}, {"alpha", r.twist}, {"d", r.offset}});
  json ja = json::array();
  json jb = json::array();
  for (const auto& h : l.chain_a.joints) ja.push_back(to_json(h));
  for (const auto& h : l.chain_b.joints) jb.push_back(to_json(h));
  return {{"format_version", kFormatVersion},
          {"pair_index", {l.pair_index.first, l.pair_index.second}},
          {"linkage_type", to_string(l.type)},
          {"axes", axes},
          {"dh", dh},
          {"extent", l.extent},
          {"joint_angles", joint_angles},
          {"coupler", motion_to_json(l.coupler)},
          {"base", to_json(l.base)},
          {"chain_a", ja},
          {"chain_b", jb}};
}

LinkageRecord linkage_from_json(const json& j, const std::string& source) {
  check_version(j, source);
  LinkageRecord r;
  try {
    r.pair_index = {j.at("pair_index").at(0).get<int>(), j.at("pair_index").at(1).get<int>()};
    r.type = j.at("linkage_type").get<std::string>();
    for (const auto& a : j.at("axes")) {
      PlueckerLine l;
      l.direction = vec3_from(a.at("direction"), source + ": axis direction");
      l.moment = vec3_from(a.at("moment"), source + ": axis moment");
      r.axes.push_back(l);
    }
    for (const auto& d : j.at("dh")) r.dh.push_back({d.at("a").get<double>(), d.at("alpha").get<double>(), d.at("d").get<double>()});
    r.extent = j.at("extent").get<double>();
    r.joint_angles = j.at("joint_angles").get<std::vector<double>>();
    std::vector<DualQuaterniond> cs;
    for (const auto& c : j.at("coupler")) cs.push_back(dq_from(c, source + ": coupler"));
    r.coupler = DQPolynomiald(cs);
    r.base = dq_from(j.at("base"), source + ": base");
    for (const auto& h : j.at("chain_a")) r.chain_a.push_back(dq_from(h, source + ": chain_a"));
    for (const auto& h : j.at("chain_b")) r.chain_b.push_back(dq_from(h, source + ": chain_b"));
  } catch (const json::exception& e) {
    throw FormatError(source + ": " + e.what());
  }
  return r;
}

double closure_residual(const LinkageRecord& r, int samples) {
  Linkage6R l;
  l.chain_a.joints = r.chain_a;
  l.chain_b.joints = r.chain_b;
  return kinefac::closure_residual(l, samples);
}

json report_to_json(const SynthesisReport& rep, const SynthesisConfig& cfg) {
  json families = json::array();
  for (const auto& f : rep.families) {
    json fj = {{"ruling", f.family.family_id == Ruling::First ? "first" : "second"},
               {"halfturn", to_json(f.family.halfturn)},
               {"parameters", f.family.params},
               {"order_defect", f.order_defect}};
    if (f.usable()) {
      const auto& row = f.sweep[f.chosen];
      int feasible = 0;
      for (const auto& s : f.sweep) feasible += s.feasible ? 1 : 0;
      fj["feasible_rows"] = feasible;
      fj["accepted_fairness"] = {f.accepted_min, f.accepted_max};
      fj["chosen"] = {{"lambda", row.lambda}, {"fairness", row.fairness},
                      {"max_angle_characteristic", row.max_angle_characteristic}};
    }
    families.push_back(fj);
  }
  json facs = json::array();
  for (const auto& f : rep.factorizations) {
    json joints = json::array();
    for (const auto& lf : f.factors) joints.push_back(to_json(lf.h));
    json sig = json::array();
    for (int s : f.signature()) sig.push_back(s + 1);
    facs.push_back({{"signature", sig}, {"joints", joints}});
  }
  // Summary table at three decimals; linkage files keep full precision.
  json cands = json::array();
  for (std::size_t i = 0; i < rep.candidates.size(); ++i) {
    const auto& l = rep.candidates[i];
    cands.push_back({{"pair_index", {l.pair_index.first, l.pair_index.second}},
                     {"linkage_type", to_string(l.type)},
                     {"extent", round3(l.extent)},
                     {"max_twist", round3(max_of(l.dh, &DHRecord::twist))},
                     {"max_distance", round3(max_of(l.dh, &DHRecord::distance))},
                     {"closure_residual", l.closure_residual},
                     {"winner", static_cast<int>(i) == rep.winner}});
  }
  json out = {{"format_version", kFormatVersion},
              {"status", "ok"},
              {"config",
               {{"grid", cfg.grid_size},
                {"quartile", cfg.quartile},
                {"quad_tol", cfg.quad_tol},
                {"rank_by", to_string(cfg.rank_by)},
                {"extent_distances_only", cfg.extent_distances_only}}},
              {"base_transform", to_json(rep.problem.base_transform.rep())},
              {"halfturn_discriminant", rep.halfturns.discriminant},
              {"near_double_root", rep.halfturns.near_double_root},
              {"families", families},
              {"chosen_family", rep.chosen_family},
              {"lambda", rep.lambda},
              {"factorizations", facs},
              {"candidates", cands},
              {"winner", rep.winner},
              {"joint_angles", rep.joint_angles}};
  if (rep.coupler) out["coupler"] = motion_to_json(rep.coupler->poly());
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << kSweepHeader << '\n' << std::setprecision(17);
  for (const auto& r : rows) {
    os << r.lambda << ',';
    if (r.feasible) {
      os << r.fairness << ',' << r.max_angle_characteristic << ",1\n";
    } else {
      os << "nan,nan,0\n";
    }
  }
  return os.str();
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError(path + ": cannot write file");
  out << text;
}

}  // namespace kinefac::io
