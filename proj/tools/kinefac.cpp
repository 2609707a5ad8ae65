// kinefac: synthesize 6R linkages from four poses, factor motion
// polynomials, and sample trajectories.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "kinefac/error.hpp"
#include "kinefac/factorization.hpp"
#include "kinefac/io.hpp"
#include "kinefac/synthesis.hpp"

namespace fs = std::filesystem;
using namespace kinefac;

namespace {

enum Exit { kOk = 0, kParse = 2, kInfeasible = 3, kOrderDefect = 4, kNumerical = 5 };

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::SynthesisInfeasible: return kInfeasible;
    case ErrorKind::OrderDefect: return kOrderDefect;
    case ErrorKind::ZeroInput:
    case ErrorKind::NotARotationMatrix:
    case ErrorKind::OnExceptional:
    case ErrorKind::NotAMotionPolynomial:
    case ErrorKind::NonMonicDivisor:
    case ErrorKind::OddDegree:
    case ErrorKind::ZeroPolynomial:
    case ErrorKind::DegenerateSpan:
    case ErrorKind::SpanMeetsExceptional:
    case ErrorKind::InfiniteParameter:
    case ErrorKind::InvalidArgument:
      return kParse;
    default:
      return kNumerical;
  }
}

std::array<Pose, 4> four_poses(const io::PoseFile& f) {
  if (f.poses.size() != 4) {
    throw io::FormatError("synthesis needs exactly 4 poses, got " + std::to_string(f.poses.size()));
  }
  return {f.poses[0], f.poses[1], f.poses[2], f.poses[3]};
}

void write_failure(const fs::path& dir, const char* status, const std::string& message) {
  nlohmann::json rep = {{"format_version", io::kFormatVersion},
                        {"status", status},
                        {"message", message},
                        {"candidates", nlohmann::json::array()}};
  io::write_text((dir / "report.json").string(), rep.dump(2) + "\n");
  nlohmann::json link = {{"format_version", io::kFormatVersion}, {"linkage", nullptr}};
  io::write_text((dir / "linkage.json").string(), link.dump(2) + "\n");
}

struct SynthArgs {
  std::string poses;
  std::string out_dir = ".";
  std::string rank_by = "extent";
  bool distances_only = false;
  SynthesisConfig cfg;
};

int run_synth(SynthArgs& a) {
  const auto rule = rank_by_from_string(a.rank_by);
  if (!rule) throw io::FormatError("unknown ranking rule '" + a.rank_by + "'");
  a.cfg.rank_by = *rule;
  a.cfg.extent_distances_only = a.distances_only;
  a.cfg.validate();
  const auto raw = four_poses(io::read_pose_file(a.poses));
  const fs::path dir(a.out_dir);
  fs::create_directories(dir);

  SynthesisReport rep;
  try {
    rep = synthesize(raw, a.cfg);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SynthesisInfeasible) write_failure(dir, "infeasible", e.what());
    if (e.kind() == ErrorKind::OrderDefect) write_failure(dir, "order_defect", e.what());
    throw;
  }

  io::write_text((dir / "report.json").string(), io::report_to_json(rep, a.cfg).dump(2) + "\n");
  io::write_text((dir / "linkage.json").string(),
                 io::linkage_to_json(rep.winning_linkage(), rep.joint_angles).dump(2) + "\n");
  for (const auto& f : rep.families) {
    const char* name = f.family.family_id == Ruling::First ? "sweep_first.csv" : "sweep_second.csv";
    io::write_text((dir / name).string(), io::sweep_csv(f.sweep));
  }

  std::cout << std::fixed << std::setprecision(3);
  for (std::size_t i = 0; i < rep.families.size(); ++i) {
    const auto& f = rep.families[i];
    std::cout << "family " << i + 1 << ": t = (" << f.family.params[0] << ", " << f.family.params[1] << ", "
              << f.family.params[2] << ")";
    if (f.order_defect) {
      std::cout << "  order defect\n";
      continue;
    }
    if (!f.usable()) {
      std::cout << "  no feasible lambda\n";
      continue;
    }
    const auto& row = f.sweep[f.chosen];
    std::cout << "  quartile F in [" << f.accepted_min << ", " << f.accepted_max << "]  lambda " << row.lambda
              << "  F " << row.fairness << "  m " << row.max_angle_characteristic
              << (static_cast<int>(i) == rep.chosen_family ? "  (chosen)" : "") << "\n";
  }
  for (std::size_t i = 0; i < rep.candidates.size(); ++i) {
    const auto& l = rep.candidates[i];
    std::cout << "pair (" << l.pair_index.first << "," << l.pair_index.second << ")  " << std::setw(19)
              << std::left << to_string(l.type) << std::right << "  extent " << l.extent
              << (static_cast<int>(i) == rep.winner ? "  (winner)" : "") << "\n";
  }
  return kOk;
}

int run_factor(const std::string& path) {
  const auto file = io::read_motion_file(path);
  const auto c = MotionPolynomial::from(file.poly);
  const auto facs = fac(c);
  std::cout << facs.size() << " factorizations\n" << std::setprecision(17);
  for (const auto& f : facs) {
    std::cout << "signature";
    for (int s : f.signature()) std::cout << ' ' << s + 1;
    std::cout << "  residual " << verify_factorization(c, f) << '\n';
    for (const auto& lf : f.factors) {
      std::cout << "  h";
      for (int i = 0; i < 8; ++i) std::cout << ' ' << lf.h.coeffs()(i);
      std::cout << '\n';
    }
  }
  return kOk;
}

std::vector<double> sample_parameters(const io::MotionFile& f, int n) {
  std::vector<double> ts;
  const auto seg = f.segment();
  constexpr double inf = std::numeric_limits<double>::infinity();
  for (int k = 0; k < n; ++k) {
    const double x = n == 1 ? 1.0 : static_cast<double>(k) / (n - 1);
    if (seg) {
      const double sign = seg->direction == Direction::Descending ? 1.0 : -1.0;
      ts.push_back(x == 0.0 ? sign * inf : seg->to + sign * (1.0 - x) / x);
    } else {
      ts.push_back(x == 0.0 ? -inf : x == 1.0 ? inf : std::tan(M_PI * (x - 0.5)));
    }
  }
  return ts;
}

int run_traj(const std::string& path, int samples, const std::vector<std::string>& points, const std::string& out) {
  if (samples < 1) throw io::FormatError("sample count must be positive");
  const auto file = io::read_motion_file(path);
  const auto c = MotionPolynomial::from(file.poly);
  std::vector<Vector3d> pts;
  for (const auto& s : points) {
    std::istringstream is(s);
    Vector3d p;
    char c1 = 0, c2 = 0;
    if (!(is >> p.x() >> c1 >> p.y() >> c2 >> p.z()) || c1 != ',' || c2 != ',') {
      throw io::FormatError("point '" + s + "' is not x,y,z");
    }
    pts.push_back(p);
  }
  if (pts.empty()) pts = {Vector3d::Zero(), Vector3d::UnitX(), Vector3d::UnitY(), Vector3d::UnitZ()};

  std::ostringstream os;
  os << "point,t,x,y,z\n" << std::setprecision(17);
  const auto ts = sample_parameters(file, samples);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (double t : ts) {
      const Vector3d x = transform_point(c(t), pts[i]);
      os << i << ',' << t << ',' << x.x() << ',' << x.y() << ',' << x.z() << '\n';
    }
  }
  if (out.empty() || out == "-") {
    std::cout << os.str();
  } else {
    io::write_text(out, os.str());
  }
  return kOk;
}

int run_validate(const std::string& path, bool four) {
  const auto f = io::read_pose_file(path);
  if (four) four_poses(f);
  std::cout << "ok: " << f.poses.size() << " poses\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Motion polynomial factorization and 6R linkage synthesis"};
  app.require_subcommand(1);

  SynthArgs synth;
  auto* cmd_synth = app.add_subcommand("synth", "Synthesize a 6R linkage through four poses");
  cmd_synth->add_option("poses", synth.poses, "Pose file")->required()->check(CLI::ExistingFile);
  cmd_synth->add_option("-o,--out-dir", synth.out_dir, "Output directory")->capture_default_str();
  cmd_synth->add_option("--grid", synth.cfg.grid_size, "Number of lambda grid points")->capture_default_str();
  cmd_synth->add_option("--quartile", synth.cfg.quartile, "Accepted fairness fraction")->capture_default_str();
  cmd_synth->add_option("--quad-tol", synth.cfg.quad_tol, "Absolute quadrature tolerance")->capture_default_str();
  cmd_synth->add_option("--rank-by", synth.rank_by, "Candidate ranking: extent, max-twist, max-distance")
      ->capture_default_str();
  cmd_synth->add_flag("--distances-only", synth.distances_only, "Leave offsets out of the extent");

  std::string factor_file;
  auto* cmd_factor = app.add_subcommand("factor", "List all factorizations of a motion polynomial");
  cmd_factor->add_option("motion", factor_file, "Motion polynomial file")->required()->check(CLI::ExistingFile);

  std::string traj_file, traj_out;
  int samples = 100;
  std::vector<std::string> points;
  auto* cmd_traj = app.add_subcommand("traj", "Sample point trajectories as CSV");
  cmd_traj->add_option("motion", traj_file, "Motion polynomial file")->required()->check(CLI::ExistingFile);
  cmd_traj->add_option("-n,--samples", samples, "Samples per point")->capture_default_str();
  cmd_traj->add_option("-p,--point", points, "Tracked point x,y,z (repeatable)");
  cmd_traj->add_option("-o,--output", traj_out, "Output CSV (default stdout)");

  std::string validate_file;
  bool validate_four = false;
  auto* cmd_validate = app.add_subcommand("validate", "Check a pose file");
  cmd_validate->add_option("poses", validate_file, "Pose file")->required()->check(CLI::ExistingFile);
  cmd_validate->add_flag("--synth", validate_four, "Also require exactly four poses");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (*cmd_synth) return run_synth(synth);
    if (*cmd_factor) return run_factor(factor_file);
    if (*cmd_traj) return run_traj(traj_file, samples, points, traj_out);
    if (*cmd_validate) return run_validate(validate_file, validate_four);
  } catch (const io::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumerical;
  }
  return kParse;
}
