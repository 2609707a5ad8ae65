// Acceptance checks. Usage: acceptance [all | 1 | 1q | 2 | 3 | 4 | 5 | 6 | 7]
// Prints one PASS/FAIL line per selected criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

#include "interpolation_oracle.hpp"
#include "kinefac/error.hpp"
#include "kinefac/factorization.hpp"
#include "kinefac/linkage.hpp"
#include "kinefac/measures.hpp"
#include "kinefac/synthesis.hpp"
#include "support.hpp"
#include "worked_example.hpp"

using namespace kinefac;
using namespace kinefac::test;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

double component_gap(const DualQuaterniond& a, const std::array<double, 8>& printed) {
  const Eigen::Matrix<double, 8, 1> pa = a.coeffs() / a.norm();
  const DualQuaterniond b = example::dq(printed);
  const Eigen::Matrix<double, 8, 1> pb = b.coeffs() / b.norm();
  return std::min((pa - pb).cwiseAbs().maxCoeff(), (pa + pb).cwiseAbs().maxCoeff());
}

bool matches(const std::array<double, 3>& t, const std::array<double, 3>& want, double tol) {
  for (int i = 0; i < 3; ++i) {
    if (std::abs(t[i] - want[i]) > tol) return false;
  }
  return true;
}

struct ExampleRun {
  SynthesisReport report;
  double seconds = 0.0;
};

const ExampleRun& example_run() {
  static const ExampleRun run = [] {
    ExampleRun r;
    const auto start = std::chrono::steady_clock::now();
    r.report = synthesize(example::poses());
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }();
  return run;
}

const FamilyReport* family_with(const SynthesisReport& rep, const std::array<double, 3>& params) {
  for (const auto& f : rep.families) {
    if (matches(f.family.params, params, 5e-3)) return &f;
  }
  return nullptr;
}

Outcome criterion1() {
  Outcome o;
  const auto& run = example_run();
  const auto& rep = run.report;
  o.detail << std::fixed;
  o.require(run.seconds < 10.0, "runtime below 10 s");
  o.detail << std::setprecision(3) << " time " << run.seconds << "s";

  const auto& h = rep.halfturns.halfturns;
  o.require(h.size() == 2, "two half-turns");
  if (h.size() == 2) {
    const double gap = std::min(std::max(component_gap(h[0], example::kHalfTurn1), component_gap(h[1], example::kHalfTurn2)),
                                std::max(component_gap(h[1], example::kHalfTurn1), component_gap(h[0], example::kHalfTurn2)));
    o.detail << std::setprecision(4) << "; half-turn gap " << gap;
    o.require(gap < 1e-2, "half-turns within 1e-2");
  }
  const FamilyReport* fu = family_with(rep, example::kParamsU);
  const FamilyReport* fv = family_with(rep, example::kParamsV);
  o.require(fu && fv, "parameter values within 5e-3");
  if (!fu || !fv) return o;
  o.detail << std::setprecision(3) << "; u = (" << fu->family.params[0] << ", " << fu->family.params[1] << ", "
           << fu->family.params[2] << "), v = (" << fv->family.params[0] << ", " << fv->family.params[1] << ", "
           << fv->family.params[2] << ")";
  o.require(!fu->order_defect && !fv->order_defect, "no order defect");
  o.require(fu->usable() && fv->usable(), "feasible rows in both families");
  if (!fu->usable() || !fv->usable()) return o;
  o.require(&rep.chosen() == fu, "family C selected");

  const auto& rc = fu->sweep[fu->chosen];
  const auto& rd = fv->sweep[fv->chosen];
  o.detail << "; C: F " << rc.fairness << " m " << rc.max_angle_characteristic << "; D: F " << rd.fairness << " m "
           << rd.max_angle_characteristic;
  o.require(rel(rc.fairness, example::kFairnessC) < 0.05, "selected F within 5% of 28.629");
  o.require(rel(rc.max_angle_characteristic, example::kCharC) < 0.05, "selected m within 5% of 1.268");
  o.require(rel(rd.fairness, example::kFairnessD) < 0.05, "rejected F within 5% of 36.298");
  o.require(rel(rd.max_angle_characteristic, example::kCharD) < 0.05, "rejected m within 5% of 2.041");
  o.require(rep.candidates.size() == 9, "nine candidates");
  return o;
}

Outcome criterion1_quartile() {
  Outcome o;
  const auto& rep = example_run().report;
  const FamilyReport* fu = family_with(rep, example::kParamsU);
  const FamilyReport* fv = family_with(rep, example::kParamsV);
  o.require(fu && fv && fu->usable() && fv->usable(), "both families usable");
  if (!o.pass) return o;
  o.detail << std::fixed << std::setprecision(3) << " C [" << fu->accepted_min << ", " << fu->accepted_max << "] vs ["
           << example::kQuartileC[0] << ", " << example::kQuartileC[1] << "]; D [" << fv->accepted_min << ", "
           << fv->accepted_max << "] vs [" << example::kQuartileD[0] << ", " << example::kQuartileD[1] << "]";
  o.require(rel(fu->accepted_min, example::kQuartileC[0]) < 0.10, "C lower bound within 10%");
  o.require(rel(fu->accepted_max, example::kQuartileC[1]) < 0.10, "C upper bound within 10%");
  o.require(rel(fv->accepted_min, example::kQuartileD[0]) < 0.10, "D lower bound within 10%");
  o.require(rel(fv->accepted_max, example::kQuartileD[1]) < 0.10, "D upper bound within 10%");
  return o;
}

Outcome criterion2() {
  Outcome o;
  Rng rng(2002);
  double worst = 0.0;
  int bad_count = 0, bad_sig = 0;
  for (int n = 0; n < 100; ++n) {
    const MotionPolynomial c = random_cubic(rng);
    const auto fs = fac(c);
    if (fs.size() != 6) {
      ++bad_count;
      continue;
    }
    std::set<std::vector<int>> sigs;
    for (const auto& f : fs) {
      worst = std::max(worst, verify_factorization(c, f));
      sigs.insert(f.signature());
    }
    if (sigs.size() != 6) ++bad_sig;
  }
  o.detail << " 100 cubics; max residual " << std::scientific << std::setprecision(2) << worst;
  o.require(bad_count == 0, "exactly 6 factorizations each");
  o.require(bad_sig == 0, "signatures are all 6 permutations");
  o.require(worst < 1e-9, "reconstruction residual < 1e-9");
  return o;
}

struct Criterion3Data {
  std::vector<MotionPolynomial> cubics;
};

Outcome criterion3(Criterion3Data* keep = nullptr) {
  Outcome o;
  Rng rng(3003);
  int missing_family = 0, unmatched = 0;
  double worst_residual = 0.0, worst_recovery = 0.0;
  for (int n = 0; n < 100; ++n) {
    const auto cp = constructed_problem(rng);
    const auto prob = normalize_poses(cp.raw);
    const auto ht = half_turns(prob);
    if (ht.halfturns.size() != 2) {
      ++missing_family;
      continue;
    }
    bool recovered = false;
    for (int f = 0; f < 2; ++f) {
      const auto fam = parameter_values(ht.halfturns[f], ht.halfturns[1 - f], prob);
      const double lambda = uniform(rng, -4, 4);
      const auto c = cubic_through(fam, prob, lambda);
      worst_residual = std::max(worst_residual, interpolation_residual(c, fam, prob, lambda));
      if (keep) keep->cubics.push_back(c);
      double a = 0, b = 0;
      if (!recovered && affine_fit_residual(cp.sigma, fam.params, &a, &b) < 1e-8) {
        const auto rec = search_lambda(fam, prob, reparametrize(cp.cubic, a, b));
        worst_recovery = std::max(worst_recovery, rec.distance);
        recovered = rec.distance < 1e-6;
        if (recovered) {
          const auto again = cubic_through(fam, prob, rec.lambda);
          worst_residual = std::max(worst_residual, interpolation_residual(again, fam, prob, rec.lambda));
          if (keep) keep->cubics.push_back(again);
        }
      }
    }
    if (!recovered) ++unmatched;
  }
  o.detail << " 100 quadruples; max node residual " << std::scientific << std::setprecision(2) << worst_residual
           << ", max recovery distance " << worst_recovery;
  o.require(missing_family == 0, "both families found");
  o.require(worst_residual < 1e-8, "node residuals < 1e-8");
  o.require(unmatched == 0, "constructed motion recovered < 1e-6");
  return o;
}

Outcome criterion4() {
  Outcome o;
  int linkages = 0, rejected = 0, failures = 0, unfactored = 0, refused = 0;
  double worst = 0.0;
  // Interpolants the factorizer or assembler refuses emit no linkage; random
  // generic cubics must factor and assemble every valid pair.
  auto check_all = [&](const MotionPolynomial& c, bool must_factor) {
    std::vector<Factorization> fs;
    try {
      fs = fac(c);
    } catch (const Error&) {
      ++(must_factor ? failures : unfactored);
      return;
    }
    if (fs.size() != 6) {
      ++failures;
      return;
    }
    for (int i = 1; i <= 6; ++i) {
      for (int j = i + 1; j <= 6; ++j) {
        try {
          const Linkage6R l = assemble_linkage(c, fs[i - 1], fs[j - 1], {i, j});
          if (!is_valid_pair({i, j})) ++failures;
          worst = std::max(worst, closure_residual(l, 50));
          ++linkages;
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::InvalidPair && !is_valid_pair({i, j})) {
            ++rejected;
          } else if (e.kind() == ErrorKind::ClosureViolation && !must_factor) {
            ++refused;
          } else {
            ++failures;
          }
        }
      }
    }
  };
  for (const auto& l : example_run().report.candidates) {
    worst = std::max(worst, closure_residual(l, 50));
    ++linkages;
  }
  Rng rng(2002);
  for (int n = 0; n < 100; ++n) check_all(random_cubic(rng), true);
  Criterion3Data d;
  criterion3(&d);
  for (const auto& c : d.cubics) check_all(c, false);
  o.detail << " " << linkages << " linkages, max closure residual " << std::scientific << std::setprecision(2) << worst
           << ", " << rejected << " invalid pairs rejected, " << unfactored << " of " << d.cubics.size()
           << " interpolants not factorable, " << refused << " interpolant pairs refused by the closure check";
  o.require(failures == 0, "every valid pair assembles and every invalid pair is rejected");
  o.require(worst < 1e-8, "closure residual < 1e-8");
  return o;
}

Outcome criterion5() {
  Outcome o;
  Rng rng(5005);
  double worst = 0.0;
  int nonmonotone = 0;
  double limit_gap = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const DualQuaterniond h = random_rotation(rng);
    const double t = uniform(rng, -20, 20);
    const QuadraticFactor m = minimal_polynomial(h);
    worst = std::max(worst, std::abs(rotation_angle(m, t) - angle_oracle(h, t)));
    if (n % 10 == 0) {
      double prev = 2 * M_PI;
      for (int k = 0; k <= 400; ++k) {
        const double phi = rotation_angle(m, -1e3 + 5.0 * k);
        if (!(phi < prev) || !(phi > 0)) ++nonmonotone;
        prev = phi;
      }
      limit_gap = std::max(limit_gap, std::abs(rotation_angle(m, std::numeric_limits<double>::infinity())));
      limit_gap = std::max(limit_gap, std::abs(rotation_angle(m, -1e9 * std::max(1.0, std::sqrt(m.s))) - 2 * M_PI));
    }
  }
  o.detail << " 1000 trials; max angle error " << std::scientific << std::setprecision(2) << worst << ", limit gap "
           << limit_gap;
  o.require(worst < 1e-9, "angle matches oracle within 1e-9");
  o.require(nonmonotone == 0, "strictly decreasing on grids");
  o.require(limit_gap < 1e-6, "limits 0 and 2 pi within 1e-6");
  return o;
}

Outcome criterion6() {
  Outcome o;
  Rng rng(6006);
  double worst = 0.0;
  int bad_degree = 0;
  for (int n = 0; n < 1000; ++n) {
    const int da = std::uniform_int_distribution<int>(0, 8)(rng);
    const int db = std::uniform_int_distribution<int>(1, 4)(rng);
    const DQPolynomiald a = random_poly(rng, da);
    const DQPolynomiald b =
        (db > 0 ? random_poly(rng, db - 1) : DQPolynomiald()) + DQPolynomiald::monomial(DualQuaterniond::Identity(), db);
    const auto d = qr_divide(a, b);
    worst = std::max(worst, (a - (d.quotient * b + d.remainder)).scale() / a.scale());
    if (d.remainder.degree() >= b.degree()) ++bad_degree;
  }
  o.detail << " 1000 trials; max relative residual " << std::scientific << std::setprecision(2) << worst;
  o.require(worst < 1e-11, "A = QB + R within 1e-11");
  o.require(bad_degree == 0, "deg R < deg B");
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / ("kinefac-acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::string cmd = std::string("\"") + KINEFAC_CLI_PATH + "\" synth \"" KINEFAC_DATA_DIR "/infeasible.json\" -o \"" +
                          dir.string() + "\" > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  o.detail << " exit code " << code;
  o.require(code == 3, "exit code 3");
  std::ifstream in(dir / "report.json");
  o.require(static_cast<bool>(in), "report written");
  if (in) {
    const auto j = nlohmann::json::parse(in);
    o.detail << ", status " << j.value("status", "?") << ", " << j["candidates"].size() << " candidates";
    o.require(j["candidates"].is_array() && j["candidates"].empty(), "empty candidate list");
  }
  std::filesystem::remove_all(dir);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string which = argc > 1 ? argv[1] : "all";
  const std::vector<std::pair<std::string, std::pair<std::string, std::function<Outcome()>>>> all{
      {"1", {"criterion 1 (worked example reproduction)", criterion1}},
      {"1q", {"criterion 1 (quartile ranges, sanity)", criterion1_quartile}},
      {"2", {"criterion 2 (factorization round trip)", criterion2}},
      {"3", {"criterion 3 (interpolation oracle)", [] { return criterion3(); }}},
      {"4", {"criterion 4 (loop closure)", criterion4}},
      {"5", {"criterion 5 (rotation angle calibration)", criterion5}},
      {"6", {"criterion 6 (right division contract)", criterion6}},
      {"7", {"criterion 7 (infeasibility path)", criterion7}},
  };
  bool ok = true;
  bool ran = false;
  for (const auto& [key, entry] : all) {
    if (which != "all" && which != key) continue;
    ran = true;
    Outcome o;
    try {
      o = entry.second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << entry.first << ":" << o.detail.str() << std::endl;
    ok = ok && o.pass;
  }
  if (!ran) {
    std::cerr << "unknown criterion '" << which << "'\n";
    return 2;
  }
  return ok ? 0 : 1;
}
