// Copyright 2026 The qdgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite. Prints one [PASS]/[FAIL] line per criterion followed by
// its sub-checks, and exits nonzero if any criterion fails.
//
// Usage: acceptance [work_dir]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qdgame/discord.h"
#include "qdgame/experiment.h"
#include "qdgame/game.h"
#include "qdgame/optimize.h"
#include "qdgame/states.h"
#include "qdgame/witness.h"

namespace qdgame {
namespace {

namespace fs = std::filesystem;

constexpr double kHalfSqrt2 = 0.70710678118654752440;

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

class Report {
 public:
  void Check(bool ok, const std::string& what) {
    passed_ = passed_ && ok;
    lines_.push_back(std::string(ok ? "ok    " : "FAIL  ") + what);
  }
  bool passed() const { return passed_; }
  const std::vector<std::string>& lines() const { return lines_; }

 private:
  bool passed_ = true;
  std::vector<std::string> lines_;
};

double RandomAngle(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.0, kTwoPi)(rng);
}

SettingsBundle RandomAngles(std::mt19937_64& rng) {
  return SettingsBundle::InPlane(RandomAngle(rng), RandomAngle(rng), RandomAngle(rng),
                                 RandomAngle(rng));
}

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

double OptimizedPayoffMagnitude(const DensityMatrix& rho) {
  return std::abs(Optimize(Objective::ExpectedPayoff(rho, Direction::kMaximize)).value);
}

double OptimizedWitnessMagnitude(const DensityMatrix& rho) {
  const double hi = Optimize(Objective::Witness(rho, Direction::kMaximize)).value;
  const double lo = Optimize(Objective::Witness(rho, Direction::kMinimize)).value;
  return std::max(std::abs(hi), std::abs(lo));
}

// 1. u = <C>/4 for random states and angles, within 1e-10, in under 5 s.
void PayoffChshIdentity(Report& r) {
  std::mt19937_64 rng(1001);
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const DensityMatrix rho = RandomState(rng);
    const SettingsBundle s = RandomAngles(rng);
    const double u = ExpectedPayoff(rho, s, PayoffTable::Chsh(), Prior::Uniform());
    worst = std::max(worst, std::abs(u - ChshValue(rho, s) / 4));
  }
  const double t = Seconds(start);
  r.Check(worst <= 1e-10, "max |u - <C>/4| over 1000 draws = " + Fmt(worst) + " (<= 1e-10)");
  r.Check(t < 5.0, "runtime " + Fmt(t) + " s (< 5 s)");
}

// 2. Decomposition reconstructs u on non-degenerate draws.
void DecompositionIdentity(Report& r) {
  std::mt19937_64 rng(1002);
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  int used = 0, rejected = 0;
  while (used < 1000) {
    const DensityMatrix rho = RandomState(rng);
    const SettingsBundle s = RandomAngles(rng);
    const CorrelationSet c = Correlations(rho, s);
    if (std::min({std::abs(c.q_ab), std::abs(c.q_abp), std::abs(c.q_apb),
                  std::abs(c.q_apbp)}) <= 1e-4) {
      ++rejected;
      continue;
    }
    ++used;
    const double u = ExpectedPayoff(rho, s, PayoffTable::Chsh(), Prior::Uniform());
    worst = std::max(worst, std::abs(Decompose(c).reconstructed_u - u));
  }
  const double t = Seconds(start);
  r.Check(worst <= 1e-9, "max |reconstructed_u - u| over 1000 draws = " + Fmt(worst) +
                             " (<= 1e-9; " + std::to_string(rejected) + " degenerate draws skipped)");
  r.Check(t < 5.0, "runtime " + Fmt(t) + " s (< 5 s)");
}

// 3. Optimized Werner payoff scales as eta / sqrt 2 and crosses the classical
// bound at eta = 1/sqrt 2.
void TsirelsonWernerScaling(Report& r) {
  for (double eta : {0.2, 0.5, 0.9, 1.0}) {
    const double u = OptimizedPayoffMagnitude(Werner(eta));
    r.Check(std::abs(u - kHalfSqrt2 * eta) <= 1e-5,
            "eta=" + Fmt(eta) + ": |u| = " + Fmt(u) + ", |u - eta/sqrt2| = " +
                Fmt(std::abs(u - kHalfSqrt2 * eta)) + " (<= 1e-5)");
  }
  const double classical =
      BestDeterministicStrategy(PayoffTable::Chsh(), Prior::Uniform()).payoff;
  r.Check(std::abs(classical - 0.5) <= 1e-12,
          "best of 16 deterministic strategies = " + Fmt(classical) + " (= 1/2)");

  const double threshold = 1.0 / std::sqrt(2.0);
  int mismatches = 0;
  for (int k = 0; k <= 100; ++k) {
    const double eta = k / 100.0;
    if (std::abs(eta - threshold) <= 1e-4) continue;
    const bool exceeds = OptimizedPayoffMagnitude(Werner(eta)) > classical;
    if (exceeds != (eta > threshold)) ++mismatches;
  }
  r.Check(mismatches == 0, "|u| > 1/2 exactly when eta > 1/sqrt2 on a 0.01 grid (" +
                               std::to_string(mismatches) + " mismatches)");
  double lo = 0.5, hi = 0.9;
  while (hi - lo > 1e-7) {
    const double mid = (lo + hi) / 2;
    (OptimizedPayoffMagnitude(Werner(mid)) > classical ? hi : lo) = mid;
  }
  const double crossing = (lo + hi) / 2;
  r.Check(std::abs(crossing - threshold) <= 1e-4,
          "crossing at eta = " + Fmt(crossing) + ", off by " + Fmt(std::abs(crossing - threshold)) +
              " (<= 1e-4)");
}

// 4. W vanishes on product states and is nonzero on correlated states.
void WitnessSoundness(Report& r) {
  std::mt19937_64 rng(1004);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const DensityMatrix rho = Product(RandomQubitState(rng), RandomQubitState(rng));
    worst = std::max(worst, std::abs(WitnessW(rho, RandomAngles(rng))));
  }
  r.Check(worst <= 1e-12, "max |W| over 500 random product states = " + Fmt(worst) + " (<= 1e-12)");
  for (double eta : {0.1, 0.3, 0.5}) {
    const double w = OptimizedWitnessMagnitude(Werner(eta));
    r.Check(w > 1e-4, "werner(" + Fmt(eta) + "): optimized |W| = " + Fmt(w) + " (> 1e-4)");
  }
  for (auto [x, name] : {std::pair{kPi / 4, "pi/4"}, std::pair{kPi / 2, "pi/2"}}) {
    const double w = OptimizedWitnessMagnitude(DiscordedSeparable(x));
    r.Check(w > 1e-4, std::string("rho_D(") + name + "): optimized |W| = " + Fmt(w) + " (> 1e-4)");
  }
}

// 5. The appendix state defeats the witness while carrying discord.
void AppendixFailureCase(Report& r) {
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    worst = std::max(worst, OptimizedWitnessMagnitude(AppendixState(kTwoPi * k / 20)));
  }
  r.Check(worst <= 1e-6, "max optimized |W| over 20 values of x = " + Fmt(worst) + " (<= 1e-6)");
  for (auto [x, name] : {std::pair{kPi / 4, "pi/4"}, std::pair{kPi / 2, "pi/2"},
                         std::pair{3 * kPi / 4, "3pi/4"}}) {
    const double d = DiscordA(AppendixState(x)).value;
    r.Check(d > 1e-3, std::string("x=") + name + ": D_A = " + Fmt(d) + " bits (> 1e-3)");
  }
}

// 6. Discord on states with known values, and grid convergence.
void DiscordUnits(Report& r) {
  std::mt19937_64 rng(1006);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const DensityMatrix rho = Product(RandomQubitState(rng), RandomQubitState(rng));
    worst = std::max({worst, std::abs(DiscordA(rho).value), std::abs(DiscordB(rho).value)});
  }
  r.Check(worst <= 1e-8, "max discord over 20 random product states = " + Fmt(worst) + " (<= 1e-8)");
  const double singlet = DiscordA(Singlet()).value;
  r.Check(std::abs(singlet - 1.0) <= 1e-6,
          "D_A(singlet) = " + Fmt(singlet) + ", off by " + Fmt(std::abs(singlet - 1)) + " (<= 1e-6)");
  const double d0 = DiscordA(DiscordedSeparable(0)).value;
  const double dpi = DiscordA(DiscordedSeparable(kPi)).value;
  r.Check(d0 <= 1e-8, "D_A(rho_D(0)) = " + Fmt(d0) + " (<= 1e-8)");
  r.Check(dpi <= 1e-8, "D_A(rho_D(pi)) = " + Fmt(dpi) + " (<= 1e-8)");
  DiscordOptions coarse, fine;
  coarse.grid_directions = 2000;
  fine.grid_directions = 4000;
  double drift = 0.0;
  for (const DensityMatrix& rho : {Werner(0.3), DiscordedSeparable(kPi / 4),
                                   AppendixState(kPi / 3), RandomState(rng)}) {
    drift = std::max({drift, std::abs(DiscordA(rho, coarse).value - DiscordA(rho, fine).value),
                      std::abs(DiscordB(rho, coarse).value - DiscordB(rho, fine).value)});
  }
  r.Check(drift < 1e-5, "max change from 2000 to 4000 grid directions = " + Fmt(drift) +
                            " (< 1e-5)");
}

// 7. Payoff-maximizing sweeps are zero at the uncorrelated endpoints.
void ZeroCorrelationEndpoints(Report& r) {
  auto check = [&r](const SweepRecord& rec, const std::string& label) {
    r.Check(std::abs(rec.u) <= 1e-6, label + ": |u| = " + Fmt(std::abs(rec.u)) + " (<= 1e-6)");
    r.Check(std::abs(rec.w) <= 1e-6, label + ": |W| = " + Fmt(std::abs(rec.w)) + " (<= 1e-6)");
    r.Check(rec.d_a <= 1e-6, label + ": D_A = " + Fmt(rec.d_a) + " (<= 1e-6)");
  };
  SweepSpec werner = FigurePanels(1).at(0).spec;
  const SweepResult wr = RunSweep(werner);
  check(wr.records.front(), "werner eta=0");

  SweepSpec rhod = FigurePanels(1).at(1).spec;
  rhod.param_start = 0.0;
  rhod.param_end = kPi;
  rhod.param_step = kPi / 20;
  const SweepResult dr = RunSweep(rhod);
  check(dr.records.front(), "rho_D x=0");
  check(dr.records.back(), "rho_D x=pi");
}

std::string ReadFile(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 8. Two fig1 runs of the command-line tool write byte-identical CSV.
void Determinism(Report& r, const fs::path& work) {
  std::vector<fs::path> runs = {work / "fig1_run1", work / "fig1_run2"};
  for (const fs::path& dir : runs) {
    fs::remove_all(dir);
    const std::string cmd = std::string("\"") + QDGAME_CLI_PATH + "\" fig1 --out \"" +
                            dir.string() + "\" 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    r.Check(rc == 0, "qdgame fig1 --out " + dir.filename().string() + " exited " +
                         std::to_string(rc));
  }
  for (const char* name : {"fig1a.csv", "fig1b.csv", "fig1a_candidates.csv", "fig1b_candidates.csv"}) {
    const std::string a = ReadFile(runs[0] / name);
    const std::string b = ReadFile(runs[1] / name);
    r.Check(!a.empty() && a == b, std::string(name) + ": " + std::to_string(a.size()) +
                                      " bytes, " + (a == b ? "identical" : "DIFFERENT"));
  }
}

}  // namespace
}  // namespace qdgame

int main(int argc, char** argv) {
  namespace fs = std::filesystem;
  const fs::path work = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "qdgame_acceptance";
  fs::create_directories(work);

  struct Criterion {
    int id;
    const char* name;
    std::function<void(qdgame::Report&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "payoff-CHSH identity", qdgame::PayoffChshIdentity},
      {2, "decomposition identity", qdgame::DecompositionIdentity},
      {3, "Tsirelson/Werner scaling", qdgame::TsirelsonWernerScaling},
      {4, "witness soundness", qdgame::WitnessSoundness},
      {5, "appendix failure case", qdgame::AppendixFailureCase},
      {6, "discord unit checks", qdgame::DiscordUnits},
      {7, "zero-correlation endpoints", qdgame::ZeroCorrelationEndpoints},
      {8, "determinism", [&work](qdgame::Report& r) { qdgame::Determinism(r, work); }},
  };

  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const Criterion& c : criteria) {
    qdgame::Report report;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(report);
    } catch (const std::exception& e) {
      report.Check(false, std::string("exception: ") + e.what());
    }
    const double t = qdgame::Seconds(t0);
    std::cout << (report.passed() ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << " ("
              << qdgame::Fmt(t) << " s)\n";
    for (const std::string& line : report.lines()) std::cout << "         " << line << "\n";
    std::cout.flush();
    if (!report.passed()) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed in "
            << qdgame::Fmt(qdgame::Seconds(start)) << " s\n";
  return failed == 0 ? 0 : 1;
}
