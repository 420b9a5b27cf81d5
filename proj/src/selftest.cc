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

#include <cmath>
#include <cstdio>
#include <random>

#include "qdgame/experiment.h"

namespace qdgame {
namespace {

std::string Fmt(const char* fmt, double v) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

SettingsBundle RandomSettings(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  return SettingsBundle::InPlane(angle(rng), angle(rng), angle(rng), angle(rng));
}

}  // namespace

std::vector<SelfTestCheck> RunSelfTest() {
  std::vector<SelfTestCheck> checks;
  std::mt19937_64 rng(20240917);

  {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const BlochVector n{std::acos(std::uniform_real_distribution<>(-1, 1)(rng)),
                          std::uniform_real_distribution<>(0, kTwoPi)(rng)};
      for (Outcome s : kOutcomes) {
        const ComplexMatrix p = Projector(s, n);
        worst = std::max(worst, MaxAbsDiff(p * p, p));
      }
      worst = std::max(worst, MaxAbsDiff(Projector(Outcome::kUp, n) +
                                             Projector(Outcome::kDown, n),
                                         ComplexMatrix::Identity(2)));
    }
    checks.push_back({"projectors idempotent and complete", worst <= 1e-12,
                      Fmt("max defect %.3g", worst)});
  }
  {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      worst = std::max(worst,
                       PayoffChshLinkCheck(RandomState(rng), RandomSettings(rng)).defect);
    }
    checks.push_back({"u = <C>/4 under CHSH presets", worst <= 1e-10,
                      Fmt("max |u - <C>/4| %.3g", worst)});
  }
  {
    double worst = 0.0;
    int used = 0;
    while (used < 200) {
      const DensityMatrix rho = RandomState(rng);
      const SettingsBundle s = RandomSettings(rng);
      const CorrelationSet c = Correlations(rho, s);
      if (std::min({std::abs(c.q_ab), std::abs(c.q_abp), std::abs(c.q_apb),
                    std::abs(c.q_apbp)}) <= 1e-4) {
        continue;
      }
      ++used;
      const double u = ExpectedPayoff(rho, s, PayoffTable::Chsh(), Prior::Uniform());
      worst = std::max(worst, std::abs(Decompose(c).reconstructed_u - u));
    }
    checks.push_back({"witness decomposition reproduces u", worst <= 1e-9,
                      Fmt("max defect %.3g", worst)});
  }
  {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const DensityMatrix rho = Product(RandomQubitState(rng), RandomQubitState(rng));
      worst = std::max(worst, std::abs(WitnessW(rho, RandomSettings(rng))));
    }
    checks.push_back({"W = 0 on product states", worst <= 1e-12,
                      Fmt("max |W| %.3g", worst)});
  }
  {
    const double d = DiscordA(Singlet()).value;
    checks.push_back({"D_A(singlet) = 1 bit", std::abs(d - 1.0) <= 1e-6,
                      Fmt("D_A = %.12g", d)});
  }
  {
    const double target = std::sqrt(2.0) / 2.0;
    const double u = Optimize(Objective::ExpectedPayoff(Singlet(), Direction::kMaximize)).value;
    checks.push_back({"optimized singlet payoff reaches sqrt(2)/2",
                      std::abs(std::abs(u) - target) <= 1e-6, Fmt("u = %.12g", u)});
  }
  {
    const double classical =
        BestDeterministicStrategy(PayoffTable::Chsh(), Prior::Uniform()).payoff;
    checks.push_back({"deterministic strategies reach 1/2", std::abs(classical - 0.5) <= 1e-15,
                      Fmt("best = %.12g", classical)});
  }
  {
    const double w = Optimize(Objective::Witness(AppendixState(1.0), Direction::kMaximize)).value;
    checks.push_back({"appendix state has W = 0", std::abs(w) <= 1e-6,
                      Fmt("max W = %.3g", w)});
  }
  return checks;
}

}  // namespace qdgame
