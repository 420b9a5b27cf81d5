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

#ifndef QDGAME_OPTIMIZE_H_
#define QDGAME_OPTIMIZE_H_

// Derivative-free extremization of the expected payoff or the witness over
// the four measurement settings.
//
// Parameter vector layout: [theta_a, theta_a', theta_b, theta_b'] for the
// in-plane search space (phi = 0); the full-sphere space appends
// [phi_a, phi_a', phi_b, phi_b'].

#include <cstdint>
#include <span>
#include <vector>

#include "qdgame/game.h"
#include "qdgame/states.h"

namespace qdgame {

enum class ObjectiveKind { kExpectedPayoff, kWitness };
enum class Direction { kMaximize, kMinimize };
enum class SearchSpace { kInPlane, kFullSphere };

class Objective {
 public:
  static Objective ExpectedPayoff(const DensityMatrix& rho, Direction dir,
                                  const PayoffTable& pay = PayoffTable::Chsh(),
                                  const Prior& prior = Prior::Uniform());
  static Objective Witness(const DensityMatrix& rho, Direction dir);

  Objective& WithSearchSpace(SearchSpace space) {
    space_ = space;
    return *this;
  }

  ObjectiveKind kind() const { return kind_; }
  Direction direction() const { return direction_; }
  SearchSpace search_space() const { return space_; }
  const DensityMatrix& state() const { return state_; }
  const BlochRepresentation& representation() const { return rep_; }
  const PayoffTable& payoffs() const { return pay_; }
  const Prior& prior() const { return prior_; }

  // 4 (in-plane) or 8 (full sphere).
  int dimension() const { return space_ == SearchSpace::kInPlane ? 4 : 8; }

  // Throws std::invalid_argument on a wrong-sized parameter vector.
  SettingsBundle Settings(std::span<const double> x) const;

  // Raw objective value (u or W).
  double Evaluate(std::span<const double> x) const;
  double Evaluate(const SettingsBundle& s) const;

  // Direction-adjusted value: larger is always better.
  double Score(double value) const {
    return direction_ == Direction::kMaximize ? value : -value;
  }

 private:
  Objective(const DensityMatrix& rho, ObjectiveKind kind, Direction dir,
            const PayoffTable& pay, const Prior& prior);

  ObjectiveKind kind_;
  Direction direction_;
  SearchSpace space_ = SearchSpace::kInPlane;
  DensityMatrix state_;
  BlochRepresentation rep_;
  PayoffTable pay_;
  Prior prior_;
};

struct Candidate {
  std::vector<double> angles;
  double value = 0.0;
  bool converged = false;
};

struct OptimizationResult {
  // Wrapped into [0, 2pi).
  std::vector<double> angles;
  double value = 0.0;
  std::int64_t evaluations = 0;
  bool converged = false;
  // Every refined multi-start result, best first (only set by Optimize).
  std::vector<Candidate> candidates;
  // Refined starts disagree by more than the multimodality tolerance.
  bool multimodal = false;
};

// Best point of the uniform grid theta_k = 2 pi k / resolution on each of the
// four polar angles (phi = 0). Ties go to the lexicographically smallest
// angle tuple. Throws std::invalid_argument if resolution < 4.
OptimizationResult GridSeed(const Objective& obj, int resolution);

// The `count` best grid points, best first, same tie rule.
std::vector<OptimizationResult> TopGridSeeds(const Objective& obj,
                                             int resolution, int count);

struct RefineOptions {
  double initial_step = 0.2;
  double diameter_tolerance = 1e-9;
  double spread_tolerance = 1e-12;
  std::int64_t max_evaluations = 20000;
  // Fresh simplices built around the incumbent after a collapse.
  int restarts = 2;
};

// Nelder-Mead from the seed. Never returns a worse value than the seed.
// converged = false when max_evaluations ran out first.
OptimizationResult Refine(const Objective& obj, const OptimizationResult& seed,
                          const RefineOptions& options = {});

struct OptimizeOptions {
  int resolution = 16;
  int starts = 4;
  double multimodality_tolerance = 1e-6;
  RefineOptions refine;
};

// Grid seeding, refinement of the best `starts` seeds, best refined result.
OptimizationResult Optimize(const Objective& obj,
                            const OptimizeOptions& options = {});

}  // namespace qdgame

#endif  // QDGAME_OPTIMIZE_H_
