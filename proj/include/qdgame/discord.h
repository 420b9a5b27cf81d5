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

#ifndef QDGAME_DISCORD_H_
#define QDGAME_DISCORD_H_

// Entropic quantum discord of two-qubit states under projective measurements.
// All entropies are in bits.
//
// Naming: D_A measures party B and conditions A on the outcome,
//   D_A = min_n S(A | Pi^B(n)) + S(rho_B) - S(rho_AB),
// and D_B is the mirror image. Discord(rho, Party::kB) returns D_A.

#include <optional>
#include <span>
#include <vector>

#include "qdgame/qcore.h"
#include "qdgame/states.h"

namespace qdgame {

// Outcomes with probability at or below this are impossible and drop out of
// the conditional-entropy average.
inline constexpr double kImpossibleOutcome = 1e-12;

// -sum lambda log2 lambda with 0 log 0 = 0. Throws InvalidStateError unless
// `rho` is a valid 2x2 or 4x4 state.
double VonNeumannEntropy(const ComplexMatrix& rho);

// Entropy of a probability spectrum; non-positive entries contribute 0.
double SpectrumEntropy(std::span<const double> spectrum);

// S(rho_A) + S(rho_B) - S(rho_AB).
double MutualInformation(const DensityMatrix& rho);

struct ConditionalOutcome {
  double probability = 0.0;
  // Post-measurement state of the unmeasured party; empty when the outcome is
  // impossible.
  std::optional<ComplexMatrix> state;
};

// Measures `measured_party` with Pi_{sigma|n} and returns p_sigma together
// with tr_measured[(Pi) rho (Pi)] / p_sigma.
ConditionalOutcome ConditionalState(const DensityMatrix& rho, Outcome sigma,
                                    const BlochVector& n, Party measured_party);

// sum_sigma p_sigma S(conditional state).
double ConditionalEntropy(const DensityMatrix& rho, const BlochVector& n,
                          Party measured_party);

struct DiscordOptions {
  int grid_directions = 2000;
  // Grid minima that get a local refinement.
  int refine_starts = 3;
  double objective_tolerance = 1e-10;
  bool refine = true;
};

struct DiscordResult {
  double value = 0.0;
  Party measured_party = Party::kB;
  BlochVector argmin_direction;
  double s_a = 0.0;
  double s_b = 0.0;
  double s_ab = 0.0;
  double min_conditional_entropy = 0.0;
  int evaluations = 0;
};

// Minimizes over the full Bloch sphere: Fibonacci grid then coordinate-wise
// golden-section refinement in (theta, phi).
DiscordResult Discord(const DensityMatrix& rho, Party measured_party,
                      const DiscordOptions& options = {});

// D_A: measurement on B.
inline DiscordResult DiscordA(const DensityMatrix& rho,
                              const DiscordOptions& options = {}) {
  return Discord(rho, Party::kB, options);
}
// D_B: measurement on A.
inline DiscordResult DiscordB(const DensityMatrix& rho,
                              const DiscordOptions& options = {}) {
  return Discord(rho, Party::kA, options);
}

// Minimizes only over the supplied directions, e.g. a player's game settings.
// Throws std::invalid_argument for an empty set.
DiscordResult DiscordOverDirections(const DensityMatrix& rho,
                                    Party measured_party,
                                    std::span<const BlochVector> directions);

// n roughly uniform directions on the sphere (golden-angle spiral).
std::vector<BlochVector> FibonacciSphere(int n);

}  // namespace qdgame

#endif  // QDGAME_DISCORD_H_
