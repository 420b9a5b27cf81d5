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

#ifndef QDGAME_WITNESS_H_
#define QDGAME_WITNESS_H_

// Covariance correlators Q_{alpha beta} = <A B> - <A><B>, the determinant
// witness W = Q_ab Q_a'b' - Q_ab' Q_a'b, and the rewriting of the CHSH
// expected payoff in terms of W.

#include "qdgame/game.h"
#include "qdgame/qcore.h"
#include "qdgame/states.h"

namespace qdgame {

// |Q| below this makes the payoff decomposition divide by ~0.
inline constexpr double kDegenerateCorrelator = 1e-8;

// <A_alpha (x) B_beta> = P(uu) + P(dd) - P(du) - P(ud).
double PairExpectation(const DensityMatrix& rho, const BlochVector& alpha,
                       const BlochVector& beta);

// tr[(n.sigma) rho_party] = P(up|n) - P(down|n) on that party.
double MarginalExpectation(const DensityMatrix& rho, const BlochVector& n,
                           Party party);

double CorrelationQ(const DensityMatrix& rho, const BlochVector& alpha,
                    const BlochVector& beta);

struct CorrelationSet {
  double q_ab = 0.0;
  double q_abp = 0.0;
  double q_apb = 0.0;
  double q_apbp = 0.0;
  double a = 0.0;   // <A_a>
  double ap = 0.0;  // <A_a'>
  double b = 0.0;   // <B_b>
  double bp = 0.0;  // <B_b'>

  double Witness() const { return q_ab * q_apbp - q_abp * q_apb; }
};

CorrelationSet Correlations(const DensityMatrix& rho, const SettingsBundle& s);

// Same quantities from a precomputed Pauli expansion.
CorrelationSet Correlations(const BlochRepresentation& rep,
                            const SettingsBundle& s);

// Signed witness. Any nonzero value certifies discord; the sign carries no
// such meaning, hence WitnessMagnitude.
double WitnessW(const DensityMatrix& rho, const SettingsBundle& s);
double WitnessMagnitude(const DensityMatrix& rho, const SettingsBundle& s);

struct Decomposition {
  double mu = 0.0;
  double nu = 0.0;
  // Signed sum of marginal products <A><B> over the four type pairs (the
  // CHSH sign pattern). Not to be confused with the Werner parameter.
  double eta_marginal = 0.0;
  double witness = 0.0;
  double reconstructed_u = 0.0;
  // Set when some |Q| < kDegenerateCorrelator; mu, nu and reconstructed_u are
  // then NaN.
  bool degenerate = false;
};

// u = [W (mu - nu) + eta_marginal + mu Q_ab' Q_a'b + nu Q_ab Q_a'b'] / 4 with
// mu = 1/Q_a'b' - 1/Q_ab and nu = 1/Q_ab' + 1/Q_a'b.
Decomposition Decompose(const CorrelationSet& c);
Decomposition Decompose(const DensityMatrix& rho, const SettingsBundle& s);

}  // namespace qdgame

#endif  // QDGAME_WITNESS_H_
