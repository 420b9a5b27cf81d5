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

#include "qdgame/witness.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qdgame {

double PairExpectation(const DensityMatrix& rho, const BlochVector& alpha,
                       const BlochVector& beta) {
  return JointProbability(rho, Outcome::kUp, Outcome::kUp, alpha, beta) +
         JointProbability(rho, Outcome::kDown, Outcome::kDown, alpha, beta) -
         JointProbability(rho, Outcome::kDown, Outcome::kUp, alpha, beta) -
         JointProbability(rho, Outcome::kUp, Outcome::kDown, alpha, beta);
}

double MarginalExpectation(const DensityMatrix& rho, const BlochVector& n,
                           Party party) {
  const ComplexMatrix reduced = PartialTrace(rho.matrix(), party);
  const ComplexMatrix op = PauliDot(n);
  Complex tr{0.0, 0.0};
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) tr += op(i, k) * reduced(k, i);
  }
  return std::clamp(tr.real(), -1.0, 1.0);
}

double CorrelationQ(const DensityMatrix& rho, const BlochVector& alpha,
                    const BlochVector& beta) {
  return PairExpectation(rho, alpha, beta) -
         MarginalExpectation(rho, alpha, Party::kA) *
             MarginalExpectation(rho, beta, Party::kB);
}

CorrelationSet Correlations(const DensityMatrix& rho, const SettingsBundle& s) {
  CorrelationSet c;
  c.a = MarginalExpectation(rho, s.a, Party::kA);
  c.ap = MarginalExpectation(rho, s.a_prime, Party::kA);
  c.b = MarginalExpectation(rho, s.b, Party::kB);
  c.bp = MarginalExpectation(rho, s.b_prime, Party::kB);
  c.q_ab = PairExpectation(rho, s.a, s.b) - c.a * c.b;
  c.q_abp = PairExpectation(rho, s.a, s.b_prime) - c.a * c.bp;
  c.q_apb = PairExpectation(rho, s.a_prime, s.b) - c.ap * c.b;
  c.q_apbp = PairExpectation(rho, s.a_prime, s.b_prime) - c.ap * c.bp;
  return c;
}

CorrelationSet Correlations(const BlochRepresentation& rep,
                            const SettingsBundle& s) {
  const auto na = s.a.Cartesian();
  const auto nap = s.a_prime.Cartesian();
  const auto nb = s.b.Cartesian();
  const auto nbp = s.b_prime.Cartesian();
  CorrelationSet c;
  c.a = rep.MarginalA(na);
  c.ap = rep.MarginalA(nap);
  c.b = rep.MarginalB(nb);
  c.bp = rep.MarginalB(nbp);
  c.q_ab = rep.PairExpectation(na, nb) - c.a * c.b;
  c.q_abp = rep.PairExpectation(na, nbp) - c.a * c.bp;
  c.q_apb = rep.PairExpectation(nap, nb) - c.ap * c.b;
  c.q_apbp = rep.PairExpectation(nap, nbp) - c.ap * c.bp;
  return c;
}

double WitnessW(const DensityMatrix& rho, const SettingsBundle& s) {
  return Correlations(rho, s).Witness();
}

double WitnessMagnitude(const DensityMatrix& rho, const SettingsBundle& s) {
  return std::abs(WitnessW(rho, s));
}

Decomposition Decompose(const CorrelationSet& c) {
  Decomposition d;
  d.witness = c.Witness();
  d.eta_marginal = c.a * c.b + c.ap * c.b + c.a * c.bp - c.ap * c.bp;
  const double min_q = std::min({std::abs(c.q_ab), std::abs(c.q_abp),
                                 std::abs(c.q_apb), std::abs(c.q_apbp)});
  if (min_q < kDegenerateCorrelator) {
    constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
    d.degenerate = true;
    d.mu = kNaN;
    d.nu = kNaN;
    d.reconstructed_u = kNaN;
    return d;
  }
  d.mu = 1.0 / c.q_apbp - 1.0 / c.q_ab;
  d.nu = 1.0 / c.q_abp + 1.0 / c.q_apb;
  d.reconstructed_u =
      0.25 * (d.witness * (d.mu - d.nu) + d.eta_marginal +
              d.mu * c.q_abp * c.q_apb + d.nu * c.q_ab * c.q_apbp);
  return d;
}

Decomposition Decompose(const DensityMatrix& rho, const SettingsBundle& s) {
  return Decompose(Correlations(rho, s));
}

}  // namespace qdgame
