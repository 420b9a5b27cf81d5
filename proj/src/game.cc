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

#include "qdgame/game.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qdgame {
namespace {

constexpr double kProbabilityHardTolerance = 1e-8;

double ClampProbability(double p) {
  if (p < -kProbabilityHardTolerance || p > 1.0 + kProbabilityHardTolerance) {
    std::ostringstream msg;
    msg << "outcome probability " << p << " outside [0, 1]";
    throw std::logic_error(msg.str());
  }
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace

SettingsBundle SettingsBundle::InPlane(double theta_a, double theta_ap,
                                       double theta_b, double theta_bp) {
  return {BlochVector::InPlane(theta_a), BlochVector::InPlane(theta_ap),
          BlochVector::InPlane(theta_b), BlochVector::InPlane(theta_bp)};
}

PayoffTable::PayoffTable(const std::array<double, 16>& entries)
    : entries_(entries) {
  for (double e : entries_) {
    if (!std::isfinite(e)) {
      throw std::invalid_argument("payoff entries must be finite");
    }
  }
}

PayoffTable PayoffTable::Chsh() {
  std::array<double, 16> e{};
  for (GameType alpha : kGameTypes) {
    for (GameType beta : kGameTypes) {
      const double flip =
          (alpha == GameType::kPrimed && beta == GameType::kPrimed) ? -1.0
                                                                    : 1.0;
      for (Outcome s : kOutcomes) {
        for (Outcome t : kOutcomes) {
          e[static_cast<size_t>(Index(alpha, beta, s, t))] =
              flip * (s == t ? 1.0 : -1.0);
        }
      }
    }
  }
  return PayoffTable(e);
}

PayoffTable PayoffTable::Constant(double c) {
  std::array<double, 16> e;
  e.fill(c);
  return PayoffTable(e);
}

double PayoffTable::MaxAbs() const {
  double m = 0.0;
  for (double e : entries_) m = std::max(m, std::abs(e));
  return m;
}

Prior::Prior(const std::array<double, 4>& p) : p_(p) {
  double sum = 0.0;
  for (double v : p_) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("prior entries must be finite and >= 0");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "prior must sum to 1, sums to " << sum;
    throw std::invalid_argument(msg.str());
  }
}

Prior Prior::Uniform() { return Prior({0.25, 0.25, 0.25, 0.25}); }

double JointProbability(const DensityMatrix& rho, Outcome sigma,
                        Outcome sigma_prime, const BlochVector& alpha,
                        const BlochVector& beta) {
  const ComplexMatrix op =
      Kron(Projector(sigma, alpha), Projector(sigma_prime, beta));
  // tr[op rho] without forming the product.
  Complex tr{0.0, 0.0};
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) tr += op(i, k) * rho(k, i);
  }
  return ClampProbability(tr.real());
}

double ExpectedPayoff(const DensityMatrix& rho, const SettingsBundle& s,
                      const PayoffTable& pay, const Prior& prior) {
  double u = 0.0;
  for (GameType alpha : kGameTypes) {
    for (GameType beta : kGameTypes) {
      const double w = prior.at(alpha, beta);
      if (w == 0.0) continue;
      for (Outcome sigma : kOutcomes) {
        for (Outcome sigma_prime : kOutcomes) {
          u += w *
               JointProbability(rho, sigma, sigma_prime, s.ForA(alpha),
                                s.ForB(beta)) *
               pay.at(alpha, beta, sigma, sigma_prime);
        }
      }
    }
  }
  return u;
}

namespace {

double CorrelatorFromProbabilities(const DensityMatrix& rho,
                                   const BlochVector& alpha,
                                   const BlochVector& beta) {
  double e = 0.0;
  for (Outcome s : kOutcomes) {
    for (Outcome t : kOutcomes) {
      e += Sign(s) * Sign(t) * JointProbability(rho, s, t, alpha, beta);
    }
  }
  return e;
}

}  // namespace

double ChshValue(const DensityMatrix& rho, const SettingsBundle& s) {
  return CorrelatorFromProbabilities(rho, s.a, s.b) +
         CorrelatorFromProbabilities(rho, s.a, s.b_prime) +
         CorrelatorFromProbabilities(rho, s.a_prime, s.b) -
         CorrelatorFromProbabilities(rho, s.a_prime, s.b_prime);
}

PayoffChshLink PayoffChshLinkCheck(const DensityMatrix& rho,
                                   const SettingsBundle& s) {
  PayoffChshLink link;
  link.u = ExpectedPayoff(rho, s, PayoffTable::Chsh(), Prior::Uniform());
  link.quarter_chsh = ChshValue(rho, s) / 4.0;
  link.defect = std::abs(link.u - link.quarter_chsh);
  return link;
}

DeterministicStrategy BestDeterministicStrategy(const PayoffTable& pay,
                                                const Prior& prior) {
  DeterministicStrategy best;
  best.payoff = -std::numeric_limits<double>::infinity();
  for (int bits = 0; bits < 16; ++bits) {
    auto pick = [bits](int k) {
      return (bits >> k) & 1 ? Outcome::kDown : Outcome::kUp;
    };
    DeterministicStrategy cand{{pick(3), pick(2)}, {pick(1), pick(0)}, 0.0};
    for (GameType alpha : kGameTypes) {
      for (GameType beta : kGameTypes) {
        cand.payoff += prior.at(alpha, beta) *
                       pay.at(alpha, beta,
                              cand.a_outcomes[static_cast<size_t>(alpha)],
                              cand.b_outcomes[static_cast<size_t>(beta)]);
      }
    }
    if (cand.payoff > best.payoff) best = cand;
  }
  return best;
}

BlochRepresentation::BlochRepresentation(const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.matrix();
  const ComplexMatrix* pauli[3] = {&PauliX(), &PauliY(), &PauliZ()};
  const ComplexMatrix id = ComplexMatrix::Identity(2);
  auto expect = [&m](const ComplexMatrix& op) {
    Complex tr{0.0, 0.0};
    for (int i = 0; i < 4; ++i) {
      for (int k = 0; k < 4; ++k) tr += op(i, k) * m(k, i);
    }
    return tr.real();
  };
  for (int i = 0; i < 3; ++i) {
    r_[i] = expect(Kron(*pauli[i], id));
    s_[i] = expect(Kron(id, *pauli[i]));
    for (int j = 0; j < 3; ++j) t_[i][j] = expect(Kron(*pauli[i], *pauli[j]));
  }
}

double BlochRepresentation::PairExpectation(
    const std::array<double, 3>& n, const std::array<double, 3>& m) const {
  double e = 0.0;
  for (int i = 0; i < 3; ++i) {
    e += n[i] * (t_[i][0] * m[0] + t_[i][1] * m[1] + t_[i][2] * m[2]);
  }
  return e;
}

double BlochRepresentation::JointProbability(
    Outcome sigma, Outcome sigma_prime, const std::array<double, 3>& n,
    const std::array<double, 3>& m) const {
  const double s = Sign(sigma);
  const double t = Sign(sigma_prime);
  return 0.25 * (1.0 + s * MarginalA(n) + t * MarginalB(m) +
                 s * t * PairExpectation(n, m));
}

double BlochRepresentation::ExpectedPayoff(const SettingsBundle& s,
                                           const PayoffTable& pay,
                                           const Prior& prior) const {
  double u = 0.0;
  for (GameType alpha : kGameTypes) {
    const auto n = s.ForA(alpha).Cartesian();
    const double ma = MarginalA(n);
    for (GameType beta : kGameTypes) {
      const double w = prior.at(alpha, beta);
      if (w == 0.0) continue;
      const auto m = s.ForB(beta).Cartesian();
      const double mb = MarginalB(m);
      const double e = PairExpectation(n, m);
      for (Outcome sg : kOutcomes) {
        for (Outcome sp : kOutcomes) {
          const double a = Sign(sg);
          const double b = Sign(sp);
          u += w * 0.25 * (1.0 + a * ma + b * mb + a * b * e) *
               pay.at(alpha, beta, sg, sp);
        }
      }
    }
  }
  return u;
}

}  // namespace qdgame
