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

#ifndef QDGAME_GAME_H_
#define QDGAME_GAME_H_

// Two-player cooperative Bayesian game played on a shared two-qubit state.
// Each player has two types (A: a, a'; B: b, b'), each type fixing a
// projective spin measurement. Both players receive the same payoff.

#include <array>

#include "qdgame/qcore.h"
#include "qdgame/states.h"

namespace qdgame {

// Index 0 is the unprimed type (a or b), index 1 the primed one.
enum class GameType : int { kPlain = 0, kPrimed = 1 };

inline constexpr std::array<GameType, 2> kGameTypes = {GameType::kPlain,
                                                       GameType::kPrimed};

struct SettingsBundle {
  BlochVector a;
  BlochVector a_prime;
  BlochVector b;
  BlochVector b_prime;

  // All four directions in the x-z plane (phi = 0).
  static SettingsBundle InPlane(double theta_a, double theta_ap,
                                double theta_b, double theta_bp);

  const BlochVector& ForA(GameType t) const {
    return t == GameType::kPlain ? a : a_prime;
  }
  const BlochVector& ForB(GameType t) const {
    return t == GameType::kPlain ? b : b_prime;
  }
};

// u[alpha][beta][sigma][sigma'] shared by both players.
class PayoffTable {
 public:
  // All zeros.
  PayoffTable() = default;
  // Row-major over (alpha, beta, sigma, sigma') with up before down. Throws
  // std::invalid_argument on non-finite entries.
  explicit PayoffTable(const std::array<double, 16>& entries);

  // +1 on agreement and -1 otherwise for (a,b), (a,b'), (a',b); flipped for
  // (a',b').
  static PayoffTable Chsh();
  static PayoffTable Constant(double c);

  double at(GameType alpha, GameType beta, Outcome sigma,
            Outcome sigma_prime) const {
    return entries_[Index(alpha, beta, sigma, sigma_prime)];
  }
  const std::array<double, 16>& entries() const { return entries_; }
  double MaxAbs() const;

  static int Index(GameType alpha, GameType beta, Outcome sigma,
                   Outcome sigma_prime) {
    return static_cast<int>(alpha) * 8 + static_cast<int>(beta) * 4 +
           (sigma == Outcome::kUp ? 0 : 2) +
           (sigma_prime == Outcome::kUp ? 0 : 1);
  }

 private:
  std::array<double, 16> entries_{};
};

// Joint prior over type pairs, indexed [alpha * 2 + beta].
class Prior {
 public:
  // Throws std::invalid_argument unless entries are non-negative and sum to 1
  // within 1e-12.
  explicit Prior(const std::array<double, 4>& p);
  static Prior Uniform();

  double at(GameType alpha, GameType beta) const {
    return p_[static_cast<size_t>(static_cast<int>(alpha) * 2 +
                                  static_cast<int>(beta))];
  }
  const std::array<double, 4>& entries() const { return p_; }

 private:
  std::array<double, 4> p_;
};

// P(sigma sigma' | alpha beta) = tr[(Pi_sigma|alpha (x) Pi_sigma'|beta) rho],
// clamped to [0, 1]. Throws std::logic_error if the raw value leaves
// [-1e-8, 1 + 1e-8].
double JointProbability(const DensityMatrix& rho, Outcome sigma,
                        Outcome sigma_prime, const BlochVector& alpha,
                        const BlochVector& beta);

// Prior- and probability-weighted sum of payoffs.
double ExpectedPayoff(const DensityMatrix& rho, const SettingsBundle& s,
                      const PayoffTable& pay, const Prior& prior);

// <C> = <A_a B_b> + <A_a B_b'> + <A_a' B_b> - <A_a' B_b'>.
double ChshValue(const DensityMatrix& rho, const SettingsBundle& s);

struct PayoffChshLink {
  double u = 0.0;
  double quarter_chsh = 0.0;
  double defect = 0.0;
};

// Expected payoff under the CHSH presets against <C>/4.
PayoffChshLink PayoffChshLinkCheck(const DensityMatrix& rho,
                                   const SettingsBundle& s);

// Best payoff reachable with deterministic local strategies: every
// assignment of an outcome to each of the four types (16 in total).
struct DeterministicStrategy {
  std::array<Outcome, 2> a_outcomes;  // for types a, a'
  std::array<Outcome, 2> b_outcomes;  // for types b, b'
  double payoff = 0.0;
};
DeterministicStrategy BestDeterministicStrategy(const PayoffTable& pay,
                                                const Prior& prior);

// Pauli-basis form of a two-qubit state:
//   rho = (I + r.sigma (x) I + I (x) s.sigma + sum_ij T_ij sigma_i (x)
//   sigma_j) / 4.
// Outcome statistics for any pair of projective measurements follow from
// r, s and T alone, which makes repeated evaluation cheap.
class BlochRepresentation {
 public:
  explicit BlochRepresentation(const DensityMatrix& rho);

  const std::array<double, 3>& local_a() const { return r_; }
  const std::array<double, 3>& local_b() const { return s_; }
  double correlation(int i, int j) const { return t_[i][j]; }

  // <n.sigma (x) m.sigma>.
  double PairExpectation(const std::array<double, 3>& n,
                         const std::array<double, 3>& m) const;
  double MarginalA(const std::array<double, 3>& n) const { return Dot(r_, n); }
  double MarginalB(const std::array<double, 3>& m) const { return Dot(s_, m); }

  // (1 + sigma <A> + sigma' <B> + sigma sigma' <AB>) / 4, unclamped.
  double JointProbability(Outcome sigma, Outcome sigma_prime,
                          const std::array<double, 3>& n,
                          const std::array<double, 3>& m) const;

  double ExpectedPayoff(const SettingsBundle& s, const PayoffTable& pay,
                        const Prior& prior) const;

 private:
  std::array<double, 3> r_{};
  std::array<double, 3> s_{};
  std::array<std::array<double, 3>, 3> t_{};
};

}  // namespace qdgame

#endif  // QDGAME_GAME_H_
