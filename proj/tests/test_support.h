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

#ifndef QDGAME_TESTS_TEST_SUPPORT_H_
#define QDGAME_TESTS_TEST_SUPPORT_H_

// Generators and independent oracles shared by the test binaries. Nothing here
// calls into the library code paths it is used to check.

#include <array>
#include <cmath>
#include <complex>
#include <random>

#include "qdgame/qcore.h"

namespace qdgame::testing {

inline double RandomAngle(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.0, kTwoPi)(rng);
}

inline BlochVector RandomDirection(std::mt19937_64& rng) {
  const double z = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
  return {std::acos(z), RandomAngle(rng)};
}

// Arbitrary (not necessarily Hermitian) complex 2x2.
inline ComplexMatrix RandomComplex2(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix m(2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) m(i, j) = Complex{n(rng), n(rng)};
  }
  return m;
}

inline ComplexMatrix RandomHermitian(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    m(i, i) = n(rng);
    for (int j = i + 1; j < dim; ++j) {
      m(i, j) = Complex{n(rng), n(rng)};
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

// rho[(a, b), (a', b')] read with plain index arithmetic; |psi> amplitudes
// indexed 2 * a + b.
using Amplitudes = std::array<Complex, 4>;

inline Amplitudes SingletAmplitudes() {
  const double h = 1.0 / std::sqrt(2.0);
  return {0.0, h, -h, 0.0};
}

// Eigenvector of n.sigma with eigenvalue sigma, for in-plane n = (sin t, 0,
// cos t): sigma=+1 -> (cos t/2, sin t/2), sigma=-1 -> (-sin t/2, cos t/2).
inline std::array<double, 2> InPlaneEigenvector(int sigma, double theta) {
  if (sigma > 0) return {std::cos(theta / 2), std::sin(theta / 2)};
  return {-std::sin(theta / 2), std::cos(theta / 2)};
}

// |<e_sigma(ta) e_sigma'(tb) | psi>|^2 for in-plane settings.
inline double PureJointProbability(const Amplitudes& psi, int sigma, double ta,
                                   int sigma_prime, double tb) {
  const auto ea = InPlaneEigenvector(sigma, ta);
  const auto eb = InPlaneEigenvector(sigma_prime, tb);
  Complex amp{0.0, 0.0};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) amp += ea[a] * eb[b] * psi[2 * a + b];
  }
  return std::norm(amp);
}

// Binary entropy in bits.
inline double H2(double p) {
  double h = 0.0;
  if (p > 0) h -= p * std::log2(p);
  if (p < 1) h -= (1 - p) * std::log2(1 - p);
  return h;
}

// Closed-form discord of the Werner state in bits.
inline double WernerDiscordOracle(double eta) {
  auto xlx = [](double x) { return x > 0 ? x * std::log2(x) : 0.0; };
  return 0.25 * (xlx(1 - eta) - 2 * xlx(1 + eta) + xlx(1 + 3 * eta));
}

}  // namespace qdgame::testing

#endif  // QDGAME_TESTS_TEST_SUPPORT_H_
