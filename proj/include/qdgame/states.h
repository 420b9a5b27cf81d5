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

#ifndef QDGAME_STATES_H_
#define QDGAME_STATES_H_

#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "qdgame/qcore.h"

namespace qdgame {

inline constexpr double kHermiticityTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kPositivityTolerance = 1e-10;

struct StateDiagnostics {
  double hermiticity_defect = 0.0;
  double trace_defect = 0.0;
  double min_eigenvalue = 0.0;
  bool ok = false;
  // Human-readable reason when !ok.
  std::string reason;
};

// Checks Hermiticity, unit trace and positivity of a 2x2 or 4x4 operator.
// Never throws for square 2x2/4x4 input.
StateDiagnostics Validate(const ComplexMatrix& rho);

// A validated two-qubit density matrix. Every instance is Hermitian, has unit
// trace and is positive semidefinite within the tolerances above, so the
// game/witness/discord layers need not re-check.
class DensityMatrix {
 public:
  // Throws InvalidStateError if `m` is not a valid 4x4 state.
  explicit DensityMatrix(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }

  // Convex combination w * a + (1 - w) * b, w in [0, 1].
  static DensityMatrix Mix(double w, const DensityMatrix& a,
                           const DensityMatrix& b);

 private:
  ComplexMatrix m_;
};

// Throws InvalidStateError if `m` is not a valid single-qubit state.
void RequireQubitState(const ComplexMatrix& m, std::string_view what);

// Single-qubit pure-state projector |v><v| for amplitudes (c0, c1); the
// amplitudes are normalized first.
ComplexMatrix PureQubit(Complex c0, Complex c1);

// |x> = cos x |up> + sin x |down>, as a projector.
ComplexMatrix RealQubitProjector(double x);

// Two-qubit pure state from four amplitudes in the A (x) B basis.
DensityMatrix PureState(const std::array<Complex, 4>& amplitudes);

// (|up down> - |down up>) / sqrt 2.
DensityMatrix Singlet();

// (1 - eta) I/4 + eta |psi-><psi-|. Throws std::invalid_argument outside
// [0, 1].
DensityMatrix Werner(double eta);

// (|x><x| (x) |up><up| + |up><up| (x) |x><x|) / 2; x is reduced mod 2pi.
DensityMatrix DiscordedSeparable(double x);

// (|up up><up up| + |x x><x x|) / 2; x is reduced mod 2pi.
DensityMatrix AppendixState(double x);

// a (x) b for single-qubit states a, b.
DensityMatrix Product(const ComplexMatrix& a, const ComplexMatrix& b);

// Random state from the Ginibre ensemble, G G^dagger / tr(G G^dagger) with
// standard complex normal G; full rank with probability one.
DensityMatrix RandomState(std::mt19937_64& rng);

// Random mixed single-qubit state, uniform in the Bloch ball.
ComplexMatrix RandomQubitState(std::mt19937_64& rng);

// Reduces x into [0, 2pi).
double WrapAngle(double x);

enum class StateKind {
  kWerner,
  kDiscordedSeparable,
  kAppendixZeroWitness,
  kSinglet,
  kProduct,
  kCustom,
};

// Command-line spelling: werner, rhod, appendix, singlet, product, custom.
std::string_view StateKindName(StateKind kind);
std::optional<StateKind> ParseStateKind(std::string_view name);

// A parameterized state family member. Product uses the parameter as the
// polar angle of both factors' pure states; Custom needs an explicit matrix.
struct StateFamily {
  StateKind kind = StateKind::kWerner;
  double parameter = 0.0;
  std::optional<DensityMatrix> custom;

  DensityMatrix Realize() const;
};

}  // namespace qdgame

#endif  // QDGAME_STATES_H_
