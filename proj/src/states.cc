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

#include "qdgame/states.h"

#include <cmath>
#include <sstream>

namespace qdgame {

StateDiagnostics Validate(const ComplexMatrix& rho) {
  StateDiagnostics d;
  d.hermiticity_defect = rho.HermiticityDefect();
  d.trace_defect = std::abs(rho.Trace() - Complex{1.0, 0.0});

  std::ostringstream reason;
  if (d.hermiticity_defect > kHermiticityTolerance) {
    reason << "hermiticity defect " << d.hermiticity_defect << "; ";
  }
  if (d.trace_defect > kTraceTolerance) {
    reason << "trace defect " << d.trace_defect << "; ";
  }
  // The spectrum of a badly non-Hermitian matrix is meaningless; report the
  // spectrum of its Hermitian part instead.
  const ComplexMatrix herm = (rho + rho.Adjoint()) * 0.5;
  d.min_eigenvalue = HermitianEigenvalues(herm).front();
  if (d.min_eigenvalue < -kPositivityTolerance) {
    reason << "negative eigenvalue " << d.min_eigenvalue << "; ";
  }
  d.reason = reason.str();
  d.ok = d.reason.empty();
  return d;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.dim() != 4) {
    throw InvalidStateError("two-qubit state must be 4x4");
  }
  const StateDiagnostics d = Validate(m_);
  if (!d.ok) throw InvalidStateError("invalid two-qubit state: " + d.reason);
}

DensityMatrix DensityMatrix::Mix(double w, const DensityMatrix& a,
                                 const DensityMatrix& b) {
  if (!(w >= 0.0 && w <= 1.0)) {
    throw std::invalid_argument("mixing weight must lie in [0, 1]");
  }
  return DensityMatrix(a.matrix() * w + b.matrix() * (1.0 - w));
}

void RequireQubitState(const ComplexMatrix& m, std::string_view what) {
  if (m.dim() != 2) {
    throw InvalidStateError(std::string(what) + ": expected a 2x2 state");
  }
  const StateDiagnostics d = Validate(m);
  if (!d.ok) {
    throw InvalidStateError(std::string(what) + ": invalid qubit state: " +
                            d.reason);
  }
}

ComplexMatrix PureQubit(Complex c0, Complex c1) {
  const double norm = std::sqrt(std::norm(c0) + std::norm(c1));
  if (norm == 0.0) throw std::invalid_argument("zero state vector");
  c0 /= norm;
  c1 /= norm;
  return ComplexMatrix(2, {c0 * std::conj(c0), c0 * std::conj(c1),
                           c1 * std::conj(c0), c1 * std::conj(c1)});
}

ComplexMatrix RealQubitProjector(double x) {
  const double c = std::cos(x);
  const double s = std::sin(x);
  return ComplexMatrix(2, {c * c, c * s, s * c, s * s});
}

DensityMatrix PureState(const std::array<Complex, 4>& amplitudes) {
  double norm = 0.0;
  for (const Complex& z : amplitudes) norm += std::norm(z);
  if (norm == 0.0) throw std::invalid_argument("zero state vector");
  norm = std::sqrt(norm);
  ComplexMatrix m(4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      m(i, j) = amplitudes[i] * std::conj(amplitudes[j]) / (norm * norm);
    }
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix Singlet() {
  const double h = 1.0 / std::sqrt(2.0);
  return PureState({0.0, h, -h, 0.0});
}

DensityMatrix Werner(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("Werner parameter must lie in [0, 1]");
  }
  // Built entrywise so the affine structure is exact.
  ComplexMatrix m = ComplexMatrix::Identity(4) * ((1.0 - eta) / 4.0);
  m(1, 1) += eta * 0.5;
  m(2, 2) += eta * 0.5;
  m(1, 2) -= eta * 0.5;
  m(2, 1) -= eta * 0.5;
  return DensityMatrix(std::move(m));
}

DensityMatrix RandomState(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) g(i, j) = Complex{normal(rng), normal(rng)};
  }
  ComplexMatrix m = g * g.Adjoint();
  m *= 1.0 / m.Trace().real();
  // Exact Hermiticity; the product above is Hermitian only up to rounding.
  return DensityMatrix((m + m.Adjoint()) * 0.5);
}

ComplexMatrix RandomQubitState(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double x, y, z;
  do {
    x = unit(rng);
    y = unit(rng);
    z = unit(rng);
  } while (x * x + y * y + z * z > 1.0);
  return ComplexMatrix(2, {Complex{(1.0 + z) / 2, 0.0}, Complex{x / 2, -y / 2},
                           Complex{x / 2, y / 2}, Complex{(1.0 - z) / 2, 0.0}});
}

double WrapAngle(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

DensityMatrix DiscordedSeparable(double x) {
  const ComplexMatrix px = RealQubitProjector(WrapAngle(x));
  const ComplexMatrix up = PureQubit(1.0, 0.0);
  return DensityMatrix((Kron(px, up) + Kron(up, px)) * 0.5);
}

DensityMatrix AppendixState(double x) {
  const ComplexMatrix px = RealQubitProjector(WrapAngle(x));
  const ComplexMatrix up = PureQubit(1.0, 0.0);
  return DensityMatrix((Kron(up, up) + Kron(px, px)) * 0.5);
}

DensityMatrix Product(const ComplexMatrix& a, const ComplexMatrix& b) {
  RequireQubitState(a, "product factor A");
  RequireQubitState(b, "product factor B");
  return DensityMatrix(Kron(a, b));
}

std::string_view StateKindName(StateKind kind) {
  switch (kind) {
    case StateKind::kWerner: return "werner";
    case StateKind::kDiscordedSeparable: return "rhod";
    case StateKind::kAppendixZeroWitness: return "appendix";
    case StateKind::kSinglet: return "singlet";
    case StateKind::kProduct: return "product";
    case StateKind::kCustom: return "custom";
  }
  return "unknown";
}

std::optional<StateKind> ParseStateKind(std::string_view name) {
  for (StateKind k :
       {StateKind::kWerner, StateKind::kDiscordedSeparable,
        StateKind::kAppendixZeroWitness, StateKind::kSinglet,
        StateKind::kProduct, StateKind::kCustom}) {
    if (StateKindName(k) == name) return k;
  }
  return std::nullopt;
}

DensityMatrix StateFamily::Realize() const {
  switch (kind) {
    case StateKind::kWerner: return Werner(parameter);
    case StateKind::kDiscordedSeparable: return DiscordedSeparable(parameter);
    case StateKind::kAppendixZeroWitness: return AppendixState(parameter);
    case StateKind::kSinglet: return Singlet();
    case StateKind::kProduct: {
      const ComplexMatrix f = RealQubitProjector(parameter);
      return Product(f, f);
    }
    case StateKind::kCustom:
      if (!custom) throw std::invalid_argument("custom family without a state");
      return *custom;
  }
  throw std::invalid_argument("unknown state kind");
}

}  // namespace qdgame
