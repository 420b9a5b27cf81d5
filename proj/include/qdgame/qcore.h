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

#ifndef QDGAME_QCORE_H_
#define QDGAME_QCORE_H_

// Dense complex linear algebra for one- and two-qubit operators.
//
// Basis convention: |up> = (1, 0)^T, |down> = (0, 1)^T. Two-qubit operators
// are ordered A (x) B with A the slower index, so basis index = 2 * a + b.

#include <array>
#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdgame {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Raised when an operator fails a density-matrix contract (trace, Hermiticity,
// positivity).
class InvalidStateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Measurement outcome sigma in {+1, -1}, i.e. {up, down}.
enum class Outcome : int { kUp = 1, kDown = -1 };

inline constexpr std::array<Outcome, 2> kOutcomes = {Outcome::kUp,
                                                     Outcome::kDown};

inline double Sign(Outcome o) { return static_cast<double>(static_cast<int>(o)); }

// One side of the bipartite system.
enum class Party { kA, kB };

inline Party Other(Party p) { return p == Party::kA ? Party::kB : Party::kA; }

// Square complex matrix of dimension 2 or 4, row-major.
class ComplexMatrix {
 public:
  // Zero matrix. Throws std::invalid_argument unless dim is 2 or 4.
  explicit ComplexMatrix(int dim);
  // Row-major entries; size must be dim * dim.
  ComplexMatrix(int dim, std::vector<Complex> entries);
  ComplexMatrix(int dim, std::initializer_list<Complex> entries);

  static ComplexMatrix Identity(int dim);
  static ComplexMatrix Diagonal(const std::vector<double>& diag);

  int dim() const { return dim_; }
  const std::vector<Complex>& entries() const { return data_; }

  Complex& operator()(int row, int col) { return data_[row * dim_ + col]; }
  const Complex& operator()(int row, int col) const {
    return data_[row * dim_ + col];
  }

  ComplexMatrix Adjoint() const;
  Complex Trace() const;

  // max_ij |M_ij - conj(M_ji)|.
  double HermiticityDefect() const;
  bool IsHermitian(double tol = 1e-12) const {
    return HermiticityDefect() <= tol;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs += rhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs -= rhs;
  }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) {
    return lhs *= scale;
  }
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) {
    return rhs *= scale;
  }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs,
                                 const ComplexMatrix& rhs);

 private:
  int dim_;
  std::vector<Complex> data_;
};

// Largest elementwise modulus of a - b. Dimensions must match.
double MaxAbsDiff(const ComplexMatrix& a, const ComplexMatrix& b);

// Direction on the Bloch sphere, n = (sin t cos p, sin t sin p, cos t).
//
// Any real angles are accepted; the Cartesian form is a unit vector for all of
// them. Canonical() folds the angles into theta in [0, pi], phi in [0, 2pi).
struct BlochVector {
  double theta = 0.0;
  double phi = 0.0;

  // The restricted parameterization used for game settings: phi = 0, so
  // n = (sin theta, 0, cos theta) for theta anywhere on the circle.
  static BlochVector InPlane(double theta) { return {theta, 0.0}; }

  std::array<double, 3> Cartesian() const;
  BlochVector Canonical() const;
};

double Dot(const std::array<double, 3>& u, const std::array<double, 3>& v);

const ComplexMatrix& PauliX();
const ComplexMatrix& PauliY();
const ComplexMatrix& PauliZ();

// n . sigma for a Bloch direction.
ComplexMatrix PauliDot(const BlochVector& n);

// Pi_{sigma|n} = (1 + sigma n.sigma) / 2.
ComplexMatrix Projector(Outcome sigma, const BlochVector& n);

// Kronecker product of two 2x2 operators, A (x) B.
ComplexMatrix Kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Reduced state of the `keep` party of a unit-trace two-qubit operator.
// Throws std::invalid_argument for non-4x4 input and InvalidStateError when
// |tr rho - 1| > 1e-10.
ComplexMatrix PartialTrace(const ComplexMatrix& rho, Party keep);

// Partial trace without the unit-trace precondition; used for unnormalized
// operators such as conditional-state numerators.
ComplexMatrix PartialTraceUnnormalized(const ComplexMatrix& m, Party keep);

struct EigenSystem {
  std::vector<double> values;  // ascending
  // Column k of `vectors` is the eigenvector for values[k].
  ComplexMatrix vectors;
};

// Cyclic complex Jacobi eigensolver for Hermitian input. Inputs with a
// Hermiticity defect <= 1e-10 are symmetrized first; anything larger throws
// std::invalid_argument.
EigenSystem HermitianEigensystem(const ComplexMatrix& m);

// Ascending real eigenvalues of a Hermitian matrix.
std::vector<double> HermitianEigenvalues(const ComplexMatrix& m);

std::string ToString(const ComplexMatrix& m, int precision = 6);

}  // namespace qdgame

#endif  // QDGAME_QCORE_H_
