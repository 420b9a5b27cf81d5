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

#include "qdgame/qcore.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

namespace qdgame {
namespace {

constexpr double kSymmetrizeTolerance = 1e-10;
constexpr double kOffDiagonalTolerance = 1e-13;
constexpr int kMaxJacobiSweeps = 64;

void CheckDim(int dim) {
  if (dim != 2 && dim != 4) {
    throw std::invalid_argument("matrix dimension must be 2 or 4, got " +
                                std::to_string(dim));
  }
}

void CheckSameDim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("matrix dimension mismatch: " +
                                std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
  }
}

double OffDiagonalNorm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      if (i != j) sum += std::norm(m(i, j));
    }
  }
  return std::sqrt(sum);
}

double FrobeniusNorm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (const Complex& z : m.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
  CheckDim(dim);
  data_.assign(static_cast<size_t>(dim * dim), Complex{0.0, 0.0});
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  CheckDim(dim);
  if (data_.size() != static_cast<size_t>(dim * dim)) {
    throw std::invalid_argument("expected " + std::to_string(dim * dim) +
                                " entries, got " +
                                std::to_string(data_.size()));
  }
}

ComplexMatrix::ComplexMatrix(int dim, std::initializer_list<Complex> entries)
    : ComplexMatrix(dim, std::vector<Complex>(entries)) {}

ComplexMatrix ComplexMatrix::Identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::Diagonal(const std::vector<double>& diag) {
  ComplexMatrix m(static_cast<int>(diag.size()));
  for (size_t i = 0; i < diag.size(); ++i) {
    m(static_cast<int>(i), static_cast<int>(i)) = diag[i];
  }
  return m;
}

ComplexMatrix ComplexMatrix::Adjoint() const {
  ComplexMatrix out(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) out(i, j) = std::conj((*this)(j, i));
  }
  return out;
}

Complex ComplexMatrix::Trace() const {
  Complex t{0.0, 0.0};
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::HermiticityDefect() const {
  double defect = 0.0;
  for (int i = 0; i < dim_; ++i) {
    for (int j = i; j < dim_; ++j) {
      defect = std::max(defect, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return defect;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  CheckSameDim(*this, other);
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  CheckSameDim(*this, other);
  for (size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  CheckSameDim(lhs, rhs);
  const int n = lhs.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Complex l = lhs(i, k);
      if (l == Complex{0.0, 0.0}) continue;
      for (int j = 0; j < n; ++j) out(i, j) += l * rhs(k, j);
    }
  }
  return out;
}

double MaxAbsDiff(const ComplexMatrix& a, const ComplexMatrix& b) {
  CheckSameDim(a, b);
  double diff = 0.0;
  for (size_t i = 0; i < a.entries().size(); ++i) {
    diff = std::max(diff, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return diff;
}

std::array<double, 3> BlochVector::Cartesian() const {
  const double s = std::sin(theta);
  return {s * std::cos(phi), s * std::sin(phi), std::cos(theta)};
}

BlochVector BlochVector::Canonical() const {
  const auto n = Cartesian();
  double t = std::acos(std::clamp(n[2], -1.0, 1.0));
  double p = std::atan2(n[1], n[0]);
  if (std::abs(std::sin(t)) < 1e-15) p = 0.0;
  if (p < 0.0) p += kTwoPi;
  if (p >= kTwoPi) p -= kTwoPi;
  return {t, p};
}

double Dot(const std::array<double, 3>& u, const std::array<double, 3>& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

const ComplexMatrix& PauliX() {
  static const ComplexMatrix m(2, {0.0, 1.0, 1.0, 0.0});
  return m;
}

const ComplexMatrix& PauliY() {
  static const ComplexMatrix m(2, {0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0},
                                   0.0});
  return m;
}

const ComplexMatrix& PauliZ() {
  static const ComplexMatrix m(2, {1.0, 0.0, 0.0, -1.0});
  return m;
}

ComplexMatrix PauliDot(const BlochVector& n) {
  const auto v = n.Cartesian();
  return ComplexMatrix(2, {Complex{v[2], 0.0}, Complex{v[0], -v[1]},
                           Complex{v[0], v[1]}, Complex{-v[2], 0.0}});
}

ComplexMatrix Projector(Outcome sigma, const BlochVector& n) {
  ComplexMatrix p = ComplexMatrix::Identity(2) + PauliDot(n) * Sign(sigma);
  return p *= 0.5;
}

ComplexMatrix Kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw std::invalid_argument("Kron expects two 2x2 operands");
  }
  ComplexMatrix out(4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
      }
    }
  }
  return out;
}

ComplexMatrix PartialTraceUnnormalized(const ComplexMatrix& m, Party keep) {
  if (m.dim() != 4) {
    throw std::invalid_argument("partial trace expects a 4x4 operator");
  }
  ComplexMatrix out(2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Complex sum{0.0, 0.0};
      for (int k = 0; k < 2; ++k) {
        sum += keep == Party::kA ? m(2 * i + k, 2 * j + k)
                                 : m(2 * k + i, 2 * k + j);
      }
      out(i, j) = sum;
    }
  }
  return out;
}

ComplexMatrix PartialTrace(const ComplexMatrix& rho, Party keep) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("partial trace expects a 4x4 operator");
  }
  const Complex tr = rho.Trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > 1e-10) {
    std::ostringstream msg;
    msg << "partial trace of a state with trace " << tr.real() << "+"
        << tr.imag() << "i";
    throw InvalidStateError(msg.str());
  }
  return PartialTraceUnnormalized(rho, keep);
}

EigenSystem HermitianEigensystem(const ComplexMatrix& m) {
  const double defect = m.HermiticityDefect();
  if (defect > kSymmetrizeTolerance) {
    std::ostringstream msg;
    msg << "eigensolver input is not Hermitian (defect " << defect << ")";
    throw std::invalid_argument(msg.str());
  }
  const int n = m.dim();
  ComplexMatrix a = (m + m.Adjoint()) * 0.5;
  ComplexMatrix v = ComplexMatrix::Identity(n);

  const double threshold =
      std::max(kOffDiagonalTolerance, 1e-15 * FrobeniusNorm(a));
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    if (OffDiagonalNorm(a) < threshold) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex g = a(p, q);
        const double mag = std::abs(g);
        if (mag < 1e-300) continue;
        // Phase out a(p, q), then apply a real symmetric rotation.
        const Complex phase = std::conj(g) / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double ratio = (aqq - app) / (2.0 * mag);
        const double t = (ratio >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(ratio) + std::sqrt(ratio * ratio + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        ComplexMatrix j = ComplexMatrix::Identity(n);
        j(p, p) = c;
        j(p, q) = s;
        j(q, p) = -s * phase;
        j(q, q) = c * phase;
        a = j.Adjoint() * a * j;
        v = v * j;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&a](int x, int y) {
    return a(x, x).real() < a(y, y).real();
  });
  EigenSystem result{std::vector<double>(static_cast<size_t>(n)),
                     ComplexMatrix(n)};
  for (int k = 0; k < n; ++k) {
    const int src = order[static_cast<size_t>(k)];
    result.values[static_cast<size_t>(k)] = a(src, src).real();
    for (int i = 0; i < n; ++i) result.vectors(i, k) = v(i, src);
  }
  return result;
}

std::vector<double> HermitianEigenvalues(const ComplexMatrix& m) {
  return HermitianEigensystem(m).values;
}

std::string ToString(const ComplexMatrix& m, int precision) {
  std::ostringstream out;
  out.precision(precision);
  for (int i = 0; i < m.dim(); ++i) {
    out << "[";
    for (int j = 0; j < m.dim(); ++j) {
      const Complex z = m(i, j);
      out << (j ? ", " : "") << z.real();
      if (z.imag() != 0.0) out << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    }
    out << "]\n";
  }
  return out.str();
}

}  // namespace qdgame
