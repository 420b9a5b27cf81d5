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

#include "qdgame/discord.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qdgame {
namespace {

constexpr double kNegativeDiscordTolerance = 1e-8;
constexpr double kInvGolden = 0.6180339887498949;

struct EntropyTerms {
  double s_a = 0.0;
  double s_b = 0.0;
  double s_ab = 0.0;
};

EntropyTerms ComputeEntropyTerms(const DensityMatrix& rho) {
  EntropyTerms t;
  const auto spectrum = [](const ComplexMatrix& m) {
    return HermitianEigenvalues(m);
  };
  t.s_ab = SpectrumEntropy(spectrum(rho.matrix()));
  t.s_a = SpectrumEntropy(spectrum(PartialTrace(rho.matrix(), Party::kA)));
  t.s_b = SpectrumEntropy(spectrum(PartialTrace(rho.matrix(), Party::kB)));
  return t;
}

// Golden-section search for the minimum of f on [lo, hi].
template <typename F>
std::pair<double, double> GoldenSection(F&& f, double lo, double hi,
                                        double x_tol, int& evals) {
  double x1 = hi - kInvGolden * (hi - lo);
  double x2 = lo + kInvGolden * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  evals += 2;
  while (hi - lo > x_tol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvGolden * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvGolden * (hi - lo);
      f2 = f(x2);
    }
    ++evals;
  }
  return f1 <= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

DiscordResult Assemble(const DensityMatrix& rho, Party measured_party,
                       const BlochVector& argmin, double min_cond,
                       int evaluations) {
  const EntropyTerms terms = ComputeEntropyTerms(rho);
  DiscordResult r;
  r.measured_party = measured_party;
  r.argmin_direction = argmin.Canonical();
  r.s_a = terms.s_a;
  r.s_b = terms.s_b;
  r.s_ab = terms.s_ab;
  r.min_conditional_entropy = min_cond;
  r.evaluations = evaluations;
  const double s_measured = measured_party == Party::kB ? terms.s_b : terms.s_a;
  double value = min_cond + s_measured - terms.s_ab;
  if (value < -kNegativeDiscordTolerance) {
    std::ostringstream msg;
    msg << "negative discord " << value;
    throw std::logic_error(msg.str());
  }
  r.value = std::max(value, 0.0);
  return r;
}

}  // namespace

double SpectrumEntropy(std::span<const double> spectrum) {
  double s = 0.0;
  for (double p : spectrum) {
    if (p > 0.0) s -= p * std::log2(p);
  }
  return std::max(s, 0.0);
}

double VonNeumannEntropy(const ComplexMatrix& rho) {
  const StateDiagnostics d = Validate(rho);
  if (!d.ok) throw InvalidStateError("entropy of an invalid state: " + d.reason);
  return SpectrumEntropy(HermitianEigenvalues(rho));
}

double MutualInformation(const DensityMatrix& rho) {
  const EntropyTerms t = ComputeEntropyTerms(rho);
  return std::max(t.s_a + t.s_b - t.s_ab, 0.0);
}

ConditionalOutcome ConditionalState(const DensityMatrix& rho, Outcome sigma,
                                    const BlochVector& n,
                                    Party measured_party) {
  const ComplexMatrix proj = Projector(sigma, n);
  const ComplexMatrix id = ComplexMatrix::Identity(2);
  const ComplexMatrix lift =
      measured_party == Party::kB ? Kron(id, proj) : Kron(proj, id);
  const ComplexMatrix sandwich = lift * rho.matrix() * lift;
  ConditionalOutcome out;
  out.probability = std::clamp(sandwich.Trace().real(), 0.0, 1.0);
  if (out.probability > kImpossibleOutcome) {
    out.state = PartialTraceUnnormalized(sandwich, Other(measured_party)) *
                (1.0 / out.probability);
  }
  return out;
}

double ConditionalEntropy(const DensityMatrix& rho, const BlochVector& n,
                          Party measured_party) {
  double s = 0.0;
  for (Outcome sigma : kOutcomes) {
    const ConditionalOutcome c = ConditionalState(rho, sigma, n, measured_party);
    if (!c.state) continue;
    s += c.probability * SpectrumEntropy(HermitianEigenvalues(*c.state));
  }
  return s;
}

std::vector<BlochVector> FibonacciSphere(int n) {
  if (n < 1) throw std::invalid_argument("need at least one direction");
  std::vector<BlochVector> dirs;
  dirs.reserve(static_cast<size_t>(n));
  const double golden_angle = kPi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / n;
    double phi = std::fmod(golden_angle * i, kTwoPi);
    dirs.push_back({std::acos(z), phi});
  }
  return dirs;
}

DiscordResult Discord(const DensityMatrix& rho, Party measured_party,
                      const DiscordOptions& options) {
  const std::vector<BlochVector> grid = FibonacciSphere(options.grid_directions);
  std::vector<double> values(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) {
    values[i] = ConditionalEntropy(rho, grid[i], measured_party);
  }
  int evals = static_cast<int>(grid.size());

  std::vector<size_t> order(grid.size());
  std::iota(order.begin(), order.end(), 0);
  const size_t starts = std::min(
      order.size(), static_cast<size_t>(std::max(1, options.refine_starts)));
  std::partial_sort(order.begin(), order.begin() + static_cast<long>(starts),
                    order.end(), [&values](size_t x, size_t y) {
                      return values[x] < values[y] ||
                             (values[x] == values[y] && x < y);
                    });

  BlochVector best_dir = grid[order[0]];
  double best = values[order[0]];
  if (options.refine) {
    // Roughly twice the grid spacing.
    const double bracket = 2.0 * std::sqrt(4.0 * kPi / grid.size());
    for (size_t k = 0; k < starts; ++k) {
      BlochVector dir = grid[order[k]];
      double f = values[order[k]];
      for (int cycle = 0; cycle < 200; ++cycle) {
        const double before = f;
        auto along_theta = [&](double t) {
          return ConditionalEntropy(rho, {t, dir.phi}, measured_party);
        };
        auto [t, ft] = GoldenSection(along_theta, dir.theta - bracket,
                                     dir.theta + bracket, 1e-9, evals);
        if (ft < f) {
          dir.theta = t;
          f = ft;
        }
        auto along_phi = [&](double p) {
          return ConditionalEntropy(rho, {dir.theta, p}, measured_party);
        };
        auto [p, fp] = GoldenSection(along_phi, dir.phi - 2.0 * bracket,
                                     dir.phi + 2.0 * bracket, 1e-9, evals);
        if (fp < f) {
          dir.phi = p;
          f = fp;
        }
        if (before - f < options.objective_tolerance * 1e-3) break;
      }
      if (f < best) {
        best = f;
        best_dir = dir;
      }
    }
  }
  return Assemble(rho, measured_party, best_dir, best, evals);
}

DiscordResult DiscordOverDirections(const DensityMatrix& rho,
                                    Party measured_party,
                                    std::span<const BlochVector> directions) {
  if (directions.empty()) {
    throw std::invalid_argument("restricted discord needs at least one direction");
  }
  BlochVector best_dir = directions.front();
  double best = ConditionalEntropy(rho, best_dir, measured_party);
  for (size_t i = 1; i < directions.size(); ++i) {
    const double v = ConditionalEntropy(rho, directions[i], measured_party);
    if (v < best) {
      best = v;
      best_dir = directions[i];
    }
  }
  return Assemble(rho, measured_party, best_dir, best,
                  static_cast<int>(directions.size()));
}

}  // namespace qdgame
