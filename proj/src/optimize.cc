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

#include "qdgame/optimize.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qdgame/witness.h"

namespace qdgame {
namespace {

std::vector<double> Wrapped(std::span<const double> x) {
  std::vector<double> out(x.begin(), x.end());
  for (double& v : out) v = WrapAngle(v);
  return out;
}

// Higher score first; ties broken by lexicographically smaller angles.
bool BetterCandidate(double score_x, const std::vector<double>& x,
                     double score_y, const std::vector<double>& y) {
  if (score_x != score_y) return score_x > score_y;
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

// Per-grid-angle tables for the four-fold grid. For point (i, j, k, l) =
// (theta_a, theta_a', theta_b, theta_b') indices the objective reduces to
// lookups into pairwise tables over (A-angle, B-angle).
class GridTables {
 public:
  GridTables(const Objective& obj, int resolution) : r_(resolution) {
    const BlochRepresentation& rep = obj.representation();
    std::vector<std::array<double, 3>> dirs(static_cast<size_t>(r_));
    for (int i = 0; i < r_; ++i) {
      dirs[static_cast<size_t>(i)] =
          BlochVector::InPlane(kTwoPi * i / r_).Cartesian();
    }
    const size_t cells = static_cast<size_t>(r_ * r_);
    if (obj.kind() == ObjectiveKind::kWitness) {
      q_.resize(cells);
      for (int i = 0; i < r_; ++i) {
        for (int k = 0; k < r_; ++k) {
          const auto& n = dirs[static_cast<size_t>(i)];
          const auto& m = dirs[static_cast<size_t>(k)];
          q_[Cell(i, k)] = rep.PairExpectation(n, m) -
                           rep.MarginalA(n) * rep.MarginalB(m);
        }
      }
      return;
    }
    for (GameType alpha : kGameTypes) {
      for (GameType beta : kGameTypes) {
        auto& table = pay_[static_cast<size_t>(alpha) * 2 +
                           static_cast<size_t>(beta)];
        table.resize(cells);
        const double w = obj.prior().at(alpha, beta);
        for (int i = 0; i < r_; ++i) {
          for (int k = 0; k < r_; ++k) {
            const auto& n = dirs[static_cast<size_t>(i)];
            const auto& m = dirs[static_cast<size_t>(k)];
            double c = 0.0;
            for (Outcome s : kOutcomes) {
              for (Outcome t : kOutcomes) {
                c += rep.JointProbability(s, t, n, m) *
                     obj.payoffs().at(alpha, beta, s, t);
              }
            }
            table[Cell(i, k)] = w * c;
          }
        }
      }
    }
  }

  double Value(bool witness, int i, int j, int k, int l) const {
    if (witness) {
      return q_[Cell(i, k)] * q_[Cell(j, l)] - q_[Cell(i, l)] * q_[Cell(j, k)];
    }
    return pay_[0][Cell(i, k)] + pay_[1][Cell(i, l)] + pay_[2][Cell(j, k)] +
           pay_[3][Cell(j, l)];
  }

 private:
  size_t Cell(int i, int k) const { return static_cast<size_t>(i * r_ + k); }

  int r_;
  std::vector<double> q_;
  std::array<std::vector<double>, 4> pay_;
};

}  // namespace

Objective::Objective(const DensityMatrix& rho, ObjectiveKind kind,
                     Direction dir, const PayoffTable& pay, const Prior& prior)
    : kind_(kind),
      direction_(dir),
      state_(rho),
      rep_(rho),
      pay_(pay),
      prior_(prior) {}

Objective Objective::ExpectedPayoff(const DensityMatrix& rho, Direction dir,
                                    const PayoffTable& pay,
                                    const Prior& prior) {
  return Objective(rho, ObjectiveKind::kExpectedPayoff, dir, pay, prior);
}

Objective Objective::Witness(const DensityMatrix& rho, Direction dir) {
  return Objective(rho, ObjectiveKind::kWitness, dir, PayoffTable::Chsh(),
                   Prior::Uniform());
}

SettingsBundle Objective::Settings(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dimension()) {
    throw std::invalid_argument("expected " + std::to_string(dimension()) +
                                " angles, got " + std::to_string(x.size()));
  }
  if (space_ == SearchSpace::kInPlane) {
    return SettingsBundle::InPlane(x[0], x[1], x[2], x[3]);
  }
  return {{x[0], x[4]}, {x[1], x[5]}, {x[2], x[6]}, {x[3], x[7]}};
}

double Objective::Evaluate(const SettingsBundle& s) const {
  if (kind_ == ObjectiveKind::kWitness) return Correlations(rep_, s).Witness();
  return rep_.ExpectedPayoff(s, pay_, prior_);
}

double Objective::Evaluate(std::span<const double> x) const {
  return Evaluate(Settings(x));
}

std::vector<OptimizationResult> TopGridSeeds(const Objective& obj,
                                             int resolution, int count) {
  if (resolution < 4) {
    throw std::invalid_argument("grid resolution must be at least 4");
  }
  if (count < 1) throw std::invalid_argument("need at least one grid seed");
  const GridTables tables(obj, resolution);
  const bool witness = obj.kind() == ObjectiveKind::kWitness;

  // Kept sorted best-first. Grid points are visited in lexicographic order, so
  // a later point only displaces an earlier one on a strictly better score.
  struct Entry {
    double score;
    std::array<int, 4> idx;
  };
  std::vector<Entry> best;
  best.reserve(static_cast<size_t>(count) + 1);
  const int r = resolution;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      for (int k = 0; k < r; ++k) {
        for (int l = 0; l < r; ++l) {
          const double score = obj.Score(tables.Value(witness, i, j, k, l));
          if (static_cast<int>(best.size()) == count &&
              !(score > best.back().score)) {
            continue;
          }
          auto pos = std::find_if(best.begin(), best.end(), [score](const Entry& e) {
            return score > e.score;
          });
          best.insert(pos, Entry{score, {i, j, k, l}});
          if (static_cast<int>(best.size()) > count) best.pop_back();
        }
      }
    }
  }

  const std::int64_t evals = static_cast<std::int64_t>(r) * r * r * r;
  std::vector<OptimizationResult> seeds;
  for (const Entry& e : best) {
    OptimizationResult res;
    res.angles.assign(static_cast<size_t>(obj.dimension()), 0.0);
    for (int d = 0; d < 4; ++d) {
      res.angles[static_cast<size_t>(d)] = kTwoPi * e.idx[static_cast<size_t>(d)] / r;
    }
    res.value = obj.Evaluate(res.angles);
    res.evaluations = evals;
    res.converged = true;
    seeds.push_back(std::move(res));
  }
  return seeds;
}

OptimizationResult GridSeed(const Objective& obj, int resolution) {
  return TopGridSeeds(obj, resolution, 1).front();
}

OptimizationResult Refine(const Objective& obj, const OptimizationResult& seed,
                          const RefineOptions& options) {
  const size_t n = static_cast<size_t>(obj.dimension());
  if (seed.angles.size() != n) {
    throw std::invalid_argument("seed has the wrong number of angles");
  }
  std::int64_t evals = 0;
  // Nelder-Mead minimizes cost = -score.
  auto cost = [&](const std::vector<double>& x) {
    ++evals;
    return -obj.Score(obj.Evaluate(x));
  };

  std::vector<double> best_x = seed.angles;
  double best_f = cost(best_x);
  bool converged = false;

  for (int attempt = 0; attempt <= options.restarts; ++attempt) {
    const double step = options.initial_step;
    std::vector<std::vector<double>> simplex(n + 1, best_x);
    std::vector<double> f(n + 1, best_f);
    for (size_t i = 0; i < n; ++i) {
      simplex[i + 1][i] += step;
      f[i + 1] = cost(simplex[i + 1]);
    }
    std::vector<size_t> order(n + 1);
    bool collapsed = false;
    while (evals < options.max_evaluations) {
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&f](size_t a, size_t b) { return f[a] < f[b]; });
      {
        std::vector<std::vector<double>> s2;
        std::vector<double> f2;
        for (size_t idx : order) {
          s2.push_back(simplex[idx]);
          f2.push_back(f[idx]);
        }
        simplex = std::move(s2);
        f = std::move(f2);
      }
      double diameter = 0.0;
      for (size_t i = 1; i <= n; ++i) {
        for (size_t d = 0; d < n; ++d) {
          diameter = std::max(diameter, std::abs(simplex[i][d] - simplex[0][d]));
        }
      }
      if (diameter < options.diameter_tolerance ||
          f[n] - f[0] < options.spread_tolerance) {
        collapsed = true;
        break;
      }

      std::vector<double> centroid(n, 0.0);
      for (size_t i = 0; i < n; ++i) {
        for (size_t d = 0; d < n; ++d) centroid[d] += simplex[i][d] / n;
      }
      auto along = [&](double t) {
        std::vector<double> x(n);
        for (size_t d = 0; d < n; ++d) {
          x[d] = centroid[d] + t * (simplex[n][d] - centroid[d]);
        }
        return x;
      };

      std::vector<double> xr = along(-1.0);
      const double fr = cost(xr);
      if (fr < f[0]) {
        std::vector<double> xe = along(-2.0);
        const double fe = cost(xe);
        if (fe < fr) {
          simplex[n] = std::move(xe);
          f[n] = fe;
        } else {
          simplex[n] = std::move(xr);
          f[n] = fr;
        }
        continue;
      }
      if (fr < f[n - 1]) {
        simplex[n] = std::move(xr);
        f[n] = fr;
        continue;
      }
      const bool outside = fr < f[n];
      std::vector<double> xc = along(outside ? -0.5 : 0.5);
      const double fc = cost(xc);
      if (outside ? fc <= fr : fc < f[n]) {
        simplex[n] = std::move(xc);
        f[n] = fc;
        continue;
      }
      for (size_t i = 1; i <= n; ++i) {
        for (size_t d = 0; d < n; ++d) {
          simplex[i][d] = simplex[0][d] + 0.5 * (simplex[i][d] - simplex[0][d]);
        }
        f[i] = cost(simplex[i]);
      }
    }

    const size_t top = static_cast<size_t>(
        std::min_element(f.begin(), f.end()) - f.begin());
    const double improvement = best_f - f[top];
    if (f[top] < best_f) {
      best_f = f[top];
      best_x = simplex[top];
    }
    if (!collapsed) {
      converged = false;
      break;
    }
    converged = true;
    if (attempt > 0 && improvement < options.spread_tolerance) break;
  }

  OptimizationResult out;
  out.angles = Wrapped(best_x);
  out.value = obj.Evaluate(out.angles);
  // Wrapping can move the value by an ulp; never report worse than the seed.
  if (obj.Score(out.value) < obj.Score(seed.value)) {
    out.angles = seed.angles;
    out.value = seed.value;
  }
  out.evaluations = seed.evaluations + evals;
  out.converged = converged;
  return out;
}

OptimizationResult Optimize(const Objective& obj,
                            const OptimizeOptions& options) {
  RefineOptions refine = options.refine;
  // Half the grid spacing.
  refine.initial_step = kPi / options.resolution;
  const std::vector<OptimizationResult> seeds =
      TopGridSeeds(obj, options.resolution, options.starts);

  std::vector<OptimizationResult> refined;
  std::int64_t evals = seeds.front().evaluations;
  for (const OptimizationResult& seed : seeds) {
    OptimizationResult r = Refine(obj, seed, refine);
    evals += r.evaluations - seed.evaluations;
    refined.push_back(std::move(r));
  }
  std::stable_sort(refined.begin(), refined.end(),
                   [&obj](const OptimizationResult& x, const OptimizationResult& y) {
                     return BetterCandidate(obj.Score(x.value), x.angles,
                                            obj.Score(y.value), y.angles);
                   });

  OptimizationResult best = refined.front();
  best.evaluations = evals;
  double lo = refined.front().value;
  double hi = lo;
  for (const OptimizationResult& r : refined) {
    best.candidates.push_back({r.angles, r.value, r.converged});
    lo = std::min(lo, r.value);
    hi = std::max(hi, r.value);
  }
  best.multimodal = hi - lo > options.multimodality_tolerance;
  return best;
}

}  // namespace qdgame
