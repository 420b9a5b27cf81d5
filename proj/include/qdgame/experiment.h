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

#ifndef QDGAME_EXPERIMENT_H_
#define QDGAME_EXPERIMENT_H_

// Parameter sweeps over state families, single-state reports, and their
// serialization (CSV, JSON, gnuplot scripts, JSON config files).
//
// A sweep point extremizes one quantity (the protocol's objective) over the
// four in-plane measurement angles and then evaluates every other quantity at
// the same angles.

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qdgame/discord.h"
#include "qdgame/game.h"
#include "qdgame/optimize.h"
#include "qdgame/states.h"
#include "qdgame/witness.h"

namespace qdgame {

enum class Protocol { kMaximizePayoff, kMaximizeWitness, kMinimizeWitness };

// payoff-max, witness-max, witness-min.
std::string_view ProtocolName(Protocol p);
std::optional<Protocol> ParseProtocol(std::string_view name);

Objective MakeObjective(Protocol p, const DensityMatrix& rho,
                        const PayoffTable& pay, const Prior& prior);

enum class OutputQuantity { kU, kW, kDA, kDB, kAngles };

// u, w, d_a, d_b, angles.
std::string_view OutputName(OutputQuantity q);
std::optional<OutputQuantity> ParseOutput(std::string_view name);

struct SweepSpec {
  StateKind family = StateKind::kWerner;
  std::optional<DensityMatrix> custom_state;
  double param_start = 0.0;
  double param_end = 1.0;
  double param_step = 0.01;
  Protocol protocol = Protocol::kMaximizePayoff;
  std::vector<OutputQuantity> outputs = {OutputQuantity::kU, OutputQuantity::kW,
                                         OutputQuantity::kDA, OutputQuantity::kDB,
                                         OutputQuantity::kAngles};
  PayoffTable payoffs = PayoffTable::Chsh();
  Prior prior = Prior::Uniform();
  OptimizeOptions optimizer;
  DiscordOptions discord;

  // Throws std::invalid_argument unless step > 0, start <= end and there are
  // at least two sample points.
  void Validate() const;
  // start + i * step for every i with the point not beyond end (1e-9 slack).
  std::vector<double> SamplePoints() const;
  bool Wants(OutputQuantity q) const;
};

struct SweepRecord {
  double param = 0.0;
  double theta_a = 0.0;
  double theta_ap = 0.0;
  double theta_b = 0.0;
  double theta_bp = 0.0;
  double u = 0.0;
  double w = 0.0;
  double d_a = 0.0;
  double d_b = 0.0;
  Protocol protocol = Protocol::kMaximizePayoff;

  // The quantity the protocol extremized (u or w).
  double ObjectiveValue() const;
  SettingsBundle Settings() const {
    return SettingsBundle::InPlane(theta_a, theta_ap, theta_b, theta_bp);
  }
};

// One refined multi-start candidate of a sweep point.
struct CandidateRecord {
  double param = 0.0;
  int rank = 0;
  std::vector<double> angles;
  double objective = 0.0;
  double u = 0.0;
  double w = 0.0;
  bool converged = false;
  bool multimodal = false;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  std::vector<CandidateRecord> candidates;
};

// Single sample point; appends candidates when `candidates` is non-null.
SweepRecord EvaluateSweepPoint(const SweepSpec& spec, double param,
                               std::vector<CandidateRecord>* candidates);

// Evaluates points on up to `threads` workers (0 = hardware concurrency).
// Records come back in parameter order. A failing point aborts the sweep with
// a std::runtime_error naming the point.
SweepResult RunSweep(const SweepSpec& spec, int threads = 0);

enum class Format { kCsv, kJson };
std::optional<Format> ParseFormat(std::string_view name);

inline constexpr std::string_view kCsvHeader =
    "param,theta_a,theta_ap,theta_b,theta_bp,u,w,d_a,d_b,protocol";

// Throws std::invalid_argument on an empty record list.
std::string ToCsv(std::span<const SweepRecord> records);
nlohmann::json ToJson(std::span<const SweepRecord> records);
std::vector<SweepRecord> ParseCsv(std::string_view text);
std::vector<SweepRecord> ParseJsonRecords(const nlohmann::json& j);

// Writes records; throws std::invalid_argument when empty and
// std::runtime_error when the path cannot be written.
void Emit(std::span<const SweepRecord> records, Format format,
          const std::filesystem::path& path);

std::string CandidatesToCsv(std::span<const CandidateRecord> candidates);

struct PlotOptions {
  std::string title = "sweep";
  std::string xlabel = "parameter";
  bool show_u = true;
  bool show_w = true;
  // Output image written by gnuplot; defaults to the script path with .png.
  std::string image;
};

// gnuplot script with the data inlined. Witness protocols add the -W overlay.
// Throws std::invalid_argument for fewer than two records.
std::string PlotScript(std::span<const SweepRecord> records,
                       const PlotOptions& options);
void EmitPlotScript(std::span<const SweepRecord> records,
                    const std::filesystem::path& path, PlotOptions options);

void WriteTextFile(const std::filesystem::path& path, std::string_view text);

struct StateReport {
  std::string label;
  std::vector<double> angles;  // payoff-maximizing in-plane angles
  double u = 0.0;
  double chsh = 0.0;
  double w = 0.0;
  CorrelationSet correlations;
  Decomposition decomposition;
  DiscordResult d_a;
  DiscordResult d_b;
  double mutual_information = 0.0;
  double classical_bound = 0.0;
  std::vector<double> spectrum;
  std::vector<double> spectrum_a;
  std::vector<double> spectrum_b;
};

StateReport ReportState(const DensityMatrix& rho, std::string label,
                        const PayoffTable& pay = PayoffTable::Chsh(),
                        const Prior& prior = Prior::Uniform(),
                        const OptimizeOptions& optimizer = {},
                        const DiscordOptions& discord = {});
std::string FormatReport(const StateReport& report);
nlohmann::json ReportToJson(const StateReport& report);

// 16 complex entries, row-major, as [re, im] pairs: either a bare array or
// {"entries": [...]}. Throws InvalidStateError for invalid states and
// std::invalid_argument for malformed JSON.
DensityMatrix ParseCustomState(const nlohmann::json& j);
DensityMatrix LoadCustomState(const std::filesystem::path& path);

// Config keys mirror SweepSpec: family, param_start, param_end, param_step,
// protocol, outputs, grid, custom_state (path or inline entries), payoffs
// {entries: [16]}, prior {p: [4]}. Missing keys keep `base` values, so CHSH
// presets apply by default. Relative custom_state paths resolve against
// `base_dir`.
SweepSpec ParseSweepConfig(const nlohmann::json& j, SweepSpec base = {},
                           const std::filesystem::path& base_dir = {});
SweepSpec LoadSweepConfig(const std::filesystem::path& path,
                          SweepSpec base = {});

struct FigurePanel {
  std::string name;  // file stem, e.g. fig1a
  std::string title;
  std::string xlabel;
  SweepSpec spec;
};

// Panels of the named figure presets: 1 (payoff maximized; Werner and rho_D),
// 2 (witness maximized and minimized; Werner and rho_D), 3 (appendix state,
// payoff maximized). Throws std::invalid_argument for other numbers.
std::vector<FigurePanel> FigurePanels(int figure, int grid_resolution = 16);

struct SelfTestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Fast invariant checks against closed-form oracles.
std::vector<SelfTestCheck> RunSelfTest();

}  // namespace qdgame

#endif  // QDGAME_EXPERIMENT_H_
