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

// qdgame: sweeps, single-state reports and figure presets for the quantum
// Bayesian CHSH game and the discord witness.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qdgame/experiment.h"

namespace {

using qdgame::Format;
using qdgame::SweepSpec;

// Accepts plain numbers and multiples of pi: "1.5", "pi", "2pi", "pi/2",
// "0.5pi".
double ParseAngleLike(const std::string& token) {
  const auto bad = [&token]() { return std::invalid_argument("bad number '" + token + "'"); };
  const auto number = [&bad](const std::string& text) {
    size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != text.size()) throw bad();
    return v;
  };
  const auto pos = token.find("pi");
  if (pos == std::string::npos) return number(token);
  double factor = 1.0;
  if (pos > 0) {
    std::string head = token.substr(0, pos);
    if (head == "-") {
      factor = -1.0;
    } else {
      if (head.back() == '*') head.pop_back();
      factor = number(head);
    }
  }
  const std::string tail = token.substr(pos + 2);
  double divisor = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') throw bad();
    divisor = number(tail.substr(1));
  }
  return factor * qdgame::kPi / divisor;
}

void ParseRange(const std::string& range, SweepSpec& spec) {
  const auto first = range.find(':');
  const auto second = range.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw std::invalid_argument("--range expects start:end:step, got '" + range + "'");
  }
  spec.param_start = ParseAngleLike(range.substr(0, first));
  spec.param_end = ParseAngleLike(range.substr(first + 1, second - first - 1));
  spec.param_step = ParseAngleLike(range.substr(second + 1));
}

qdgame::StateKind RequireState(const std::string& name) {
  auto kind = qdgame::ParseStateKind(name);
  if (!kind) throw std::invalid_argument("unknown state '" + name + "'");
  return *kind;
}

Format RequireFormat(const std::string& name) {
  auto f = qdgame::ParseFormat(name);
  if (!f) throw std::invalid_argument("unknown format '" + name + "'");
  return *f;
}

qdgame::PlotOptions PlotOptionsFor(const SweepSpec& spec, std::string title,
                                   std::string xlabel) {
  qdgame::PlotOptions p;
  p.title = std::move(title);
  p.xlabel = std::move(xlabel);
  p.show_u = spec.Wants(qdgame::OutputQuantity::kU);
  p.show_w = spec.Wants(qdgame::OutputQuantity::kW);
  return p;
}

void WriteRecords(const qdgame::SweepResult& result, Format format,
                  const std::string& out) {
  if (out.empty() || out == "-") {
    if (format == Format::kCsv) {
      std::cout << qdgame::ToCsv(result.records);
    } else {
      std::cout << qdgame::ToJson(result.records).dump(2) << "\n";
    }
    return;
  }
  qdgame::Emit(result.records, format, out);
}

struct SweepArgs {
  std::string state = "werner";
  std::string range;
  std::string protocol;
  std::string out;
  std::string format = "csv";
  std::optional<int> grid;
  std::string plot;
  std::string config;
  std::string custom;
  std::string candidates;
  int threads = 0;
};

int RunSweepCommand(const SweepArgs& args, const CLI::App& cmd) {
  SweepSpec spec;
  if (!args.config.empty()) spec = qdgame::LoadSweepConfig(args.config, spec);
  if (cmd.count("--state") > 0 || args.config.empty()) {
    spec.family = RequireState(args.state);
  }
  if (!args.range.empty()) ParseRange(args.range, spec);
  if (!args.protocol.empty()) {
    auto p = qdgame::ParseProtocol(args.protocol);
    if (!p) throw std::invalid_argument("unknown protocol '" + args.protocol + "'");
    spec.protocol = *p;
  }
  if (args.grid) spec.optimizer.resolution = *args.grid;
  if (!args.custom.empty()) spec.custom_state = qdgame::LoadCustomState(args.custom);

  const qdgame::SweepResult result = qdgame::RunSweep(spec, args.threads);
  WriteRecords(result, RequireFormat(args.format), args.out);
  if (!args.plot.empty()) {
    qdgame::EmitPlotScript(
        result.records, args.plot,
        PlotOptionsFor(spec,
                       std::string(qdgame::StateKindName(spec.family)) + ", " +
                           std::string(qdgame::ProtocolName(spec.protocol)),
                       "parameter"));
  }
  if (!args.candidates.empty()) {
    qdgame::WriteTextFile(args.candidates, qdgame::CandidatesToCsv(result.candidates));
  }
  return 0;
}

int RunFigureCommand(int figure, const std::string& out_dir, int grid,
                     const std::string& format_name, int threads) {
  const Format format = RequireFormat(format_name);
  const std::filesystem::path dir = out_dir.empty() ? "." : out_dir;
  std::filesystem::create_directories(dir);
  for (const qdgame::FigurePanel& panel : qdgame::FigurePanels(figure, grid)) {
    const qdgame::SweepResult result = qdgame::RunSweep(panel.spec, threads);
    const std::string ext = format == Format::kCsv ? ".csv" : ".json";
    qdgame::Emit(result.records, format, dir / (panel.name + ext));
    qdgame::WriteTextFile(dir / (panel.name + "_candidates.csv"),
                          qdgame::CandidatesToCsv(result.candidates));
    qdgame::EmitPlotScript(result.records, dir / (panel.name + ".gp"),
                           PlotOptionsFor(panel.spec, panel.title, panel.xlabel));
    std::cerr << "wrote " << (dir / (panel.name + ext)).string() << " ("
              << result.records.size() << " points)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Bayesian CHSH game, discord witness and quantum discord"};
  app.require_subcommand(1);

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "Sweep a state family and extremize one quantity per point");
  sweep->add_option("--state", sweep_args.state, "werner|rhod|appendix|singlet|product|custom");
  sweep->add_option("--range", sweep_args.range, "start:end:step (multiples of pi allowed, e.g. 0:2pi:0.02)");
  sweep->add_option("--protocol", sweep_args.protocol, "payoff-max|witness-max|witness-min");
  sweep->add_option("--out", sweep_args.out, "Output file (stdout when omitted)");
  sweep->add_option("--format", sweep_args.format, "csv|json");
  sweep->add_option("--grid", sweep_args.grid, "Grid points per angle for seeding");
  sweep->add_option("--plot", sweep_args.plot, "Write a gnuplot script here");
  sweep->add_option("--config", sweep_args.config, "JSON sweep config");
  sweep->add_option("--custom", sweep_args.custom, "JSON file with a custom 4x4 state");
  sweep->add_option("--candidates", sweep_args.candidates, "Write all multi-start candidates (CSV)");
  sweep->add_option("--threads", sweep_args.threads, "Worker threads (0 = all cores)");

  std::string report_state = "werner";
  std::string report_param = "0";
  std::string report_custom;
  std::string report_format = "text";
  int report_grid = 16;
  CLI::App* report = app.add_subcommand("report", "Report every quantity for one state");
  report->add_option("--state", report_state, "werner|rhod|appendix|singlet|product|custom");
  report->add_option("--param", report_param, "State parameter (eta or x; multiples of pi allowed)");
  report->add_option("--custom", report_custom, "JSON file with a custom 4x4 state");
  report->add_option("--format", report_format, "text|json");
  report->add_option("--grid", report_grid, "Grid points per angle for seeding");

  struct FigureArgs {
    std::string out = ".";
    int grid = 16;
    std::string format = "csv";
    int threads = 0;
  };
  FigureArgs fig_args[3];
  CLI::App* figs[3];
  const char* fig_help[3] = {
      "Payoff maximized; u and W for the Werner state and rho_D(x)",
      "Witness maximized and minimized; Werner state and rho_D(x)",
      "Appendix state, payoff maximized"};
  for (int i = 0; i < 3; ++i) {
    figs[i] = app.add_subcommand("fig" + std::to_string(i + 1), fig_help[i]);
    figs[i]->add_option("--out", fig_args[i].out, "Output directory");
    figs[i]->add_option("--grid", fig_args[i].grid, "Grid points per angle for seeding");
    figs[i]->add_option("--format", fig_args[i].format, "csv|json");
    figs[i]->add_option("--threads", fig_args[i].threads, "Worker threads (0 = all cores)");
  }

  CLI::App* selftest = app.add_subcommand("selftest", "Run fast invariant checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) return RunSweepCommand(sweep_args, *sweep);
    if (report->parsed()) {
      const double param = ParseAngleLike(report_param);
      qdgame::StateFamily family{RequireState(report_state), param, std::nullopt};
      if (family.kind == qdgame::StateKind::kCustom) {
        if (report_custom.empty()) throw std::invalid_argument("--state custom needs --custom <path>");
        family.custom = qdgame::LoadCustomState(report_custom);
      }
      qdgame::OptimizeOptions opt;
      opt.resolution = report_grid;
      std::string label = std::string(qdgame::StateKindName(family.kind));
      if (family.kind != qdgame::StateKind::kCustom && family.kind != qdgame::StateKind::kSinglet) {
        label += "(" + report_param + ")";
      }
      const qdgame::StateReport r =
          qdgame::ReportState(family.Realize(), label, qdgame::PayoffTable::Chsh(),
                              qdgame::Prior::Uniform(), opt);
      if (report_format == "json") {
        std::cout << qdgame::ReportToJson(r).dump(2) << "\n";
      } else if (report_format == "text") {
        std::cout << qdgame::FormatReport(r);
      } else {
        throw std::invalid_argument("unknown report format '" + report_format + "'");
      }
      return 0;
    }
    for (int i = 0; i < 3; ++i) {
      if (figs[i]->parsed()) {
        return RunFigureCommand(i + 1, fig_args[i].out, fig_args[i].grid,
                                fig_args[i].format, fig_args[i].threads);
      }
    }
    if (selftest->parsed()) {
      bool all = true;
      for (const qdgame::SelfTestCheck& c : qdgame::RunSelfTest()) {
        std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << " (" << c.detail << ")\n";
        all = all && c.passed;
      }
      return all ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "qdgame: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
