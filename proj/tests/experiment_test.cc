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

#include "qdgame/experiment.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "test_support.h"

namespace qdgame {
namespace {

namespace fs = std::filesystem;

constexpr double kHalfSqrt2 = 0.70710678118654752440;

fs::path ScratchDir(const std::string& name) {
  fs::path dir = fs::path(::testing::TempDir()) / ("qdgame_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string ReadFile(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int CountLines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

SweepSpec Spec(StateKind kind, double start, double end, double step, Protocol p) {
  SweepSpec s;
  s.family = kind;
  s.param_start = start;
  s.param_end = end;
  s.param_step = step;
  s.protocol = p;
  return s;
}

SweepRecord SampleRecord(double param) {
  SweepRecord r;
  r.param = param;
  r.theta_a = 0.1 * param;
  r.theta_ap = 1.0 / 3.0;
  r.theta_b = kPi;
  r.theta_bp = 6.2;
  r.u = -0.123456789012345;
  r.w = 1e-17;
  r.d_a = 0.987654321;
  r.d_b = 0.0;
  r.protocol = Protocol::kMinimizeWitness;
  return r;
}

TEST(ProtocolTest, NamesRoundTrip) {
  for (Protocol p : {Protocol::kMaximizePayoff, Protocol::kMaximizeWitness,
                     Protocol::kMinimizeWitness}) {
    EXPECT_EQ(ParseProtocol(ProtocolName(p)), p);
  }
  EXPECT_FALSE(ParseProtocol("payoff-min").has_value());
  EXPECT_EQ(ParseOutput("d_a"), OutputQuantity::kDA);
  EXPECT_FALSE(ParseOutput("discord").has_value());
}

TEST(SweepSpecTest, SamplePointsIncludeEnd) {
  SweepSpec s = Spec(StateKind::kWerner, 0.0, 1.0, 0.1, Protocol::kMaximizePayoff);
  auto pts = s.SamplePoints();
  ASSERT_EQ(pts.size(), 11u);
  EXPECT_NEAR(pts.back(), 1.0, 1e-12);
  s = Spec(StateKind::kDiscordedSeparable, 0.0, kTwoPi, 0.02, Protocol::kMaximizePayoff);
  EXPECT_EQ(s.SamplePoints().size(), 315u);
}

TEST(SweepSpecTest, ValidationErrors) {
  EXPECT_THROW(Spec(StateKind::kWerner, 0, 1, 0, Protocol::kMaximizePayoff).Validate(),
               std::invalid_argument);
  EXPECT_THROW(Spec(StateKind::kWerner, 1, 0, 0.1, Protocol::kMaximizePayoff).Validate(),
               std::invalid_argument);
  EXPECT_THROW(Spec(StateKind::kWerner, 0, 0.5, 1.0, Protocol::kMaximizePayoff).Validate(),
               std::invalid_argument);
  EXPECT_THROW(Spec(StateKind::kCustom, 0, 1, 0.5, Protocol::kMaximizePayoff).Validate(),
               std::invalid_argument);
  EXPECT_NO_THROW(Spec(StateKind::kWerner, 0, 1, 1, Protocol::kMaximizePayoff).Validate());
}

TEST(RunSweepTest, WernerEndpoints) {
  SweepResult r = RunSweep(Spec(StateKind::kWerner, 0, 1, 1, Protocol::kMaximizePayoff), 1);
  ASSERT_EQ(r.records.size(), 2u);
  const SweepRecord& zero = r.records[0];
  const SweepRecord& one = r.records[1];
  EXPECT_LE(std::abs(zero.u), 1e-12);
  EXPECT_LE(std::abs(zero.w), 1e-12);
  EXPECT_LE(zero.d_a, 1e-8);
  EXPECT_NEAR(std::abs(one.u), kHalfSqrt2, 1e-6);
  EXPECT_NEAR(one.d_a, 1.0, 1e-6);
  EXPECT_NEAR(one.d_b, 1.0, 1e-6);
  EXPECT_EQ(one.protocol, Protocol::kMaximizePayoff);
}

TEST(RunSweepTest, DiscordedSeparableEndpoints) {
  SweepResult r =
      RunSweep(Spec(StateKind::kDiscordedSeparable, 0, kPi, kPi, Protocol::kMaximizePayoff), 1);
  ASSERT_EQ(r.records.size(), 2u);
  for (const SweepRecord& rec : r.records) {
    // |up up> carries no correlation of any kind, but a product pure state
    // still reaches the local deterministic payoff 1/2.
    EXPECT_NEAR(std::abs(rec.u), 0.5, 1e-9);
    EXPECT_LE(std::abs(rec.w), 1e-6);
    EXPECT_LE(rec.d_a, 1e-6);
    EXPECT_LE(rec.d_b, 1e-6);
  }
}

TEST(RunSweepTest, AppendixWitnessVanishesWhileDiscordDoesNot) {
  SweepResult r = RunSweep(Spec(StateKind::kAppendixZeroWitness, kPi / 2 - 0.3, kPi / 2 + 0.3,
                                0.3, Protocol::kMaximizeWitness),
                           1);
  ASSERT_EQ(r.records.size(), 3u);
  for (const SweepRecord& rec : r.records) EXPECT_LE(std::abs(rec.w), 1e-6);
  EXPECT_GT(r.records.front().d_a, 1e-3);
  EXPECT_GT(r.records.back().d_a, 1e-3);
}

TEST(RunSweepTest, WernerShape) {
  SweepResult r = RunSweep(Spec(StateKind::kWerner, 0, 1, 0.1, Protocol::kMaximizePayoff), 1);
  for (size_t i = 0; i < r.records.size(); ++i) {
    const SweepRecord& rec = r.records[i];
    EXPECT_NEAR(std::abs(rec.u), kHalfSqrt2 * rec.param, 1e-6);
    EXPECT_NEAR(rec.d_a, testing::WernerDiscordOracle(rec.param), 1e-7);
    if (rec.param > 0) EXPECT_GT(std::abs(rec.w), 1e-6);
    if (i > 0) EXPECT_GE(std::abs(rec.u), std::abs(r.records[i - 1].u) - 1e-9);
  }
}

TEST(RunSweepTest, StoredAnglesReproduceObjective) {
  for (Protocol p : {Protocol::kMaximizePayoff, Protocol::kMaximizeWitness,
                     Protocol::kMinimizeWitness}) {
    SweepSpec spec = Spec(StateKind::kWerner, 0.2, 0.8, 0.3, p);
    for (const SweepRecord& rec : RunSweep(spec, 1).records) {
      const DensityMatrix rho = Werner(rec.param);
      Objective obj = MakeObjective(p, rho, spec.payoffs, spec.prior);
      EXPECT_NEAR(obj.Evaluate(rec.Settings()), rec.ObjectiveValue(), 1e-10);
      EXPECT_NEAR(ExpectedPayoff(rho, rec.Settings(), spec.payoffs, spec.prior), rec.u, 1e-10);
      EXPECT_NEAR(WitnessW(rho, rec.Settings()), rec.w, 1e-10);
    }
  }
}

TEST(RunSweepTest, ThreadCountDoesNotChangeResults) {
  SweepSpec spec = Spec(StateKind::kDiscordedSeparable, 0.1, 1.1, 0.25, Protocol::kMinimizeWitness);
  EXPECT_EQ(ToCsv(RunSweep(spec, 1).records), ToCsv(RunSweep(spec, 3).records));
}

TEST(RunSweepTest, Reproducible) {
  SweepSpec spec = Spec(StateKind::kWerner, 0, 1, 0.25, Protocol::kMaximizeWitness);
  EXPECT_EQ(ToCsv(RunSweep(spec, 0).records), ToCsv(RunSweep(spec, 0).records));
}

TEST(RunSweepTest, CandidatesAreKept) {
  SweepSpec spec = Spec(StateKind::kWerner, 0.5, 1.0, 0.5, Protocol::kMaximizeWitness);
  SweepResult r = RunSweep(spec, 1);
  EXPECT_EQ(r.candidates.size(), 2u * static_cast<size_t>(spec.optimizer.starts));
  std::string csv = CandidatesToCsv(r.candidates);
  EXPECT_EQ(csv.rfind("param,rank,", 0), 0u);
  EXPECT_EQ(CountLines(csv), 1 + static_cast<int>(r.candidates.size()));
}

TEST(EmitTest, CsvHasHeaderAndOneLinePerRecord) {
  std::vector<SweepRecord> recs = {SampleRecord(0.0), SampleRecord(1.0)};
  std::string csv = ToCsv(recs);
  EXPECT_EQ(CountLines(csv), 3);
  EXPECT_EQ(csv.substr(0, kCsvHeader.size()), kCsvHeader);
  EXPECT_NE(csv.find("witness-min"), std::string::npos);
}

TEST(EmitTest, EmptyRecordsRejected) {
  EXPECT_THROW(ToCsv({}), std::invalid_argument);
  EXPECT_THROW(Emit({}, Format::kJson, ScratchDir("empty") / "x.json"), std::invalid_argument);
}

TEST(EmitTest, UnwritablePath) {
  std::vector<SweepRecord> recs = {SampleRecord(0.0), SampleRecord(1.0)};
  EXPECT_THROW(Emit(recs, Format::kCsv, "/nonexistent-dir/qdgame/out.csv"), std::runtime_error);
}

void ExpectRecordsNear(const std::vector<SweepRecord>& a, const std::vector<SweepRecord>& b) {
  ASSERT_EQ(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_NEAR(a[i].param, b[i].param, 1e-11);
    EXPECT_NEAR(a[i].theta_a, b[i].theta_a, 1e-11);
    EXPECT_NEAR(a[i].theta_ap, b[i].theta_ap, 1e-11);
    EXPECT_NEAR(a[i].theta_b, b[i].theta_b, 1e-11);
    EXPECT_NEAR(a[i].theta_bp, b[i].theta_bp, 1e-11);
    EXPECT_NEAR(a[i].u, b[i].u, 1e-11);
    EXPECT_NEAR(a[i].w, b[i].w, 1e-11);
    EXPECT_NEAR(a[i].d_a, b[i].d_a, 1e-11);
    EXPECT_NEAR(a[i].d_b, b[i].d_b, 1e-11);
    EXPECT_EQ(a[i].protocol, b[i].protocol);
  }
}

TEST(EmitTest, CsvAndJsonRoundTrip) {
  SweepResult r = RunSweep(Spec(StateKind::kWerner, 0, 1, 0.5, Protocol::kMinimizeWitness), 1);
  ExpectRecordsNear(ParseCsv(ToCsv(r.records)), r.records);
  ExpectRecordsNear(ParseJsonRecords(ToJson(r.records)), r.records);

  const fs::path dir = ScratchDir("roundtrip");
  Emit(r.records, Format::kCsv, dir / "s.csv");
  Emit(r.records, Format::kJson, dir / "s.json");
  ExpectRecordsNear(ParseCsv(ReadFile(dir / "s.csv")), r.records);
  ExpectRecordsNear(ParseJsonRecords(nlohmann::json::parse(ReadFile(dir / "s.json"))), r.records);
}

TEST(EmitTest, ParseCsvRejectsBadInput) {
  EXPECT_THROW(ParseCsv("a,b\n1,2\n"), std::invalid_argument);
  EXPECT_THROW(ParseCsv(std::string(kCsvHeader) + "\n1,2,3\n"), std::invalid_argument);
}

TEST(PlotScriptTest, PayoffCurves) {
  std::vector<SweepRecord> recs = {SampleRecord(0.0), SampleRecord(1.0)};
  for (auto& r : recs) r.protocol = Protocol::kMaximizePayoff;
  std::string gp = PlotScript(recs, {});
  EXPECT_NE(gp.find("$data << EOD"), std::string::npos);
  EXPECT_NE(gp.find("title 'u'"), std::string::npos);
  EXPECT_NE(gp.find("title 'W'"), std::string::npos);
  EXPECT_EQ(gp.find("'-W'"), std::string::npos);
}

TEST(PlotScriptTest, WitnessProtocolAddsNegatedOverlay) {
  std::vector<SweepRecord> recs = {SampleRecord(0.0), SampleRecord(1.0)};
  EXPECT_NE(PlotScript(recs, {}).find("'-W'"), std::string::npos);
}

TEST(PlotScriptTest, SinglePointRejected) {
  std::vector<SweepRecord> one = {SampleRecord(0.0)};
  EXPECT_THROW(PlotScript(one, {}), std::invalid_argument);
}

TEST(ReportTest, MaximallyMixed) {
  StateReport r = ReportState(Werner(0), "werner(0)");
  EXPECT_NEAR(r.u, 0.0, 1e-12);
  EXPECT_NEAR(r.w, 0.0, 1e-12);
  EXPECT_LE(r.d_a.value, 1e-8);
  EXPECT_LE(r.d_b.value, 1e-8);
  EXPECT_NEAR(r.mutual_information, 0.0, 1e-10);
  EXPECT_EQ(r.classical_bound, 0.5);
}

TEST(ReportTest, Singlet) {
  StateReport r = ReportState(Singlet(), "singlet");
  EXPECT_NEAR(std::abs(r.chsh), 2 * std::sqrt(2.0), 1e-6);
  EXPECT_NEAR(r.d_a.value, 1.0, 1e-6);
  EXPECT_NEAR(r.d_b.value, 1.0, 1e-6);
  EXPECT_NEAR(r.mutual_information, 2.0, 1e-10);
  EXPECT_NEAR(r.spectrum.back(), 1.0, 1e-12);
  EXPECT_FALSE(FormatReport(r).empty());
  EXPECT_EQ(ReportToJson(r).at("state"), "singlet");
}

TEST(ReportTest, DiscordedSeparableBothDirections) {
  StateReport r = ReportState(DiscordedSeparable(kPi / 4), "rhod");
  EXPECT_GT(r.d_a.value, 1e-3);
  EXPECT_GT(r.d_b.value, 1e-3);
  // The state is symmetric under party exchange.
  EXPECT_NEAR(r.d_a.value, r.d_b.value, 1e-8);
  EXPECT_NEAR(r.decomposition.witness, 0.0, 1e-12);
}

TEST(ConfigTest, DefaultsAreChshPresets) {
  SweepSpec s = ParseSweepConfig(nlohmann::json::parse(R"({"family": "rhod"})"));
  EXPECT_EQ(s.family, StateKind::kDiscordedSeparable);
  EXPECT_EQ(s.payoffs.entries(), PayoffTable::Chsh().entries());
  EXPECT_EQ(s.prior.entries(), Prior::Uniform().entries());
}

TEST(ConfigTest, OverridesEveryKey) {
  auto j = nlohmann::json::parse(R"({
    "family": "werner", "param_start": 0.2, "param_end": 0.4, "param_step": 0.1,
    "protocol": "witness-max", "outputs": ["w", "d_a"], "grid": 8,
    "payoffs": {"entries": [1,0,0,0, 0,0,0,0, 0,0,0,0, 0,0,0,0]},
    "prior": {"p": [0.5, 0.5, 0, 0]}
  })");
  SweepSpec s = ParseSweepConfig(j);
  EXPECT_EQ(s.protocol, Protocol::kMaximizeWitness);
  EXPECT_EQ(s.optimizer.resolution, 8);
  EXPECT_TRUE(s.Wants(OutputQuantity::kW));
  EXPECT_FALSE(s.Wants(OutputQuantity::kU));
  EXPECT_EQ(s.payoffs.entries()[0], 1.0);
  EXPECT_EQ(s.prior.entries()[1], 0.5);
  EXPECT_EQ(s.SamplePoints().size(), 3u);
}

TEST(ConfigTest, MalformedConfigs) {
  using nlohmann::json;
  EXPECT_THROW(ParseSweepConfig(json::parse("[1, 2]")), std::invalid_argument);
  EXPECT_THROW(ParseSweepConfig(json::parse(R"({"family": "bell"})")), std::invalid_argument);
  EXPECT_THROW(ParseSweepConfig(json::parse(R"({"param_step": "x"})")), std::invalid_argument);
  EXPECT_THROW(ParseSweepConfig(json::parse(R"({"prior": [0.5, 0.6, 0, 0]})")),
               std::invalid_argument);
  EXPECT_THROW(ParseSweepConfig(json::parse(R"({"grid": 2})")), std::invalid_argument);
  EXPECT_THROW(LoadSweepConfig("/nonexistent/config.json"), std::runtime_error);
}

TEST(CustomStateTest, InlineAndFile) {
  const fs::path dir = ScratchDir("custom");
  // Bell state (|up up> + |down down>)/sqrt 2.
  const std::string bell = R"({"entries": [[0.5,0],[0,0],[0,0],[0.5,0],
      [0,0],[0,0],[0,0],[0,0], [0,0],[0,0],[0,0],[0,0], [0.5,0],[0,0],[0,0],[0.5,0]]})";
  std::ofstream(dir / "bell.json") << bell;
  std::ofstream(dir / "cfg.json") << R"({"family": "custom", "custom_state": "bell.json",
      "param_start": 0, "param_end": 1, "param_step": 1})";
  SweepSpec s = LoadSweepConfig(dir / "cfg.json");
  ASSERT_TRUE(s.custom_state.has_value());
  EXPECT_NEAR((*s.custom_state)(0, 3).real(), 0.5, 0.0);
  SweepResult r = RunSweep(s, 1);
  EXPECT_NEAR(std::abs(r.records[0].u), kHalfSqrt2, 1e-6);
  EXPECT_NEAR(r.records[0].d_a, 1.0, 1e-6);
  DensityMatrix inline_state = ParseCustomState(nlohmann::json::parse(bell));
  EXPECT_EQ(MaxAbsDiff(inline_state.matrix(), s.custom_state->matrix()), 0.0);
}

TEST(CustomStateTest, Rejections) {
  using nlohmann::json;
  EXPECT_THROW(ParseCustomState(json::parse("[[1,0]]")), std::invalid_argument);
  json not_psd = json::array();
  for (int i = 0; i < 16; ++i) not_psd.push_back({i == 0 ? 2.0 : (i == 5 ? -1.0 : 0.0), 0.0});
  EXPECT_THROW(ParseCustomState(not_psd), InvalidStateError);
}

TEST(FigurePanelsTest, Presets) {
  auto f1 = FigurePanels(1);
  ASSERT_EQ(f1.size(), 2u);
  EXPECT_EQ(f1[0].spec.family, StateKind::kWerner);
  EXPECT_EQ(f1[0].spec.SamplePoints().size(), 101u);
  EXPECT_EQ(f1[1].spec.family, StateKind::kDiscordedSeparable);
  auto f2 = FigurePanels(2);
  ASSERT_EQ(f2.size(), 4u);
  EXPECT_EQ(f2[1].spec.protocol, Protocol::kMinimizeWitness);
  auto f3 = FigurePanels(3, 12);
  ASSERT_EQ(f3.size(), 1u);
  EXPECT_EQ(f3[0].spec.family, StateKind::kAppendixZeroWitness);
  EXPECT_EQ(f3[0].spec.optimizer.resolution, 12);
  EXPECT_THROW(FigurePanels(4), std::invalid_argument);
}

TEST(SelfTest, AllChecksPass) {
  for (const SelfTestCheck& c : RunSelfTest()) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

}  // namespace
}  // namespace qdgame
