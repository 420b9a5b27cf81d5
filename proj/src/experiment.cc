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
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qdgame {
namespace {

using nlohmann::json;

// 12 significant digits everywhere a float is serialized.
std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double Rounded(double v) { return std::stod(Num(v)); }

std::vector<std::string> SplitCsvLine(std::string_view line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    fields.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

double ParseDouble(const std::string& s) {
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

Protocol RequireProtocol(std::string_view name) {
  auto p = ParseProtocol(name);
  if (!p) throw std::invalid_argument("unknown protocol '" + std::string(name) + "'");
  return *p;
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json ParseJsonText(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(what + ": " + e.what());
  }
}

}  // namespace

std::string_view ProtocolName(Protocol p) {
  switch (p) {
    case Protocol::kMaximizePayoff: return "payoff-max";
    case Protocol::kMaximizeWitness: return "witness-max";
    case Protocol::kMinimizeWitness: return "witness-min";
  }
  return "unknown";
}

std::optional<Protocol> ParseProtocol(std::string_view name) {
  for (Protocol p : {Protocol::kMaximizePayoff, Protocol::kMaximizeWitness,
                     Protocol::kMinimizeWitness}) {
    if (ProtocolName(p) == name) return p;
  }
  return std::nullopt;
}

Objective MakeObjective(Protocol p, const DensityMatrix& rho,
                        const PayoffTable& pay, const Prior& prior) {
  switch (p) {
    case Protocol::kMaximizePayoff:
      return Objective::ExpectedPayoff(rho, Direction::kMaximize, pay, prior);
    case Protocol::kMaximizeWitness:
      return Objective::Witness(rho, Direction::kMaximize);
    case Protocol::kMinimizeWitness:
      return Objective::Witness(rho, Direction::kMinimize);
  }
  throw std::invalid_argument("unknown protocol");
}

std::string_view OutputName(OutputQuantity q) {
  switch (q) {
    case OutputQuantity::kU: return "u";
    case OutputQuantity::kW: return "w";
    case OutputQuantity::kDA: return "d_a";
    case OutputQuantity::kDB: return "d_b";
    case OutputQuantity::kAngles: return "angles";
  }
  return "unknown";
}

std::optional<OutputQuantity> ParseOutput(std::string_view name) {
  for (OutputQuantity q : {OutputQuantity::kU, OutputQuantity::kW,
                           OutputQuantity::kDA, OutputQuantity::kDB,
                           OutputQuantity::kAngles}) {
    if (OutputName(q) == name) return q;
  }
  // Accept the capitalized spellings too.
  if (name == "W") return OutputQuantity::kW;
  if (name == "D_A") return OutputQuantity::kDA;
  if (name == "D_B") return OutputQuantity::kDB;
  return std::nullopt;
}

void SweepSpec::Validate() const {
  if (!std::isfinite(param_start) || !std::isfinite(param_end) ||
      !std::isfinite(param_step)) {
    throw std::invalid_argument("sweep range must be finite");
  }
  if (!(param_step > 0.0)) throw std::invalid_argument("sweep step must be > 0");
  if (param_start > param_end) {
    throw std::invalid_argument("sweep start must not exceed end");
  }
  if (SamplePoints().size() < 2) {
    throw std::invalid_argument("sweep needs at least two sample points");
  }
  if (family == StateKind::kCustom && !custom_state) {
    throw std::invalid_argument("custom sweep needs a custom state");
  }
}

std::vector<double> SweepSpec::SamplePoints() const {
  std::vector<double> points;
  if (!(param_step > 0.0) || param_start > param_end) return points;
  const double span = (param_end - param_start) / param_step;
  const long count = static_cast<long>(std::floor(span + 1e-9)) + 1;
  points.reserve(static_cast<size_t>(count));
  for (long i = 0; i < count; ++i) {
    points.push_back(param_start + static_cast<double>(i) * param_step);
  }
  return points;
}

bool SweepSpec::Wants(OutputQuantity q) const {
  return std::find(outputs.begin(), outputs.end(), q) != outputs.end();
}

double SweepRecord::ObjectiveValue() const {
  return protocol == Protocol::kMaximizePayoff ? u : w;
}

SweepRecord EvaluateSweepPoint(const SweepSpec& spec, double param,
                               std::vector<CandidateRecord>* candidates) {
  const DensityMatrix rho =
      StateFamily{spec.family, param, spec.custom_state}.Realize();
  const Objective obj = MakeObjective(spec.protocol, rho, spec.payoffs, spec.prior);
  const OptimizationResult opt = Optimize(obj, spec.optimizer);

  SweepRecord rec;
  rec.param = param;
  rec.protocol = spec.protocol;
  rec.theta_a = opt.angles[0];
  rec.theta_ap = opt.angles[1];
  rec.theta_b = opt.angles[2];
  rec.theta_bp = opt.angles[3];
  const SettingsBundle s = rec.Settings();
  rec.u = ExpectedPayoff(rho, s, spec.payoffs, spec.prior);
  rec.w = WitnessW(rho, s);
  rec.d_a = DiscordA(rho, spec.discord).value;
  rec.d_b = DiscordB(rho, spec.discord).value;

  if (candidates != nullptr) {
    int rank = 0;
    for (const Candidate& c : opt.candidates) {
      const SettingsBundle cs = obj.Settings(c.angles);
      candidates->push_back({param, rank++, c.angles, c.value,
                             ExpectedPayoff(rho, cs, spec.payoffs, spec.prior),
                             WitnessW(rho, cs), c.converged, opt.multimodal});
    }
  }
  return rec;
}

SweepResult RunSweep(const SweepSpec& spec, int threads) {
  spec.Validate();
  const std::vector<double> points = spec.SamplePoints();
  const size_t n = points.size();

  std::vector<SweepRecord> records(n);
  std::vector<std::vector<CandidateRecord>> cands(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<size_t> next{0};

  auto worker = [&]() {
    for (size_t i = next++; i < n; i = next++) {
      try {
        records[i] = EvaluateSweepPoint(spec, points[i], &cands[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  unsigned workers = threads > 0 ? static_cast<unsigned>(threads)
                                 : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(n));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }

  for (size_t i = 0; i < n; ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const std::exception& e) {
      throw std::runtime_error("sweep point " + std::to_string(i) +
                               " (param=" + Num(points[i]) + "): " + e.what());
    }
  }

  SweepResult out;
  out.records = std::move(records);
  for (auto& c : cands) {
    out.candidates.insert(out.candidates.end(), c.begin(), c.end());
  }
  return out;
}

std::optional<Format> ParseFormat(std::string_view name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  return std::nullopt;
}

std::string ToCsv(std::span<const SweepRecord> records) {
  if (records.empty()) throw std::invalid_argument("no records to emit");
  std::string out(kCsvHeader);
  out += '\n';
  for (const SweepRecord& r : records) {
    out += Num(r.param) + ',' + Num(r.theta_a) + ',' + Num(r.theta_ap) + ',' +
           Num(r.theta_b) + ',' + Num(r.theta_bp) + ',' + Num(r.u) + ',' +
           Num(r.w) + ',' + Num(r.d_a) + ',' + Num(r.d_b) + ',' +
           std::string(ProtocolName(r.protocol)) + '\n';
  }
  return out;
}

json ToJson(std::span<const SweepRecord> records) {
  if (records.empty()) throw std::invalid_argument("no records to emit");
  json arr = json::array();
  for (const SweepRecord& r : records) {
    arr.push_back({{"param", Rounded(r.param)},
                   {"theta_a", Rounded(r.theta_a)},
                   {"theta_ap", Rounded(r.theta_ap)},
                   {"theta_b", Rounded(r.theta_b)},
                   {"theta_bp", Rounded(r.theta_bp)},
                   {"u", Rounded(r.u)},
                   {"w", Rounded(r.w)},
                   {"d_a", Rounded(r.d_a)},
                   {"d_b", Rounded(r.d_b)},
                   {"protocol", std::string(ProtocolName(r.protocol))}});
  }
  return json{{"records", arr}};
}

std::vector<SweepRecord> ParseCsv(std::string_view text) {
  std::vector<SweepRecord> records;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::invalid_argument("CSV header mismatch");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = SplitCsvLine(line);
    if (f.size() != 10) {
      throw std::invalid_argument("CSV row has " + std::to_string(f.size()) +
                                  " fields, expected 10");
    }
    SweepRecord r;
    r.param = ParseDouble(f[0]);
    r.theta_a = ParseDouble(f[1]);
    r.theta_ap = ParseDouble(f[2]);
    r.theta_b = ParseDouble(f[3]);
    r.theta_bp = ParseDouble(f[4]);
    r.u = ParseDouble(f[5]);
    r.w = ParseDouble(f[6]);
    r.d_a = ParseDouble(f[7]);
    r.d_b = ParseDouble(f[8]);
    r.protocol = RequireProtocol(f[9]);
    records.push_back(r);
  }
  return records;
}

std::vector<SweepRecord> ParseJsonRecords(const json& j) {
  std::vector<SweepRecord> records;
  for (const json& e : j.at("records")) {
    SweepRecord r;
    r.param = e.at("param").get<double>();
    r.theta_a = e.at("theta_a").get<double>();
    r.theta_ap = e.at("theta_ap").get<double>();
    r.theta_b = e.at("theta_b").get<double>();
    r.theta_bp = e.at("theta_bp").get<double>();
    r.u = e.at("u").get<double>();
    r.w = e.at("w").get<double>();
    r.d_a = e.at("d_a").get<double>();
    r.d_b = e.at("d_b").get<double>();
    r.protocol = RequireProtocol(e.at("protocol").get<std::string>());
    records.push_back(r);
  }
  return records;
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

void Emit(std::span<const SweepRecord> records, Format format,
          const std::filesystem::path& path) {
  if (records.empty()) throw std::invalid_argument("no records to emit");
  WriteTextFile(path, format == Format::kCsv ? ToCsv(records)
                                             : ToJson(records).dump(2) + "\n");
}

std::string CandidatesToCsv(std::span<const CandidateRecord> candidates) {
  std::string out =
      "param,rank,theta_a,theta_ap,theta_b,theta_bp,objective,u,w,converged,"
      "multimodal\n";
  for (const CandidateRecord& c : candidates) {
    out += Num(c.param) + ',' + std::to_string(c.rank);
    for (size_t d = 0; d < 4; ++d) {
      out += ',' + Num(d < c.angles.size() ? c.angles[d] : 0.0);
    }
    out += ',' + Num(c.objective) + ',' + Num(c.u) + ',' + Num(c.w) + ',' +
           (c.converged ? "1" : "0") + ',' + (c.multimodal ? "1" : "0") + '\n';
  }
  return out;
}

std::string PlotScript(std::span<const SweepRecord> records,
                       const PlotOptions& options) {
  if (records.size() < 2) {
    throw std::invalid_argument("a plot needs at least two sweep points");
  }
  const bool witness_protocol =
      records.front().protocol != Protocol::kMaximizePayoff;
  std::ostringstream s;
  s << "# gnuplot script: " << options.title << "\n"
    << "# protocol: " << ProtocolName(records.front().protocol) << "\n"
    << "set terminal pngcairo size 900,600\n"
    << "set output '" << (options.image.empty() ? "sweep.png" : options.image)
    << "'\n"
    << "set title '" << options.title << "'\n"
    << "set xlabel '" << options.xlabel << "'\n"
    << "set key outside right\n"
    << "set grid\n"
    << "$data << EOD\n";
  for (const SweepRecord& r : records) {
    s << Num(r.param) << ' ' << Num(r.u) << ' ' << Num(r.w) << '\n';
  }
  s << "EOD\n";

  std::vector<std::string> curves;
  if (options.show_u) curves.push_back("$data using 1:2 with lines lw 2 title 'u'");
  if (options.show_w) {
    curves.push_back("$data using 1:3 with lines lw 2 title 'W'");
    if (witness_protocol) {
      curves.push_back("$data using 1:(-$3) with lines dt 2 lw 2 title '-W'");
    }
  }
  if (curves.empty()) throw std::invalid_argument("plot has no curves selected");
  s << "plot ";
  for (size_t i = 0; i < curves.size(); ++i) {
    s << (i ? ", \\\n     " : "") << curves[i];
  }
  s << "\n";
  return s.str();
}

void EmitPlotScript(std::span<const SweepRecord> records,
                    const std::filesystem::path& path, PlotOptions options) {
  if (options.image.empty()) {
    options.image = std::filesystem::path(path).replace_extension(".png").string();
  }
  WriteTextFile(path, PlotScript(records, options));
}

StateReport ReportState(const DensityMatrix& rho, std::string label,
                        const PayoffTable& pay, const Prior& prior,
                        const OptimizeOptions& optimizer,
                        const DiscordOptions& discord) {
  StateReport r;
  r.label = std::move(label);
  const Objective obj = Objective::ExpectedPayoff(rho, Direction::kMaximize, pay, prior);
  const OptimizationResult opt = Optimize(obj, optimizer);
  r.angles = opt.angles;
  const SettingsBundle s = obj.Settings(opt.angles);
  r.u = ExpectedPayoff(rho, s, pay, prior);
  r.chsh = ChshValue(rho, s);
  r.correlations = Correlations(rho, s);
  r.w = r.correlations.Witness();
  r.decomposition = Decompose(r.correlations);
  r.d_a = DiscordA(rho, discord);
  r.d_b = DiscordB(rho, discord);
  r.mutual_information = MutualInformation(rho);
  r.classical_bound = BestDeterministicStrategy(pay, prior).payoff;
  r.spectrum = HermitianEigenvalues(rho.matrix());
  r.spectrum_a = HermitianEigenvalues(PartialTrace(rho.matrix(), Party::kA));
  r.spectrum_b = HermitianEigenvalues(PartialTrace(rho.matrix(), Party::kB));
  return r;
}

namespace {

std::string JoinNums(const std::vector<double>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + Num(v[i]);
  return out + "]";
}

json DiscordJson(const DiscordResult& d) {
  return {{"value", Rounded(d.value)},
          {"argmin_theta", Rounded(d.argmin_direction.theta)},
          {"argmin_phi", Rounded(d.argmin_direction.phi)},
          {"s_a", Rounded(d.s_a)},
          {"s_b", Rounded(d.s_b)},
          {"s_ab", Rounded(d.s_ab)},
          {"min_conditional_entropy", Rounded(d.min_conditional_entropy)}};
}

json NumArray(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(Rounded(x));
  return a;
}

json MaybeNum(double v) { return std::isfinite(v) ? json(Rounded(v)) : json(nullptr); }

}  // namespace

std::string FormatReport(const StateReport& r) {
  std::ostringstream s;
  const Decomposition& d = r.decomposition;
  s << "state: " << r.label << "\n"
    << "payoff-maximizing angles (theta_a, theta_a', theta_b, theta_b'): "
    << JoinNums(r.angles) << "\n"
    << "expected payoff u:        " << Num(r.u) << "  (|u| = " << Num(std::abs(r.u))
    << ", classical bound " << Num(r.classical_bound) << ")\n"
    << "CHSH <C>:                 " << Num(r.chsh) << "\n"
    << "witness W:                " << Num(r.w) << "\n"
    << "correlators Q:            ab=" << Num(r.correlations.q_ab)
    << " ab'=" << Num(r.correlations.q_abp) << " a'b=" << Num(r.correlations.q_apb)
    << " a'b'=" << Num(r.correlations.q_apbp) << "\n"
    << "decomposition:            ";
  if (d.degenerate) {
    s << "degenerate (some |Q| < " << Num(kDegenerateCorrelator)
      << "), eta_marginal=" << Num(d.eta_marginal) << "\n";
  } else {
    s << "mu=" << Num(d.mu) << " nu=" << Num(d.nu)
      << " eta_marginal=" << Num(d.eta_marginal)
      << " reconstructed_u=" << Num(d.reconstructed_u) << "\n";
  }
  s << "discord D_A (measure B):  " << Num(r.d_a.value) << " bits\n"
    << "discord D_B (measure A):  " << Num(r.d_b.value) << " bits\n"
    << "mutual information:       " << Num(r.mutual_information) << " bits\n"
    << "spectrum rho:             " << JoinNums(r.spectrum) << "\n"
    << "spectrum rho_A:           " << JoinNums(r.spectrum_a) << "\n"
    << "spectrum rho_B:           " << JoinNums(r.spectrum_b) << "\n";
  return s.str();
}

json ReportToJson(const StateReport& r) {
  const Decomposition& d = r.decomposition;
  return {{"state", r.label},
          {"angles", NumArray(r.angles)},
          {"u", Rounded(r.u)},
          {"chsh", Rounded(r.chsh)},
          {"w", Rounded(r.w)},
          {"q", {{"ab", Rounded(r.correlations.q_ab)},
                 {"abp", Rounded(r.correlations.q_abp)},
                 {"apb", Rounded(r.correlations.q_apb)},
                 {"apbp", Rounded(r.correlations.q_apbp)}}},
          {"decomposition", {{"mu", MaybeNum(d.mu)},
                             {"nu", MaybeNum(d.nu)},
                             {"eta_marginal", Rounded(d.eta_marginal)},
                             {"reconstructed_u", MaybeNum(d.reconstructed_u)},
                             {"degenerate", d.degenerate}}},
          {"d_a", DiscordJson(r.d_a)},
          {"d_b", DiscordJson(r.d_b)},
          {"mutual_information", Rounded(r.mutual_information)},
          {"classical_bound", Rounded(r.classical_bound)},
          {"spectrum", NumArray(r.spectrum)},
          {"spectrum_a", NumArray(r.spectrum_a)},
          {"spectrum_b", NumArray(r.spectrum_b)}};
}

DensityMatrix ParseCustomState(const json& j) {
  const json& entries = j.is_object() ? j.at("entries") : j;
  if (!entries.is_array() || entries.size() != 16) {
    throw std::invalid_argument("custom state needs 16 [re, im] entries");
  }
  std::vector<Complex> values;
  for (const json& e : entries) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw std::invalid_argument("custom state entries must be [re, im] pairs");
    }
    values.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return DensityMatrix(ComplexMatrix(4, std::move(values)));
}

DensityMatrix LoadCustomState(const std::filesystem::path& path) {
  return ParseCustomState(ParseJsonText(ReadTextFile(path), path.string()));
}

SweepSpec ParseSweepConfig(const json& j, SweepSpec base,
                           const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  try {
    if (j.contains("family")) {
      const auto name = j.at("family").get<std::string>();
      auto kind = ParseStateKind(name);
      if (!kind) throw std::invalid_argument("unknown family '" + name + "'");
      base.family = *kind;
    }
    if (j.contains("param_start")) base.param_start = j.at("param_start").get<double>();
    if (j.contains("param_end")) base.param_end = j.at("param_end").get<double>();
    if (j.contains("param_step")) base.param_step = j.at("param_step").get<double>();
    if (j.contains("protocol")) {
      base.protocol = RequireProtocol(j.at("protocol").get<std::string>());
    }
    if (j.contains("outputs")) {
      base.outputs.clear();
      for (const json& o : j.at("outputs")) {
        const auto name = o.get<std::string>();
        auto q = ParseOutput(name);
        if (!q) throw std::invalid_argument("unknown output '" + name + "'");
        base.outputs.push_back(*q);
      }
    }
    if (j.contains("grid")) base.optimizer.resolution = j.at("grid").get<int>();
    if (j.contains("payoffs")) {
      const json& p = j.at("payoffs");
      base.payoffs = PayoffTable(
          (p.is_object() ? p.at("entries") : p).get<std::array<double, 16>>());
    }
    if (j.contains("prior")) {
      const json& p = j.at("prior");
      base.prior = Prior((p.is_object() ? p.at("p") : p).get<std::array<double, 4>>());
    }
    if (j.contains("custom_state")) {
      const json& c = j.at("custom_state");
      if (c.is_string()) {
        std::filesystem::path path = c.get<std::string>();
        if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
        base.custom_state = LoadCustomState(path);
      } else {
        base.custom_state = ParseCustomState(c);
      }
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed config: ") + e.what());
  }
  if (base.optimizer.resolution < 4) {
    throw std::invalid_argument("grid resolution must be at least 4");
  }
  return base;
}

SweepSpec LoadSweepConfig(const std::filesystem::path& path, SweepSpec base) {
  return ParseSweepConfig(ParseJsonText(ReadTextFile(path), path.string()),
                          std::move(base), path.parent_path());
}

std::vector<FigurePanel> FigurePanels(int figure, int grid_resolution) {
  auto make = [grid_resolution](StateKind family, Protocol protocol, double end,
                                double step) {
    SweepSpec spec;
    spec.family = family;
    spec.protocol = protocol;
    spec.param_start = 0.0;
    spec.param_end = end;
    spec.param_step = step;
    spec.optimizer.resolution = grid_resolution;
    return spec;
  };
  const auto werner = StateKind::kWerner;
  const auto rhod = StateKind::kDiscordedSeparable;
  switch (figure) {
    case 1:
      return {{"fig1a", "Werner state, payoff maximized", "eta",
               make(werner, Protocol::kMaximizePayoff, 1.0, 0.01)},
              {"fig1b", "rho_D(x), payoff maximized", "x",
               make(rhod, Protocol::kMaximizePayoff, kTwoPi, 0.02)}};
    case 2:
      return {{"fig2a", "Werner state, witness maximized", "eta",
               make(werner, Protocol::kMaximizeWitness, 1.0, 0.01)},
              {"fig2b", "Werner state, witness minimized", "eta",
               make(werner, Protocol::kMinimizeWitness, 1.0, 0.01)},
              {"fig2c", "rho_D(x), witness maximized", "x",
               make(rhod, Protocol::kMaximizeWitness, kTwoPi, 0.02)},
              {"fig2d", "rho_D(x), witness minimized", "x",
               make(rhod, Protocol::kMinimizeWitness, kTwoPi, 0.02)}};
    case 3:
      return {{"fig3", "appendix state, payoff maximized", "x",
               make(StateKind::kAppendixZeroWitness, Protocol::kMaximizePayoff,
                    kTwoPi, 0.02)}};
    default:
      throw std::invalid_argument("no figure preset " + std::to_string(figure));
  }
}

}  // namespace qdgame
