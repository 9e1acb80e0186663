// Copyright 2026 The prslab Authors
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

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "prslab/combinat.h"
#include "prslab/crypto.h"
#include "prslab/errors.h"
#include "prslab/johnson.h"
#include "prslab/moments.h"
#include "prslab/spectral.h"
#include "prslab/states.h"

namespace prslab::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

// An emitted value broke its module's invariant.
class InvariantFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string out;
  std::string format = "csv";
  uint64_t seed = 0;
  uint64_t ceiling_dim = 4096;
  uint64_t ceiling_subsets = 1000000;

  Ceilings ceilings() const { return {ceiling_dim, ceiling_subsets}; }
  bool json() const { return format == "json"; }
};

void AddCommon(CLI::App* cmd, Common& c, bool with_format = true) {
  cmd->add_option("--out", c.out, "Write results to this file instead of stdout");
  if (with_format) cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--seed", c.seed, "Seed recorded in (and, where sampling happens, driving) the output");
  cmd->add_option("--ceiling-dim", c.ceiling_dim, "Largest dense matrix side allowed");
  cmd->add_option("--ceiling-subsets", c.ceiling_subsets, "Largest subset enumeration allowed");
}

std::string CsvPreamble(std::string_view command, const std::string& params, uint64_t seed) {
  std::ostringstream os;
  os << "# prslab " << command << " schema_version=" << kSchemaVersion << ' ' << params << " seed=" << seed << '\n';
  return os.str();
}

Json JsonPreamble(std::string_view command, uint64_t seed) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["seed"] = seed;
  return j;
}

void Emit(const Common& c, const std::string& payload, std::ostream& out) {
  if (c.out.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(c.out, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open output file '" + c.out + "'");
  file << payload;
}

std::string Fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", v);
  return buf;
}

// ---------------------------------------------------------------------------
// distance-sweep

struct SweepArgs {
  Common common;
  std::string d;
  std::string k = "1";
  std::string s;
};

std::string DistanceSweep(const SweepArgs& a, std::ostream& err) {
  const Ceilings ceilings = a.common.ceilings();
  std::vector<GridPoint> grid;
  const std::optional<std::vector<int>> s_values = a.s.empty() ? std::nullopt : std::optional(ParseRange(a.s));
  for (int d : ParseRange(a.d)) {
    for (int k : ParseRange(a.k)) {
      std::vector<int> ss;
      if (s_values) {
        ss = *s_values;
      } else {
        for (int s = k; s < d; ++s) ss.push_back(s);
      }
      for (int s : ss) {
        if (k >= 1 && k <= s && s <= d) grid.push_back({d, s, k});
      }
    }
  }
  if (grid.empty()) throw ContractViolation("distance-sweep: grid is empty (need 1 <= k <= s <= d)");
  for (const GridPoint& p : grid) {
    if (BigInt(Binomial(p.d, p.s)) > BigInt(static_cast<unsigned long>(ceilings.max_subsets)) ||
        PowU64(p.d, p.k) > ceilings.max_dim) {
      throw ResourceError("distance-sweep: point d=" + std::to_string(p.d) + " s=" + std::to_string(p.s) +
                          " k=" + std::to_string(p.k) + " exceeds the configured ceilings");
    }
  }

  SweepResult result = Sweep(grid, ceilings, a.common.seed);
  if (!result.errors.empty()) {
    const SweepError& e = result.errors.front();
    throw InvariantFailure("distance-sweep: point d=" + std::to_string(e.point.d) + " s=" + std::to_string(e.point.s) +
                           " k=" + std::to_string(e.point.k) + " failed: " + e.message);
  }
  for (const DistanceReport& r : result.reports) {
    if (!r.ChainHolds()) {
      throw InvariantFailure("distance-sweep: triangle chain violated at d=" + std::to_string(r.d) +
                             " s=" + std::to_string(r.s) + " k=" + std::to_string(r.k));
    }
  }
  err << "max_ratio=" << Fixed(result.MaxRatio()) << '\n';

  const std::string params = "d=" + a.d + " k=" + a.k + " s=" + (a.s.empty() ? "k..d-1" : a.s);
  if (!a.common.json()) {
    std::ostringstream os;
    os << CsvPreamble("distance-sweep", params, a.common.seed);
    WriteDistanceCsv(os, result.reports);
    return os.str();
  }
  Json j = JsonPreamble("distance-sweep", a.common.seed);
  j["params"] = {{"d", a.d}, {"k", a.k}, {"s", a.s.empty() ? "k..d-1" : a.s}};
  Json rows = Json::array();
  for (const DistanceReport& r : result.reports) {
    rows.push_back({{"d", r.d}, {"s", r.s}, {"k", r.k}, {"lhs", r.lhs}, {"bound", r.bound}, {"ratio", r.ratio},
                    {"gap_haar", r.gap_haar}, {"gap_subset", r.gap_subset}, {"gap_cross", r.gap_cross},
                    {"trace_mismatch", r.trace_mismatch}});
  }
  j["rows"] = std::move(rows);
  j["max_ratio"] = result.MaxRatio();
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// johnson-spectra

struct JohnsonArgs {
  Common common;
  std::string d;
  std::string k;
  std::string t;
};

struct JohnsonRow {
  JohnsonGraphSpec spec;
  int j;
  BigInt lambda;
  BigInt multiplicity;
  double numeric;
  double delta;
};

constexpr double kEigenTolerance = 1e-9;
constexpr double kClusterRadius = 1e-6;

std::string JohnsonSpectra(const JohnsonArgs& a) {
  const Ceilings ceilings = a.common.ceilings();
  std::vector<JohnsonRow> rows;
  std::vector<JohnsonGraphSpec> specs;
  for (int d : ParseRange(a.d)) {
    for (int k : ParseRange(a.k)) {
      std::vector<int> ts;
      if (a.t.empty()) {
        for (int t = 0; t < k; ++t) ts.push_back(t);
      } else {
        ts = ParseRange(a.t);
      }
      for (int t : ts) {
        if (0 <= t && t < k && k <= d) specs.push_back({d, k, t});
      }
    }
  }
  if (specs.empty()) throw ContractViolation("johnson-spectra: no (d, k, t) with 0 <= t < k <= d");

  for (const JohnsonGraphSpec& spec : specs) {
    const std::string where = "d=" + std::to_string(spec.d) + " k=" + std::to_string(spec.k) +
                              " t=" + std::to_string(spec.t);
    const JohnsonSpectrum closed = ClosedFormSpectrum(spec);
    const std::vector<double> numeric = SymEigenvalues(Adjacency(spec, ceilings));
    const std::vector<EigenCluster> clusters = ClusterEigenvalues(numeric, kClusterRadius);
    const std::vector<JohnsonEigenpair> expected = closed.Distinct();
    if (clusters.size() != expected.size()) {
      throw InvariantFailure("johnson-spectra: " + where + " has " + std::to_string(clusters.size()) +
                             " numeric eigenvalue clusters but " + std::to_string(expected.size()) +
                             " closed-form values");
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (std::abs(clusters[i].value - expected[i].eigenvalue.get_d()) >= kEigenTolerance ||
          BigInt(clusters[i].multiplicity) != expected[i].multiplicity) {
        throw InvariantFailure("johnson-spectra: " + where + " eigenvalue " + expected[i].eigenvalue.get_str() +
                               " does not match the numeric spectrum");
      }
    }
    for (std::size_t j = 0; j < closed.pairs.size(); ++j) {
      const double lambda = closed.pairs[j].eigenvalue.get_d();
      auto nearest = std::min_element(clusters.begin(), clusters.end(), [&](const auto& x, const auto& y) {
        return std::abs(x.value - lambda) < std::abs(y.value - lambda);
      });
      rows.push_back({spec, static_cast<int>(j), closed.pairs[j].eigenvalue, closed.pairs[j].multiplicity,
                      nearest->value, std::abs(nearest->value - lambda)});
    }
  }

  const std::string params = "d=" + a.d + " k=" + a.k + " t=" + (a.t.empty() ? "0..k-1" : a.t);
  if (!a.common.json()) {
    std::ostringstream os;
    os << CsvPreamble("johnson-spectra", params, a.common.seed);
    os << "d,k,t,j,lambda,multiplicity,numeric,delta\n";
    char buf[64];
    for (const JohnsonRow& r : rows) {
      std::snprintf(buf, sizeof(buf), "%.12f,%.3e", r.numeric, r.delta);
      os << r.spec.d << ',' << r.spec.k << ',' << r.spec.t << ',' << r.j << ',' << r.lambda.get_str() << ','
         << r.multiplicity.get_str() << ',' << buf << '\n';
    }
    return os.str();
  }
  Json j = JsonPreamble("johnson-spectra", a.common.seed);
  j["params"] = {{"d", a.d}, {"k", a.k}, {"t", a.t.empty() ? "0..k-1" : a.t}};
  Json out = Json::array();
  for (const JohnsonRow& r : rows) {
    out.push_back({{"d", r.spec.d}, {"k", r.spec.k}, {"t", r.spec.t}, {"j", r.j}, {"lambda", r.lambda.get_str()},
                   {"multiplicity", r.multiplicity.get_str()}, {"numeric", r.numeric}, {"delta", r.delta}});
  }
  j["rows"] = std::move(out);
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// moments-dump

struct MomentsArgs {
  Common common;
  std::string kind = "haar";
  int d = 0;
  int s = 0;
  int k = 1;
};

void CheckMoment(const MomentSpec& spec, const RationalMatrix& m) {
  const std::string where = std::string(MomentKindName(spec.kind)) + " d=" + std::to_string(spec.d) +
                            " k=" + std::to_string(spec.k) + (spec.s ? " s=" + std::to_string(*spec.s) : "");
  if (!m.IsSymmetric()) throw InvariantFailure("moments-dump: " + where + " is not symmetric");
  Rational expected_trace = 1;
  if (spec.kind == MomentKind::kHaarProjected) expected_trace = Rational::FromBig(ProjectedHaarTrace(spec.d, spec.k));
  if (spec.kind == MomentKind::kDistinctProjector) {
    expected_trace = Rational::FromBig(FallingFactorial(spec.d, spec.k), BigInt(1));
  }
  if (m.Trace() != expected_trace) {
    throw InvariantFailure("moments-dump: " + where + " has trace " + m.Trace().ToString() + ", expected " +
                           expected_trace.ToString());
  }
  const std::vector<double> ev = SymEigenvalues(m);
  if (!ev.empty() && ev.front() < -1e-10) throw InvariantFailure("moments-dump: " + where + " is not PSD");
}

std::string MomentsDump(const MomentsArgs& a) {
  MomentSpec spec{ParseMomentKind(a.kind), a.d, std::nullopt, a.k};
  if (spec.kind == MomentKind::kSubsetEnum || spec.kind == MomentKind::kSubsetClosedForm) spec.s = a.s;
  spec.Validate();
  const RationalMatrix m = BuildMoment(spec, a.common.ceilings());
  CheckMoment(spec, m);

  if (!a.common.json()) {
    std::string params = "kind=" + a.kind + " d=" + std::to_string(a.d) + " k=" + std::to_string(a.k);
    if (spec.s) params += " s=" + std::to_string(*spec.s);
    std::ostringstream os;
    os << CsvPreamble("moments-dump", params, a.common.seed);
    os << "row,col,value\n";
    for (std::size_t r = 0; r < m.dim(); ++r) {
      for (std::size_t c = 0; c < m.dim(); ++c) {
        if (!m(r, c).is_zero()) os << r << ',' << c << ',' << m(r, c).ToString() << '\n';
      }
    }
    return os.str();
  }
  Json matrix = Json::parse(ToJson(m));
  Json j = JsonPreamble("moments-dump", a.common.seed);
  j["kind"] = a.kind;
  if (spec.s) j["s"] = *spec.s;
  j["trace"] = m.Trace().ToString();
  for (auto& [key, value] : matrix.items()) {
    if (key != "schema_version") j[key] = value;
  }
  return j.dump() + "\n";
}

// ---------------------------------------------------------------------------
// distinguish

struct DistinguishArgs {
  Common common;
  std::string mode = "collision";
  std::string source = "subset";
  int n = 0;
  uint64_t d = 0;
  uint64_t s = 0;
  uint64_t copies = 1;
  uint64_t trials = 1000;
  std::string key;
};

std::string Distinguish(const DistinguishArgs& a) {
  const SourceKind kind = ParseSource(a.source);
  DistinguisherParams params;
  params.mode = ParseMode(a.mode);
  params.copies = a.copies;
  params.trials = a.trials;
  params.seed = a.common.seed;
  if (a.s > 0) params.hypothesis_s = a.s;

  uint64_t d = a.d;
  if (a.n > 0) {
    if (a.n > 24) throw ContractViolation("distinguish: --n must be at most 24");
    const uint64_t from_n = uint64_t{1} << a.n;
    if (d != 0 && d != from_n) throw ContractViolation("distinguish: --d and --n disagree");
    d = from_n;
  }
  Source src;
  switch (kind) {
    case SourceKind::kSubset: {
      if (a.n <= 0) throw ContractViolation("distinguish: subset source needs --n");
      if (a.s == 0) throw ContractViolation("distinguish: subset source needs --s");
      const PrpKey key = a.key.empty() ? PrpKey::FromSeed(a.common.seed, a.n) : PrpKey::FromHex(a.key, a.n);
      src = Source::FromKey(key, a.s);
      break;
    }
    case SourceKind::kHaar:
      if (d == 0) throw ContractViolation("distinguish: haar source needs --d or --n");
      src = Source::Haar(d);
      break;
    case SourceKind::kUniform:
      if (d == 0) throw ContractViolation("distinguish: uniform source needs --d or --n");
      src = Source::Uniform(d);
      break;
  }
  const DistinguisherReport r = DistinguisherSample(src, params);
  if (r.empirical < 0.0 || r.empirical > 1.0 || r.exact < 0 || r.exact > 1) {
    throw InvariantFailure("distinguish: acceptance probability outside [0, 1]");
  }
  if (r.mode == DistinguisherMode::kCollision && r.exact == 1 && r.accepted != r.events) {
    throw InvariantFailure("distinguish: a certain collision was not observed in every trial");
  }

  if (a.common.json()) {
    Json j = Json::parse(r.ToJson());
    j["command"] = "distinguish";
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << CsvPreamble("distinguish", "mode=" + a.mode + " source=" + a.source, a.common.seed);
  os << "mode,source,d,s,key,copies,trials,accepted,events,empirical,exact,std_error,threshold,decision\n";
  os << ModeName(r.mode) << ',' << SourceName(r.source) << ',' << r.d << ',' << r.s << ',' << r.key_hex << ','
     << r.copies << ',' << r.trials << ',' << r.accepted << ',' << r.events << ',' << Fixed(r.empirical) << ','
     << r.exact.get_str() << ',' << Fixed(r.std_error) << ',' << Fixed(r.threshold) << ',' << r.decision << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// entangle

struct EntangleArgs {
  Common common;
  int n = 0;
  uint64_t s = 0;
  bool all_cuts = false;
  int cut = 0;
  std::string key;
};

std::string Entangle(const EntangleArgs& a) {
  if (a.n < 2 || a.n % 2 != 0) throw ContractViolation("entangle: --n must be even and at least 2");
  if (!a.all_cuts && (a.cut < 1 || a.cut >= a.n)) throw ContractViolation("entangle: give --all-cuts or --cut in [1, n-1]");
  const PrpKey key = a.key.empty() ? PrpKey::FromSeed(a.common.seed, a.n) : PrpKey::FromHex(a.key, a.n);
  const StateVector state = PrsState(key, a.s);
  std::vector<EntropyRow> rows = EntropyProfile(state, a.s);
  if (!a.all_cuts) {
    std::erase_if(rows, [&](const EntropyRow& r) { return r.cut != a.cut; });
  }
  for (const EntropyRow& r : rows) {
    const int max_rank = static_cast<int>(
        std::min<uint64_t>({a.s, uint64_t{1} << r.cut, uint64_t{1} << (a.n - r.cut)}));
    if (r.entropy_bits > std::log2(static_cast<double>(a.s)) + 1e-9 || r.schmidt_rank > max_rank ||
        r.entropy_bits > std::log2(static_cast<double>(r.schmidt_rank)) + 1e-9) {
      throw InvariantFailure("entangle: entropy bound violated at n=" + std::to_string(a.n) + " s=" +
                             std::to_string(a.s) + " cut=" + std::to_string(r.cut));
    }
  }
  if (!a.common.json()) {
    std::ostringstream os;
    os << CsvPreamble("entangle", "n=" + std::to_string(a.n) + " s=" + std::to_string(a.s) + " key=" + key.ToHex(),
                      a.common.seed);
    WriteEntropyCsv(os, rows);
    return os.str();
  }
  Json j = JsonPreamble("entangle", a.common.seed);
  j["n"] = a.n;
  j["s"] = a.s;
  j["key"] = key.ToHex();
  Json out = Json::array();
  for (const EntropyRow& r : rows) {
    out.push_back({{"cut", r.cut}, {"entropy_bits", r.entropy_bits}, {"schmidt_rank", r.schmidt_rank}});
  }
  j["rows"] = std::move(out);
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// prs-state

struct PrsArgs {
  Common common;
  int n = 0;
  uint64_t s = 0;
  int rounds = 4;
  std::string key;
  bool one_based = false;
};

std::string PrsStateDump(const PrsArgs& a) {
  const PrpKey key =
      a.key.empty() ? PrpKey::FromSeed(a.common.seed, a.n, a.rounds) : PrpKey::FromHex(a.key, a.n, a.rounds);
  const StateVector state = PrsState(key, a.s);
  std::vector<int> support = PrsSupport(key, a.s);
  std::sort(support.begin(), support.end());
  if (state.SupportSize() != a.s || std::adjacent_find(support.begin(), support.end()) != support.end()) {
    throw InvariantFailure("prs-state: support size differs from s");
  }
  const int offset = a.one_based ? 1 : 0;
  const double amplitude = 1.0 / std::sqrt(static_cast<double>(a.s));
  if (!a.common.json()) {
    std::ostringstream os;
    os << CsvPreamble("prs-state",
                      "n=" + std::to_string(a.n) + " s=" + std::to_string(a.s) + " key=" + key.ToHex() +
                          " rounds=" + std::to_string(a.rounds) + " index_base=" + std::to_string(offset),
                      a.common.seed);
    os << "index,amplitude\n";
    for (int x : support) os << x + offset << ',' << Fixed(amplitude) << '\n';
    return os.str();
  }
  Json j = JsonPreamble("prs-state", a.common.seed);
  j["n"] = a.n;
  j["s"] = a.s;
  j["key"] = key.ToHex();
  j["rounds"] = a.rounds;
  j["index_base"] = offset;
  j["amplitude"] = amplitude;
  Json sup = Json::array();
  for (int x : support) sup.push_back(x + offset);
  j["support"] = std::move(sup);
  return j.dump(2) + "\n";
}

}  // namespace

std::vector<int> ParseRange(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw ContractViolation("bad range '" + std::string(text) + "'");
    }
    return v;
  };
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    std::size_t dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_int(item));
    } else {
      int lo = parse_int(item.substr(0, dots));
      int hi = parse_int(item.substr(dots + 2));
      if (hi < lo) throw ContractViolation("empty range '" + std::string(item) + "'");
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"prslab: exact moment operators, Johnson spectra and subset-state experiments"};
  app.name("prslab");
  app.require_subcommand(1, 1);

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("distance-sweep", "Trace distance between Haar and subset-state moments");
  AddCommon(sweep_cmd, sweep.common);
  sweep_cmd->add_option("--d", sweep.d, "Dimension range, e.g. 4..12")->required();
  sweep_cmd->add_option("--k", sweep.k, "Copies range");
  sweep_cmd->add_option("--s", sweep.s, "Subset size range (default k..d-1)");

  JohnsonArgs johnson;
  auto* johnson_cmd = app.add_subcommand("johnson-spectra", "Closed-form vs numeric Johnson graph spectra");
  AddCommon(johnson_cmd, johnson.common);
  johnson_cmd->add_option("--d", johnson.d, "Ground set size range")->required();
  johnson_cmd->add_option("--k", johnson.k, "Subset size range")->required();
  johnson_cmd->add_option("--t", johnson.t, "Intersection size range (default 0..k-1)");

  MomentsArgs moments;
  auto* moments_cmd = app.add_subcommand("moments-dump", "Dump an exact moment matrix");
  AddCommon(moments_cmd, moments.common);
  moments_cmd->add_option("--kind", moments.kind, "haar|haar_projected|subset_enum|subset_closed_form|distinct_projector");
  moments_cmd->add_option("--d", moments.d)->required();
  moments_cmd->add_option("--s", moments.s);
  moments_cmd->add_option("--k", moments.k);

  DistinguishArgs dist;
  auto* dist_cmd = app.add_subcommand("distinguish", "Collision and swap-test distinguishers");
  AddCommon(dist_cmd, dist.common);
  dist_cmd->add_option("--mode", dist.mode)->check(CLI::IsMember({"collision", "swap"}));
  dist_cmd->add_option("--source", dist.source)->check(CLI::IsMember({"subset", "haar", "uniform"}));
  dist_cmd->add_option("--n", dist.n, "Qubits (d = 2^n)");
  dist_cmd->add_option("--d", dist.d, "Dimension for haar/uniform sources");
  dist_cmd->add_option("--s", dist.s, "Subset size (subset source) or hypothesis size (swap threshold)");
  dist_cmd->add_option("--copies", dist.copies);
  dist_cmd->add_option("--trials", dist.trials);
  dist_cmd->add_option("--key", dist.key, "PRP key as 32 hex digits (default: derived from --seed)");

  EntangleArgs ent;
  auto* ent_cmd = app.add_subcommand("entangle", "Entanglement entropy of a keyed subset state across cuts");
  AddCommon(ent_cmd, ent.common);
  ent_cmd->add_option("--n", ent.n)->required();
  ent_cmd->add_option("--s", ent.s)->required();
  ent_cmd->add_flag("--all-cuts", ent.all_cuts);
  ent_cmd->add_option("--cut", ent.cut, "Single leading-qubit cut");
  ent_cmd->add_option("--key", ent.key);

  PrsArgs prs;
  auto* prs_cmd = app.add_subcommand("prs-state", "Support of the keyed subset state");
  AddCommon(prs_cmd, prs.common);
  prs_cmd->add_option("--n", prs.n)->required();
  prs_cmd->add_option("--s", prs.s)->required();
  prs_cmd->add_option("--rounds", prs.rounds);
  prs_cmd->add_option("--key", prs.key);
  prs_cmd->add_flag("--one-based", prs.one_based, "Print basis indices starting at 1");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  std::map<CLI::App*, std::function<std::string()>> handlers = {
      {sweep_cmd, [&] { return DistanceSweep(sweep, err); }},
      {johnson_cmd, [&] { return JohnsonSpectra(johnson); }},
      {moments_cmd, [&] { return MomentsDump(moments); }},
      {dist_cmd, [&] { return Distinguish(dist); }},
      {ent_cmd, [&] { return Entangle(ent); }},
      {prs_cmd, [&] { return PrsStateDump(prs); }},
  };
  const std::map<CLI::App*, Common*> commons = {
      {sweep_cmd, &sweep.common}, {johnson_cmd, &johnson.common}, {moments_cmd, &moments.common},
      {dist_cmd, &dist.common},   {ent_cmd, &ent.common},         {prs_cmd, &prs.common},
  };
  CLI::App* cmd = app.get_subcommands().front();
  try {
    Emit(*commons.at(cmd), handlers.at(cmd)(), out);
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kResourceError;
  } catch (const ContractViolation& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvariantFailure& e) {
    err << "invariant failure: " << e.what() << '\n';
    return kInvariantFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvariantFailure;
  }
  return kOk;
}

}  // namespace prslab::cli
