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

#include "prslab/crypto.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_set>

#include "json.hpp"
#include "prslab/combinat.h"
#include "prslab/errors.h"
#include "prslab/rng.h"

namespace prslab {
namespace {

uint32_t RoundFunction(const PrpKey& key, int round, uint32_t half, int half_bits) {
  uint64_t k = key.seed[round & 1] ^ (key.seed[(round + 1) & 1] * 0x9E3779B97F4A7C15ULL + round);
  uint64_t v = Mix64(k ^ Mix64(static_cast<uint64_t>(half) + (static_cast<uint64_t>(round) << 32)));
  return static_cast<uint32_t>(v & ((uint64_t{1} << half_bits) - 1));
}

int HexDigit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

void PrpKey::Validate() const {
  if (rounds < 2) throw ContractViolation("PrpKey: need at least 2 rounds");
  if (n < 2 || n > 24 || n % 2 != 0) throw ContractViolation("PrpKey: n must be even with 2 <= n <= 24");
}

PrpKey PrpKey::FromHex(std::string_view hex, int n, int rounds) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.size() != 32) throw ContractViolation("PrpKey: key must be 32 hex digits");
  PrpKey key;
  for (std::size_t i = 0; i < 32; ++i) {
    int v = HexDigit(hex[i]);
    if (v < 0) throw ContractViolation("PrpKey: invalid hex digit");
    uint64_t& word = key.seed[i / 16];
    word = (word << 4) | static_cast<uint64_t>(v);
  }
  key.n = n;
  key.rounds = rounds;
  key.Validate();
  return key;
}

PrpKey PrpKey::FromSeed(uint64_t seed, int n, int rounds) {
  PrpKey key;
  key.seed = {Mix64(seed), Mix64(seed ^ 0xD1B54A32D192ED03ULL)};
  key.n = n;
  key.rounds = rounds;
  key.Validate();
  return key;
}

std::string PrpKey::ToHex() const {
  char buf[33];
  std::snprintf(buf, sizeof(buf), "%016llx%016llx", static_cast<unsigned long long>(seed[0]),
                static_cast<unsigned long long>(seed[1]));
  return buf;
}

uint32_t FeistelPermute(const PrpKey& key, uint32_t x) {
  key.Validate();
  if (x >> key.n) throw ContractViolation("FeistelPermute: input outside [0, 2^n)");
  const int h = key.n / 2;
  const uint32_t mask = (uint32_t{1} << h) - 1;
  uint32_t left = x >> h;
  uint32_t right = x & mask;
  for (int r = 0; r < key.rounds; ++r) {
    uint32_t next = left ^ RoundFunction(key, r, right, h);
    left = right;
    right = next;
  }
  return (left << h) | right;
}

uint32_t FeistelInvert(const PrpKey& key, uint32_t y) {
  key.Validate();
  if (y >> key.n) throw ContractViolation("FeistelInvert: input outside [0, 2^n)");
  const int h = key.n / 2;
  const uint32_t mask = (uint32_t{1} << h) - 1;
  uint32_t left = y >> h;
  uint32_t right = y & mask;
  for (int r = key.rounds - 1; r >= 0; --r) {
    uint32_t prev = right ^ RoundFunction(key, r, left, h);
    right = left;
    left = prev;
  }
  return (left << h) | right;
}

std::vector<int> PrsSupport(const PrpKey& key, uint64_t s) {
  key.Validate();
  const uint64_t d = uint64_t{1} << key.n;
  if (s < 1 || s > d) throw ContractViolation("PrsSupport: need 1 <= s <= 2^n");
  std::vector<int> out(s);
  for (uint64_t x = 0; x < s; ++x) out[x] = static_cast<int>(FeistelPermute(key, static_cast<uint32_t>(x)));
  return out;
}

StateVector PrsState(const PrpKey& key, uint64_t s) {
  return SubsetState(std::size_t{1} << key.n, PrsSupport(key, s));
}

BigRational CollisionProbSubset(uint64_t s, uint64_t m) {
  if (s < 1 || m < 1) throw ContractViolation("collision_prob_subset: need s >= 1 and m >= 1");
  BigInt pow = 1;
  for (uint64_t i = 0; i < m; ++i) pow *= static_cast<unsigned long>(s);
  BigRational distinct(FallingFactorial(s, m), pow);
  distinct.canonicalize();
  return 1 - distinct;
}

BigRational CollisionProbHaar(uint64_t d, uint64_t m) {
  if (d < 1 || m < 1) throw ContractViolation("collision_prob_haar: need d >= 1 and m >= 1");
  BigRational distinct(FallingFactorial(d, m), FallingFactorial(d + m - 1, m));
  distinct.canonicalize();
  return 1 - distinct;
}

double SwapTestAccept(const StateVector& state) {
  const double f = Fidelity(UniformSuperposition(state.dim()), state);
  return 0.5 * (1.0 + f * f);
}

BigRational SwapAcceptSubsetExact(uint64_t s, uint64_t d) {
  if (s < 1 || s > d) throw ContractViolation("swap_accept_subset: need 1 <= s <= d");
  BigRational q(BigInt(static_cast<unsigned long>(d + s)), BigInt(static_cast<unsigned long>(2 * d)));
  q.canonicalize();
  return q;
}

BigRational SwapAcceptHaarExact(uint64_t d) {
  if (d < 1) throw ContractViolation("swap_accept_haar: need d >= 1");
  BigRational q(BigInt(static_cast<unsigned long>(d + 1)), BigInt(static_cast<unsigned long>(2 * d)));
  q.canonicalize();
  return q;
}

std::string_view ModeName(DistinguisherMode mode) {
  return mode == DistinguisherMode::kCollision ? "collision" : "swap";
}

std::string_view SourceName(SourceKind kind) {
  switch (kind) {
    case SourceKind::kSubset: return "subset";
    case SourceKind::kHaar: return "haar";
    case SourceKind::kUniform: return "uniform";
  }
  return "unknown";
}

DistinguisherMode ParseMode(std::string_view name) {
  if (name == "collision") return DistinguisherMode::kCollision;
  if (name == "swap") return DistinguisherMode::kSwap;
  throw ContractViolation("unknown distinguisher mode '" + std::string(name) + "'");
}

SourceKind ParseSource(std::string_view name) {
  if (name == "subset") return SourceKind::kSubset;
  if (name == "haar") return SourceKind::kHaar;
  if (name == "uniform") return SourceKind::kUniform;
  throw ContractViolation("unknown source '" + std::string(name) + "'");
}

Source Source::Subset(uint64_t d, std::vector<int> members) {
  if (members.empty()) throw ContractViolation("Source::Subset: empty subset");
  std::vector<int> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.front() < 0 ||
      static_cast<uint64_t>(sorted.back()) >= d) {
    throw ContractViolation("Source::Subset: members must be distinct and inside [0, d)");
  }
  return {SourceKind::kSubset, d, std::move(members), std::nullopt};
}

Source Source::FromKey(const PrpKey& key, uint64_t s) {
  Source src = Subset(uint64_t{1} << key.n, PrsSupport(key, s));
  src.key = key;
  return src;
}

Source Source::Haar(uint64_t d) {
  if (d < 1) throw ContractViolation("Source::Haar: d must be positive");
  return {SourceKind::kHaar, d, {}, std::nullopt};
}

Source Source::Uniform(uint64_t d) {
  if (d < 1) throw ContractViolation("Source::Uniform: d must be positive");
  return {SourceKind::kUniform, d, {}, std::nullopt};
}

DistinguisherReport DistinguisherSample(const Source& source, const DistinguisherParams& params) {
  if (params.trials < 1 || params.copies < 1) throw ContractViolation("distinguisher: need trials >= 1 and copies >= 1");
  const uint64_t d = source.d;
  const uint64_t s = source.kind == SourceKind::kSubset ? source.members.size() : params.hypothesis_s.value_or(0);
  if (s > d) throw ContractViolation("distinguisher: hypothesis size exceeds d");

  DistinguisherReport r;
  r.mode = params.mode;
  r.source = source.kind;
  r.d = d;
  r.s = s;
  r.key_hex = source.key ? source.key->ToHex() : "";
  r.copies = params.copies;
  r.trials = params.trials;
  r.seed = params.seed;

  if (params.mode == DistinguisherMode::kCollision) {
    switch (source.kind) {
      case SourceKind::kSubset: r.exact = CollisionProbSubset(s, params.copies); break;
      case SourceKind::kHaar: r.exact = CollisionProbHaar(d, params.copies); break;
      case SourceKind::kUniform: r.exact = CollisionProbSubset(d, params.copies); break;
    }
    r.threshold = 0.5;
    r.events = params.trials;
    std::vector<uint64_t> outcomes;
    outcomes.reserve(params.copies);
    for (uint64_t trial = 0; trial < params.trials; ++trial) {
      CounterRng rng(params.seed, trial);
      outcomes.clear();
      for (uint64_t c = 0; c < params.copies; ++c) {
        switch (source.kind) {
          case SourceKind::kSubset:
            outcomes.push_back(static_cast<uint64_t>(source.members[rng.UniformInt(s)]));
            break;
          case SourceKind::kUniform:
            outcomes.push_back(rng.UniformInt(d));
            break;
          case SourceKind::kHaar: {
            // P(next = a) = (1 + #previous a) / (d + c).
            uint64_t u = rng.UniformInt(d + c);
            outcomes.push_back(u < d ? u : outcomes[u - d]);
            break;
          }
        }
      }
      std::sort(outcomes.begin(), outcomes.end());
      r.accepted += std::adjacent_find(outcomes.begin(), outcomes.end()) != outcomes.end();
    }
  } else {
    double overlap_sq = 1.0;
    switch (source.kind) {
      case SourceKind::kSubset: {
        r.exact = SwapAcceptSubsetExact(s, d);
        const double f = Fidelity(UniformSuperposition(d), SubsetState(d, source.members));
        overlap_sq = f * f;
        break;
      }
      case SourceKind::kHaar: r.exact = SwapAcceptHaarExact(d); break;
      case SourceKind::kUniform: r.exact = 1; break;
    }
    // Midpoint between the subset acceptance (1 + 1/p)/2, p = d/s, and the
    // Haar acceptance (1 + 1/d)/2.
    const double inv_p = s > 0 ? static_cast<double>(s) / static_cast<double>(d) : 1.0;
    r.threshold = 0.5 * (1.0 + 0.5 * (inv_p + 1.0 / static_cast<double>(d)));
    r.events = params.trials * params.copies;
    for (uint64_t trial = 0; trial < params.trials; ++trial) {
      CounterRng rng(params.seed, trial);
      for (uint64_t c = 0; c < params.copies; ++c) {
        double f2 = overlap_sq;
        if (source.kind == SourceKind::kHaar) {
          // |<u|psi>|^2 ~ Beta(1, d-1) for Haar psi.
          f2 = d == 1 ? 1.0 : 1.0 - std::pow(rng.UniformOpenClosed(), 1.0 / static_cast<double>(d - 1));
        }
        r.accepted += rng.Uniform() < 0.5 * (1.0 + f2);
      }
    }
  }
  r.empirical = static_cast<double>(r.accepted) / static_cast<double>(r.events);
  const double p = r.exact.get_d();
  r.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(r.events));
  r.decision = r.empirical > r.threshold ? "subset" : "haar";
  return r;
}

std::string DistinguisherReport::ToJson() const {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["mode"] = ModeName(mode);
  j["source"] = SourceName(source);
  j["d"] = d;
  j["s"] = s;
  if (!key_hex.empty()) j["key"] = key_hex;
  j["copies"] = copies;
  j["trials"] = trials;
  j["seed"] = seed;
  j["accepted"] = accepted;
  j["events"] = events;
  j["empirical"] = empirical;
  j["exact"] = exact.get_str();
  j["exact_decimal"] = exact.get_d();
  j["std_error"] = std_error;
  j["threshold"] = threshold;
  j["decision"] = decision;
  return j.dump(2);
}

}  // namespace prslab
