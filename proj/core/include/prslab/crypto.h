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

#ifndef PRSLAB_CRYPTO_H_
#define PRSLAB_CRYPTO_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prslab/rational.h"
#include "prslab/states.h"

namespace prslab {

// Key for a toy keyed permutation of [2^n]: a balanced Feistel network whose
// round function is a keyed SplitMix64 mix truncated to n/2 bits. It is a
// concrete bijection for desk-scale experiments and makes no security claim.
struct PrpKey {
  std::array<uint64_t, 2> seed{};  // 128 bits
  int rounds = 4;
  int n = 8;  // domain bits, even, 2 <= n <= 24

  void Validate() const;

  // 32 hex digits (optionally prefixed with 0x), most significant first.
  static PrpKey FromHex(std::string_view hex, int n, int rounds = 4);
  // Expands a 64-bit seed into 128 bits of key material.
  static PrpKey FromSeed(uint64_t seed, int n, int rounds = 4);
  std::string ToHex() const;
};

uint32_t FeistelPermute(const PrpKey& key, uint32_t x);
uint32_t FeistelInvert(const PrpKey& key, uint32_t y);

// {P(x) : x in [s]} in generation order.
std::vector<int> PrsSupport(const PrpKey& key, uint64_t s);
// (1/sqrt s) sum_{x < s} |P(x)> over 2^n amplitudes.
StateVector PrsState(const PrpKey& key, uint64_t s);

// Probability that m uniform draws from a size-s set are not all distinct:
// 1 - s^(m)/s^m (1 when m > s).
BigRational CollisionProbSubset(uint64_t s, uint64_t m);
// Haar average of the same event for m standard-basis measurements:
// 1 - d^(m)/(d+m-1)^(m).
BigRational CollisionProbHaar(uint64_t d, uint64_t m);

// Swap test against the uniform superposition: (1 + |<u|state>|^2)/2.
double SwapTestAccept(const StateVector& state);
// Exact values for a size-s subset state and for a Haar state in dimension d.
BigRational SwapAcceptSubsetExact(uint64_t s, uint64_t d);
BigRational SwapAcceptHaarExact(uint64_t d);

enum class DistinguisherMode { kCollision, kSwap };
enum class SourceKind { kSubset, kHaar, kUniform };

std::string_view ModeName(DistinguisherMode mode);
std::string_view SourceName(SourceKind kind);
DistinguisherMode ParseMode(std::string_view name);
SourceKind ParseSource(std::string_view name);

// The ensemble the copies come from.
struct Source {
  SourceKind kind = SourceKind::kUniform;
  uint64_t d = 0;
  std::vector<int> members;   // subset sources only
  std::optional<PrpKey> key;  // set when the subset came from PrsSupport

  static Source Subset(uint64_t d, std::vector<int> members);
  static Source FromKey(const PrpKey& key, uint64_t s);
  static Source Haar(uint64_t d);
  static Source Uniform(uint64_t d);
};

struct DistinguisherParams {
  DistinguisherMode mode = DistinguisherMode::kCollision;
  uint64_t copies = 1;  // collision: measured copies per trial; swap: tests per trial
  uint64_t trials = 1;
  uint64_t seed = 0;
  // Subset size the swap-mode threshold is tuned for; defaults to the
  // source's own size for subset sources.
  std::optional<uint64_t> hypothesis_s;
};

struct DistinguisherReport {
  DistinguisherMode mode = DistinguisherMode::kCollision;
  SourceKind source = SourceKind::kUniform;
  uint64_t d = 0;
  uint64_t s = 0;  // |S| for subset sources, hypothesis size otherwise (0 if none)
  std::string key_hex;
  uint64_t copies = 0;
  uint64_t trials = 0;
  uint64_t seed = 0;
  uint64_t accepted = 0;
  uint64_t events = 0;      // collision: trials; swap: trials * copies
  double empirical = 0.0;   // accepted / events
  BigRational exact;        // acceptance probability per event
  double std_error = 0.0;   // sqrt(p(1-p)/events) at the exact p
  double threshold = 0.0;
  std::string decision;     // "subset" or "haar"

  std::string ToJson() const;
};

// Collision mode: each trial measures `copies` copies in the computational
// basis and accepts on any repeated outcome. Subset and uniform sources draw
// uniformly from their support; the Haar source draws from the exact
// exchangeable law of Haar measurement outcomes (a Polya urn with one ball
// per basis state), never from sampled states.
// Swap mode: each test accepts with probability (1 + F^2)/2 where F^2 is the
// overlap with the uniform superposition; for the Haar source F^2 is drawn
// from its exact Beta(1, d-1) law.
// Trial i uses CounterRng(seed, i), so results are independent of ordering.
DistinguisherReport DistinguisherSample(const Source& source, const DistinguisherParams& params);

}  // namespace prslab

#endif  // PRSLAB_CRYPTO_H_
