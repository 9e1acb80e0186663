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

#ifndef PRSLAB_RNG_H_
#define PRSLAB_RNG_H_

#include <array>
#include <cstdint>

namespace prslab {

// Philox4x32-10 (Salmon et al., SC'11): a counter-based generator. A block is
// a pure function of (counter, key), so independent streams need no shared
// state and results do not depend on scheduling.
std::array<uint32_t, 4> Philox4x32(std::array<uint32_t, 4> counter, std::array<uint32_t, 2> key);

// Stream of draws keyed by `seed`; `stream` selects an independent
// subsequence (e.g. one per trial).
class CounterRng {
 public:
  CounterRng(uint64_t seed, uint64_t stream);

  uint64_t NextU64();
  // Uniform in [0, 1).
  double Uniform();
  // Uniform in (0, 1].
  double UniformOpenClosed();
  // Uniform integer in [0, n), unbiased. n must be positive.
  uint64_t UniformInt(uint64_t n);
  // Standard normal via Box-Muller.
  double Normal();

 private:
  void Refill();

  std::array<uint32_t, 2> key_;
  uint64_t stream_;
  uint64_t block_ = 0;
  std::array<uint32_t, 4> buffer_{};
  int used_ = 4;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// SplitMix64 finalizer; a fast non-cryptographic 64-bit mixer.
uint64_t Mix64(uint64_t x);

}  // namespace prslab

#endif  // PRSLAB_RNG_H_
