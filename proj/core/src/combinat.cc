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

#include "prslab/combinat.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "prslab/errors.h"

namespace prslab {
namespace {

uint64_t CheckedMul(uint64_t a, uint64_t b) {
  uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("64-bit count overflow");
  return out;
}

uint64_t ToU64(const BigInt& z) {
  if (!z.fits_ulong_p()) throw std::overflow_error("64-bit count overflow: " + z.get_str());
  return z.get_ui();
}

void CheckTuple(const DistinctTuple& t, int d) {
  for (int v : t.entries) {
    if (v < 0 || v >= d) {
      throw ContractViolation("tuple entry " + std::to_string(v) + " outside [0, " + std::to_string(d) + ")");
    }
  }
  if (!AllDistinct(t.entries)) throw ContractViolation("tuple entries are not pairwise distinct");
}

}  // namespace

BigInt FallingFactorial(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  BigInt out = 1;
  for (uint64_t i = 0; i < k; ++i) out *= static_cast<unsigned long>(n - i);
  return out;
}

BigInt Binomial(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

uint64_t FallingFactorialU64(uint64_t n, uint64_t k) { return ToU64(FallingFactorial(n, k)); }
uint64_t BinomialU64(uint64_t n, uint64_t k) { return ToU64(Binomial(n, k)); }

uint64_t PowU64(uint64_t base, uint64_t exp) {
  uint64_t out = 1;
  for (uint64_t i = 0; i < exp; ++i) out = CheckedMul(out, base);
  return out;
}

std::vector<SubsetId> EnumerateSubsets(int d, int s, const Ceilings& ceilings) {
  if (s <= 0 || s > d) {
    throw ContractViolation("EnumerateSubsets: need 0 < s <= d, got d=" + std::to_string(d) +
                            " s=" + std::to_string(s));
  }
  BigInt count = Binomial(d, s);
  if (count > BigInt(static_cast<unsigned long>(ceilings.max_subsets))) {
    throw ResourceError("EnumerateSubsets: C(" + std::to_string(d) + "," + std::to_string(s) +
                        ") = " + count.get_str() + " exceeds subset ceiling " +
                        std::to_string(ceilings.max_subsets));
  }
  std::vector<SubsetId> out;
  out.reserve(count.get_ui());
  std::vector<int> cur(s);
  for (int i = 0; i < s; ++i) cur[i] = i;
  for (uint64_t rank = 0;; ++rank) {
    out.push_back({cur, rank});
    int i = s - 1;
    while (i >= 0 && cur[i] == d - s + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < s; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

uint64_t SubsetRank(std::span<const int> members, int d) {
  const int s = static_cast<int>(members.size());
  uint64_t rank = 0;
  int prev = -1;
  for (int p = 0; p < s; ++p) {
    int v = members[p];
    if (v <= prev || v >= d) throw ContractViolation("SubsetRank: members must be strictly increasing in [0, d)");
    for (int x = prev + 1; x < v; ++x) rank += BinomialU64(d - 1 - x, s - 1 - p);
    prev = v;
  }
  return rank;
}

SubsetId SubsetUnrank(uint64_t rank, int d, int s) {
  if (s < 0 || s > d || rank >= BinomialU64(d, s)) throw ContractViolation("SubsetUnrank: rank out of range");
  SubsetId out{{}, rank};
  int x = 0;
  for (int p = 0; p < s; ++p) {
    for (;; ++x) {
      uint64_t block = BinomialU64(d - 1 - x, s - 1 - p);
      if (rank < block) break;
      rank -= block;
    }
    out.members.push_back(x++);
  }
  return out;
}

std::vector<DistinctTuple> EnumerateDistinctTuples(std::span<const int> base, int k) {
  const int n = static_cast<int>(base.size());
  std::vector<DistinctTuple> out;
  if (k < 0 || k > n) return out;
  out.reserve(FallingFactorialU64(n, k));
  // Positions into `base` of the current k-subset, in lexicographic order.
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) pos[i] = i;
  std::vector<int> arrangement(k);
  while (true) {
    for (int i = 0; i < k; ++i) arrangement[i] = base[pos[i]];
    do {
      out.push_back({arrangement});
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    int i = k - 1;
    while (i >= 0 && pos[i] == n - k + i) --i;
    if (i < 0) break;
    ++pos[i];
    for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
  return out;
}

std::vector<DistinctTuple> EnumerateDistinctTuples(int d, int k) {
  std::vector<int> base(std::max(d, 0));
  for (int i = 0; i < d; ++i) base[i] = i;
  return EnumerateDistinctTuples(base, k);
}

uint64_t LehmerRank(std::span<const int> values) {
  const size_t k = values.size();
  uint64_t rank = 0;
  for (size_t i = 0; i < k; ++i) {
    uint64_t smaller_after = 0;
    for (size_t j = i + 1; j < k; ++j) smaller_after += values[j] < values[i];
    rank = rank * (k - i) + smaller_after;
  }
  return rank;
}

uint64_t TupleRank(const DistinctTuple& t, int d) {
  CheckTuple(t, d);
  std::vector<int> sorted = t.entries;
  std::sort(sorted.begin(), sorted.end());
  const uint64_t k = t.entries.size();
  return SubsetRank(sorted, d) * FallingFactorialU64(k, k) + LehmerRank(t.entries);
}

DistinctTuple TupleUnrank(uint64_t rank, int d, int k) {
  if (k < 0 || k > d || rank >= FallingFactorialU64(d, k)) {
    throw ContractViolation("TupleUnrank: rank out of range");
  }
  const uint64_t kfact = FallingFactorialU64(k, k);
  SubsetId set = SubsetUnrank(rank / kfact, d, k);
  uint64_t lehmer = rank % kfact;
  // Decode the factorial-base digits, most significant first.
  std::vector<int> pool = set.members;
  DistinctTuple out;
  uint64_t radix = kfact;
  for (int i = k; i > 0; --i) {
    radix /= i;
    uint64_t digit = lehmer / radix;
    lehmer %= radix;
    out.entries.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return out;
}

int DistinctCount(const DistinctTuple& a, const DistinctTuple& b) {
  std::vector<int> all = a.entries;
  all.insert(all.end(), b.entries.begin(), b.entries.end());
  std::sort(all.begin(), all.end());
  return static_cast<int>(std::unique(all.begin(), all.end()) - all.begin());
}

bool AllDistinct(std::span<const int> values) {
  for (size_t i = 0; i < values.size(); ++i) {
    for (size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] == values[j]) return false;
    }
  }
  return true;
}

uint64_t ProductIndex(std::span<const int> tuple, int d) {
  uint64_t index = 0;
  for (int v : tuple) index = index * d + v;
  return index;
}

std::vector<int> ProductTuple(uint64_t index, int d, int k) {
  std::vector<int> out(k);
  for (int i = k - 1; i >= 0; --i) {
    out[i] = static_cast<int>(index % d);
    index /= d;
  }
  return out;
}

}  // namespace prslab
