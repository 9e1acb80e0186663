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

#ifndef PRSLAB_COMBINAT_H_
#define PRSLAB_COMBINAT_H_

#include <cstdint>
#include <span>
#include <vector>

#include "prslab/rational.h"

namespace prslab {

// Size limits applied by every dense builder. A request beyond a ceiling
// raises ResourceError instead of allocating.
struct Ceilings {
  uint64_t max_dim = 4096;          // side length of any dense matrix
  uint64_t max_subsets = 1000000;   // number of subsets an enumeration may visit
};

// n(n-1)...(n-k+1); 1 for k = 0 and 0 for k > n.
BigInt FallingFactorial(uint64_t n, uint64_t k);
BigInt Binomial(uint64_t n, uint64_t k);

// 64-bit versions for sizes and ranks; throw std::overflow_error instead of
// wrapping.
uint64_t FallingFactorialU64(uint64_t n, uint64_t k);
uint64_t BinomialU64(uint64_t n, uint64_t k);
uint64_t PowU64(uint64_t base, uint64_t exp);

// A size-s subset of [d] with its rank in lexicographic order.
struct SubsetId {
  std::vector<int> members;  // strictly increasing
  uint64_t rank = 0;

  friend bool operator==(const SubsetId&, const SubsetId&) = default;
};

// An ordered k-tuple of pairwise distinct indices.
struct DistinctTuple {
  std::vector<int> entries;

  friend bool operator==(const DistinctTuple&, const DistinctTuple&) = default;
};

// All C(d, s) subsets in lexicographic order. Requires 0 < s <= d.
std::vector<SubsetId> EnumerateSubsets(int d, int s, const Ceilings& ceilings = {});

uint64_t SubsetRank(std::span<const int> members, int d);
SubsetId SubsetUnrank(uint64_t rank, int d, int s);

// Distinct k-tuples over `base` (sorted, duplicate free), grouped by the
// underlying k-subset in lexicographic order and, inside a group, by the
// Lehmer rank of the arrangement. k! consecutive tuples share one set, which
// is what makes the block structure of the difference operator contiguous.
// Returns an empty list when k > |base|.
std::vector<DistinctTuple> EnumerateDistinctTuples(std::span<const int> base, int k);
std::vector<DistinctTuple> EnumerateDistinctTuples(int d, int k);

// Position of `t` in EnumerateDistinctTuples(d, k): set_rank * k! + lehmer_rank.
uint64_t TupleRank(const DistinctTuple& t, int d);
DistinctTuple TupleUnrank(uint64_t rank, int d, int k);

// Lexicographic rank of the arrangement of `values` among all orderings of
// the same (distinct) values.
uint64_t LehmerRank(std::span<const int> values);

// |set(a) U set(b)|.
int DistinctCount(const DistinctTuple& a, const DistinctTuple& b);

bool AllDistinct(std::span<const int> values);

// Mixed-radix index of a tuple in [d]^k, first coordinate most significant.
uint64_t ProductIndex(std::span<const int> tuple, int d);
std::vector<int> ProductTuple(uint64_t index, int d, int k);

}  // namespace prslab

#endif  // PRSLAB_COMBINAT_H_
