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

#ifndef PRSLAB_MOMENTS_H_
#define PRSLAB_MOMENTS_H_

#include <optional>
#include <string_view>

#include "prslab/combinat.h"
#include "prslab/rational_matrix.h"

namespace prslab {

// k-copy moment operators of the Haar ensemble and of the random-subset-state
// ensemble, built as exact rational matrices over the product basis [d]^k.
//
//   HaarMoment             Psi     = avg over Haar psi of psi^{(x)k}
//   ProjectedHaarMoment    Psi~    = Pi Psi Pi           (not renormalized)
//   SubsetMomentEnum       Phi     = avg over |S|=s of phi_S^{(x)k}
//   SubsetMomentProjected  Phi~    = Pi Phi Pi / tr(Pi Phi Pi)
//   DistinctProjector      Pi      = projector onto span{|i> : i in A([d],k)}
//
// Every builder rejects a product basis with d^k > ceilings.max_dim.

enum class MomentKind { kHaar, kHaarProjected, kSubsetEnum, kSubsetClosedForm, kDistinctProjector };

std::string_view MomentKindName(MomentKind kind);
MomentKind ParseMomentKind(std::string_view name);

struct MomentSpec {
  MomentKind kind = MomentKind::kHaar;
  int d = 0;
  std::optional<int> s;  // required for the subset kinds only
  int k = 0;

  // Throws ContractViolation when the parameters do not fit the kind.
  void Validate() const;
};

RationalMatrix BuildMoment(const MomentSpec& spec, const Ceilings& ceilings = {});

// Built by summing |i><pi(i)| over every i in [d]^k and every pi in S_k with
// weight 1 / (C(d+k-1,k) k!).
RationalMatrix HaarMoment(int d, int k, const Ceilings& ceilings = {});

// The same double sum restricted to i in A([d],k).
RationalMatrix ProjectedHaarMoment(int d, int k, const Ceilings& ceilings = {});

// Enumerates all C(d,s) subsets. Allowed for k > s.
RationalMatrix SubsetMomentEnum(int d, int s, int k, const Ceilings& ceilings = {});

// Entry s^(l) / (s^(k) d^(l)) on distinct tuple pairs with l distinct values
// in total, zero elsewhere. Requires k <= s <= d.
RationalMatrix SubsetMomentProjected(int d, int s, int k, const Ceilings& ceilings = {});

RationalMatrix DistinctProjector(int d, int k, const Ceilings& ceilings = {});

// Re-indexes a product-basis matrix onto A([d],k) in TupleRank order,
// dropping every row and column that has a repeated index.
RationalMatrix RestrictToDistinct(const RationalMatrix& product_basis);

// d^(k) / (d+k-1)^(k), the trace of Psi~.
BigRational ProjectedHaarTrace(int d, int k);

// |<phi_S^{(x)k}, w_S>|^2 = s^(k) / s^k where w_S is the normalized uniform
// superposition over A(S,k).
BigRational SingleSubsetOverlapSq(int s, int k);

// || phi_S^{(x)k} - |w_S><w_S| ||_1 = 2 sqrt(1 - s^(k)/s^k), the per-subset
// gap between Phi and Phi~ before averaging. Requires k <= s = |S|.
double SingleSubsetGap(int d, int s, int k, const SubsetId& subset);

}  // namespace prslab

#endif  // PRSLAB_MOMENTS_H_
