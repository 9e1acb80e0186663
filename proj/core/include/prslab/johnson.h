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

#ifndef PRSLAB_JOHNSON_H_
#define PRSLAB_JOHNSON_H_

#include <ostream>
#include <vector>

#include "prslab/combinat.h"
#include "prslab/rational_matrix.h"

namespace prslab {

// Generalized Johnson graph: vertices are the k-subsets of [d], A ~ B iff
// |A n B| = t. The t = k case (the identity) is deliberately excluded.
struct JohnsonGraphSpec {
  int d = 0;
  int k = 0;
  int t = 0;

  // Requires 0 <= t < k <= d.
  void Validate() const;
};

struct JohnsonEigenpair {
  BigInt eigenvalue;
  BigInt multiplicity;
};

// Eigenvalues in closed form, indexed j = 0, 1, ...
struct JohnsonSpectrum {
  std::vector<JohnsonEigenpair> pairs;

  BigInt TotalMultiplicity() const;
  // Pairs with equal eigenvalues merged and zero multiplicities dropped,
  // sorted by eigenvalue. This is the multiset a numeric solver can see.
  std::vector<JohnsonEigenpair> Distinct() const;
};

RationalMatrix Adjacency(const JohnsonGraphSpec& spec, const Ceilings& ceilings = {});

// lambda_0 = C(k,t) C(d-k,k-t)
// lambda_j = sum_l (-1)^l C(j,l) C(k-j,k-t-l) C(d-k-j,k-t-l)
// m_0 = 1, m_j = C(d,j) - C(d,j-1)
// for j = 0..k. These multiplicities are only valid for 2k <= d; for 2k > d
// the graph is evaluated through the isomorphic graph on complements,
// (d, d-k, d-2k+t), which has d-k+1 eigenvalues. When d-2k+t < 0 no two
// k-subsets can meet in only t points and the spectrum is {0 x C(d,k)}.
JohnsonSpectrum ClosedFormSpectrum(const JohnsonGraphSpec& spec);

// alpha_t = (s-k)(s-k-1)...(s-2k+t+1) / (d(d-1)...(d-2k+t+1)).
// Requires 0 <= t < k <= s <= d and 2k - t <= d.
BigRational AlphaWeight(int d, int s, int k, int t);
// alpha_0..alpha_{k-1}; requires 2k <= d.
std::vector<BigRational> AlphaWeights(int d, int s, int k);

// sum_t alpha_t D_t over the k-subset basis. Terms with 2k - t > d are
// skipped: such a D_t has no edges.
RationalMatrix DTildeFromWeights(int d, int s, int k, const Ceilings& ceilings = {});

// D = Phi~ - ((d+k-1)^(k) / d^(k)) Psi~ on the distinct-tuple basis.
RationalMatrix DifferenceOperator(int d, int s, int k, const Ceilings& ceilings = {});

// Collapses DifferenceOperator onto k-subsets. Throws ConsistencyError if a
// k! x k! block is not constant.
RationalMatrix DTildeDirect(int d, int s, int k, const Ceilings& ceilings = {});

// C(d-k,k-t) C(d,t) 2^(k-t), the trace-norm bound without its constant.
BigInt TraceNormBound(const JohnsonGraphSpec& spec);

// sum_j m_j |lambda_j|.
BigInt SpectrumTraceNorm(const JohnsonGraphSpec& spec);

// Diagnostic only: the simplified upper bounds on |lambda_j|, j = 1..k,
// valid up to constants when k = O(sqrt(d)).
std::vector<double> SimplifiedEigenvalueBounds(const JohnsonGraphSpec& spec);

// CSV rows "d,k,t,j,lambda,multiplicity" (with header).
void WriteSpectrumCsv(std::ostream& os, const JohnsonGraphSpec& spec, const JohnsonSpectrum& spectrum,
                      bool header = true);

}  // namespace prslab

#endif  // PRSLAB_JOHNSON_H_
