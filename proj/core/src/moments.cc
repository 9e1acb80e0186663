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

#include "prslab/moments.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "prslab/errors.h"

namespace prslab {
namespace {

std::string Params(int d, int k) { return "d=" + std::to_string(d) + " k=" + std::to_string(k); }

// Side length of the product basis, checked against the ceiling.
std::size_t ProductDim(std::string_view who, int d, int k, const Ceilings& ceilings) {
  if (d < 1 || k < 1) throw ContractViolation(std::string(who) + ": need d >= 1 and k >= 1, got " + Params(d, k));
  BigInt dim = 1;
  for (int i = 0; i < k; ++i) dim *= d;
  if (dim > BigInt(static_cast<unsigned long>(ceilings.max_dim))) {
    throw ResourceError(std::string(who) + ": dimension d^k = " + dim.get_str() + " exceeds ceiling " +
                        std::to_string(ceilings.max_dim) + " (" + Params(d, k) + ")");
  }
  return dim.get_ui();
}

std::vector<int> Identity(int k) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Adds w * |i><pi(i)| for every pi in S_k.
void AddPermutationOrbit(RationalMatrix& m, const std::vector<int>& tuple, const Rational& w) {
  const int d = m.d();
  const int k = m.k();
  const std::size_t row = ProductIndex(tuple, d);
  std::vector<int> pi = Identity(k);
  std::vector<int> image(k);
  do {
    for (int a = 0; a < k; ++a) image[a] = tuple[pi[a]];
    m(row, ProductIndex(image, d)) += w;
  } while (std::next_permutation(pi.begin(), pi.end()));
}

Rational HaarWeight(int d, int k) {
  // C(d+k-1,k) * k! = (d+k-1)^(k)
  return Rational::FromBig(BigInt(1), FallingFactorial(d + k - 1, k));
}

}  // namespace

std::string_view MomentKindName(MomentKind kind) {
  switch (kind) {
    case MomentKind::kHaar: return "haar";
    case MomentKind::kHaarProjected: return "haar_projected";
    case MomentKind::kSubsetEnum: return "subset_enum";
    case MomentKind::kSubsetClosedForm: return "subset_closed_form";
    case MomentKind::kDistinctProjector: return "distinct_projector";
  }
  return "unknown";
}

MomentKind ParseMomentKind(std::string_view name) {
  for (MomentKind k : {MomentKind::kHaar, MomentKind::kHaarProjected, MomentKind::kSubsetEnum,
                       MomentKind::kSubsetClosedForm, MomentKind::kDistinctProjector}) {
    if (MomentKindName(k) == name) return k;
  }
  throw ContractViolation("unknown moment kind '" + std::string(name) + "'");
}

void MomentSpec::Validate() const {
  if (d < 1 || k < 1) throw ContractViolation("MomentSpec: need d >= 1 and k >= 1");
  const bool wants_s = kind == MomentKind::kSubsetEnum || kind == MomentKind::kSubsetClosedForm;
  if (wants_s != s.has_value()) {
    throw ContractViolation(std::string("MomentSpec: kind ") + std::string(MomentKindName(kind)) +
                            (wants_s ? " requires s" : " takes no s"));
  }
  if (s && (*s < 1 || *s > d)) throw ContractViolation("MomentSpec: need 1 <= s <= d");
  if (kind == MomentKind::kSubsetClosedForm && k > *s) {
    throw ContractViolation("MomentSpec: subset_closed_form requires k <= s");
  }
}

RationalMatrix BuildMoment(const MomentSpec& spec, const Ceilings& ceilings) {
  spec.Validate();
  switch (spec.kind) {
    case MomentKind::kHaar: return HaarMoment(spec.d, spec.k, ceilings);
    case MomentKind::kHaarProjected: return ProjectedHaarMoment(spec.d, spec.k, ceilings);
    case MomentKind::kSubsetEnum: return SubsetMomentEnum(spec.d, *spec.s, spec.k, ceilings);
    case MomentKind::kSubsetClosedForm: return SubsetMomentProjected(spec.d, *spec.s, spec.k, ceilings);
    case MomentKind::kDistinctProjector: return DistinctProjector(spec.d, spec.k, ceilings);
  }
  throw ContractViolation("BuildMoment: unknown kind");
}

RationalMatrix HaarMoment(int d, int k, const Ceilings& ceilings) {
  const std::size_t dim = ProductDim("haar_moment", d, k, ceilings);
  RationalMatrix m(dim, Basis::kProductTuples, d, k);
  const Rational w = HaarWeight(d, k);
  for (std::size_t a = 0; a < dim; ++a) AddPermutationOrbit(m, ProductTuple(a, d, k), w);
  return m;
}

RationalMatrix ProjectedHaarMoment(int d, int k, const Ceilings& ceilings) {
  const std::size_t dim = ProductDim("projected_haar_moment", d, k, ceilings);
  RationalMatrix m(dim, Basis::kProductTuples, d, k);
  const Rational w = HaarWeight(d, k);
  for (const DistinctTuple& t : EnumerateDistinctTuples(d, k)) AddPermutationOrbit(m, t.entries, w);
  return m;
}

RationalMatrix SubsetMomentEnum(int d, int s, int k, const Ceilings& ceilings) {
  const std::size_t dim = ProductDim("subset_moment_enum", d, k, ceilings);
  const std::vector<SubsetId> subsets = EnumerateSubsets(d, s, ceilings);
  // Integer incidence counts: #{S : all entries of i and j lie in S}.
  std::vector<uint32_t> counts(dim * dim, 0);
  const std::size_t support = PowU64(s, k);
  std::vector<std::size_t> idx(support);
  for (const SubsetId& subset : subsets) {
    for (std::size_t a = 0; a < support; ++a) {
      std::vector<int> digits = ProductTuple(a, s, k);
      for (int& v : digits) v = subset.members[v];
      idx[a] = ProductIndex(digits, d);
    }
    for (std::size_t row : idx) {
      uint32_t* line = counts.data() + row * dim;
      for (std::size_t col : idx) ++line[col];
    }
  }
  RationalMatrix m(dim, Basis::kProductTuples, d, k);
  const int64_t denom = static_cast<int64_t>(subsets.size()) * static_cast<int64_t>(support);
  for (std::size_t i = 0; i < dim * dim; ++i) {
    if (counts[i] != 0) m(i / dim, i % dim) = Rational(counts[i], denom);
  }
  return m;
}

RationalMatrix SubsetMomentProjected(int d, int s, int k, const Ceilings& ceilings) {
  if (k > s || s > d || s < 1) {
    throw ContractViolation("subset_moment_projected: need k <= s <= d, got d=" + std::to_string(d) +
                            " s=" + std::to_string(s) + " k=" + std::to_string(k));
  }
  const std::size_t dim = ProductDim("subset_moment_projected", d, k, ceilings);
  // value[l] = s^(l) / (s^(k) d^(l)), l = number of distinct values in i and j.
  std::vector<Rational> value(2 * k + 1);
  const BigInt sk = FallingFactorial(s, k);
  for (int l = k; l <= 2 * k; ++l) {
    BigInt den = sk * FallingFactorial(d, l);
    value[l] = den == 0 ? Rational() : Rational::FromBig(FallingFactorial(s, l), den);
  }
  RationalMatrix m(dim, Basis::kProductTuples, d, k);
  const std::vector<DistinctTuple> tuples = EnumerateDistinctTuples(d, k);
  std::vector<std::size_t> idx(tuples.size());
  for (std::size_t a = 0; a < tuples.size(); ++a) idx[a] = ProductIndex(tuples[a].entries, d);
  for (std::size_t a = 0; a < tuples.size(); ++a) {
    for (std::size_t b = 0; b < tuples.size(); ++b) {
      m(idx[a], idx[b]) = value[DistinctCount(tuples[a], tuples[b])];
    }
  }
  return m;
}

RationalMatrix DistinctProjector(int d, int k, const Ceilings& ceilings) {
  const std::size_t dim = ProductDim("distinct_projector", d, k, ceilings);
  RationalMatrix m(dim, Basis::kProductTuples, d, k);
  for (std::size_t a = 0; a < dim; ++a) {
    if (AllDistinct(ProductTuple(a, d, k))) m(a, a) = 1;
  }
  return m;
}

RationalMatrix RestrictToDistinct(const RationalMatrix& product_basis) {
  if (product_basis.basis() != Basis::kProductTuples) {
    throw ContractViolation("RestrictToDistinct: input must be over the product basis");
  }
  const int d = product_basis.d();
  const int k = product_basis.k();
  const std::vector<DistinctTuple> tuples = EnumerateDistinctTuples(d, k);
  std::vector<std::size_t> idx(tuples.size());
  for (std::size_t a = 0; a < tuples.size(); ++a) idx[a] = ProductIndex(tuples[a].entries, d);
  RationalMatrix out(tuples.size(), Basis::kDistinctTuples, d, k);
  for (std::size_t a = 0; a < tuples.size(); ++a) {
    for (std::size_t b = 0; b < tuples.size(); ++b) out(a, b) = product_basis(idx[a], idx[b]);
  }
  return out;
}

BigRational ProjectedHaarTrace(int d, int k) {
  BigRational q(FallingFactorial(d, k), FallingFactorial(d + k - 1, k));
  q.canonicalize();
  return q;
}

BigRational SingleSubsetOverlapSq(int s, int k) {
  BigInt pow = 1;
  for (int i = 0; i < k; ++i) pow *= s;
  BigRational q(FallingFactorial(s, k), pow);
  q.canonicalize();
  return q;
}

double SingleSubsetGap(int d, int s, int k, const SubsetId& subset) {
  if (k < 1 || k > s) throw ContractViolation("single_subset_gap: need 1 <= k <= s");
  if (static_cast<int>(subset.members.size()) != s) throw ContractViolation("single_subset_gap: |S| != s");
  for (int v : subset.members) {
    if (v < 0 || v >= d) throw ContractViolation("single_subset_gap: member outside [0, d)");
  }
  BigRational rest = 1 - SingleSubsetOverlapSq(s, k);
  return 2.0 * std::sqrt(rest.get_d());
}

}  // namespace prslab
