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

#include "prslab/johnson.h"

#include <algorithm>
#include <map>
#include <string>

#include "prslab/errors.h"
#include "prslab/moments.h"

namespace prslab {
namespace {

std::string Params(const JohnsonGraphSpec& s) {
  return "d=" + std::to_string(s.d) + " k=" + std::to_string(s.k) + " t=" + std::to_string(s.t);
}

int IntersectionSize(const std::vector<int>& a, const std::vector<int>& b) {
  int n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

std::vector<SubsetId> Vertices(int d, int k, const Ceilings& ceilings) {
  BigInt n = Binomial(d, k);
  if (n > BigInt(static_cast<unsigned long>(ceilings.max_dim))) {
    throw ResourceError("johnson: C(" + std::to_string(d) + "," + std::to_string(k) + ") = " + n.get_str() +
                        " vertices exceeds ceiling " + std::to_string(ceilings.max_dim));
  }
  return EnumerateSubsets(d, k, ceilings);
}

// Formula evaluation, assumes 2k <= d.
JohnsonSpectrum DirectSpectrum(int d, int k, int t) {
  JohnsonSpectrum out;
  out.pairs.push_back({Binomial(k, t) * Binomial(d - k, k - t), 1});
  for (int j = 1; j <= k; ++j) {
    BigInt lambda = 0;
    for (int l = std::max(0, j - t); l <= std::min(j, k - t); ++l) {
      BigInt term = Binomial(j, l) * Binomial(k - j, k - t - l) * Binomial(d - k - j, k - t - l);
      if (l % 2 == 0) {
        lambda += term;
      } else {
        lambda -= term;
      }
    }
    out.pairs.push_back({lambda, Binomial(d, j) - Binomial(d, j - 1)});
  }
  return out;
}

}  // namespace

void JohnsonGraphSpec::Validate() const {
  if (t < 0 || t >= k || k > d) throw ContractViolation("JohnsonGraphSpec: need 0 <= t < k <= d, got " + Params(*this));
}

BigInt JohnsonSpectrum::TotalMultiplicity() const {
  BigInt total = 0;
  for (const auto& p : pairs) total += p.multiplicity;
  return total;
}

std::vector<JohnsonEigenpair> JohnsonSpectrum::Distinct() const {
  std::map<BigInt, BigInt> merged;
  for (const auto& p : pairs) merged[p.eigenvalue] += p.multiplicity;
  std::vector<JohnsonEigenpair> out;
  for (const auto& [value, mult] : merged) {
    if (mult != 0) out.push_back({value, mult});
  }
  return out;
}

RationalMatrix Adjacency(const JohnsonGraphSpec& spec, const Ceilings& ceilings) {
  spec.Validate();
  const std::vector<SubsetId> v = Vertices(spec.d, spec.k, ceilings);
  RationalMatrix m(v.size(), Basis::kSubsets, spec.d, spec.k);
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = 0; b < v.size(); ++b) {
      if (IntersectionSize(v[a].members, v[b].members) == spec.t) m(a, b) = 1;
    }
  }
  return m;
}

JohnsonSpectrum ClosedFormSpectrum(const JohnsonGraphSpec& spec) {
  spec.Validate();
  const int d = spec.d;
  const int k = spec.k;
  const int t = spec.t;
  if (2 * k <= d) return DirectSpectrum(d, k, t);
  const int kc = d - k;
  const int tc = d - 2 * k + t;
  if (tc < 0) return JohnsonSpectrum{{{0, Binomial(d, k)}}};
  return DirectSpectrum(d, kc, tc);
}

BigRational AlphaWeight(int d, int s, int k, int t) {
  if (t < 0 || t >= k || k > s || s > d) {
    throw ContractViolation("alpha_weight: need 0 <= t < k <= s <= d");
  }
  if (2 * k - t > d) throw ContractViolation("alpha_weight: 2k - t > d makes the denominator vanish");
  BigRational q(FallingFactorial(s - k, k - t), FallingFactorial(d, 2 * k - t));
  q.canonicalize();
  return q;
}

std::vector<BigRational> AlphaWeights(int d, int s, int k) {
  std::vector<BigRational> out;
  for (int t = 0; t < k; ++t) out.push_back(AlphaWeight(d, s, k, t));
  return out;
}

RationalMatrix DTildeFromWeights(int d, int s, int k, const Ceilings& ceilings) {
  if (k < 1 || k > s || s > d) throw ContractViolation("d_tilde_from_weights: need 1 <= k <= s <= d");
  std::vector<Rational> alpha(k);
  for (int t = 0; t < k; ++t) {
    if (2 * k - t <= d) alpha[t] = Rational::FromBig(AlphaWeight(d, s, k, t));
  }
  const std::vector<SubsetId> v = Vertices(d, k, ceilings);
  RationalMatrix m(v.size(), Basis::kSubsets, d, k);
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = 0; b < v.size(); ++b) {
      int t = IntersectionSize(v[a].members, v[b].members);
      if (t < k) m(a, b) = alpha[t];
    }
  }
  return m;
}

RationalMatrix DifferenceOperator(int d, int s, int k, const Ceilings& ceilings) {
  if (k < 1 || k > s || s > d) throw ContractViolation("difference_operator: need 1 <= k <= s <= d");
  RationalMatrix phi = RestrictToDistinct(SubsetMomentProjected(d, s, k, ceilings));
  RationalMatrix psi = RestrictToDistinct(ProjectedHaarMoment(d, k, ceilings));
  const Rational scale = Rational::FromBig(FallingFactorial(d + k - 1, k), FallingFactorial(d, k));
  return phi - scale * psi;
}

RationalMatrix DTildeDirect(int d, int s, int k, const Ceilings& ceilings) {
  const RationalMatrix diff = DifferenceOperator(d, s, k, ceilings);
  const std::size_t block = FallingFactorialU64(k, k);
  const std::size_t n = diff.dim() / block;
  RationalMatrix out(n, Basis::kSubsets, d, k);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Rational& v = diff(a * block, b * block);
      for (std::size_t i = 0; i < block; ++i) {
        for (std::size_t j = 0; j < block; ++j) {
          if (diff(a * block + i, b * block + j) != v) {
            throw ConsistencyError("d_tilde_direct: block (" + std::to_string(a) + "," + std::to_string(b) +
                                   ") is not constant; tuple ordering is broken");
          }
        }
      }
      out(a, b) = v;
    }
  }
  return out;
}

BigInt TraceNormBound(const JohnsonGraphSpec& spec) {
  spec.Validate();
  BigInt pow2 = 1;
  pow2 <<= static_cast<mp_bitcnt_t>(spec.k - spec.t);
  return Binomial(spec.d - spec.k, spec.k - spec.t) * Binomial(spec.d, spec.t) * pow2;
}

BigInt SpectrumTraceNorm(const JohnsonGraphSpec& spec) {
  BigInt total = 0;
  for (const auto& p : ClosedFormSpectrum(spec).pairs) total += p.multiplicity * abs(p.eigenvalue);
  return total;
}

std::vector<double> SimplifiedEigenvalueBounds(const JohnsonGraphSpec& spec) {
  spec.Validate();
  const int d = spec.d;
  const int k = spec.k;
  const int t = spec.t;
  const double lambda0 = BigInt(Binomial(k, t) * Binomial(d - k, k - t)).get_d();
  const double ckt = Binomial(k, t).get_d();
  std::vector<double> out;
  for (int j = 1; j <= k; ++j) {
    if (j <= t) {
      out.push_back(Binomial(k - j, t - j).get_d() / ckt * lambda0);
    } else {
      double ratio = Binomial(j, t).get_d() * FallingFactorial(k - t, k - t).get_d() /
                     (ckt * FallingFactorial(k - j, k - j).get_d());
      double scale = 1.0;
      for (int p = 0; p < j - t; ++p) scale /= d;
      out.push_back(ratio * scale * lambda0);
    }
  }
  return out;
}

void WriteSpectrumCsv(std::ostream& os, const JohnsonGraphSpec& spec, const JohnsonSpectrum& spectrum, bool header) {
  if (header) os << "d,k,t,j,lambda,multiplicity\n";
  for (std::size_t j = 0; j < spectrum.pairs.size(); ++j) {
    os << spec.d << ',' << spec.k << ',' << spec.t << ',' << j << ',' << spectrum.pairs[j].eigenvalue.get_str()
       << ',' << spectrum.pairs[j].multiplicity.get_str() << '\n';
  }
}

}  // namespace prslab
