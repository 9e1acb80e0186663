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
#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "prslab/errors.h"
#include "prslab/moments.h"
#include "prslab/spectral.h"

namespace prslab {
namespace {

// Adjacency built directly from set intersections, independent of Adjacency().
Eigen::MatrixXd AdjacencyOracle(int d, int k, int t) {
  const auto subsets = EnumerateSubsets(d, k);
  const auto n = static_cast<Eigen::Index>(subsets.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      std::vector<int> common;
      std::set_intersection(subsets[i].members.begin(), subsets[i].members.end(), subsets[j].members.begin(),
                            subsets[j].members.end(), std::back_inserter(common));
      if (static_cast<int>(common.size()) == t) a(i, j) = 1.0;
    }
  }
  return a;
}

BigRational Q(long p, long q = 1) { return BigRational(p, q); }

TEST(JohnsonGraphSpecTest, Validation) {
  EXPECT_NO_THROW((JohnsonGraphSpec{5, 2, 1}.Validate()));
  EXPECT_THROW((JohnsonGraphSpec{5, 2, 2}.Validate()), ContractViolation);
  EXPECT_THROW((JohnsonGraphSpec{5, 6, 1}.Validate()), ContractViolation);
  EXPECT_THROW((JohnsonGraphSpec{5, 2, -1}.Validate()), ContractViolation);
}

TEST(AdjacencyTest, Examples) {
  const RationalMatrix k4 = Adjacency({4, 1, 0});
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(k4(r, c), Rational(r == c ? 0 : 1));
  }
  const RationalMatrix matching = Adjacency({4, 2, 0});
  ASSERT_EQ(matching.dim(), 6u);
  for (std::size_t r = 0; r < 6; ++r) {
    Rational row = 0;
    for (std::size_t c = 0; c < 6; ++c) row += matching(r, c);
    EXPECT_EQ(row, Rational(1));
  }
  const RationalMatrix d5 = Adjacency({5, 2, 1});
  for (std::size_t r = 0; r < d5.dim(); ++r) {
    Rational row = 0;
    for (std::size_t c = 0; c < d5.dim(); ++c) row += d5(r, c);
    EXPECT_EQ(row, Rational(6));
  }
}

TEST(AdjacencyTest, MatchesIntersectionOracleAndIsRegular) {
  for (int d = 1; d <= 9; ++d) {
    for (int k = 1; k <= std::min(d, 4); ++k) {
      for (int t = 0; t < k; ++t) {
        const RationalMatrix a = Adjacency({d, k, t});
        EXPECT_TRUE(ToDense(a) == AdjacencyOracle(d, k, t));
        EXPECT_TRUE(a.IsSymmetric());
        const double degree = ClosedFormSpectrum({d, k, t}).pairs[0].eigenvalue.get_d();
        EXPECT_TRUE((ToDense(a).rowwise().sum().array() == degree).all()) << d << " " << k << " " << t;
      }
    }
  }
}

TEST(ClosedFormSpectrumTest, Examples) {
  const JohnsonSpectrum a = ClosedFormSpectrum({4, 1, 0});
  ASSERT_EQ(a.pairs.size(), 2u);
  EXPECT_EQ(a.pairs[0].eigenvalue, 3);
  EXPECT_EQ(a.pairs[0].multiplicity, 1);
  EXPECT_EQ(a.pairs[1].eigenvalue, -1);
  EXPECT_EQ(a.pairs[1].multiplicity, 3);
  EXPECT_EQ(ClosedFormSpectrum({5, 2, 1}).pairs[0].eigenvalue, 6);
}

TEST(ClosedFormSpectrumTest, MultiplicitiesAndTrace) {
  for (int d = 1; d <= 14; ++d) {
    for (int k = 1; k <= d; ++k) {
      for (int t = 0; t < k; ++t) {
        const JohnsonSpectrum sp = ClosedFormSpectrum({d, k, t});
        EXPECT_EQ(sp.TotalMultiplicity(), Binomial(d, k));
        BigInt trace = 0;
        for (const auto& p : sp.pairs) trace += p.eigenvalue * p.multiplicity;
        EXPECT_EQ(trace, 0) << d << " " << k << " " << t;
        if (2 * k <= d) {
          ASSERT_EQ(sp.pairs.size(), static_cast<std::size_t>(k + 1));
          EXPECT_EQ(sp.pairs[0].multiplicity, 1);
          for (int j = 1; j <= k; ++j) EXPECT_EQ(sp.pairs[j].multiplicity, Binomial(d, j) - Binomial(d, j - 1));
        }
      }
    }
  }
}

TEST(ClosedFormSpectrumTest, MatchesDenseEigensolver) {
  for (int d = 1; d <= 10; ++d) {
    for (int k = 1; k <= std::min(d, 3); ++k) {
      for (int t = 0; t < k; ++t) {
        const std::vector<double> numeric = SymEigenvalues(AdjacencyOracle(d, k, t));
        const auto clusters = ClusterEigenvalues(numeric, 1e-6);
        const auto expected = ClosedFormSpectrum({d, k, t}).Distinct();
        ASSERT_EQ(clusters.size(), expected.size()) << d << " " << k << " " << t;
        for (std::size_t i = 0; i < expected.size(); ++i) {
          EXPECT_NEAR(clusters[i].value, expected[i].eigenvalue.get_d(), 1e-9);
          EXPECT_EQ(BigInt(clusters[i].multiplicity), expected[i].multiplicity);
        }
      }
    }
  }
}

TEST(AlphaWeightTest, Examples) {
  EXPECT_EQ(AlphaWeight(6, 3, 2, 1), Q(1, 120));
  EXPECT_EQ(AlphaWeight(6, 3, 2, 0), Q(0));
  EXPECT_EQ(AlphaWeight(8, 4, 1, 0), Q(3, 56));
  EXPECT_THROW(AlphaWeight(3, 3, 2, 0), ContractViolation);
  EXPECT_EQ(AlphaWeights(6, 3, 2), (std::vector<BigRational>{Q(0), Q(1, 120)}));
}

TEST(DTildeFromWeightsTest, Examples) {
  const RationalMatrix a = DTildeFromWeights(4, 2, 1);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(a(r, c), r == c ? Rational(0) : Rational(1, 12));
  }
  RationalMatrix d1 = Adjacency({6, 2, 1});
  d1 *= Rational(1, 120);
  EXPECT_EQ(DTildeFromWeights(6, 3, 2), d1);
  const RationalMatrix full = DTildeFromWeights(6, 6, 2);
  const auto a01 = SubsetRank(std::vector<int>{0, 1}, 6);
  const auto a12 = SubsetRank(std::vector<int>{1, 2}, 6);
  EXPECT_EQ(full(a01, a12), Rational(1, 30));
}

TEST(DTildeDirectTest, DiagonalBlocksVanish) {
  const RationalMatrix dd = DifferenceOperator(6, 3, 2);
  for (std::size_t b = 0; b < dd.dim(); b += 2) {
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(dd(b + i, b + j), Rational(0));
    }
  }
}

TEST(DTildeDirectTest, MatchesWeightedSum) {
  for (int d = 1; d <= 8; ++d) {
    for (int k = 1; k <= std::min(d, 2); ++k) {
      for (int s = k; s <= d; ++s) {
        EXPECT_EQ(DTildeDirect(d, s, k), DTildeFromWeights(d, s, k)) << d << " " << s << " " << k;
      }
    }
  }
  EXPECT_EQ(DTildeDirect(7, 5, 3), DTildeFromWeights(7, 5, 3));
}

TEST(DTildeDirectTest, DifferenceIsKroneckerWithAllOnes) {
  for (int d = 2; d <= 7; ++d) {
    for (int k = 1; k <= std::min(d, 3); ++k) {
      const int s = std::max(k, d - 1);
      const RationalMatrix big = DifferenceOperator(d, s, k);
      const RationalMatrix small = DTildeDirect(d, s, k);
      const auto block = static_cast<std::size_t>(FallingFactorialU64(k, k));
      for (std::size_t r = 0; r < big.dim(); ++r) {
        for (std::size_t c = 0; c < big.dim(); ++c) ASSERT_EQ(big(r, c), small(r / block, c / block));
      }
      EXPECT_NEAR(TraceNorm(big), static_cast<double>(block) * TraceNorm(small), 1e-9);
    }
  }
}

TEST(DifferenceOperatorTest, EqualsMomentDifference) {
  const int d = 6;
  const int s = 4;
  const int k = 2;
  const RationalMatrix phi_t = RestrictToDistinct(SubsetMomentProjected(d, s, k));
  RationalMatrix psi_t = RestrictToDistinct(ProjectedHaarMoment(d, k));
  psi_t *= Rational(FallingFactorial(d + k - 1, k).get_si(), FallingFactorial(d, k).get_si());
  EXPECT_EQ(DifferenceOperator(d, s, k), phi_t - psi_t);
}

TEST(TraceNormBoundTest, Examples) {
  EXPECT_EQ(TraceNormBound({4, 1, 0}), 6);
  EXPECT_EQ(TraceNormBound({6, 2, 1}), 48);
  EXPECT_EQ(TraceNormBound({6, 2, 0}), 24);
  EXPECT_EQ(SpectrumTraceNorm({4, 1, 0}), 6);
}

TEST(SpectrumTraceNormTest, MatchesNumericTraceNorm) {
  for (int d = 2; d <= 9; ++d) {
    for (int k = 1; k <= std::min(d, 3); ++k) {
      for (int t = 0; t < k; ++t) {
        EXPECT_NEAR(SpectrumTraceNorm({d, k, t}).get_d(), TraceNorm(AdjacencyOracle(d, k, t)), 1e-9)
            << d << " " << k << " " << t;
      }
    }
  }
}

TEST(SpectrumTraceNormTest, WithinFourTimesTheBound) {
  for (int d = 1; d <= 12; ++d) {
    const int kmax = std::min(d, static_cast<int>(std::floor(std::sqrt(d))) + 1);
    for (int k = 1; k <= kmax; ++k) {
      for (int t = 0; t < k; ++t) {
        EXPECT_LE(SpectrumTraceNorm({d, k, t}), 4 * TraceNormBound({d, k, t})) << d << " " << k << " " << t;
      }
    }
  }
}

TEST(SimplifiedEigenvalueBoundsTest, OneEntryPerNontrivialIndex) {
  const auto bounds = SimplifiedEigenvalueBounds({12, 2, 1});
  EXPECT_EQ(bounds.size(), 2u);
  for (double b : bounds) EXPECT_GT(b, 0.0);
}

TEST(WriteSpectrumCsvTest, Format) {
  std::ostringstream os;
  const JohnsonGraphSpec spec{4, 1, 0};
  WriteSpectrumCsv(os, spec, ClosedFormSpectrum(spec));
  EXPECT_EQ(os.str(), "d,k,t,j,lambda,multiplicity\n4,1,0,0,3,1\n4,1,0,1,-1,3\n");
}

}  // namespace
}  // namespace prslab
