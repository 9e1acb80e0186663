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

#include "prslab/spectral.h"

#include <cmath>
#include <numeric>
#include <sstream>

#include <gtest/gtest.h>

#include "prslab/errors.h"
#include "prslab/johnson.h"
#include "prslab/moments.h"

namespace prslab {
namespace {

TEST(SymEigenvaluesTest, Examples) {
  Eigen::MatrixXd diag = Eigen::Vector3d(3, 1, 2).asDiagonal();
  EXPECT_EQ(SymEigenvalues(diag), (std::vector<double>{1, 2, 3}));

  const Eigen::MatrixXd k4 = Eigen::MatrixXd::Ones(4, 4) - Eigen::MatrixXd::Identity(4, 4);
  const auto ev = SymEigenvalues(k4);
  ASSERT_EQ(ev.size(), 4u);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(ev[i], -1.0, 1e-12);
  EXPECT_NEAR(ev[3], 3.0, 1e-12);

  const auto ph = SymEigenvalues(ProjectedHaarMoment(4, 2));
  EXPECT_NEAR(std::accumulate(ph.begin(), ph.end(), 0.0), 0.6, 1e-12);
}

TEST(SymEigenvaluesTest, RejectsAsymmetricInput) {
  Eigen::MatrixXd m(2, 2);
  m << 1, 2, 3, 4;
  EXPECT_THROW(SymEigenvalues(m), ContractViolation);
  RationalMatrix r(2, Basis::kProductTuples, 2, 1);
  r(0, 1) = Rational(1, 3);
  EXPECT_THROW(SymEigenvalues(r), ContractViolation);
}

TEST(SymEigenTest, ResidualAndTraceIdentity) {
  for (const RationalMatrix& m :
       {HaarMoment(3, 3), SubsetMomentEnum(6, 3, 2), Adjacency({8, 3, 1}), DifferenceOperator(7, 4, 2)}) {
    const Eigen::MatrixXd dense = ToDense(m);
    const SymEigenResult r = SymEigen(dense);
    const double dim = static_cast<double>(dense.rows());
    EXPECT_LE(r.residual, 1e-9 * dim);
    EXPECT_NEAR(r.values.sum(), dense.trace(), 1e-9 * dim);
  }
}

TEST(TraceNormTest, Examples) {
  EXPECT_NEAR(TraceNorm(SubsetMomentEnum(5, 3, 2)), 1.0, 1e-10);
  EXPECT_NEAR(TraceNorm(HaarMoment(4, 2) - ProjectedHaarMoment(4, 2)), 0.4, 1e-12);
  EXPECT_EQ(TraceNorm(Eigen::MatrixXd::Zero(5, 5)), 0.0);
}

TEST(TraceNormTest, HaarProjectionGapIsOneMinusTrace) {
  for (int d = 2; d <= 12; ++d) {
    for (int k = 1; k <= (d <= 8 ? 3 : 2); ++k) {
      const double gap = TraceNorm(HaarMoment(d, k) - ProjectedHaarMoment(d, k));
      const double exact = BigRational(1 - ProjectedHaarTrace(d, k)).get_d();
      EXPECT_NEAR(gap, exact, 1e-10) << d << " " << k;
    }
  }
}

TEST(TheoremLhsTest, Examples) {
  EXPECT_NEAR(TheoremLhs(4, 2, 1), 0.5, 1e-12);
  EXPECT_NEAR(TheoremLhs(8, 2, 1), 0.25, 1e-12);
  EXPECT_NEAR(TheoremLhs(3, 1, 1), 0.0, 1e-12);
}

TEST(TheoremLhsTest, SingleCopyClosedForm) {
  for (int d = 1; d <= 12; ++d) {
    for (int s = 1; s <= d; ++s) {
      // At k = 1 the difference is a multiple of J - I; take its trace norm
      // from an explicitly built matrix.
      Eigen::MatrixXd diff = Eigen::MatrixXd::Zero(d, d);
      if (d > 1) {
        diff = (Eigen::MatrixXd::Ones(d, d) - Eigen::MatrixXd::Identity(d, d)) *
               (static_cast<double>(s - 1) / (static_cast<double>(d) * (d - 1)));
      }
      const double closed = 2.0 * (s - 1) / d;
      EXPECT_NEAR(TraceNorm(diff), closed, 1e-10);
      EXPECT_NEAR(TheoremLhs(d, s, 1), closed, 1e-10) << d << " " << s;
    }
  }
}

TEST(TheoremBoundTest, Examples) {
  EXPECT_NEAR(TheoremBound(4, 2, 1), 0.25 + 1 / std::sqrt(2.0) + 0.5, 1e-15);
  EXPECT_NEAR(TheoremBound(4, 2, 1), 1.4571, 1e-4);
  EXPECT_NEAR(TheoremBound(100, 10, 2), 0.8725, 1e-4);
  EXPECT_NEAR(TheoremBound(8, 4, 2), 2.5, 1e-15);
}

TEST(DistanceReportTest, SubsetGapBoundedByAveragedSingleSubsetGaps) {
  for (int d = 3; d <= 7; ++d) {
    for (int k = 1; k <= 2; ++k) {
      for (int s = k; s <= d; ++s) {
        const double gap = TraceNorm(SubsetMomentEnum(d, s, k) - SubsetMomentProjected(d, s, k));
        double avg = 0.0;
        const auto subsets = EnumerateSubsets(d, s);
        for (const SubsetId& id : subsets) avg += SingleSubsetGap(d, s, k, id);
        avg /= static_cast<double>(subsets.size());
        EXPECT_LE(gap, avg + 1e-10) << d << " " << s << " " << k;
      }
    }
  }
}

TEST(DistanceReportTest, CrossGapBoundedByDifferenceOperator) {
  for (int d = 3; d <= 7; ++d) {
    for (int k = 1; k <= 2; ++k) {
      for (int s = k; s <= d; ++s) {
        const RationalMatrix psi_t = RestrictToDistinct(ProjectedHaarMoment(d, k));
        const RationalMatrix phi_t = RestrictToDistinct(SubsetMomentProjected(d, s, k));
        const double scale = FallingFactorial(d + k - 1, k).get_d() / FallingFactorial(d, k).get_d();
        const Eigen::MatrixXd psi = ToDense(psi_t);
        const double lhs = TraceNorm(ToDense(phi_t) - psi);
        const double rhs = TraceNorm(DifferenceOperator(d, s, k)) + TraceNorm(psi - scale * psi);
        EXPECT_LE(lhs, rhs + 1e-10) << d << " " << s << " " << k;
      }
    }
  }
}

TEST(DistanceReportTest, FieldsAndChain) {
  const DistanceReport r = ComputeDistanceReport({6, 3, 2}, {}, 42);
  EXPECT_EQ(r.seed, 42u);
  EXPECT_NEAR(r.gap_haar, 1.0 - 30.0 / 42.0, 1e-12);
  EXPECT_NEAR(r.trace_mismatch, 1.0 - 30.0 / 42.0, 1e-15);
  EXPECT_NEAR(r.lhs, TraceNorm(HaarMoment(6, 2) - SubsetMomentEnum(6, 3, 2)), 1e-12);
  EXPECT_NEAR(r.gap_subset, TraceNorm(SubsetMomentEnum(6, 3, 2) - SubsetMomentProjected(6, 3, 2)), 1e-12);
  EXPECT_NEAR(r.gap_cross, TraceNorm(SubsetMomentProjected(6, 3, 2) - ProjectedHaarMoment(6, 2)), 1e-12);
  EXPECT_TRUE(r.ChainHolds());
  EXPECT_GE(r.lhs, 0.0);
  EXPECT_LE(r.lhs, 2.0);
}

TEST(SweepTest, Examples) {
  const std::vector<GridPoint> one{{4, 2, 1}};
  const SweepResult a = Sweep(one);
  ASSERT_EQ(a.reports.size(), 1u);
  EXPECT_NEAR(a.reports[0].ratio, 0.5 / TheoremBound(4, 2, 1), 1e-12);
  EXPECT_NEAR(a.reports[0].ratio, 0.343, 1e-3);

  const std::vector<GridPoint> trivial{{3, 1, 1}};
  const SweepResult b = Sweep(trivial);
  EXPECT_NEAR(b.reports[0].lhs, 0.0, 1e-12);
  EXPECT_NEAR(b.MaxRatio(), 0.0, 1e-12);
}

TEST(SweepTest, ErrorsAreCollectedPerPoint) {
  const std::vector<GridPoint> grid{{4, 2, 1}, {4, 5, 1}, {5, 2, 3}, {5, 3, 2}};
  const SweepResult r = Sweep(grid);
  EXPECT_EQ(r.reports.size(), 2u);
  ASSERT_EQ(r.errors.size(), 2u);
  EXPECT_EQ(r.errors[0].point.s, 5);
  EXPECT_EQ(r.errors[1].point.k, 3);
  EXPECT_EQ(r.reports[1].d, 5);
}

TEST(SweepTest, CsvLayout) {
  const std::vector<GridPoint> grid{{4, 2, 1}};
  std::ostringstream os;
  WriteDistanceCsv(os, Sweep(grid, {}, 9).reports);
  std::istringstream in(os.str());
  std::string header;
  std::string row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header, "d,s,k,lhs,bound,ratio,gap_haar,gap_subset,gap_cross,seed");
  EXPECT_EQ(row.substr(0, 21), "4,2,1,0.500000000000,");
  EXPECT_EQ(row.substr(row.size() - 2), ",9");
}

TEST(ClusterEigenvaluesTest, GroupsWithinRadius) {
  const std::vector<double> v{-1.0, -1.0 + 1e-9, 0.5, 3.0, 3.0 + 2e-7};
  const auto c = ClusterEigenvalues(v, 1e-6);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0].multiplicity, 2);
  EXPECT_EQ(c[1].multiplicity, 1);
  EXPECT_EQ(c[2].multiplicity, 2);
}

TEST(HaarMcMomentTest, SingleCopyConcentrates) {
  const HaarMcMoment mc = SampleHaarMoment(2, 1, 100000, 1);
  const Eigen::MatrixXcd target = Eigen::MatrixXcd::Identity(2, 2) * 0.5;
  EXPECT_LE((mc.moment - target).cwiseAbs().maxCoeff(), 0.02);
  EXPECT_LE(mc.max_imag, 0.02);
}

TEST(HaarMcMomentTest, OneSampleIsAPureState) {
  const HaarMcMoment mc = SampleHaarMoment(2, 1, 1, 17);
  EXPECT_NEAR(mc.moment.trace().real(), 1.0, 1e-12);
  EXPECT_NEAR((mc.moment * mc.moment - mc.moment).cwiseAbs().maxCoeff(), 0.0, 1e-12);
}

TEST(HaarMcMomentTest, DeterministicPerSeed) {
  const HaarMcMoment a = SampleHaarMoment(3, 2, 500, 5);
  const HaarMcMoment b = SampleHaarMoment(3, 2, 500, 5);
  const HaarMcMoment c = SampleHaarMoment(3, 2, 500, 6);
  EXPECT_TRUE(a.moment == b.moment);
  EXPECT_FALSE(a.moment == c.moment);
}

TEST(HaarMcMomentTest, TwoCopiesCloseToExact) {
  const HaarMcMoment mc = SampleHaarMoment(3, 2, 20000, 3);
  const Eigen::MatrixXd exact = ToDense(HaarMoment(3, 2));
  EXPECT_LE((mc.moment.real() - exact).norm(), 0.05);
}

}  // namespace
}  // namespace prslab
