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

#ifndef PRSLAB_SPECTRAL_H_
#define PRSLAB_SPECTRAL_H_

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "prslab/combinat.h"
#include "prslab/rational_matrix.h"

namespace prslab {

// The only place exact matrices become floating point.
Eigen::MatrixXd ToDense(const RationalMatrix& m);

// Absolute tolerance for the symmetry precondition.
inline constexpr double kSymmetryTolerance = 1e-12;

// Ascending eigenvalues of a real symmetric matrix. Throws ContractViolation
// if the input is not square or not symmetric within kSymmetryTolerance.
std::vector<double> SymEigenvalues(const Eigen::MatrixXd& m);
std::vector<double> SymEigenvalues(const RationalMatrix& m);

struct SymEigenResult {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // columns
  double residual = 0.0;    // max |m - Q diag(values) Q^T|
};
SymEigenResult SymEigen(const Eigen::MatrixXd& m);

double TraceNorm(const Eigen::MatrixXd& m);
double TraceNorm(const RationalMatrix& m);

struct EigenCluster {
  double value = 0.0;  // mean of the members
  int multiplicity = 0;
};
// Groups sorted eigenvalues whose consecutive gaps are <= radius.
std::vector<EigenCluster> ClusterEigenvalues(std::span<const double> sorted, double radius = 1e-6);

// || Psi - Phi ||_1 for k copies, no 1/2 factor.
double TheoremLhs(int d, int s, int k, const Ceilings& ceilings = {});
// k^2/d + k/sqrt(s) + s k/d, with no constant applied.
double TheoremBound(int d, int s, int k);

struct DistanceReport {
  int d = 0;
  int s = 0;
  int k = 0;
  double lhs = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
  double gap_haar = 0.0;    // || Psi - Psi~ ||_1
  double gap_subset = 0.0;  // || Phi - Phi~ ||_1
  double gap_cross = 0.0;   // || Phi~ - Psi~ ||_1
  double trace_mismatch = 0.0;  // 1 - tr Psi~ (Phi~ has trace 1)
  uint64_t seed = 0;

  // lhs in [0, 2], gaps nonnegative, lhs <= sum of gaps + tol.
  bool ChainHolds(double tol = 1e-9) const;
};

struct GridPoint {
  int d = 0;
  int s = 0;
  int k = 0;
};

DistanceReport ComputeDistanceReport(const GridPoint& p, const Ceilings& ceilings = {}, uint64_t seed = 0);

struct SweepError {
  GridPoint point;
  std::string message;
};

struct SweepResult {
  std::vector<DistanceReport> reports;  // grid order
  std::vector<SweepError> errors;
  double MaxRatio() const;
};

// One report per point; a point that throws is recorded in `errors` and the
// sweep continues.
SweepResult Sweep(std::span<const GridPoint> grid, const Ceilings& ceilings = {}, uint64_t seed = 0);

// "d,s,k,lhs,bound,ratio,gap_haar,gap_subset,gap_cross,seed" (with header).
void WriteDistanceCsv(std::ostream& os, std::span<const DistanceReport> reports, bool header = true);

struct HaarMcMoment {
  Eigen::MatrixXcd moment;  // empirical average of (psi psi*)^{(x)k}, product basis
  double max_imag = 0.0;    // largest |Im| entry of the average
};

// Monte-Carlo estimate of the Haar moment: each sample normalizes a vector
// of i.i.d. standard complex Gaussians. Deterministic for a given seed.
HaarMcMoment SampleHaarMoment(int d, int k, int64_t samples, uint64_t seed, const Ceilings& ceilings = {});

}  // namespace prslab

#endif  // PRSLAB_SPECTRAL_H_
