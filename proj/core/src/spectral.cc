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

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <Eigen/Eigenvalues>

#include "prslab/errors.h"
#include "prslab/moments.h"
#include "prslab/rng.h"

namespace prslab {
namespace {

void CheckSymmetric(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw ContractViolation("symmetric eigensolver: matrix is not square");
  const double asym = m.rows() == 0 ? 0.0 : (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTolerance) {
    throw ContractViolation("symmetric eigensolver: asymmetry " + std::to_string(asym) + " exceeds tolerance");
  }
}

// Keeps the rows/columns listed in `keep`.
Eigen::MatrixXd Submatrix(const Eigen::MatrixXd& m, const std::vector<Eigen::Index>& keep) {
  return m(keep, keep);
}

}  // namespace

Eigen::MatrixXd ToDense(const RationalMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m(i, j).ToDouble();
  }
  return out;
}

std::vector<double> SymEigenvalues(const Eigen::MatrixXd& m) {
  CheckSymmetric(m);
  if (m.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConsistencyError("symmetric eigensolver did not converge");
  const Eigen::VectorXd& v = solver.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

std::vector<double> SymEigenvalues(const RationalMatrix& m) { return SymEigenvalues(ToDense(m)); }

SymEigenResult SymEigen(const Eigen::MatrixXd& m) {
  CheckSymmetric(m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw ConsistencyError("symmetric eigensolver did not converge");
  SymEigenResult out{solver.eigenvalues(), solver.eigenvectors(), 0.0};
  if (m.rows() > 0) {
    Eigen::MatrixXd rebuilt = out.vectors * out.values.asDiagonal() * out.vectors.transpose();
    out.residual = (m - rebuilt).cwiseAbs().maxCoeff();
  }
  return out;
}

double TraceNorm(const Eigen::MatrixXd& m) {
  double total = 0.0;
  for (double v : SymEigenvalues(m)) total += std::abs(v);
  return total;
}

double TraceNorm(const RationalMatrix& m) { return TraceNorm(ToDense(m)); }

std::vector<EigenCluster> ClusterEigenvalues(std::span<const double> sorted, double radius) {
  std::vector<EigenCluster> out;
  double sum = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (out.empty() || sorted[i] - sorted[i - 1] > radius) {
      if (!out.empty()) out.back().value = sum / out.back().multiplicity;
      out.push_back({sorted[i], 0});
      sum = 0.0;
    }
    sum += sorted[i];
    ++out.back().multiplicity;
  }
  if (!out.empty()) out.back().value = sum / out.back().multiplicity;
  return out;
}

double TheoremLhs(int d, int s, int k, const Ceilings& ceilings) {
  if (k > s) throw ContractViolation("theorem_lhs: need k <= s");
  RationalMatrix diff = HaarMoment(d, k, ceilings);
  diff -= SubsetMomentEnum(d, s, k, ceilings);
  return TraceNorm(diff);
}

double TheoremBound(int d, int s, int k) {
  if (s < 1 || d < 1) throw ContractViolation("theorem_bound: need s >= 1 and d >= 1");
  const double kd = k;
  return kd * kd / d + kd / std::sqrt(static_cast<double>(s)) + static_cast<double>(s) * kd / d;
}

bool DistanceReport::ChainHolds(double tol) const {
  if (!(lhs >= -tol && lhs <= 2.0 + tol)) return false;
  if (gap_haar < -tol || gap_subset < -tol || gap_cross < -tol) return false;
  return lhs <= gap_haar + gap_subset + gap_cross + tol;
}

DistanceReport ComputeDistanceReport(const GridPoint& p, const Ceilings& ceilings, uint64_t seed) {
  const int d = p.d;
  const int s = p.s;
  const int k = p.k;
  if (k < 1 || k > s || s > d) throw ContractViolation("distance report: need 1 <= k <= s <= d");

  const Eigen::MatrixXd psi = ToDense(HaarMoment(d, k, ceilings));
  const Eigen::MatrixXd phi = ToDense(SubsetMomentEnum(d, s, k, ceilings));
  const Eigen::MatrixXd psi_t = ToDense(ProjectedHaarMoment(d, k, ceilings));
  const Eigen::MatrixXd phi_t = ToDense(SubsetMomentProjected(d, s, k, ceilings));

  // Psi and Psi~ are block diagonal for the split distinct / repeated tuples,
  // and Phi~, Psi~ live on the distinct block, so two of the gaps can be
  // taken on the smaller blocks.
  std::vector<Eigen::Index> distinct;
  std::vector<Eigen::Index> repeated;
  for (Eigen::Index a = 0; a < psi.rows(); ++a) {
    (AllDistinct(ProductTuple(a, d, k)) ? distinct : repeated).push_back(a);
  }

  DistanceReport r;
  r.d = d;
  r.s = s;
  r.k = k;
  r.seed = seed;
  r.lhs = TraceNorm(psi - phi);
  r.bound = TheoremBound(d, s, k);
  r.ratio = r.lhs / r.bound;
  r.gap_haar = repeated.empty() ? 0.0 : TraceNorm(Submatrix(psi - psi_t, repeated));
  r.gap_subset = TraceNorm(phi - phi_t);
  r.gap_cross = TraceNorm(Submatrix(phi_t - psi_t, distinct));
  r.trace_mismatch = BigRational(1 - ProjectedHaarTrace(d, k)).get_d();
  return r;
}

double SweepResult::MaxRatio() const {
  double m = 0.0;
  for (const auto& r : reports) m = std::max(m, r.ratio);
  return m;
}

SweepResult Sweep(std::span<const GridPoint> grid, const Ceilings& ceilings, uint64_t seed) {
  SweepResult out;
  for (const GridPoint& p : grid) {
    try {
      out.reports.push_back(ComputeDistanceReport(p, ceilings, seed));
    } catch (const std::exception& e) {
      out.errors.push_back({p, e.what()});
    }
  }
  return out;
}

void WriteDistanceCsv(std::ostream& os, std::span<const DistanceReport> reports, bool header) {
  if (header) os << "d,s,k,lhs,bound,ratio,gap_haar,gap_subset,gap_cross,seed\n";
  char buf[256];
  for (const DistanceReport& r : reports) {
    std::snprintf(buf, sizeof(buf), "%d,%d,%d,%.12f,%.12f,%.12f,%.12f,%.12f,%.12f,%llu\n", r.d, r.s, r.k, r.lhs,
                  r.bound, r.ratio, r.gap_haar, r.gap_subset, r.gap_cross, static_cast<unsigned long long>(r.seed));
    os << buf;
  }
}

HaarMcMoment SampleHaarMoment(int d, int k, int64_t samples, uint64_t seed, const Ceilings& ceilings) {
  if (d < 1 || k < 1) throw ContractViolation("haar_mc_moment: need d >= 1 and k >= 1");
  if (samples < 1) throw ContractViolation("haar_mc_moment: need at least one sample");
  const uint64_t dim = PowU64(d, k);
  if (dim > ceilings.max_dim) throw ResourceError("haar_mc_moment: dimension d^k exceeds ceiling");
  const auto n = static_cast<Eigen::Index>(dim);

  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n, n);
  Eigen::VectorXcd psi(d);
  Eigen::VectorXcd tensor(n);
  for (int64_t i = 0; i < samples; ++i) {
    CounterRng rng(seed, static_cast<uint64_t>(i));
    for (int a = 0; a < d; ++a) {
      double re = rng.Normal();
      double im = rng.Normal();
      psi(a) = {re, im};
    }
    psi.normalize();
    for (Eigen::Index x = 0; x < n; ++x) {
      std::complex<double> amp = 1.0;
      uint64_t rest = static_cast<uint64_t>(x);
      for (int c = 0; c < k; ++c) {
        amp *= psi(static_cast<Eigen::Index>(rest % d));
        rest /= d;
      }
      tensor(x) = amp;
    }
    acc.noalias() += tensor * tensor.adjoint();
  }
  acc /= static_cast<double>(samples);
  HaarMcMoment out;
  out.moment = 0.5 * (acc + acc.adjoint());
  out.max_imag = out.moment.imag().cwiseAbs().maxCoeff();
  return out;
}

}  // namespace prslab
