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

#include "prslab/states.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <string>

#include <Eigen/Eigenvalues>

#include "prslab/errors.h"

namespace prslab {

StateVector::StateVector(std::vector<Amplitude> amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw ContractViolation("StateVector: empty amplitude list");
  double norm = 0.0;
  for (const Amplitude& a : amplitudes_) norm += std::norm(a);
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw ContractViolation("StateVector: squared norm " + std::to_string(norm) + " is not 1");
  }
}

std::size_t StateVector::SupportSize(double tol) const {
  return static_cast<std::size_t>(
      std::count_if(amplitudes_.begin(), amplitudes_.end(), [&](const Amplitude& a) { return std::abs(a) > tol; }));
}

int StateVector::NumQubits() const {
  if (!std::has_single_bit(dim())) return -1;
  return std::countr_zero(dim());
}

void CutSpec::Validate(std::size_t dim) const {
  if (n < 2 || a < 1 || a > n - 1) {
    throw ContractViolation("CutSpec: need 1 <= a <= n-1, got n=" + std::to_string(n) + " a=" + std::to_string(a));
  }
  if (!std::has_single_bit(dim) || std::countr_zero(dim) != n) {
    throw ContractViolation("CutSpec: state dimension " + std::to_string(dim) + " is not 2^" + std::to_string(n));
  }
}

StateVector SubsetState(std::size_t d, std::span<const int> members) {
  if (members.empty()) throw ContractViolation("SubsetState: empty subset");
  std::vector<Amplitude> amp(d);
  const double value = 1.0 / std::sqrt(static_cast<double>(members.size()));
  for (int m : members) {
    if (m < 0 || static_cast<std::size_t>(m) >= d) throw ContractViolation("SubsetState: member outside [0, d)");
    if (amp[m] != Amplitude()) throw ContractViolation("SubsetState: repeated member");
    amp[m] = value;
  }
  return StateVector(std::move(amp));
}

StateVector SubsetState(std::size_t d, const SubsetId& subset) { return SubsetState(d, subset.members); }

StateVector UniformSuperposition(std::size_t d) {
  if (d < 1) throw ContractViolation("UniformSuperposition: d must be positive");
  return StateVector(std::vector<Amplitude>(d, 1.0 / std::sqrt(static_cast<double>(d))));
}

double Fidelity(const StateVector& u, const StateVector& v) {
  if (u.dim() != v.dim()) throw ContractViolation("Fidelity: dimension mismatch");
  Amplitude overlap;
  for (std::size_t i = 0; i < u.dim(); ++i) overlap += std::conj(u[i]) * v[i];
  return std::min(1.0, std::abs(overlap));
}

std::vector<double> SchmidtSpectrum(const StateVector& state, const CutSpec& cut) {
  cut.Validate(state.dim());
  const std::size_t rows = std::size_t{1} << cut.a;
  const std::size_t cols = std::size_t{1} << (cut.n - cut.a);
  Eigen::Map<const Eigen::Matrix<Amplitude, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      state.amplitudes().data(), static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  // Reduced density matrix of the smaller side.
  Eigen::MatrixXcd gram = rows <= cols ? Eigen::MatrixXcd(m * m.adjoint()) : Eigen::MatrixXcd(m.adjoint() * m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  for (double& p : out) p = std::max(p, 0.0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double EntanglementEntropy(std::span<const double> spectrum) {
  double h = 0.0;
  for (double p : spectrum) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return std::max(h, 0.0);
}

double EntanglementEntropy(const StateVector& state, const CutSpec& cut) {
  return EntanglementEntropy(SchmidtSpectrum(state, cut));
}

int SchmidtRank(std::span<const double> spectrum, double tol) {
  return static_cast<int>(std::count_if(spectrum.begin(), spectrum.end(), [&](double p) { return p > tol; }));
}

StateVector PermuteQubits(const StateVector& state, std::span<const int> perm) {
  const int n = state.NumQubits();
  if (n < 0 || static_cast<int>(perm.size()) != n) throw ContractViolation("PermuteQubits: perm size != qubit count");
  std::vector<int> seen(n, 0);
  for (int q : perm) {
    if (q < 0 || q >= n || seen[q]++) throw ContractViolation("PermuteQubits: not a permutation");
  }
  std::vector<Amplitude> out(state.dim());
  for (std::size_t x = 0; x < state.dim(); ++x) {
    std::size_t y = 0;
    for (int q = 0; q < n; ++q) {
      // qubit q sits at bit (n-1-q).
      std::size_t bit = (x >> (n - 1 - q)) & 1u;
      y |= bit << (n - 1 - perm[q]);
    }
    out[y] = state[x];
  }
  return StateVector(std::move(out));
}

std::vector<EntropyRow> EntropyProfile(const StateVector& state, std::size_t s) {
  const int n = state.NumQubits();
  if (n < 2) throw ContractViolation("EntropyProfile: need at least two qubits");
  std::vector<EntropyRow> rows;
  for (int a = 1; a < n; ++a) {
    std::vector<double> spec = SchmidtSpectrum(state, {n, a});
    rows.push_back({n, s, a, EntanglementEntropy(spec), SchmidtRank(spec)});
  }
  return rows;
}

void WriteEntropyCsv(std::ostream& os, std::span<const EntropyRow> rows, bool header) {
  if (header) os << "n,s,cut,entropy_bits,schmidt_rank\n";
  char buf[64];
  for (const EntropyRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%.12f", r.entropy_bits);
    os << r.n << ',' << r.s << ',' << r.cut << ',' << buf << ',' << r.schmidt_rank << '\n';
  }
}

}  // namespace prslab
