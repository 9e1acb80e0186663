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

#ifndef PRSLAB_STATES_H_
#define PRSLAB_STATES_H_

#include <complex>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "prslab/combinat.h"

namespace prslab {

using Amplitude = std::complex<double>;

// Normalized pure state over a computational basis of dimension d. Basis
// index x on n qubits reads qubit 0 as the most significant bit.
class StateVector {
 public:
  static constexpr double kNormTolerance = 1e-12;

  // Throws ContractViolation if the amplitudes are empty or not unit norm
  // within kNormTolerance.
  explicit StateVector(std::vector<Amplitude> amplitudes);

  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  const Amplitude& operator[](std::size_t i) const { return amplitudes_[i]; }

  // Number of nonzero amplitudes.
  std::size_t SupportSize(double tol = 0.0) const;
  // log2(dim), or -1 if dim is not a power of two.
  int NumQubits() const;

 private:
  std::vector<Amplitude> amplitudes_;
};

// Leading-qubit cut: qubits [0, a) against [a, n).
struct CutSpec {
  int n = 0;
  int a = 0;

  // Requires 1 <= a <= n - 1 and 2^n == dim.
  void Validate(std::size_t dim) const;
};

// (1/sqrt|S|) sum_{i in S} |i>. Members must be distinct and inside [0, d).
StateVector SubsetState(std::size_t d, std::span<const int> members);
StateVector SubsetState(std::size_t d, const SubsetId& subset);
StateVector UniformSuperposition(std::size_t d);

// |<u|v>|.
double Fidelity(const StateVector& u, const StateVector& v);

// Squared singular values of the 2^a x 2^(n-a) amplitude matrix, descending.
std::vector<double> SchmidtSpectrum(const StateVector& state, const CutSpec& cut);
// Von Neumann entropy in bits; 0 log 0 = 0.
double EntanglementEntropy(std::span<const double> schmidt_spectrum);
double EntanglementEntropy(const StateVector& state, const CutSpec& cut);
int SchmidtRank(std::span<const double> schmidt_spectrum, double tol = 1e-10);

// Relabels qubits: qubit q of the input becomes qubit perm[q] of the output.
// With this, any bipartition can be brought to a leading-qubit cut.
StateVector PermuteQubits(const StateVector& state, std::span<const int> perm);

struct EntropyRow {
  int n = 0;
  std::size_t s = 0;
  int cut = 0;
  double entropy_bits = 0.0;
  int schmidt_rank = 0;
};

// Rows for every contiguous cut a = 1..n-1.
std::vector<EntropyRow> EntropyProfile(const StateVector& state, std::size_t s);
// "n,s,cut,entropy_bits,schmidt_rank" (with header).
void WriteEntropyCsv(std::ostream& os, std::span<const EntropyRow> rows, bool header = true);

}  // namespace prslab

#endif  // PRSLAB_STATES_H_
