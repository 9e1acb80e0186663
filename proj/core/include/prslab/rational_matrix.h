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

#ifndef PRSLAB_RATIONAL_MATRIX_H_
#define PRSLAB_RATIONAL_MATRIX_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prslab/rational.h"

namespace prslab {

// Which basis labels the rows and columns of a matrix.
enum class Basis {
  kProductTuples,   // [d]^k in mixed-radix order (ProductIndex)
  kDistinctTuples,  // A([d],k) in (subset rank, Lehmer rank) order (TupleRank)
  kSubsets,         // k-subsets of [d] in lexicographic order (SubsetRank)
};

std::string_view BasisName(Basis basis);
Basis ParseBasis(std::string_view name);

// Dense square matrix of exact rationals, row major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t dim, Basis basis, int d, int k);

  std::size_t dim() const { return dim_; }
  Basis basis() const { return basis_; }
  int d() const { return d_; }
  int k() const { return k_; }

  Rational& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Rational& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  std::span<const Rational> entries() const { return entries_; }

  Rational Trace() const;
  bool IsSymmetric() const;
  bool IsZero() const;

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Rational& scale);
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }

  // Plain O(dim^3) product; meant for small cross-checks.
  RationalMatrix MatMul(const RationalMatrix& other) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  void CheckSameShape(const RationalMatrix& other) const;

  std::size_t dim_ = 0;
  Basis basis_ = Basis::kProductTuples;
  int d_ = 0;
  int k_ = 0;
  std::vector<Rational> entries_;
};

// JSON container:
//   {"schema_version": 1, "dim": n, "basis": "...", "d": d, "k": k,
//    "entries": [["p/q", ...], ...]}
std::string ToJson(const RationalMatrix& m);
RationalMatrix RationalMatrixFromJson(std::string_view json);

}  // namespace prslab

#endif  // PRSLAB_RATIONAL_MATRIX_H_
