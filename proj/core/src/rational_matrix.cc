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

#include "prslab/rational_matrix.h"

#include <string>

#include "json.hpp"
#include "prslab/errors.h"

namespace prslab {

std::string_view BasisName(Basis basis) {
  switch (basis) {
    case Basis::kProductTuples: return "product_tuples";
    case Basis::kDistinctTuples: return "distinct_tuples";
    case Basis::kSubsets: return "subsets";
  }
  return "unknown";
}

Basis ParseBasis(std::string_view name) {
  if (name == "product_tuples") return Basis::kProductTuples;
  if (name == "distinct_tuples") return Basis::kDistinctTuples;
  if (name == "subsets") return Basis::kSubsets;
  throw ContractViolation("unknown basis '" + std::string(name) + "'");
}

RationalMatrix::RationalMatrix(std::size_t dim, Basis basis, int d, int k)
    : dim_(dim), basis_(basis), d_(d), k_(k), entries_(dim * dim) {}

Rational RationalMatrix::Trace() const {
  Rational t;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool RationalMatrix::IsSymmetric() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

bool RationalMatrix::IsZero() const {
  for (const Rational& r : entries_) {
    if (!r.is_zero()) return false;
  }
  return true;
}

void RationalMatrix::CheckSameShape(const RationalMatrix& other) const {
  if (dim_ != other.dim_ || basis_ != other.basis_ || d_ != other.d_ || k_ != other.k_) {
    throw ContractViolation("RationalMatrix: operands have different shape or basis");
  }
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  CheckSameShape(other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  CheckSameShape(other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& scale) {
  for (Rational& r : entries_) {
    if (!r.is_zero()) r *= scale;
  }
  return *this;
}

RationalMatrix RationalMatrix::MatMul(const RationalMatrix& other) const {
  CheckSameShape(other);
  RationalMatrix out(dim_, basis_, d_, k_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t l = 0; l < dim_; ++l) {
      const Rational& a = (*this)(i, l);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        const Rational& b = other(l, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  }
  return out;
}

std::string ToJson(const RationalMatrix& m) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["dim"] = m.dim();
  j["basis"] = BasisName(m.basis());
  j["d"] = m.d();
  j["k"] = m.k();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(m(r, c).ToString());
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j.dump();
}

RationalMatrix RationalMatrixFromJson(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ContractViolation(std::string("RationalMatrix JSON: ") + e.what());
  }
  const std::size_t dim = j.at("dim").get<std::size_t>();
  RationalMatrix m(dim, ParseBasis(j.at("basis").get<std::string>()), j.value("d", 0), j.value("k", 0));
  const auto& rows = j.at("entries");
  if (rows.size() != dim) throw ContractViolation("RationalMatrix JSON: row count != dim");
  for (std::size_t r = 0; r < dim; ++r) {
    if (rows[r].size() != dim) throw ContractViolation("RationalMatrix JSON: ragged rows");
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = Rational::Parse(rows[r][c].get<std::string>());
  }
  return m;
}

}  // namespace prslab
