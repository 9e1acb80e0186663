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

#ifndef PRSLAB_RATIONAL_H_
#define PRSLAB_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace prslab {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Exact rational with 64-bit numerator and denominator, always in lowest
// terms with a positive denominator. Every operation is carried out in
// 128-bit intermediates and throws std::overflow_error if the reduced result
// does not fit. Dense moment matrices store millions of these, so the
// arbitrary-precision BigRational is reserved for scalar closed forms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int64_t num, int64_t den);

  // Throws std::overflow_error if the value needs more than 64 bits.
  static Rational FromBig(const BigRational& q);
  static Rational FromBig(const BigInt& numer, const BigInt& denom);
  // Accepts "p/q" or "p".
  static Rational Parse(std::string_view text);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  double ToDouble() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  BigRational ToBig() const;
  // Always "p/q", including "0/1" and "3/1".
  std::string ToString() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational Reduce(__int128 num, __int128 den);

  int64_t num_ = 0;
  int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace prslab

#endif  // PRSLAB_RATIONAL_H_
