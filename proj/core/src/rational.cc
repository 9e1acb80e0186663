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

#include "prslab/rational.h"

#include <charconv>
#include <limits>
#include <stdexcept>

#include "prslab/errors.h"

namespace prslab {
namespace {

using u128 = unsigned __int128;

u128 Abs(__int128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 Gcd(u128 a, u128 b) {
  while (b != 0) {
    u128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

bool FitsInt64(__int128 v) {
  return v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max();
}

int64_t ToInt64(const BigInt& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("Rational: value does not fit in 64 bits");
  return z.get_si();
}

}  // namespace

Rational::Rational(int64_t num, int64_t den) {
  if (den == 0) throw ContractViolation("Rational: zero denominator");
  *this = Reduce(num, den);
}

Rational Rational::Reduce(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("Rational: division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = Gcd(Abs(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
  }
  if (!FitsInt64(num) || !FitsInt64(den)) {
    throw std::overflow_error("Rational: result does not fit in 64 bits");
  }
  Rational r;
  r.num_ = static_cast<int64_t>(num);
  r.den_ = static_cast<int64_t>(den);
  return r;
}

Rational Rational::FromBig(const BigRational& q) {
  BigRational c = q;
  c.canonicalize();
  Rational r;
  r.num_ = ToInt64(c.get_num());
  r.den_ = ToInt64(c.get_den());
  return r;
}

Rational Rational::FromBig(const BigInt& numer, const BigInt& denom) {
  if (denom == 0) throw ContractViolation("Rational: zero denominator");
  return FromBig(BigRational(numer, denom));
}

Rational Rational::Parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw ContractViolation("Rational: cannot parse '" + std::string(text) + "'");
    }
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

BigRational Rational::ToBig() const {
  BigRational q{BigInt(static_cast<long>(num_)), BigInt(static_cast<long>(den_))};
  q.canonicalize();
  return q;
}

std::string Rational::ToString() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Rational Rational::operator-() const { return Reduce(-static_cast<__int128>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) return *this = Reduce(static_cast<__int128>(num_) + o.num_, den_);
  return *this = Reduce(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                        static_cast<__int128>(den_) * o.den_);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  return *this = Reduce(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  return *this = Reduce(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.ToString(); }

}  // namespace prslab
