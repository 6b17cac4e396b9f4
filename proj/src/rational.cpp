// Copyright 2026 The SMDRR Simulator Authors
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

#include "smdrr/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace smdrr {
namespace {

using Wide = __int128;

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(Wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(Wide num, Wide den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits(num) || !fits(den)) throw std::overflow_error("Rational: result exceeds 64 bits");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  return *this = from_wide(Wide{num_} * o.den_ + Wide{o.num_} * den_, Wide{den_} * o.den_);
}

Rational& Rational::operator-=(const Rational& o) {
  return *this = from_wide(Wide{num_} * o.den_ - Wide{o.num_} * den_, Wide{den_} * o.den_);
}

Rational& Rational::operator*=(const Rational& o) {
  return *this = from_wide(Wide{num_} * o.num_, Wide{den_} * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  return *this = from_wide(Wide{num_} * o.den_, Wide{den_} * o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return Wide{a.num_} * b.den_ <=> Wide{b.num_} * a.den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::string to_decimal(const Rational& r, int max_places) {
  const bool negative = r.num() < 0;
  Wide num = negative ? -Wide{r.num()} : Wide{r.num()};
  const Wide den = r.den();

  Wide scale = 1;
  for (int i = 0; i < max_places; ++i) scale *= 10;
  // Round half away from zero at max_places digits.
  Wide scaled = (num * scale * 2 + den) / (den * 2);

  std::string whole = std::to_string(static_cast<std::int64_t>(scaled / scale));
  std::string frac;
  Wide rest = scaled % scale;
  for (int i = 0; i < max_places; ++i) {
    scale /= 10;
    frac.push_back(static_cast<char>('0' + static_cast<int>(rest / scale)));
    rest %= scale;
  }
  while (!frac.empty() && frac.back() == '0') frac.pop_back();

  std::string out = (negative && (whole != "0" || !frac.empty())) ? "-" : "";
  out += whole;
  if (!frac.empty()) out += "." + frac;
  return out;
}

}  // namespace smdrr
