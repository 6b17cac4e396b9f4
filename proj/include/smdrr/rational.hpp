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

#ifndef SMDRR_RATIONAL_HPP_
#define SMDRR_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace smdrr {

// Integer division rounded toward +infinity / -infinity. d must be non-zero.
constexpr std::int64_t ceil_div(std::int64_t n, std::int64_t d) {
  return n / d + ((n % d != 0) && ((n < 0) == (d < 0)));
}

constexpr std::int64_t floor_div(std::int64_t n, std::int64_t d) {
  return n / d - ((n % d != 0) && ((n < 0) != (d < 0)));
}

// Exact fraction over int64, always kept in lowest terms with a positive
// denominator. Arithmetic is carried out in 128 bits and throws
// std::overflow_error if the reduced result no longer fits.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  std::int64_t floor() const { return floor_div(num_, den_); }
  std::int64_t ceil() const { return ceil_div(num_, den_); }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "num/den", or just "num" when integral.
  std::string str() const;

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Decimal rendering used at every report boundary. Terminating expansions of
// at most `max_places` digits print exactly with trailing zeros trimmed
// (144, 85.75, 140.4); anything longer is rounded half away from zero to
// `max_places` digits and trimmed.
std::string to_decimal(const Rational& r, int max_places = 4);

}  // namespace smdrr

#endif  // SMDRR_RATIONAL_HPP_
