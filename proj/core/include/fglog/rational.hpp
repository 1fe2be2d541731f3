// Copyright 2026 The fglog Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FGLOG_RATIONAL_HPP
#define FGLOG_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fglog {

// Exact rational number in canonical form (den > 0, gcd(|num|, den) = 1).
//
// Values whose numerator and denominator fit in a machine word are kept
// inline and combined with 128-bit intermediates; anything larger lives in
// a GMP mpq_class. The two representations are never both active, and a
// big value is demoted back to the small form whenever it fits.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(std::int64_t n) noexcept;  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class &q);

  Rational(const Rational &other);
  Rational(Rational &&other) noexcept = default;
  Rational &operator=(const Rational &other);
  Rational &operator=(Rational &&other) noexcept = default;
  ~Rational() = default;

  // Accepts "p", "-p", "p/q" with arbitrary-length decimal digits.
  static Rational parse(std::string_view text);

  [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_one() const noexcept {
    return !big_ && num_ == 1 && den_ == 1;
  }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] int sign() const;
  [[nodiscard]] bool is_small() const noexcept { return !big_; }

  [[nodiscard]] mpq_class to_mpq() const;
  [[nodiscard]] std::string numerator_str() const;
  [[nodiscard]] std::string denominator_str() const;
  // "p/q", or "p" when the denominator is 1.
  [[nodiscard]] std::string str() const;
  // Always "p/q", the interchange form.
  [[nodiscard]] std::string fraction_str() const;

  Rational operator-() const;
  Rational &operator+=(const Rational &rhs);
  Rational &operator-=(const Rational &rhs);
  Rational &operator*=(const Rational &rhs);
  Rational &operator/=(const Rational &rhs);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b);
  friend std::strong_ordering operator<=>(const Rational &a,
                                          const Rational &b);

  // a += b * c, the accumulation kernel of every product loop.
  friend void add_product(Rational &acc, const Rational &b, const Rational &c);

 private:
  void set_big(mpq_class &&q);
  __extension__ typedef __int128 Wide;
  void set_from_wide(Wide num, Wide den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

void add_product(Rational &acc, const Rational &b, const Rational &c);
std::ostream &operator<<(std::ostream &os, const Rational &r);

}  // namespace fglog

#endif  // FGLOG_RATIONAL_HPP
