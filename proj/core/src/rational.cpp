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

#include "fglog/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "fglog/errors.hpp"

namespace fglog {
namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v >= -static_cast<i128>(kMax) && v <= kMax; }

std::uint64_t uabs(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-v) : static_cast<std::uint64_t>(v);
}

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  const u128 u = neg ? -static_cast<u128>(v) : static_cast<u128>(v);
  mpz_class r = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  r <<= 64;
  r += static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  if (neg) r = -r;
  return r;
}

bool mpz_small(const mpz_class &z) {
  return mpz_fits_slong_p(z.get_mpz_t()) != 0 &&
         z.get_si() != std::numeric_limits<long>::min();
}

}  // namespace

Rational::Rational(std::int64_t n) noexcept {
  if (n == std::numeric_limits<std::int64_t>::min()) {
    set_big(mpq_class(mpz_class(static_cast<long>(n))));
  } else {
    num_ = n;
  }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  set_big(std::move(q));
}

Rational::Rational(const mpq_class &q) {
  mpq_class c = q;
  c.canonicalize();
  set_big(std::move(c));
}

Rational::Rational(const Rational &other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational &Rational::operator=(const Rational &other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  if (other.big_) {
    if (big_) {
      *big_ = *other.big_;
    } else {
      big_ = std::make_unique<mpq_class>(*other.big_);
    }
  } else {
    big_.reset();
  }
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  const std::string s(text.substr(b, e - b));
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    ++i;
    ++digits;
  }
  bool ok = digits > 0;
  if (ok && i < s.size()) {
    if (s[i] != '/') {
      ok = false;
    } else {
      ++i;
      std::size_t den_digits = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        ++i;
        ++den_digits;
      }
      ok = den_digits > 0 && i == s.size();
    }
  }
  if (!ok) throw ParseError("malformed rational '" + s + "'");
  const std::string body = s[0] == '+' ? s.substr(1) : s;
  mpq_class q(body, 10);
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  Rational r;
  r.set_big(std::move(q));
  return r;
}

void Rational::set_big(mpq_class &&q) {
  if (mpz_small(q.get_num()) && mpz_small(q.get_den())) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  if (big_) {
    *big_ = std::move(q);
  } else {
    big_ = std::make_unique<mpq_class>(std::move(q));
  }
}

// Expects an already reduced fraction with den > 0.
void Rational::set_from_wide(i128 num, i128 den) {
  if (fits(num) && fits(den)) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  mpq_class q(to_mpz(num), to_mpz(den));
  set_big(std::move(q));
}

bool Rational::is_integer() const {
  return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)),
                   mpz_class(static_cast<long>(den_)));
}

std::string Rational::numerator_str() const {
  return big_ ? big_->get_num().get_str() : std::to_string(num_);
}

std::string Rational::denominator_str() const {
  return big_ ? big_->get_den().get_str() : std::to_string(den_);
}

std::string Rational::str() const {
  if (is_integer()) return numerator_str();
  return numerator_str() + "/" + denominator_str();
}

std::string Rational::fraction_str() const {
  return numerator_str() + "/" + denominator_str();
}

Rational Rational::operator-() const {
  Rational r(*this);
  if (r.big_) {
    *r.big_ = -*r.big_;
  } else {
    r.num_ = -r.num_;
  }
  return r;
}

Rational &Rational::operator+=(const Rational &rhs) {
  if (!big_ && !rhs.big_) {
    const std::int64_t a = num_, b = den_, c = rhs.num_, d = rhs.den_;
    if (b == 1 && d == 1) {
      set_from_wide(static_cast<i128>(a) + c, 1);
      return *this;
    }
    const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(b),
                                     static_cast<std::uint64_t>(d));
    if (g == 1) {
      set_from_wide(static_cast<i128>(a) * d + static_cast<i128>(c) * b,
                    static_cast<i128>(b) * d);
      return *this;
    }
    const auto gi = static_cast<std::int64_t>(g);
    const i128 t =
        static_cast<i128>(a) * (d / gi) + static_cast<i128>(c) * (b / gi);
    if (t == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    i128 rem = t % gi;
    if (rem < 0) rem = -rem;
    const std::uint64_t g2 = std::gcd(static_cast<std::uint64_t>(rem), g);
    const auto g2i = static_cast<i128>(g2);
    set_from_wide(t / g2i, static_cast<i128>(b / gi) * (d / static_cast<std::int64_t>(g2)));
    return *this;
  }
  mpq_class q = to_mpq() + rhs.to_mpq();
  set_big(std::move(q));
  return *this;
}

Rational &Rational::operator-=(const Rational &rhs) { return *this += -rhs; }

Rational &Rational::operator*=(const Rational &rhs) {
  if (!big_ && !rhs.big_) {
    if (num_ == 0 || rhs.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    const auto g1 = static_cast<std::int64_t>(
        std::gcd(uabs(num_), static_cast<std::uint64_t>(rhs.den_)));
    const auto g2 = static_cast<std::int64_t>(
        std::gcd(uabs(rhs.num_), static_cast<std::uint64_t>(den_)));
    set_from_wide(static_cast<i128>(num_ / g1) * (rhs.num_ / g2),
                  static_cast<i128>(den_ / g2) * (rhs.den_ / g1));
    return *this;
  }
  mpq_class q = to_mpq() * rhs.to_mpq();
  set_big(std::move(q));
  return *this;
}

Rational &Rational::operator/=(const Rational &rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!rhs.big_) {
    const std::int64_t n = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
    const std::int64_t d = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
    Rational inv;
    inv.num_ = n;
    inv.den_ = d;
    return *this *= inv;
  }
  mpq_class q = to_mpq() / rhs.to_mpq();
  set_big(std::move(q));
  return *this;
}

bool operator==(const Rational &a, const Rational &b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  // Canonical forms: a big value never equals a small one.
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
  if (!a.big_ && !b.big_) {
    const i128 l = static_cast<i128>(a.num_) * b.den_;
    const i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

void add_product(Rational &acc, const Rational &b, const Rational &c) {
  if (b.is_zero() || c.is_zero()) return;
  if (c.is_one()) {
    acc += b;
    return;
  }
  if (b.is_one()) {
    acc += c;
    return;
  }
  Rational p(b);
  p *= c;
  acc += p;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) {
  return os << r.str();
}

}  // namespace fglog
