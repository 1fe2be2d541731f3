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

#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "fglog/errors.hpp"
#include "fglog/rational.hpp"

namespace fglog {
namespace {

TEST(Rational, CanonicalForm) {
  const Rational r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(r.fraction_str(), "-3/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_EQ(Rational(4, 2).fraction_str(), "2/1");
  EXPECT_EQ(Rational(0, -7).fraction_str(), "0/1");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, ParseAcceptsIntegersAndFractions) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("+3/9"), Rational(1, 3));
  const Rational big = Rational::parse("123456789012345678901234567890/3");
  EXPECT_FALSE(big.is_small());
  EXPECT_EQ(big.str(), "41152263004115226300411522630");
  for (const char *bad : {"", "1/", "/2", "1/0", "x", "1.5", "2/-3", "--1"}) {
    EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
  }
}

TEST(Rational, Predicates) {
  EXPECT_TRUE(Rational().is_zero());
  EXPECT_TRUE(Rational(3, 3).is_one());
  EXPECT_TRUE(Rational(-8, 2).is_integer());
  EXPECT_FALSE(Rational(1, 2).is_integer());
  EXPECT_EQ(Rational(-1, 9).sign(), -1);
  EXPECT_EQ(Rational(0).sign(), 0);
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
}

TEST(Rational, OverflowPromotesAndDemotes) {
  const std::int64_t m = std::numeric_limits<std::int64_t>::max();
  Rational a(m);
  Rational b = a + Rational(1);
  EXPECT_FALSE(b.is_small());
  EXPECT_EQ(b.str(), "9223372036854775808");
  b -= Rational(1);
  EXPECT_TRUE(b.is_small());
  EXPECT_EQ(b, a);
  const Rational mn = Rational(std::numeric_limits<std::int64_t>::min());
  EXPECT_EQ(mn.str(), "-9223372036854775808");
  EXPECT_EQ((-mn).str(), "9223372036854775808");
  EXPECT_EQ(-(-mn), mn);
}

mpq_class random_mpq(std::mt19937_64 &rng) {
  // Mix of small values and values near the 64-bit boundary.
  std::uniform_int_distribution<int> kind(0, 3);
  auto word = [&]() -> mpz_class {
    const std::uint64_t w = rng();
    switch (kind(rng)) {
      case 0: return mpz_class(static_cast<long>(w % 19) - 9);
      case 1: return mpz_class(static_cast<long>(w >> 33)) - (1L << 30);
      case 2: {
        mpz_class z;
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(w), 0, 0, &w);
        return (w & 1) ? mpz_class(-z) : z;
      }
      default: {
        mpz_class z;
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(w), 0, 0, &w);
        return mpz_class(z * z + 1);
      }
    }
  };
  mpz_class den = word();
  if (den == 0) den = 1;
  mpq_class q(word(), den);
  q.canonicalize();
  return q;
}

TEST(Rational, ArithmeticMatchesGmp) {
  std::mt19937_64 rng(20261017);
  for (int i = 0; i < 20000; ++i) {
    const mpq_class x = random_mpq(rng);
    const mpq_class y = random_mpq(rng);
    const mpq_class z = random_mpq(rng);
    const Rational a(x), b(y), c(z);
    ASSERT_EQ((a + b).to_mpq(), mpq_class(x + y));
    ASSERT_EQ((a - b).to_mpq(), mpq_class(x - y));
    ASSERT_EQ((a * b).to_mpq(), mpq_class(x * y));
    if (y != 0) ASSERT_EQ((a / b).to_mpq(), mpq_class(x / y));
    Rational acc = a;
    add_product(acc, b, c);
    ASSERT_EQ(acc.to_mpq(), mpq_class(x + y * z));
    ASSERT_EQ(a == b, x == y);
    ASSERT_EQ(a < b, x < y);
    ASSERT_EQ(Rational::parse(a.fraction_str()), a);
    // Small-form values must be exactly those that fit in a word.
    const bool fits = mpz_class(x.get_num()).fits_slong_p() && x.get_num() != LONG_MIN &&
                      mpz_class(x.get_den()).fits_slong_p();
    ASSERT_EQ(a.is_small(), fits) << x.get_str();
  }
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

}  // namespace
}  // namespace fglog
