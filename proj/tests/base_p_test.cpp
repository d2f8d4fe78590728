#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "carry/base_p.hpp"
#include "carry/error.hpp"
#include "oracles.hpp"

namespace carry {
namespace {

TEST(BasePExpansion, DigitsOfWorkedValues) {
  EXPECT_EQ(expand(62102, 5).digits(), (std::vector<Int>{2, 0, 4, 1, 4, 4, 3}));
  EXPECT_EQ(expand(48, 7).digits(), (std::vector<Int>{6, 6}));
  EXPECT_EQ(expand(440, 7).digits(), (std::vector<Int>{6, 6, 1, 1}));
}

TEST(BasePExpansion, ZeroIsEmpty) {
  const auto z = expand(0, 3);
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.digits().empty());
  EXPECT_EQ(z.top_index(), 0u);
  EXPECT_EQ(z.digit(5), 0);
}

TEST(BasePExpansion, ReadsPastTopAreZero) {
  const auto e = expand(10, 2);
  EXPECT_EQ(e.top_index(), 3u);
  EXPECT_EQ(e.digit(3), 1);
  EXPECT_EQ(e.digit(4), 0);
  EXPECT_EQ(e.digit(100), 0);
}

TEST(BasePExpansion, RejectsBadInput) {
  EXPECT_THROW(expand(10, 4), InvalidCharacteristic);
  EXPECT_THROW(expand(10, 1), InvalidCharacteristic);
  EXPECT_THROW(expand(10, 0), InvalidCharacteristic);
  EXPECT_THROW(expand(-1, 3), ArgumentError);
}

TEST(BasePExpansion, RoundTripSampled) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> value(0, 999'999'999);
  for (Int p : {2, 3, 5, 7, 11, 101}) {
    for (int i = 0; i < 2000; ++i) {
      const Int v = value(rng);
      const auto e = expand(v, p);
      EXPECT_EQ(digits_value(e.digits(), p), v);
      for (Int d : e.digits()) {
        EXPECT_GE(d, 0);
        EXPECT_LT(d, p);
      }
      if (!e.digits().empty()) EXPECT_NE(e.digits().back(), 0);
    }
  }
}

TEST(FloorStat, WorkedValues) {
  EXPECT_EQ(floor_stat(440, 7), 2u);
  EXPECT_EQ(floor_stat(0, 5), 0u);
  EXPECT_EQ(floor_stat(342, 7), 3u);
  EXPECT_EQ(floor_stat(50, 7), 0u);
  EXPECT_EQ(floor_stat(7, 2), 3u);
}

TEST(FloorStat, BoundAndZeroCriterion) {
  for (Int p : {2, 3, 5}) {
    for (Int v = 0; v < 2000; ++v) {
      const std::size_t fl = floor_stat(v, p);
      EXPECT_LE(fl, oracle::top_index(v, p) + 1);
      EXPECT_EQ(fl == 0, v % p != p - 1);
      // All digits below fl are p-1: v + 1 is divisible by p^fl.
      EXPECT_EQ((v + 1) % oracle::ipow(p, fl), 0);
    }
  }
}

TEST(Primality, SmallRange) {
  const std::vector<Int> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (Int v = -3; v < 50; ++v) {
    const bool expected = std::find(primes.begin(), primes.end(), v) != primes.end();
    EXPECT_EQ(is_prime(v), expected) << v;
  }
  EXPECT_TRUE(is_prime(1'000'000'007));
}

TEST(CheckedArithmetic, DetectsOverflow) {
  const Int big = std::numeric_limits<Int>::max();
  EXPECT_THROW(checked_add(big, 1), OverflowError);
  EXPECT_THROW(checked_mul(big / 2 + 1, 2), OverflowError);
  EXPECT_THROW(checked_pow(2, 63), OverflowError);
  EXPECT_EQ(checked_pow(2, 62), Int{1} << 62);
  EXPECT_EQ(checked_pow(5, 0), 1);
}

TEST(Multinomial, WorkedValues) {
  const std::vector<Int> a{1, 1};
  const std::vector<Int> b{3, 1};
  const std::vector<Int> c{5, 0};
  EXPECT_EQ(multinomial_mod_p(2, a, 2), 0);
  EXPECT_EQ(multinomial_mod_p(4, b, 3), 1);
  EXPECT_EQ(multinomial_mod_p(5, c, 7), 1);
}

TEST(Multinomial, PartsMustSumToTop) {
  const std::vector<Int> parts{1, 1};
  EXPECT_THROW(multinomial_mod_p(3, parts, 2), ArgumentError);
}

TEST(Multinomial, AgreesWithExactBinomialsForAllBinarySplits) {
  for (Int p : {2, 3, 5, 7}) {
    for (Int top = 0; top <= 60; ++top) {
      for (Int k = 0; k <= top; ++k) {
        const std::vector<Int> parts{k, top - k};
        EXPECT_EQ(multinomial_mod_p(top, parts, p), oracle::multinomial_mod(top, parts, p))
            << "top=" << top << " k=" << k << " p=" << p;
        EXPECT_EQ(binomial_mod_p(top, k, p), oracle::multinomial_mod(top, parts, p));
      }
    }
  }
}

TEST(Multinomial, AgreesWithExactForThreeParts) {
  for (Int p : {2, 3, 5}) {
    for (Int top = 0; top <= 30; ++top) {
      for (Int a = 0; a <= top; ++a) {
        for (Int b = 0; a + b <= top; ++b) {
          const std::vector<Int> parts{a, b, top - a - b};
          EXPECT_EQ(multinomial_mod_p(top, parts, p), oracle::multinomial_mod(top, parts, p));
        }
      }
    }
  }
}

} // namespace
} // namespace carry
