#include <gtest/gtest.h>

#include <random>
#include <set>

#include "carry/error.hpp"
#include "carry/mult_map.hpp"
#include "oracles.hpp"

namespace carry {
namespace {

// Entrywise max of carry(b + e_i) over every b of class exactly c and every i.
std::vector<Int> successor_by_brute_force(const CarryPattern& c) {
  const Context& ctx = c.context();
  const Int p = ctx.p();
  std::vector<Int> best(Context(ctx.ring(), ctx.degree() + 1).length(), 0);
  for (auto b : oracle::all_monomials(ctx.n(), ctx.degree())) {
    if (oracle::carry_by_definition(b, p) != c.entries()) continue;
    for (auto& e : b) {
      ++e;
      const auto up = oracle::carry_by_definition(b, p);
      for (std::size_t k = 0; k < best.size(); ++k) best[k] = std::max(best[k], up[k]);
      --e;
    }
  }
  return best;
}

std::size_t sharp_by_brute_force(const CarryPattern& c) {
  const Context& ctx = c.context();
  std::size_t best = SIZE_MAX;
  for (const auto& b : oracle::all_monomials(ctx.n(), ctx.degree())) {
    if (oracle::carry_by_definition(b, ctx.p()) != c.entries()) continue;
    for (Int e : b) {
      std::size_t fl = 0;
      for (Int v = e; v % ctx.p() == ctx.p() - 1; v /= ctx.p()) ++fl;
      best = std::min(best, fl);
    }
  }
  return best;
}

TEST(CarryAfterMultiply, WorkedExamples) {
  const Ring ring(3, 7);
  const std::vector<Int> b{342, 48, 50};
  EXPECT_EQ(carry_after_multiply(ring, b, 0).entries(), (std::vector<Int>{1, 1, 0}));
  EXPECT_EQ(carry_after_multiply(ring, b, 2).entries(), (std::vector<Int>{2, 2, 1}));
  EXPECT_THROW(carry_after_multiply(ring, b, 3), ArgumentError);
  EXPECT_THROW(carry_after_multiply(Ring(1, 7), std::vector<Int>{3}, 0), DegenerateContext);
}

TEST(CarryAfterMultiply, MatchesRecomputation) {
  std::mt19937_64 rng(5);
  for (Int p : {2, 3, 5, 7}) {
    for (int n = 2; n <= 4; ++n) {
      const Ring ring(n, p);
      for (int trial = 0; trial < 400; ++trial) {
        const Int d = std::uniform_int_distribution<Int>(0, 200)(rng);
        std::vector<Int> b(static_cast<std::size_t>(n), 0);
        for (Int k = 0; k < d; ++k) ++b[std::uniform_int_distribution<std::size_t>(0, b.size() - 1)(rng)];
        for (std::size_t i = 0; i < b.size(); ++i) {
          auto up = b;
          ++up[i];
          EXPECT_EQ(carry_after_multiply(ring, b, i).entries(), oracle::carry_by_definition(up, p));
        }
      }
    }
  }
}

TEST(Sharp, FourFortyRecomputed) {
  // Columns 0..3 read 6+7-0, 6+7-1, 1+7-1, 1+0-1 against n(p-1) = 18; the
  // first is already below 18.
  const CarryPattern c(Context(3, 7, 440), {1, 1, 1});
  EXPECT_EQ(sharp(c), 0u);
  EXPECT_EQ(sharp_by_brute_force(c), 0u);
}

TEST(Sharp, MatchesLeastFloorStatistic) {
  for (Int p : {2, 3, 5}) {
    for (int n = 2; n <= 3; ++n) {
      for (Int d = 0; d <= (n == 2 ? 60 : 30); ++d) {
        for (const auto& c : carry_lattice(Context(n, p, d))) {
          EXPECT_EQ(sharp(c), sharp_by_brute_force(c)) << to_string(c) << " d=" << d << " n=" << n;
        }
      }
    }
  }
}

TEST(Sharp, SmallDegreeIsZeroAndOneVariableRejected) {
  EXPECT_EQ(sharp(CarryPattern(Context(2, 5, 3), {})), 0u);
  EXPECT_THROW(sharp(CarryPattern(Context(1, 5, 4), {})), DegenerateContext);
}

TEST(Successor, WorkedExample) {
  const CarryPattern c(Context(2, 2, 1), {});
  const auto next = successor(c);
  EXPECT_EQ(next.degree(), 2);
  EXPECT_EQ(next.entries(), (std::vector<Int>{1}));
}

TEST(Successor, MatchesBruteForceMaximum) {
  for (Int p : {2, 3}) {
    for (int n = 2; n <= 3; ++n) {
      for (Int d = 0; d <= (n == 2 ? 40 : 24); ++d) {
        for (const auto& c : carry_lattice(Context(n, p, d))) {
          const auto next = successor(c);
          EXPECT_TRUE(is_valid_carry(next.entries(), next.context()));
          EXPECT_EQ(next.entries(), successor_by_brute_force(c)) << to_string(c) << " d=" << d;
        }
      }
    }
  }
}

TEST(Successor, RealisesTheNextGradedPiece) {
  for (Int p : {2, 3}) {
    for (int n = 2; n <= 3; ++n) {
      for (Int d = 1; d <= (n == 2 ? 40 : 16); ++d) {
        for (const auto& c : carry_lattice(Context(n, p, d))) {
          const auto gens = oracle::carry_ideal_generators(n, d, p, c.entries());
          std::set<std::vector<Int>> shifted;
          for (const auto& g : gens) {
            for (std::size_t i = 0; i < g.size(); ++i) {
              auto up = g;
              ++up[i];
              shifted.insert(up);
            }
          }
          const auto want = monomials_with_carry_leq(successor(c));
          EXPECT_EQ(shifted, std::set<std::vector<Int>>(want.begin(), want.end())) << to_string(c) << " d=" << d;
        }
      }
    }
  }
}

TEST(Successor, MonotoneInPattern) {
  for (Int p : {2, 3}) {
    for (int n = 2; n <= 3; ++n) {
      for (Int d = 0; d <= 40; ++d) {
        const auto lattice = carry_lattice(Context(n, p, d));
        for (const auto& a : lattice) {
          for (const auto& b : lattice) {
            if (leq(a, b)) EXPECT_TRUE(leq(successor(a), successor(b)));
          }
        }
      }
    }
  }
}

TEST(Successor, IteratesToSaturation) {
  CarryPattern c(Context(2, 2, 5), {0, 0});
  while (c.degree() < 10) c = successor(c);
  EXPECT_EQ(c, max_carry(c.context()));
}

TEST(Containment, WorkedCases) {
  const CarryPattern bottom(Context(2, 2, 1), {});
  EXPECT_TRUE(contains(bottom, CarryPattern(Context(2, 2, 2), {1})));
  const CarryPattern c(Context(2, 2, 10), {1, 0, 1});
  EXPECT_TRUE(contains(c, c));
  EXPECT_THROW(contains(CarryPattern(Context(2, 2, 11), {0, 0, 0}), c), ArgumentError);
  EXPECT_THROW(contains(c, CarryPattern(Context(2, 3, 10), {0, 0})), ArgumentError);
}

TEST(Containment, ShortcutAboveSaturation) {
  const CarryPattern c(Context(3, 5, 7), {0});
  const auto result = containment(c, CarryPattern(Context(3, 5, 1'000'000'000), std::vector<Int>(12, 0)));
  EXPECT_TRUE(result.contained);
  EXPECT_EQ(result.saturation_degree, 19);
  EXPECT_EQ(result.steps, 0);
}

TEST(Containment, MatchesGeneratorDivisibility) {
  for (Int p : {2, 3}) {
    for (Int d = 1; d <= 20; ++d) {
      for (const auto& c : carry_lattice(Context(2, p, d))) {
        const auto big = oracle::carry_ideal_generators(2, d, p, c.entries());
        for (Int d2 = d; d2 <= 24; ++d2) {
          for (const auto& c2 : carry_lattice(Context(2, p, d2))) {
            const auto small = oracle::carry_ideal_generators(2, d2, p, c2.entries());
            EXPECT_EQ(contains(c, c2), oracle::ideal_contains(big, small))
                << to_string(c) << "@" << d << " vs " << to_string(c2) << "@" << d2 << " p=" << p;
          }
        }
      }
    }
  }
}

TEST(Containment, ThreeVariablesSpotCheck) {
  const Int p = 2;
  for (Int d = 1; d <= 9; ++d) {
    for (const auto& c : carry_lattice(Context(3, p, d))) {
      const auto big = oracle::carry_ideal_generators(3, d, p, c.entries());
      for (Int d2 = d; d2 <= 12; ++d2) {
        for (const auto& c2 : carry_lattice(Context(3, p, d2))) {
          const auto small = oracle::carry_ideal_generators(3, d2, p, c2.entries());
          EXPECT_EQ(contains(c, c2), oracle::ideal_contains(big, small));
        }
      }
    }
  }
}

} // namespace
} // namespace carry
