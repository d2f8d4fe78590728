#include <gtest/gtest.h>

#include <random>

#include "carry/error.hpp"
#include "carry/invariant_ideal.hpp"
#include "carry/koszul.hpp"
#include "carry/two_variable.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace carry {
namespace {

MonomialIdeal example_ideal() { return carry_ideal(CarryIdealLabel(Ring(3, 3), 4, {0})); }

// dim (S/I)_e by listing every degree-e monomial.
Int quotient_dim(const MonomialIdeal& ideal, Int e) {
  if (e < 0) return 0;
  std::vector<std::vector<Int>> gens(ideal.generators().begin(), ideal.generators().end());
  Int count = 0;
  for (const auto& b : oracle::all_monomials(ideal.n(), e)) {
    if (!oracle::in_ideal(gens, b)) ++count;
  }
  return count;
}

// Largest degree of a monomial outside I, scanning up to the pure-power box.
Int top_standard_degree(const MonomialIdeal& ideal, Int bound) {
  Int best = -1;
  for (Int e = 0; e <= bound; ++e) {
    if (quotient_dim(ideal, e) > 0) best = e;
  }
  return best;
}

TEST(KoszulBetti, ThreeVariableExampleTable) {
  const auto I = example_ideal();
  ASSERT_EQ(I.generators().size(), 9u);
  BettiTable want(3);
  want.add(0, 0, 1);
  want.add(1, 4, 9);
  want.add(2, 5, 9);
  want.add(3, 6, 3);
  want.add(2, 6, 3);
  want.add(3, 9, 1);
  EXPECT_EQ(koszul_betti(I), want);
  KoszulOptions dense;
  dense.mode = KoszulMode::FullStrand;
  EXPECT_EQ(koszul_betti(I, dense), want);
  EXPECT_EQ(regularity(I), 6);
  EXPECT_EQ(projective_dimension(I), 3);
  const std::string grid = render(want);
  EXPECT_NE(grid.find("total: 1 9 12 4"), std::string::npos) << grid;
  EXPECT_NE(grid.find("3: . 9  9 3"), std::string::npos) << grid;
  EXPECT_NE(grid.find("6: . .  . 1"), std::string::npos) << grid;
}

TEST(KoszulBetti, MaximalIdealIsResolvedByKoszul) {
  for (int n = 1; n <= 5; ++n) {
    const auto m = maximal_ideal(Ring(n, 3));
    const auto table = koszul_betti(m);
    for (int i = 0; i <= n; ++i) EXPECT_EQ(table.at(i, i), static_cast<Int>(oracle::binomial(n, i)));
    EXPECT_EQ(table.entries().size(), static_cast<std::size_t>(n) + 1);
    EXPECT_EQ(regularity(m), 0);
    const auto top = top_corner_tor(m);
    EXPECT_EQ(top.basis, (std::vector<Exponents>{Exponents(static_cast<std::size_t>(n), 0)}));
    EXPECT_EQ(top.weights, (std::vector<Exponents>{Exponents(static_cast<std::size_t>(n), 1)}));
  }
}

TEST(KoszulBetti, AgreesWithTwoVariableFormula) {
  for (Int p : {2, 3}) {
    for (Int d = 1; d <= 60; ++d) {
      for (const auto& c : carry_lattice(Context(2, p, d))) {
        const auto I = carry_ideal(CarryIdealLabel(c));
        ASSERT_EQ(koszul_betti(I), betti_two_vars(c)) << "d=" << d << " p=" << p << " c=" << to_string(c);
        EXPECT_EQ(regularity(I), regularity_two_vars(c));
      }
    }
  }
}

TEST(KoszulBetti, AgreesWithHilbertBurchOnArbitraryArtinianIdeals) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Int a = testing::pick(rng, 1, 12);
    const Int b = testing::pick(rng, 1, 12);
    std::vector<Exponents> gens{{a, 0}, {0, b}};
    for (int k = 0; k < 4; ++k) gens.push_back({testing::pick(rng, 0, a), testing::pick(rng, 0, b)});
    bool unit = false;
    for (const auto& g : gens) unit = unit || (g[0] == 0 && g[1] == 0);
    if (unit) continue;
    const MonomialIdeal I(Ring(2, 5), gens);
    EXPECT_EQ(koszul_betti(I), betti_from_hilbert_burch(hilbert_burch(I)));
  }
}

TEST(KoszulBetti, DenseAndFineGradedAgree) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Ring ring(static_cast<int>(testing::pick(rng, 1, 3)), trial % 2 == 0 ? 2 : 3);
    const auto I = testing::random_invariant_ideal(rng, ring, 7, 3);
    KoszulOptions dense;
    dense.mode = KoszulMode::FullStrand;
    EXPECT_EQ(koszul_betti(I), koszul_betti(I, dense));
  }
}

TEST(KoszulBetti, ThreadCountDoesNotChangeResult) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto I = testing::random_invariant_ideal(rng, Ring(3, 2), 9, 3);
    KoszulOptions threaded;
    threaded.threads = 4;
    EXPECT_EQ(koszul_betti(I), koszul_betti(I, threaded));
  }
}

TEST(KoszulBetti, EulerCharacteristicMatchesHilbertFunction) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Ring ring(static_cast<int>(testing::pick(rng, 2, 3)), trial % 3 == 0 ? 5 : 2);
    const auto I = testing::random_invariant_ideal(rng, ring, 9, 2);
    const auto table = koszul_betti(I);
    const Int top = regularity(I) + ring.n() + 1;
    for (Int j = 0; j <= top; ++j) {
      Int hilbert = 0;
      Int betti = 0;
      for (int i = 0; i <= ring.n(); ++i) {
        const Int sign = i % 2 == 0 ? 1 : -1;
        hilbert += sign * static_cast<Int>(oracle::binomial(ring.n(), i)) * quotient_dim(I, j - i);
        betti += sign * table.at(i, j);
      }
      EXPECT_EQ(hilbert, betti) << "j=" << j;
    }
  }
}

TEST(KoszulStrand, RankNullityCloses) {
  const auto I = example_ideal();
  for (Int j = 0; j <= 10; ++j) {
    const auto strand = koszul_strand(I, j);
    for (int i = 0; i <= 3; ++i) {
      const auto iu = static_cast<std::size_t>(i);
      EXPECT_EQ(strand.term_dims[iu], static_cast<Int>(oracle::binomial(3, i)) * quotient_dim(I, j - i));
      const Int in = i < 3 ? strand.rank_out[iu + 1] : 0;
      EXPECT_EQ(strand.term_dims[iu], strand.rank_out[iu] + in + strand.homology[iu]);
      EXPECT_GE(strand.homology[iu], 0);
    }
  }
  EXPECT_EQ(koszul_strand(I, 6).homology, (std::vector<Int>{0, 0, 3, 3}));
  EXPECT_EQ(koszul_strand(I, 9).homology, (std::vector<Int>{0, 0, 0, 1}));
}

TEST(KoszulBetti, ColumnOneCountsMinimalGenerators) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const auto I = testing::random_invariant_ideal(rng, Ring(3, trial % 2 == 0 ? 2 : 3), 8, 3);
    const auto table = koszul_betti(I);
    std::map<Int, Int> by_degree;
    for (const auto& g : I.generators()) ++by_degree[total_degree(g)];
    std::map<Int, Int> column;
    for (const auto& [key, value] : table.entries()) {
      if (key.first == 1) column[key.second] = value;
    }
    EXPECT_EQ(column, by_degree);
  }
}

TEST(KoszulBetti, InvariantIdealsHaveFullProjectiveDimension) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const Ring ring(static_cast<int>(testing::pick(rng, 1, 3)), trial % 2 == 0 ? 2 : 3);
    const auto I = testing::random_invariant_ideal(rng, ring, 9, 3);
    const auto table = koszul_betti(I);
    EXPECT_EQ(table.projective_dimension(), ring.n());
    const Int reg = regularity(I);
    EXPECT_EQ(reg, top_standard_degree(I, ring.n() * I.min_generator_degree()));
    EXPECT_EQ(table.regularity(), reg);
    const auto top = top_corner_tor(I);
    EXPECT_EQ(top.internal_degree, reg + ring.n());
    EXPECT_EQ(table.at(ring.n(), reg + ring.n()), static_cast<Int>(top.basis.size()));
    EXPECT_EQ(static_cast<Int>(top.basis.size()), quotient_dim(I, reg));
  }
}

TEST(TopCornerTor, ThreeVariableExample) {
  const auto top = top_corner_tor(example_ideal());
  EXPECT_EQ(top.regularity, 6);
  EXPECT_EQ(top.internal_degree, 9);
  EXPECT_EQ(top.basis, (std::vector<Exponents>{{2, 2, 2}}));
  EXPECT_EQ(top.weights, (std::vector<Exponents>{{3, 3, 3}}));
}

TEST(KoszulBetti, NonArtinianIdealsUseTheLcmBound) {
  const MonomialIdeal xy(Ring(2, 2), {{1, 1}});
  BettiTable want(2);
  want.add(0, 0, 1);
  want.add(1, 2, 1);
  EXPECT_EQ(koszul_betti(xy), want);
  EXPECT_THROW(regularity(xy), PreconditionError);
  EXPECT_FALSE(has_finite_colength(xy));
  const MonomialIdeal tall(Ring(2, 2), {{10, 0}, {0, 1}});
  EXPECT_EQ(regularity(tall), 9);
  EXPECT_EQ(tall.saturation_degree(), 10);
}

// Stanley-Reisner ideal of the six-vertex triangulation of the real
// projective plane. Its Betti numbers depend on whether p = 2.
TEST(KoszulBetti, RanksAreTakenOverThePrimeField) {
  const std::vector<std::vector<int>> facets{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                             {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}};
  // Every edge of K_6 lies in exactly two facets: a closed surface with
  // 6 - 15 + 10 = 1 as Euler characteristic.
  std::map<std::pair<int, int>, int> edges;
  for (const auto& f : facets) {
    ++edges[{f[0], f[1]}];
    ++edges[{f[0], f[2]}];
    ++edges[{f[1], f[2]}];
  }
  ASSERT_EQ(edges.size(), 15u);
  for (const auto& [edge, count] : edges) ASSERT_EQ(count, 2);

  std::vector<Exponents> nonfaces;
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) {
      for (int c = b + 1; c < 6; ++c) {
        if (std::find(facets.begin(), facets.end(), std::vector<int>{a, b, c}) != facets.end()) continue;
        Exponents g(6, 0);
        g[static_cast<std::size_t>(a)] = g[static_cast<std::size_t>(b)] = g[static_cast<std::size_t>(c)] = 1;
        nonfaces.push_back(g);
      }
    }
  }
  ASSERT_EQ(nonfaces.size(), 10u);
  const auto two = koszul_betti(MonomialIdeal(Ring(6, 2), nonfaces));
  const auto three = koszul_betti(MonomialIdeal(Ring(6, 3), nonfaces));
  EXPECT_NE(two, three);
  // Reduced H^2 of RP^2 is F_2 in characteristic 2 and zero otherwise; by
  // Hochster's formula it sits at beta_{3,6}.
  EXPECT_EQ(two.at(3, 6) - three.at(3, 6), 1);
  EXPECT_EQ(two.at(4, 6) - three.at(4, 6), 1);
}

TEST(RankModP, DependsOnCharacteristic) {
  const std::vector<std::vector<Int>> m{{1, 1}, {1, -1}};
  EXPECT_EQ(rank_mod_p(m, 2), 1);
  EXPECT_EQ(rank_mod_p(m, 3), 2);
  EXPECT_EQ(rank_mod_p({}, 5), 0);
  EXPECT_EQ(rank_mod_p({{0, 0}, {0, 0}}, 7), 0);
  EXPECT_EQ(rank_mod_p({{2, 4, 6}, {1, 2, 3}, {0, 1, 5}}, 7), 2);
}

TEST(AllStandardMonomials, CountsQuotientDimension) {
  const auto I = example_ideal();
  Int total = 0;
  for (Int e = 0; e <= 6; ++e) total += quotient_dim(I, e);
  EXPECT_EQ(static_cast<Int>(all_standard_monomials(I).size()), total);
}

} // namespace
} // namespace carry
