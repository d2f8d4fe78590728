#include <gtest/gtest.h>

#include <random>

#include "carry/error.hpp"
#include "carry/fixtures.hpp"
#include "carry/io.hpp"
#include "carry/koszul.hpp"
#include "support.hpp"

namespace carry {
namespace {

TEST(IdealText, CanonicalOutput) {
  const MonomialIdeal I(Ring(3, 5), {{0, 0, 4}, {7, 3, 0}, {1, 1, 1}, {2, 2, 2}});
  // (2,2,2) is not minimal; generators are listed by degree.
  EXPECT_EQ(format_ideal(I), "ring n=3 p=5\n1 1 1\n0 0 4\n7 3 0\n");
}

TEST(IdealText, ToleratesUnorderedAndBlankLines) {
  const auto I = parse_ideal("\nring n=2 p=2\n0 8\n  8 0\n\n7 3\n5 4\n4 5\n3 7\n");
  EXPECT_EQ(format_ideal(I), "ring n=2 p=2\n8 0\n0 8\n5 4\n4 5\n7 3\n3 7\n");
}

TEST(IdealText, RejectsMalformedInput) {
  EXPECT_THROW(parse_ideal(""), ParseError);
  EXPECT_THROW(parse_ideal("1 2\n"), ParseError);
  EXPECT_THROW(parse_ideal("ring n=2 p=4\n1 1\n"), ParseError);
  EXPECT_THROW(parse_ideal("ring n=2 p=3\n1 1 1\n"), ParseError);
  EXPECT_THROW(parse_ideal("ring n=2 p=3\n1 x\n"), ParseError);
  EXPECT_THROW(parse_ideal("ring n=2 p=3\n"), ParseError);
  EXPECT_THROW(parse_ideal("ring n=2 p=3\n0 0\n"), ParseError);
  EXPECT_THROW(parse_ideal("ring n=2\n1 1\n"), ParseError);
}

TEST(DecompositionText, RoundTrip) {
  const Decomposition b(Ring(2, 2), {CarryIdealLabel(Ring(2, 2), 10, {1, 1, 1}), CarryIdealLabel(Ring(2, 2), 8, {0, 0, 0})});
  const std::string text = format_decomposition(b);
  EXPECT_EQ(text, "d=8 c=(0,0,0)\nd=10 c=(1,1,1)\n");
  EXPECT_EQ(parse_decomposition(text, Ring(2, 2)), b);
  EXPECT_EQ(parse_decomposition("ring n=2 p=2\n" + text), b);
  EXPECT_THROW(parse_decomposition(text), ParseError);
  EXPECT_THROW(parse_decomposition("d=10 c=(1,1,0)\n", Ring(2, 2)), ParseError);
  EXPECT_THROW(parse_decomposition("d=10\n", Ring(2, 2)), ParseError);
}

TEST(LabelText, InlineForms) {
  const auto l = parse_label("p=5 d=62102 c=(1,1,0,1,0,0)");
  EXPECT_EQ(l.ring(), Ring(2, 5));
  EXPECT_EQ(l.degree(), 62102);
  EXPECT_EQ(format_label(l), "n=2 p=5 d=62102 c=(1,1,0,1,0,0)");
  EXPECT_EQ(parse_label(format_label(l)), l);
  EXPECT_EQ(parse_label("c=(2,0) n=3 d=35 p=5").ring(), Ring(3, 5));
  EXPECT_THROW(parse_label("d=3 c=()"), ParseError);
  EXPECT_THROW(parse_label("p=5 d=3 c=() q=1"), ParseError);
  EXPECT_THROW(parse_label("p=5 d=3 c=(1"), ParseError);
  EXPECT_THROW(parse_label("p=5 p=5 d=3 c=()"), ParseError);
}

TEST(Json, IdealAndDecompositionRoundTrip) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const Ring ring(static_cast<int>(testing::pick(rng, 1, 3)), trial % 2 ? 3 : 2);
    const auto I = testing::random_invariant_ideal(rng, ring, 10, 3);
    EXPECT_EQ(ideal_from_json(ideal_to_json(I)), I);
    EXPECT_EQ(parse_ideal(format_ideal(I)), I);
    const auto b = decompose(I);
    EXPECT_EQ(decomposition_from_json(decomposition_to_json(b)), b);
  }
  EXPECT_THROW(ideal_from_json("{"), ParseError);
  EXPECT_THROW(ideal_from_json(R"({"n":2})"), ParseError);
  EXPECT_THROW(ideal_from_json(R"({"n":2,"p":6,"generators":[[1,0]]})"), ParseError);
}

TEST(Json, BettiRoundTrip) {
  const auto table = koszul_betti(carry_ideal(CarryIdealLabel(Ring(3, 3), 4, {0})));
  const std::string text = betti_to_json(table);
  EXPECT_NE(text.find(R"("regularity":6)"), std::string::npos);
  EXPECT_NE(text.find(R"({"beta":9,"i":1,"j":4})"), std::string::npos);
  EXPECT_EQ(betti_from_json(text), table);
}

TEST(Fixtures, CorpusPassesInFixedOrder) {
  const auto first = verify_fixtures();
  const auto second = verify_fixtures();
  ASSERT_EQ(first.size(), second.size());
  ASSERT_GE(first.size(), 25u);
  for (std::size_t k = 0; k < first.size(); ++k) {
    EXPECT_TRUE(first[k].passed) << first[k].id << ": " << first[k].observed;
    EXPECT_EQ(first[k].id, second[k].id);
    EXPECT_EQ(first[k].observed, second[k].observed);
  }
}

} // namespace
} // namespace carry
