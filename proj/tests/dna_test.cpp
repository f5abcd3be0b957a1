#include <gtest/gtest.h>

#include <array>

#include "argrn/dna.hpp"

using namespace argrn;

TEST(Dna, ParsesAcgtWithOptionalTrailingNewline) {
  EXPECT_EQ(DnaSequence::parse("ACGT").str(), "ACGT");
  EXPECT_EQ(DnaSequence::parse("ACGT\n").str(), "ACGT");
  EXPECT_EQ(DnaSequence::parse("ACGT\r\n").str(), "ACGT");
  EXPECT_TRUE(DnaSequence::parse("").empty());
  EXPECT_TRUE(DnaSequence::parse("\n").empty());
}

TEST(Dna, RejectsForeignCharacterWithOffset) {
  try {
    DnaSequence::parse("ACGXT");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 3u);
    EXPECT_NE(std::string(e.what()).find("offset 3"), std::string::npos);
  }
  EXPECT_THROW(DnaSequence::parse("acgt"), ParseError);
  EXPECT_THROW(DnaSequence::parse("AC\nGT"), ParseError);
  EXPECT_THROW(DnaSequence::parse("ACGT\n\n"), ParseError);
}

TEST(Dna, CircularIndexing) {
  const auto d = DnaSequence::parse("ACGT");
  EXPECT_EQ(d.circular(-1), Base::T);
  EXPECT_EQ(d.circular(4), Base::A);
  EXPECT_EQ(d.circular(-8), Base::A);
}

TEST(RandomGenome, LengthZeroIsEmpty) {
  Rng rng(1);
  EXPECT_TRUE(random_genome(0, rng).empty());
}

TEST(RandomGenome, DefaultLengthUsesOnlyLegalBases) {
  Rng rng(2);
  const auto g = random_genome(3000, rng);
  ASSERT_EQ(g.size(), 3000u);
  EXPECT_NO_THROW(DnaSequence::parse(g.str()));
}

TEST(RandomGenome, SymbolFrequenciesAreUniform) {
  Rng rng(3);
  const auto g = random_genome(100000, rng);
  std::array<int, 4> counts{};
  for (Base b : g) ++counts[static_cast<int>(b)];
  for (int c : counts) EXPECT_NEAR(c / 100000.0, 0.25, 0.02);
}

TEST(RandomGenome, SeedDeterminesSequence) {
  Rng a(99), b(99);
  EXPECT_EQ(random_genome(500, a), random_genome(500, b));
}
