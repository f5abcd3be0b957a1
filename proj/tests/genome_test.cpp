#include <gtest/gtest.h>

#include <cmath>

#include "argrn/genome.hpp"
#include "oracles.hpp"

using namespace argrn;

namespace {

std::vector<Base> seq(std::string_view s) { return bases_from_string(s); }

// Promoter at 2, internal "TAACCGTAGG" (L = 10), terminator at 16.
constexpr std::string_view kFigureGenome = "CCAGCTTAACCGTAGGTCGACC";

}  // namespace

TEST(SiteSize, KnownValues) {
  EXPECT_EQ(site_size(10), 3u);
  EXPECT_EQ(site_size(16), 4u);
  EXPECT_EQ(site_size(2), 1u);
  EXPECT_EQ(site_size(15), 3u);
}

TEST(SiteSize, RejectsShortInternalRegions) {
  EXPECT_THROW(site_size(0), MalformedGene);
  EXPECT_THROW(site_size(1), MalformedGene);
}

// Exhaustive over L = 2..1e6: S = floor(sqrt(L)), coding length L - S >= S,
// and the ceil-width chunking never leaves an empty chunk.
TEST(SiteSize, LengthLawHoldsExhaustively) {
  for (std::size_t L = 2; L <= 1000000; ++L) {
    const std::size_t s = site_size(L);
    ASSERT_EQ(s, static_cast<std::size_t>(std::floor(std::sqrt(static_cast<long double>(L))))) << L;
    ASSERT_GE(L - s, s) << L;
    const std::size_t coding = L - s;
    const std::size_t width = (coding + s - 1) / s;
    ASSERT_LT((s - 1) * width, coding) << L;
  }
}

TEST(LocatorOffset, Values) {
  EXPECT_EQ(locator_offset(seq("TAA")), 3);
  EXPECT_EQ(locator_offset(seq("TG")), -3);
  EXPECT_EQ(locator_offset(seq("")), 0);
}

TEST(LocatorOffset, AdditiveOverConcatenation) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_genome(rng.index(20), rng);
    const auto b = random_genome(rng.index(20), rng);
    std::vector<Base> ab(a.begin(), a.end());
    ab.insert(ab.end(), b.begin(), b.end());
    EXPECT_EQ(locator_offset(ab), locator_offset(a.bases()) + locator_offset(b.bases()));
  }
}

TEST(DeriveProtein, ChunkMajorityWithFirstOccurrenceTies) {
  EXPECT_EQ(to_string(derive_protein(seq("ATTACGG"), 3)), "TAG");
  EXPECT_EQ(to_string(derive_protein(seq("AAAA"), 2)), "AA");
  EXPECT_EQ(to_string(derive_protein(seq("CAAC"), 1)), "C");
  EXPECT_EQ(to_string(derive_protein(seq("GTTG"), 1)), "G");
}

TEST(DeriveProtein, RejectsShortCoding) {
  EXPECT_THROW(derive_protein(seq("AC"), 3), MalformedGene);
  EXPECT_THROW(derive_protein(seq("AAAAA"), 4), MalformedGene);  // empty fourth chunk
}

TEST(DeriveProtein, LengthEqualsSiteSize) {
  Rng rng(6);
  for (std::size_t L = 2; L < 400; ++L) {
    const std::size_t s = site_size(L);
    const auto coding = random_genome(L - s, rng);
    EXPECT_EQ(derive_protein(coding.bases(), s).size(), s);
    EXPECT_EQ(to_string(derive_protein(coding.bases(), s)), oracle::majority_protein(coding.str(), s));
  }
}

TEST(ScanGenes, NoPromoterMeansNoGenes) {
  EXPECT_TRUE(scan_genes(DnaSequence::parse("CCCCTCGAGGGG")).empty());
  EXPECT_TRUE(scan_genes(DnaSequence{}).empty());
}

TEST(ScanGenes, DegenerateInternalRegionsAreDropped) {
  EXPECT_TRUE(scan_genes(DnaSequence::parse("AGCTTCGA")).empty());
  EXPECT_TRUE(scan_genes(DnaSequence::parse("AGCTATCGA")).empty());
  // A dropped region does not consume an id.
  const auto genes = scan_genes(DnaSequence::parse("AGCTTCGAAGCTACTCGA"));
  ASSERT_EQ(genes.size(), 1u);
  EXPECT_EQ(genes[0].id, 0u);
  EXPECT_EQ(genes[0].promoter_start, 8u);
}

TEST(ScanGenes, PromoterWithoutTerminatorIsIgnored) {
  EXPECT_TRUE(scan_genes(DnaSequence::parse("AGCTAAAAAAAA")).empty());
}

TEST(ScanGenes, FigureGene) {
  const auto dna = DnaSequence::parse(kFigureGenome);
  const auto genes = scan_genes(dna);
  ASSERT_EQ(genes.size(), 1u);
  const auto& g = genes[0];
  EXPECT_EQ(g.promoter_start, 2u);
  EXPECT_EQ(g.internal_start, 6u);
  EXPECT_EQ(g.internal_end, 16u);
  EXPECT_EQ(g.length, 10u);
  EXPECT_EQ(g.site_size, 3u);
  EXPECT_EQ(to_string(g.locator), "TAA");
  EXPECT_EQ(g.locator_offset, 3);
  // Enhancer covers coding bases 1..3, inhibitor coding bases 4..6.
  EXPECT_EQ(g.enhancer_start, 9u);
  EXPECT_EQ(to_string(g.enhancer), "CCG");
  EXPECT_EQ(g.inhibitor_start, 12u);
  EXPECT_EQ(to_string(g.inhibitor), "TAG");
  EXPECT_EQ(to_string(g.protein), "CTG");
}

TEST(ScanGenes, GenesDoNotOverlapAndNestedPromotersAreSkipped) {
  // Second AGCT sits inside the first gene's internal region.
  const auto genes = scan_genes(DnaSequence::parse("AGCTAAAGCTAATCGAAGCTCCCCTCGA"));
  ASSERT_EQ(genes.size(), 2u);
  EXPECT_EQ(genes[0].promoter_start, 0u);
  EXPECT_EQ(genes[0].internal_end, 12u);
  EXPECT_EQ(genes[1].promoter_start, 16u);
  EXPECT_LE(genes[0].terminator_end(), genes[1].promoter_start);
}

TEST(ResolveSites, NegativeOffsetEndsBeforePromoter) {
  // Locator "TTT" gives d = -3; enhancer is [ps - 6, ps - 3).
  const auto dna = DnaSequence::parse("GGGCCCAAAAAGCTTTTCCCCCCTCGA");
  const auto genes = scan_genes(dna);
  ASSERT_EQ(genes.size(), 1u);
  const auto& g = genes[0];
  EXPECT_EQ(g.promoter_start, 10u);
  EXPECT_EQ(g.locator_offset, -3);
  EXPECT_EQ(g.enhancer_start, 4u);
  EXPECT_EQ(to_string(g.enhancer), "CCA");
  EXPECT_EQ(g.inhibitor_start, 7u);
  EXPECT_EQ(to_string(g.inhibitor), "AAA");
}

TEST(ResolveSites, WrapsAroundGenomeStart) {
  // Promoter at 0 with d = -3, S = 3: enhancer is [-6, -3) -> tail indices.
  const std::string dna_text = "AGCTTTTCCCCCCTCGAACGTAC";
  const auto dna = DnaSequence::parse(dna_text);
  const auto genes = scan_genes(dna);
  ASSERT_EQ(genes.size(), 1u);
  const auto& g = genes[0];
  EXPECT_EQ(g.locator_offset, -3);
  EXPECT_EQ(g.enhancer_start, dna.size() - 6);
  EXPECT_EQ(to_string(g.enhancer), dna_text.substr(dna.size() - 6, 3));
  EXPECT_EQ(g.inhibitor_start, dna.size() - 3);
}

TEST(ResolveSites, ZeroOffsetStartsAtLocator) {
  const auto dna = DnaSequence::parse("AGCTTACCCCCCTCGA");  // locator "TAC" -> d = 2
  auto sites = resolve_sites(dna, 0, 3, 0);
  EXPECT_EQ(sites.enhancer_start, 4u);
  EXPECT_EQ(to_string(sites.enhancer), "TAC");
}

// Agreement with the quadratic reference scanner on 1000 random genomes.
TEST(ScanGenes, MatchesNaiveScanner) {
  Rng rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto dna = random_genome(rng.index(5001), rng);
    const auto genes = scan_genes(dna);
    const auto ref = oracle::naive_scan(dna.str());
    ASSERT_EQ(genes.size(), ref.size()) << "trial " << trial;
    for (std::size_t i = 0; i < genes.size(); ++i) {
      EXPECT_EQ(genes[i].id, i);
      EXPECT_EQ(genes[i].promoter_start, ref[i].promoter);
      EXPECT_EQ(genes[i].internal_end, ref[i].terminator);
      EXPECT_EQ(to_string(genes[i].locator), ref[i].locator);
      EXPECT_EQ(genes[i].locator_offset, ref[i].offset);
      EXPECT_EQ(to_string(genes[i].enhancer), ref[i].enhancer);
      EXPECT_EQ(to_string(genes[i].inhibitor), ref[i].inhibitor);
      EXPECT_EQ(to_string(genes[i].protein), ref[i].protein);
      if (i > 0) { EXPECT_LE(genes[i - 1].terminator_end(), genes[i].promoter_start); }
    }
  }
}

TEST(ScanGenes, IsPure) {
  Rng rng(8);
  const auto dna = random_genome(4000, rng);
  EXPECT_EQ(scan_genes(dna), scan_genes(dna));
}

TEST(RegulatoryLoci, CoversLocatorAndSites) {
  const auto dna = DnaSequence::parse(kFigureGenome);
  const auto loci = regulatory_loci(dna, scan_genes(dna));
  // locator 6..8, enhancer 9..11, inhibitor 12..14
  std::vector<std::size_t> expected{6, 7, 8, 9, 10, 11, 12, 13, 14};
  EXPECT_EQ(loci, expected);
}
