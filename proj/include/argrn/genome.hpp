#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dna.hpp"
#include "errors.hpp"

namespace argrn {

inline constexpr std::array<Base, 4> kPromoter{Base::A, Base::G, Base::C, Base::T};
inline constexpr std::array<Base, 4> kTerminator{Base::T, Base::C, Base::G, Base::A};
inline constexpr std::size_t kMotifLength = 4;
inline constexpr std::size_t kMinInternalLength = 2;

// A gene located between a promoter and the nearest following terminator.
//
// Indices refer to the genome the gene was scanned from. Regulatory site
// start indices are reduced modulo the genome length; a site may wrap around
// the genome end.
struct Gene {
  std::size_t id = 0;
  std::size_t promoter_start = 0;
  std::size_t internal_start = 0;  // first base after the promoter
  std::size_t internal_end = 0;    // index of the terminator (exclusive end)
  std::size_t length = 0;          // L
  std::size_t site_size = 0;       // S
  std::vector<Base> locator;
  std::int64_t locator_offset = 0;  // d
  std::size_t enhancer_start = 0;
  std::size_t inhibitor_start = 0;
  std::vector<Base> enhancer;
  std::vector<Base> inhibitor;
  std::vector<Base> protein;

  std::size_t terminator_end() const noexcept { return internal_end + kMotifLength; }

  friend bool operator==(const Gene&, const Gene&) = default;
};

// S = floor(sqrt(L)), on integers.
inline std::size_t site_size(std::size_t internal_length) {
  if (internal_length < kMinInternalLength) {
    throw MalformedGene("internal length " + std::to_string(internal_length) + " is below 2");
  }
  std::size_t s = 1;
  while ((s + 1) * (s + 1) <= internal_length) ++s;
  return s;
}

constexpr int locator_value(Base b) noexcept {
  switch (b) {
    case Base::T: return -1;
    case Base::G: return -2;
    case Base::C: return 1;
    case Base::A: return 2;
  }
  return 0;
}

inline std::int64_t locator_offset(BaseSpan locator) noexcept {
  std::int64_t d = 0;
  for (Base b : locator) d += locator_value(b);
  return d;
}

struct SitePlacement {
  std::size_t enhancer_start = 0;
  std::size_t inhibitor_start = 0;
  std::vector<Base> enhancer;
  std::vector<Base> inhibitor;
};

// Non-negative offsets count from the end of the promoter; negative offsets
// place the enhancer so that it ends |d| bases before the promoter starts.
// The inhibitor always follows the enhancer directly.
inline SitePlacement resolve_sites(const DnaSequence& dna, std::size_t promoter_start,
                                   std::size_t site_len, std::int64_t offset) {
  const auto n = static_cast<std::int64_t>(dna.size());
  const auto s = static_cast<std::int64_t>(site_len);
  const auto ps = static_cast<std::int64_t>(promoter_start);
  const std::int64_t enh = offset >= 0 ? ps + static_cast<std::int64_t>(kMotifLength) + offset
                                       : ps + offset - s;
  auto wrap = [n](std::int64_t i) { return static_cast<std::size_t>(((i % n) + n) % n); };

  SitePlacement out;
  out.enhancer_start = wrap(enh);
  out.inhibitor_start = wrap(enh + s);
  out.enhancer.reserve(site_len);
  out.inhibitor.reserve(site_len);
  for (std::int64_t i = 0; i < s; ++i) {
    out.enhancer.push_back(dna.circular(enh + i));
    out.inhibitor.push_back(dna.circular(enh + s + i));
  }
  return out;
}

// Majority base per chunk; chunk width is ceil(len/S) and the last chunk may
// be short. Ties go to the base occurring first in the chunk.
inline std::vector<Base> derive_protein(BaseSpan coding, std::size_t site_len) {
  if (site_len == 0 || coding.size() < site_len) {
    throw MalformedGene("coding region of " + std::to_string(coding.size()) +
                        " bases cannot yield a protein of " + std::to_string(site_len));
  }
  const std::size_t width = (coding.size() + site_len - 1) / site_len;
  if ((site_len - 1) * width >= coding.size()) {
    throw MalformedGene("coding region of " + std::to_string(coding.size()) +
                        " bases leaves an empty chunk for protein size " +
                        std::to_string(site_len));
  }
  std::vector<Base> protein;
  protein.reserve(site_len);
  for (std::size_t k = 0; k < site_len; ++k) {
    auto chunk = coding.subspan(k * width, std::min(width, coding.size() - k * width));
    std::array<int, 4> counts{};
    for (Base b : chunk) ++counts[static_cast<std::size_t>(b)];
    Base best = chunk.front();
    for (Base b : chunk) {
      if (counts[static_cast<std::size_t>(b)] > counts[static_cast<std::size_t>(best)]) best = b;
    }
    protein.push_back(best);
  }
  return protein;
}

namespace detail {

inline bool motif_at(BaseSpan dna, std::size_t i, const std::array<Base, 4>& motif) {
  return i + kMotifLength <= dna.size() && std::equal(motif.begin(), motif.end(), dna.begin() + i);
}

inline std::size_t find_motif(BaseSpan dna, std::size_t from, const std::array<Base, 4>& motif) {
  for (std::size_t i = from; i + kMotifLength <= dna.size(); ++i) {
    if (motif_at(dna, i, motif)) return i;
  }
  return dna.size();
}

}  // namespace detail

// Builds the full gene record for the internal region [internal_start,
// internal_end) following the promoter at promoter_start.
inline Gene build_gene(const DnaSequence& dna, std::size_t id, std::size_t promoter_start,
                       std::size_t internal_end) {
  Gene g;
  g.id = id;
  g.promoter_start = promoter_start;
  g.internal_start = promoter_start + kMotifLength;
  g.internal_end = internal_end;
  g.length = internal_end - g.internal_start;
  g.site_size = site_size(g.length);

  const auto internal = dna.bases().subspan(g.internal_start, g.length);
  g.locator.assign(internal.begin(), internal.begin() + static_cast<std::ptrdiff_t>(g.site_size));
  g.locator_offset = locator_offset(g.locator);

  auto sites = resolve_sites(dna, promoter_start, g.site_size, g.locator_offset);
  g.enhancer_start = sites.enhancer_start;
  g.inhibitor_start = sites.inhibitor_start;
  g.enhancer = std::move(sites.enhancer);
  g.inhibitor = std::move(sites.inhibitor);
  g.protein = derive_protein(internal.subspan(g.site_size), g.site_size);
  return g;
}

// Left-to-right, first-match, non-overlapping scan. Internal regions shorter
// than two bases are skipped without consuming a gene id.
inline std::vector<Gene> scan_genes(const DnaSequence& dna) {
  std::vector<Gene> genes;
  const BaseSpan bases = dna.bases();
  std::size_t pos = 0;
  while (true) {
    const std::size_t promoter = detail::find_motif(bases, pos, kPromoter);
    if (promoter == bases.size()) break;
    const std::size_t terminator = detail::find_motif(bases, promoter + kMotifLength, kTerminator);
    if (terminator == bases.size()) break;
    if (terminator - (promoter + kMotifLength) >= kMinInternalLength) {
      genes.push_back(build_gene(dna, genes.size(), promoter, terminator));
    }
    pos = terminator + kMotifLength;
  }
  return genes;
}

// DNA indices covered by every gene's locator, enhancer and inhibitor, sorted
// and deduplicated.
inline std::vector<std::size_t> regulatory_loci(const DnaSequence& dna,
                                                const std::vector<Gene>& genes) {
  std::vector<bool> hit(dna.size(), false);
  for (const auto& g : genes) {
    for (std::size_t i = 0; i < g.site_size; ++i) {
      hit[g.internal_start + i] = true;
      hit[(g.enhancer_start + i) % dna.size()] = true;
      hit[(g.inhibitor_start + i) % dna.size()] = true;
    }
  }
  std::vector<std::size_t> loci;
  for (std::size_t i = 0; i < hit.size(); ++i) {
    if (hit[i]) loci.push_back(i);
  }
  return loci;
}

}  // namespace argrn
