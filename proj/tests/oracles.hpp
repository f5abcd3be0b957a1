#pragma once

// Reference implementations used only by tests. They work on plain strings
// and share no code with the library, so agreement is meaningful.

#include <map>
#include <string>
#include <vector>

namespace oracle {

struct RefGene {
  std::size_t promoter = 0;
  std::size_t terminator = 0;
  std::string locator;
  long offset = 0;
  std::string enhancer;
  std::string inhibitor;
  std::string protein;
};

inline std::size_t isqrt(std::size_t n) {
  std::size_t s = 0;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

inline long locator_sum(const std::string& loc) {
  static const std::map<char, long> value{{'T', -1}, {'G', -2}, {'C', 1}, {'A', 2}};
  long d = 0;
  for (char c : loc) d += value.at(c);
  return d;
}

inline char circular_at(const std::string& dna, long i) {
  const long n = static_cast<long>(dna.size());
  while (i < 0) i += n;
  return dna[static_cast<std::size_t>(i % n)];
}

// Majority per chunk with first-occurrence tie break, counted with a map.
inline std::string majority_protein(const std::string& coding, std::size_t s) {
  const std::size_t width = (coding.size() + s - 1) / s;
  std::string out;
  for (std::size_t k = 0; k < s; ++k) {
    const std::string chunk = coding.substr(k * width, width);
    std::map<char, int> counts;
    for (char c : chunk) counts[c]++;
    int top = 0;
    for (auto& [c, n] : counts) top = std::max(top, n);
    for (char c : chunk) {
      if (counts[c] == top) {
        out.push_back(c);
        break;
      }
    }
  }
  return out;
}

// Quadratic scanner: tries every position as a promoter and walks forward to
// the first terminator.
inline std::vector<RefGene> naive_scan(const std::string& dna) {
  std::vector<RefGene> genes;
  std::size_t resume = 0;
  for (std::size_t p = 0; p + 4 <= dna.size(); ++p) {
    if (p < resume || dna.compare(p, 4, "AGCT") != 0) continue;
    std::size_t t = p + 4;
    while (t + 4 <= dna.size() && dna.compare(t, 4, "TCGA") != 0) ++t;
    if (t + 4 > dna.size()) break;
    resume = t + 4;
    const std::string internal = dna.substr(p + 4, t - p - 4);
    if (internal.size() < 2) continue;
    RefGene g;
    g.promoter = p;
    g.terminator = t;
    const std::size_t s = isqrt(internal.size());
    g.locator = internal.substr(0, s);
    g.offset = locator_sum(g.locator);
    const long start = g.offset >= 0 ? static_cast<long>(p) + 4 + g.offset
                                     : static_cast<long>(p) + g.offset - static_cast<long>(s);
    for (long i = 0; i < static_cast<long>(s); ++i) {
      g.enhancer.push_back(circular_at(dna, start + i));
      g.inhibitor.push_back(circular_at(dna, start + static_cast<long>(s) + i));
    }
    g.protein = majority_protein(internal.substr(s), s);
    genes.push_back(g);
  }
  return genes;
}

inline int complementary_pairs(const std::string& a, const std::string& b) {
  static const std::map<char, char> pair{{'A', 'T'}, {'T', 'A'}, {'G', 'C'}, {'C', 'G'}};
  int n = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) n += pair.at(a[i]) == b[i];
  return n;
}

}  // namespace oracle
