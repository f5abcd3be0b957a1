#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "random.hpp"

namespace argrn {

enum class Base : std::uint8_t { A, C, G, T };

inline constexpr std::array<Base, 4> kBases{Base::A, Base::C, Base::G, Base::T};

constexpr char to_char(Base b) noexcept {
  constexpr char symbols[] = {'A', 'C', 'G', 'T'};
  return symbols[static_cast<std::uint8_t>(b)];
}

constexpr std::optional<Base> base_from_char(char c) noexcept {
  switch (c) {
    case 'A': return Base::A;
    case 'C': return Base::C;
    case 'G': return Base::G;
    case 'T': return Base::T;
    default: return std::nullopt;
  }
}

using BaseSpan = std::span<const Base>;

inline std::string to_string(BaseSpan bases) {
  std::string out;
  out.reserve(bases.size());
  for (Base b : bases) out.push_back(to_char(b));
  return out;
}

// Converts an ACGT string; throws ParseError naming the first bad offset.
inline std::vector<Base> bases_from_string(std::string_view text) {
  std::vector<Base> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto b = base_from_char(text[i]);
    if (!b) throw ParseError(i, text[i]);
    out.push_back(*b);
  }
  return out;
}

// Immutable single-strand genome.
class DnaSequence {
 public:
  DnaSequence() = default;
  explicit DnaSequence(std::vector<Base> bases) : bases_(std::move(bases)) {}

  // Genome file contents: A/C/G/T only, with at most one trailing newline
  // ("\n" or "\r\n").
  static DnaSequence parse(std::string_view text) {
    if (text.ends_with("\r\n")) {
      text.remove_suffix(2);
    } else if (text.ends_with('\n')) {
      text.remove_suffix(1);
    }
    return DnaSequence(bases_from_string(text));
  }

  std::size_t size() const noexcept { return bases_.size(); }
  bool empty() const noexcept { return bases_.empty(); }
  Base operator[](std::size_t i) const { return bases_[i]; }
  BaseSpan bases() const noexcept { return bases_; }
  auto begin() const noexcept { return bases_.begin(); }
  auto end() const noexcept { return bases_.end(); }

  // Base at a possibly negative or overflowing index, read circularly.
  Base circular(std::int64_t i) const {
    const auto n = static_cast<std::int64_t>(bases_.size());
    return bases_[static_cast<std::size_t>(((i % n) + n) % n)];
  }

  std::string str() const { return to_string(bases_); }

  friend bool operator==(const DnaSequence&, const DnaSequence&) = default;

 private:
  std::vector<Base> bases_;
};

inline DnaSequence random_genome(std::size_t length, Rng& rng) {
  std::vector<Base> bases(length);
  for (auto& b : bases) b = kBases[rng.index(4)];
  return DnaSequence(std::move(bases));
}

inline std::size_t hamming_distance(const DnaSequence& a, const DnaSequence& b) {
  std::size_t d = a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) d += a[i] != b[i];
  return d;
}

}  // namespace argrn
