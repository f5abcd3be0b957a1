#pragma once

#include <algorithm>
#include <cstdint>

#include "dna.hpp"

namespace argrn {

// Count of complementary base pairs; zero means no binding.
using BindingStrength = std::uint32_t;

// Watson-Crick pairing: A-T and G-C, in either order.
constexpr bool complements(Base a, Base b) noexcept {
  switch (a) {
    case Base::A: return b == Base::T;
    case Base::T: return b == Base::A;
    case Base::G: return b == Base::C;
    case Base::C: return b == Base::G;
  }
  return false;
}

// Position-aligned comparison from index 0; the tail of the longer sequence
// is ignored.
inline BindingStrength binding_strength(BaseSpan tf, BaseSpan site) noexcept {
  const std::size_t n = std::min(tf.size(), site.size());
  BindingStrength s = 0;
  for (std::size_t i = 0; i < n; ++i) s += complements(tf[i], site[i]);
  return s;
}

}  // namespace argrn
