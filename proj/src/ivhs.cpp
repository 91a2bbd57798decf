#include "jacring/ivhs.hpp"

#include <limits>

namespace jacring {

std::string to_string(VariationVerdict v) {
  switch (v) {
    case VariationVerdict::IMaximal: return "IMaximal";
    case VariationVerdict::LowerBoundOnly: return "LowerBoundOnly";
    case VariationVerdict::Vacuous: return "Vacuous";
  }
  return "?";
}

namespace detail {

std::size_t monomial_count(int v, int k) {
  if (k < 0) return 0;
  // C(k + v - 1, v - 1), computed incrementally; each prefix is an integer.
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  unsigned __int128 c = 1;
  for (int i = 1; i < v; ++i) {
    c = c * static_cast<unsigned>(k + i) / static_cast<unsigned>(i);
    if (c > kMax) return kMax;
  }
  return static_cast<std::size_t>(c);
}

}  // namespace detail

}  // namespace jacring
