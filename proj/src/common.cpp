#include "hh/common.hpp"

#include <algorithm>

namespace hh {

std::uint64_t triple_key(Vertex a, Vertex b, Vertex c) {
  if (a == b || a == c || b == c)
    throw std::invalid_argument("triple vertices must be distinct");
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return (std::uint64_t(a) << 42) | (std::uint64_t(b) << 21) | std::uint64_t(c);
}

}  // namespace hh
