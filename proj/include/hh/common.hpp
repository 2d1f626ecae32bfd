#pragma once

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hh {

using Vertex = std::uint32_t;

// Vertex ids are packed three-per-uint64 when hashing triples, 21 bits each.
inline constexpr Vertex kMaxVertices = (1u << 21) - 1;

struct VertexPair {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const VertexPair&, const VertexPair&) = default;
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

// Canonical (u < v) form; throws on u == v.
inline VertexPair make_pair_sorted(Vertex a, Vertex b) {
  if (a == b) throw std::invalid_argument("pair vertices must be distinct");
  return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

inline std::uint64_t pair_key(Vertex u, Vertex v) {
  VertexPair p = make_pair_sorted(u, v);
  return (std::uint64_t(p.u) << 21) | std::uint64_t(p.v);
}

// Canonical key for an unordered triple: sorted and packed 21 bits apiece.
std::uint64_t triple_key(Vertex a, Vertex b, Vertex c);

// Largest degree threshold the procedure ever consults: 2t + C(t, 2).
inline int m_max_for(int t) { return 2 * t + t * (t - 1) / 2; }

// Shortest decimal form that parses back to the same double (0.35, not
// 0.34999999999999998); descriptors must round-trip exactly.
inline std::string format_double(double x) {
  char buf[32];
  auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace hh
