#include "hh/uset.hpp"

#include <algorithm>

namespace hh {

std::vector<Vertex> u_set(const TripleColoring& h, Color c, int m, Vertex v,
                          const VertexSet& x) {
  require(v < h.vertex_count(), "vertex out of range");
  require(x.universe_size() == h.vertex_count(), "set universe mismatch");
  std::vector<Vertex> out;
  Color opp = flip(c);
  for (Vertex u : x) {
    if (u == v) continue;
    if (h.degree_at_most(u, v, opp, m)) out.push_back(u);
  }
  return out;
}

std::vector<Vertex> u_set(const TripleColoring& h, Color c, int m, Vertex v) {
  return u_set(h, c, m, v, VertexSet(h.vertex_count(), true));
}

std::size_t u_set_size(const TripleColoring& h, Color c, int m, Vertex v,
                       const VertexSet& x) {
  require(v < h.vertex_count(), "vertex out of range");
  std::size_t count = 0;
  Color opp = flip(c);
  for (Vertex u : x) {
    if (u == v) continue;
    count += h.degree_at_most(u, v, opp, m);
  }
  return count;
}

CumulativeCounts u_counts_cumulative(const TripleColoring& h, Vertex v,
                                     const VertexSet& x, int cap) {
  require(v < h.vertex_count(), "vertex out of range");
  require(cap >= 0, "cap must be nonnegative");
  CumulativeCounts out;
  out.red.assign(cap + 1, 0);
  out.blue.assign(cap + 1, 0);
  for (Vertex u : x) {
    if (u == v) continue;
    CappedDegrees d = h.degrees_capped(u, v, cap);
    if (d.red <= cap) ++out.red[d.red];
    if (d.blue <= cap) ++out.blue[d.blue];
  }
  for (int m = 1; m <= cap; ++m) {
    out.red[m] += out.red[m - 1];
    out.blue[m] += out.blue[m - 1];
  }
  return out;
}

VertexSet neighborhood(const TripleColoring& h, Color c,
                       const std::vector<VertexPair>& f) {
  Vertex n = h.vertex_count();
  VertexSet out(n);
  for (const VertexPair& p : f) {
    require(p.u < n && p.v < n && p.u != p.v, "pair out of range");
    for (Vertex w = 0; w < n; ++w) {
      if (w == p.u || w == p.v || out.contains(w)) continue;
      if (h.color(p.u, p.v, w) == c) out.insert(w);
    }
  }
  return out;
}

}  // namespace hh
