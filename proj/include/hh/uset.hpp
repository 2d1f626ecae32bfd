#pragma once

#include <vector>

#include "hh/coloring.hpp"
#include "hh/vertex_set.hpp"

namespace hh {

// U^c_{<=m}(v, X): vertices u in X \ {v} whose *opposite*-color pair degree
// with v is at most m.  Degrees are always over the coloring's full universe;
// X restricts membership only.  A large c-colored U-set is what makes v
// peelable toward a c hedgehog.
std::vector<Vertex> u_set(const TripleColoring& h, Color c, int m, Vertex v,
                          const VertexSet& x);
std::vector<Vertex> u_set(const TripleColoring& h, Color c, int m, Vertex v);

std::size_t u_set_size(const TripleColoring& h, Color c, int m, Vertex v,
                       const VertexSet& x);

// Cumulative U-set sizes for one vertex: result.red[m] = #{u in X\{v} :
// d^red_uv <= m} for m in [0, cap] (so |U^Blue_{<=m}| = red[m] and vice
// versa).  One pass over X with capped degree queries.
struct CumulativeCounts {
  std::vector<std::size_t> red;   // indexed by m, 0..cap
  std::vector<std::size_t> blue;
};
CumulativeCounts u_counts_cumulative(const TripleColoring& h, Vertex v,
                                     const VertexSet& x, int cap);

// N^c(F): vertices w forming a c triple with at least one pair of F
// (w distinct from that pair's endpoints; other F endpoints are eligible).
VertexSet neighborhood(const TripleColoring& h, Color c,
                       const std::vector<VertexPair>& f);

}  // namespace hh
