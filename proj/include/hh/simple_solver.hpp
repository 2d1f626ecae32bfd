#pragma once

#include <memory>
#include <vector>

#include "hh/graph.hpp"
#include "hh/hedgehog.hpp"

namespace hh {

/**
 * Solver for graph-induced colorings (triple blue iff it contains a G-edge).
 * Guaranteed for n >= t^2 + t: peel v_{t-1}..v_0 with in-pool degree >= i,
 * reserving i neighbours apiece, for a blue hedgehog; when some index i has
 * no such vertex, every pool vertex has degree < i, so a greedy independent
 * set of size t exists and seeds a red hedgehog instead.
 */
HedgehogEmbedding find_hedgehog_simple(std::shared_ptr<const Graph> g, int t);

// Blue-branch spine assignment: reserved[j] holds exactly j neighbours of
// body[j]; pair (i, j) takes the lowest unused entry of reserved[j], pairs
// in lexicographic order.
std::vector<SpineEntry> greedy_spine_assign(
    const std::vector<Vertex>& body,
    const std::vector<std::vector<Vertex>>& reserved);

// Red-branch spine assignment: body is independent in g; each pair takes the
// lowest unused pool vertex adjacent to neither endpoint.  Exhaustion means
// the caller broke the counting argument, so it throws.
std::vector<SpineEntry> greedy_spine_assign(const Graph& g,
                                            const std::vector<Vertex>& body,
                                            const std::vector<Vertex>& pool);

}  // namespace hh
