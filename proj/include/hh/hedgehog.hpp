#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hh/coloring.hpp"
#include "hh/common.hpp"

namespace hh {

// One spine assignment: body positions i < j (indices into the body list)
// and the spine vertex w completing the pair's triple.
struct SpineEntry {
  int i = 0;
  int j = 0;
  Vertex w = 0;
};

/**
 * Certificate for a monochromatic hedgehog: t body vertices plus one
 * distinct spine vertex per body pair, every triple colored c.
 */
struct HedgehogEmbedding {
  Color color = Color::Red;
  int t = 0;
  Vertex n = 0;
  std::vector<Vertex> body;        // size t, order is provenance (peel order etc.)
  std::vector<SpineEntry> spine;   // size t(t-1)/2
  std::string coloring;            // descriptor string
  std::optional<std::uint64_t> seed;
};

/** Hall-style certificate that no embedding exists on this body. */
struct DeficiencyWitness {
  Color color = Color::Red;
  std::vector<Vertex> body;
  std::vector<VertexPair> pairs;     // F, subset of body pairs
  std::size_t witness_count = 0;     // |N^c(F) \ body|, < |F|
};

using FindResult = std::variant<HedgehogEmbedding, DeficiencyWitness>;

inline bool found(const FindResult& r) {
  return std::holds_alternative<HedgehogEmbedding>(r);
}

/**
 * Decides embeddability of body S in color c by maximum bipartite matching
 * between the pairs of S and the outside vertices (pair uv -- w edges where
 * {u,v,w} has color c).  Adjacency is generated lazily from color queries,
 * never materialized up front, so huge n stays cheap.  On failure returns
 * the Konig/Hall deficiency witness F taken from alternating reachability
 * of unmatched pairs, with |N^c(F) \ S| < |F|.
 */
FindResult find_hedgehog(const TripleColoring& h, Color c,
                         const std::vector<Vertex>& body);

// Independent certificate checker: re-queries every color from scratch and
// never trusts finder state.  Empty result means pass.
std::vector<std::string> verify_embedding(const TripleColoring& h,
                                          const HedgehogEmbedding& e);

// |N^c(F)| - (|F| + t).  Nonnegative for every F implies an embedding with
// this body exists (sufficient, not necessary).  F must be nonempty.
long hall_margin(const TripleColoring& h, Color c,
                 const std::vector<Vertex>& body,
                 const std::vector<VertexPair>& f);

}  // namespace hh
