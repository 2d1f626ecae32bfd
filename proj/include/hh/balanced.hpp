#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hh/coloring.hpp"
#include "hh/common.hpp"
#include "hh/hedgehog.hpp"

namespace hh {

/** One sampling attempt: the drawn set, the red-pair counts at the checked
 *  thresholds (multiples of t in [2t, m_max]), and the verdict. */
struct SampleReport {
  std::vector<Vertex> sample;               // ascending
  std::map<int, std::size_t> pair_counts;   // m -> #{uv in pairs(S): d^r <= m}
  bool accepted = false;
  std::string reason;                       // "ok" or why it was rejected
};

struct BalancedRunStats {
  int retries = 0;  // sampling attempts drawn (<= the configured max)
  std::vector<SampleReport> samples;
  bool success = false;
};

struct BalancedResult {
  std::optional<HedgehogEmbedding> embedding;
  BalancedRunStats stats;
};

// Draw S by including each vertex independently with probability 4t/n;
// accept iff |S| >= 3t and, at every multiple of t in [2t, m_max],
// #{uv in pairs(S) : d^r_uv <= m} <= m - t.
SampleReport sample_body(const TripleColoring& h, int t, std::uint64_t seed);

// Shrink an accepted sample to t vertices: sort pairs(S) by (d^r, pair id);
// each of the first 2t pairs loses its lower-id endpoint unless already
// covered, then highest-id survivors go until t remain.  The result obeys
// #{uv in pairs(T) : d^r <= m} <= max(0, m - 2t) for every m up to m_max - t.
std::vector<Vertex> prune_body(const TripleColoring& h, const SampleReport& s,
                               int t);

// Sample-prune-match loop for a red hedgehog.  Fresh sample per attempt
// (sub-seeds derived from `seed` by attempt index); first embedding that
// verifies wins.  Exhausting max_retries is an outcome, not an error.
BalancedResult find_red_hedgehog_balanced(const TripleColoring& h, int t,
                                          int max_retries, std::uint64_t seed);

// Hypothesis probe: (v, m) pairs from the sample with |U^b_{<=m}(v)| > c*m,
// m ranging over [2t, m_max].  Empty certifies the sample only.
std::vector<std::pair<Vertex, int>> check_balanced(
    const TripleColoring& h, int t, double c, const std::vector<Vertex>& sample);

}  // namespace hh
