#include "hh/balanced.hpp"

#include <algorithm>

#include "hh/rng.hpp"
#include "hh/uset.hpp"
#include "hh/vertex_set.hpp"

namespace hh {

namespace {

constexpr std::uint64_t kSampleStream = 0x53414D504CULL;

// Exact red degrees for every pair of S, sorted by (degree, pair id).
struct RankedPair {
  int dr;
  Vertex u, v;
  bool operator<(const RankedPair& o) const {
    if (dr != o.dr) return dr < o.dr;
    if (u != o.u) return u < o.u;
    return v < o.v;
  }
};

std::vector<RankedPair> ranked_pairs(const TripleColoring& h,
                                     const std::vector<Vertex>& s) {
  std::vector<RankedPair> out;
  out.reserve(s.size() * (s.size() - 1) / 2);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      out.push_back(
          {h.pair_degree(s[i], s[j], Color::Red), s[i], s[j]});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SampleReport sample_body(const TripleColoring& h, int t, std::uint64_t seed) {
  require(t >= 2, "t must be at least 2");
  const Vertex n = h.vertex_count();
  require(n >= Vertex(4 * t), "sampling needs n >= 4t");

  SampleReport rep;
  const std::uint64_t thr = prob_threshold(4.0 * t / double(n));
  for (Vertex v = 0; v < n; ++v)
    if (hash_bernoulli(seed, v, thr)) rep.sample.push_back(v);

  const int mmax = m_max_for(t);
  // Capped degrees cover every checked threshold in one query per pair.
  std::vector<int> capped;
  capped.reserve(rep.sample.size() * (rep.sample.size() - 1) / 2);
  for (std::size_t i = 0; i < rep.sample.size(); ++i)
    for (std::size_t j = i + 1; j < rep.sample.size(); ++j)
      capped.push_back(
          h.degrees_capped(rep.sample[i], rep.sample[j], mmax).red);
  for (int m = 2 * t; m <= mmax; m += t)
    rep.pair_counts[m] =
        std::count_if(capped.begin(), capped.end(),
                      [m](int d) { return d <= m; });

  if (rep.sample.size() < std::size_t(3 * t)) {
    rep.accepted = false;
    rep.reason = "small sample";
    return rep;
  }
  for (const auto& [m, cnt] : rep.pair_counts) {
    if (cnt > std::size_t(m - t)) {
      rep.accepted = false;
      rep.reason = "pair count " + std::to_string(cnt) + " > m - t at m = " +
                   std::to_string(m);
      return rep;
    }
  }
  rep.accepted = true;
  rep.reason = "ok";
  return rep;
}

std::vector<Vertex> prune_body(const TripleColoring& h, const SampleReport& s,
                               int t) {
  if (!s.accepted)
    throw std::invalid_argument("prune_body needs an accepted sample");
  require(s.sample.size() >= std::size_t(3 * t), "accepted sample too small");

  std::vector<RankedPair> ranked = ranked_pairs(h, s.sample);
  VertexSet alive = VertexSet::of(h.vertex_count(), s.sample);
  std::size_t target_pairs = std::min<std::size_t>(2 * t, ranked.size());
  for (std::size_t k = 0; k < target_pairs; ++k) {
    const RankedPair& p = ranked[k];
    if (alive.contains(p.u) && alive.contains(p.v)) alive.erase(p.u);
  }
  // Trim highest ids down to t.
  std::vector<Vertex> survivors = alive.to_vector();
  while (survivors.size() > std::size_t(t)) {
    alive.erase(survivors.back());
    survivors.pop_back();
  }
  return survivors;
}

BalancedResult find_red_hedgehog_balanced(const TripleColoring& h, int t,
                                          int max_retries,
                                          std::uint64_t seed) {
  require(max_retries >= 1, "max_retries must be at least 1");
  BalancedResult res;
  const std::uint64_t base = stream_seed(seed, kSampleStream);
  for (int r = 0; r < max_retries; ++r) {
    ++res.stats.retries;
    SampleReport rep = sample_body(h, t, hash_pair(base, std::uint64_t(r)));
    const bool accepted = rep.accepted;
    res.stats.samples.push_back(std::move(rep));
    if (!accepted) continue;
    std::vector<Vertex> body =
        prune_body(h, res.stats.samples.back(), t);
    FindResult fr = find_hedgehog(h, Color::Red, body);
    if (!found(fr)) continue;  // hypothesis-violating input; try again
    HedgehogEmbedding emb = std::get<HedgehogEmbedding>(std::move(fr));
    std::vector<std::string> problems = verify_embedding(h, emb);
    if (!problems.empty())
      throw std::logic_error("balanced embedding failed verification: " +
                             problems.front());
    res.embedding = std::move(emb);
    res.stats.success = true;
    return res;
  }
  return res;
}

std::vector<std::pair<Vertex, int>> check_balanced(
    const TripleColoring& h, int t, double c,
    const std::vector<Vertex>& sample) {
  require(c >= 1.0, "c must be at least 1");
  require(t >= 2, "t must be at least 2");
  const int mmax = m_max_for(t);
  VertexSet everyone(h.vertex_count(), true);
  std::vector<std::pair<Vertex, int>> out;
  for (Vertex v : sample) {
    require(v < h.vertex_count(), "sampled vertex out of range");
    CumulativeCounts cc = u_counts_cumulative(h, v, everyone, mmax);
    for (int m = 2 * t; m <= mmax; ++m)
      if (double(cc.red[m]) > c * m) out.emplace_back(v, m);
  }
  return out;
}

}  // namespace hh
