#include "hh/hedgehog.hpp"

#include <algorithm>
#include <unordered_set>

#include "hh/uset.hpp"

namespace hh {

namespace {

constexpr int kFree = -1;

/**
 * Maximum matching between body pairs and outside vertices via augmenting
 * paths (Kuhn).  The pair side has at most t(t-1)/2 nodes, so the matcher is
 * cheap even when n is huge; adjacency rows are built from color queries the
 * first time a pair participates in a search.  All iteration orders are
 * ascending for reproducibility.
 */
class PairMatcher {
 public:
  PairMatcher(const TripleColoring& h, Color c, const std::vector<Vertex>& body)
      : h_(h), c_(c), body_(body), n_(h.vertex_count()) {
    in_body_.assign(n_, 0);
    for (Vertex v : body_) in_body_[v] = 1;
    int t = int(body_.size());
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j) lefts_.push_back({i, j});
    rows_.resize(lefts_.size());
    row_built_.assign(lefts_.size(), 0);
    match_left_.assign(lefts_.size(), kFree);
    match_right_.assign(n_, kFree);
    right_seen_.assign(n_, 0);
  }

  FindResult run() {
    std::size_t matched = 0;
    for (std::size_t l = 0; l < lefts_.size(); ++l) {
      ++epoch_;
      matched += augment(l);
    }
    if (matched == lefts_.size()) return build_embedding();
    return build_witness();
  }

 private:
  const std::vector<Vertex>& row(std::size_t l) {
    if (!row_built_[l]) {
      row_built_[l] = 1;
      Vertex u = body_[lefts_[l].first], v = body_[lefts_[l].second];
      for (Vertex w = 0; w < n_; ++w) {
        if (in_body_[w] || w == u || w == v) continue;
        if (h_.color(u, v, w) == c_) rows_[l].push_back(w);
      }
    }
    return rows_[l];
  }

  bool augment(std::size_t l) {
    for (Vertex r : row(l)) {
      if (right_seen_[r] == epoch_) continue;
      right_seen_[r] = epoch_;
      if (match_right_[r] == kFree || augment(std::size_t(match_right_[r]))) {
        match_right_[r] = int(l);
        match_left_[l] = int(r);
        return true;
      }
    }
    return false;
  }

  HedgehogEmbedding build_embedding() const {
    HedgehogEmbedding e;
    e.color = c_;
    e.t = int(body_.size());
    e.n = n_;
    e.body = body_;
    for (std::size_t l = 0; l < lefts_.size(); ++l)
      e.spine.push_back(
          {lefts_[l].first, lefts_[l].second, Vertex(match_left_[l])});
    e.coloring = h_.descriptor();
    e.seed = h_.seed();
    return e;
  }

  DeficiencyWitness build_witness() {
    // Alternating reachability from unmatched pairs (Konig/Hall cut): every
    // edge leaves a reachable pair, matched edges come back.  The reachable
    // pair set F then satisfies |N^c(F) \ body| < |F|.
    std::vector<std::size_t> stack;
    std::vector<std::uint8_t> in_f(lefts_.size(), 0);
    for (std::size_t l = 0; l < lefts_.size(); ++l)
      if (match_left_[l] == kFree) { in_f[l] = 1; stack.push_back(l); }
    std::vector<std::uint8_t> right_hit(n_, 0);
    std::size_t right_count = 0;
    while (!stack.empty()) {
      std::size_t l = stack.back();
      stack.pop_back();
      for (Vertex r : row(l)) {
        if (!right_hit[r]) { right_hit[r] = 1; ++right_count; }
        int l2 = match_right_[r];
        if (l2 != kFree && !in_f[std::size_t(l2)]) {
          in_f[std::size_t(l2)] = 1;
          stack.push_back(std::size_t(l2));
        }
      }
    }
    DeficiencyWitness w;
    w.color = c_;
    w.body = body_;
    for (std::size_t l = 0; l < lefts_.size(); ++l)
      if (in_f[l])
        w.pairs.push_back(make_pair_sorted(body_[lefts_[l].first],
                                           body_[lefts_[l].second]));
    w.witness_count = right_count;
    return w;
  }

  const TripleColoring& h_;
  Color c_;
  std::vector<Vertex> body_;
  Vertex n_;
  std::vector<std::uint8_t> in_body_;
  std::vector<std::pair<int, int>> lefts_;  // body index pairs, lex order
  std::vector<std::vector<Vertex>> rows_;
  std::vector<std::uint8_t> row_built_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<std::uint32_t> right_seen_;
  std::uint32_t epoch_ = 0;
};

}  // namespace

FindResult find_hedgehog(const TripleColoring& h, Color c,
                         const std::vector<Vertex>& body) {
  std::size_t t = body.size();
  require(t >= 2, "body needs at least two vertices");
  std::size_t spine = t * (t - 1) / 2;
  require(t + spine <= h.vertex_count(),
          "hedgehog cannot fit: t + t(t-1)/2 exceeds n");
  std::unordered_set<Vertex> seen;
  for (Vertex v : body) {
    require(v < h.vertex_count(), "body vertex out of range");
    require(seen.insert(v).second, "body vertices must be distinct");
  }
  return PairMatcher(h, c, body).run();
}

std::vector<std::string> verify_embedding(const TripleColoring& h,
                                          const HedgehogEmbedding& e) {
  std::vector<std::string> bad;
  auto fail = [&](const std::string& s) { bad.push_back(s); };

  if (e.n != h.vertex_count()) fail("vertex count mismatch with coloring");
  if (int(e.body.size()) != e.t) fail("body size differs from t");
  if (e.t < 2) fail("t must be at least 2");

  bool body_ok = true;
  std::unordered_set<Vertex> body_set;
  for (Vertex v : e.body) {
    if (v >= h.vertex_count()) { fail("body vertex out of range"); body_ok = false; }
    else if (!body_set.insert(v).second) { fail("body vertices not distinct"); body_ok = false; }
  }

  std::size_t want = std::size_t(e.t) * (e.t - 1) / 2;
  if (e.spine.size() != want) fail("spine does not cover all body pairs");

  std::unordered_set<Vertex> spine_used;
  std::unordered_set<std::uint64_t> pair_seen;
  for (const SpineEntry& s : e.spine) {
    if (s.i < 0 || s.j <= s.i || s.j >= e.t) {
      fail("spine entry has invalid body positions");
      continue;
    }
    if (!pair_seen.insert((std::uint64_t(s.i) << 32) | std::uint64_t(s.j)).second)
      fail("spine lists a body pair twice");
    if (s.w >= h.vertex_count()) {
      fail("spine vertex out of range");
      continue;
    }
    if (body_set.count(s.w)) fail("spine meets body");
    if (!spine_used.insert(s.w).second) fail("spine not injective");
    if (body_ok && int(e.body.size()) == e.t) {
      Vertex u = e.body[s.i], v = e.body[s.j];
      if (s.w == u || s.w == v) continue;  // flagged above as spine-meets-body
      if (h.color(u, v, s.w) != e.color)
        fail("triple for pair (" + std::to_string(s.i) + "," +
             std::to_string(s.j) + ") has the wrong color");
    }
  }
  return bad;
}

long hall_margin(const TripleColoring& h, Color c,
                 const std::vector<Vertex>& body,
                 const std::vector<VertexPair>& f) {
  require(!f.empty(), "hall_margin needs a nonempty pair set");
  std::unordered_set<Vertex> body_set(body.begin(), body.end());
  for (const VertexPair& p : f)
    require(body_set.count(p.u) && body_set.count(p.v),
            "pair set must lie inside the body");
  VertexSet nbr = neighborhood(h, c, f);
  return long(nbr.size()) - long(f.size() + body.size());
}

}  // namespace hh
