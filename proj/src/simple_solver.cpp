#include "hh/simple_solver.hpp"

#include <algorithm>
#include <optional>
#include <unordered_set>

#include "hh/coloring.hpp"
#include "hh/vertex_set.hpp"

namespace hh {

std::vector<SpineEntry> greedy_spine_assign(
    const std::vector<Vertex>& body,
    const std::vector<std::vector<Vertex>>& reserved) {
  const std::size_t t = body.size();
  require(reserved.size() == t, "one reserve per body vertex");
  std::unordered_set<Vertex> seen(body.begin(), body.end());
  require(seen.size() == t, "body vertices must be distinct");
  for (std::size_t j = 0; j < t; ++j) {
    require(reserved[j].size() == j, "reserve j must hold exactly j vertices");
    for (Vertex w : reserved[j])
      require(seen.insert(w).second,
              "reserves must be disjoint from each other and the body");
  }

  std::vector<SpineEntry> spine;
  std::vector<std::size_t> next(t, 0);  // consumption cursor per reserve
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j)
      spine.push_back({int(i), int(j), reserved[j][next[j]++]});
  return spine;
}

std::vector<SpineEntry> greedy_spine_assign(const Graph& g,
                                            const std::vector<Vertex>& body,
                                            const std::vector<Vertex>& pool) {
  const std::size_t t = body.size();
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j)
      require(!g.has_edge(body[i], body[j]),
              "red-branch body must be independent");

  std::unordered_set<Vertex> used(body.begin(), body.end());
  std::vector<SpineEntry> spine;
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j) {
      std::optional<Vertex> pick;
      for (Vertex w : pool) {
        if (used.count(w)) continue;
        if (!g.has_edge(body[i], w) && !g.has_edge(body[j], w)) {
          pick = w;
          break;
        }
      }
      if (!pick)
        throw std::logic_error(
            "red spine pool exhausted (contradicts the co-neighbour count)");
      used.insert(*pick);
      spine.push_back({int(i), int(j), *pick});
    }
  return spine;
}

HedgehogEmbedding find_hedgehog_simple(std::shared_ptr<const Graph> g, int t) {
  require(g != nullptr, "graph required");
  require(t >= 2, "t must be at least 2");
  const Vertex n = g->vertex_count();
  require(std::size_t(n) >= std::size_t(t) * t + t,
          "simple solver needs n >= t^2 + t");

  SimpleColoring h(g);
  VertexSet x(n, true);
  std::vector<Vertex> body(t);
  std::vector<std::vector<Vertex>> reserved(t);
  int fail_i = -1;

  for (int i = t - 1; i >= 0; --i) {
    std::optional<Vertex> pick;
    for (Vertex v : x) {
      int deg = 0;
      for (Vertex u : x)
        if (u != v && g->has_edge(v, u) && ++deg >= i) break;
      if (deg >= i) {
        pick = v;
        break;
      }
    }
    if (!pick) {
      fail_i = i;
      break;
    }
    body[i] = *pick;
    x.erase(*pick);
    std::vector<Vertex>& res = reserved[i];
    for (Vertex u : x) {
      if (int(res.size()) == i) break;
      if (g->has_edge(*pick, u)) res.push_back(u);
    }
    for (Vertex u : res) x.erase(u);
  }

  HedgehogEmbedding emb;
  emb.t = t;
  emb.n = n;
  emb.coloring = h.descriptor();
  emb.seed = h.seed();

  if (fail_i < 0) {
    emb.color = Color::Blue;
    emb.body = body;
    emb.spine = greedy_spine_assign(body, reserved);
  } else {
    // Every pool vertex now has in-pool degree < fail_i; the removal count
    // so far forces this much room.
    std::size_t floor_sz = std::size_t(t) * (t + 1) / 2 +
                           std::size_t(fail_i + 2) * (fail_i + 1) / 2;
    if (x.size() < floor_sz)
      throw std::logic_error("pool shrank below the lemma's floor");

    VertexSet y = x;
    std::vector<Vertex> s;
    while (int(s.size()) < t) {
      if (y.size() == 0)
        throw std::logic_error(
            "independent-set extraction ran dry (contradicts |X|/i >= t)");
      Vertex v = *y.begin();
      s.push_back(v);
      y.erase(v);
      std::vector<Vertex> kill;
      for (Vertex u : y)
        if (g->has_edge(v, u)) kill.push_back(u);
      for (Vertex u : kill) y.erase(u);
    }

    std::vector<Vertex> pool;
    for (Vertex u : x)
      if (!std::binary_search(s.begin(), s.end(), u)) pool.push_back(u);

    emb.color = Color::Red;
    emb.body = s;
    emb.spine = greedy_spine_assign(*g, s, pool);
  }

  std::vector<std::string> problems = verify_embedding(h, emb);
  if (!problems.empty())
    throw std::logic_error("simple-branch embedding failed verification: " +
                           problems.front());
  return emb;
}

}  // namespace hh
