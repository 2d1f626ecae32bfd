#include "hh/oracle.hpp"

#include <vector>

#include "hh/pipeline.hpp"

namespace hh {

namespace {

// C(n, k) clamped to avoid overflow; anything at the clamp dwarfs budgets.
std::uint64_t binom_clamped(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr std::uint64_t kClamp = 1ull << 62;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > kClamp) return kClamp;
  }
  return std::uint64_t(acc);
}

}  // namespace

std::optional<HedgehogEmbedding> exhaustive_find(const TripleColoring& h,
                                                 int t, Color c,
                                                 std::size_t max_bodies) {
  require(t >= 2, "t must be at least 2");
  const Vertex n = h.vertex_count();
  if (std::size_t(t) + std::size_t(t) * (t - 1) / 2 > n)
    return std::nullopt;  // hedgehog cannot fit; "none" is exact

  std::uint64_t total = binom_clamped(n, std::uint64_t(t));
  if (total > max_bodies)
    throw BudgetError("exhaustive_find: C(" + std::to_string(n) + "," +
                      std::to_string(t) + ") = " + std::to_string(total) +
                      " bodies exceed the budget of " +
                      std::to_string(max_bodies));

  std::vector<Vertex> body(t);
  for (int i = 0; i < t; ++i) body[i] = Vertex(i);
  while (true) {
    FindResult fr = find_hedgehog(h, c, body);
    if (found(fr)) return std::get<HedgehogEmbedding>(std::move(fr));
    // next t-subset in lexicographic order
    int i = t - 1;
    while (i >= 0 && body[i] == n - Vertex(t - i)) --i;
    if (i < 0) break;
    ++body[i];
    for (int j = i + 1; j < t; ++j) body[j] = body[j - 1] + 1;
  }
  return std::nullopt;
}

std::optional<ExplicitColoring> min_coloring_search(
    Vertex n, int t, std::uint64_t max_colorings) {
  require(t >= 2, "t must be at least 2");
  require(n >= 1, "n must be positive");
  if (std::size_t(t) + std::size_t(t) * (t - 1) / 2 > n)
    return ExplicitColoring(n);  // vacuous witness: no hedgehog fits at all

  const std::uint64_t triples = binom_clamped(n, 3);
  if (triples >= 63)
    throw BudgetError("min_coloring_search: 2^" + std::to_string(triples) +
                      " colorings are out of any reachable budget");
  const std::uint64_t half = 1ull << (triples - 1);  // global flip halves it
  if (half > max_colorings)
    throw BudgetError("min_coloring_search: " + std::to_string(half) +
                      " colorings exceed the budget of " +
                      std::to_string(max_colorings));

  // Bit k of the mask reddens the colex-rank-k triple; even masks keep the
  // first triple blue, which enumerates exactly one of each flip pair.
  for (std::uint64_t mask = 0; mask < (1ull << triples); mask += 2) {
    ExplicitColoring col(n, Color::Blue);
    std::size_t rank = 0;
    for (Vertex c = 2; c < n; ++c)
      for (Vertex b = 1; b < c; ++b)
        for (Vertex a = 0; a < b; ++a, ++rank)
          if (mask >> rank & 1) col.paint(a, b, c, Color::Red);
    if (!exhaustive_find(col, t, Color::Blue) &&
        !exhaustive_find(col, t, Color::Red))
      return col;
  }
  return std::nullopt;
}

OracleComparison pipeline_vs_oracle(ColoringPtr h, int t) {
  require(h != nullptr, "coloring required");
  OracleComparison oc;
  const Vertex n = h->vertex_count();
  oc.feasible = std::size_t(t) + std::size_t(t) * (t - 1) / 2 <= n;
  if (!oc.feasible) {
    oc.note = "hedgehog cannot fit; both sides report impossible";
    return oc;
  }

  oc.oracle_blue = exhaustive_find(*h, t, Color::Blue).has_value();
  oc.oracle_red = exhaustive_find(*h, t, Color::Red).has_value();

  SolveReport rep = solve(h, t);
  oc.pipeline_found = rep.found();
  oc.pipeline_critical = rep.status == SolveReport::Status::Critical;
  oc.pipeline_path = rep.path;
  if (rep.found()) {
    oc.pipeline_color = rep.embedding->color;
    bool agree = rep.embedding->color == Color::Blue ? oc.oracle_blue
                                                     : oc.oracle_red;
    if (!agree) {
      oc.sound = false;
      oc.note = "pipeline certificate in a color the oracle rules out";
    }
  } else if (oc.pipeline_critical) {
    oc.sound = false;
    oc.note = "pipeline flagged a critical invariant breach";
  } else {
    oc.note = "pipeline failure at sub-theorem scale is legal";
  }
  return oc;
}

}  // namespace hh
