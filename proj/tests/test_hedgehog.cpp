#include <doctest.h>

#include <vector>

#include "hh/hedgehog.hpp"
#include "oracles.hpp"

using namespace hh;

TEST_CASE("all-red body embeds and the matching is frozen") {
  ConstantColoring h(10, Color::Red);
  FindResult r = find_hedgehog(h, Color::Red, {0, 1, 2});
  REQUIRE(found(r));
  const auto& e = std::get<HedgehogEmbedding>(r);
  CHECK(e.color == Color::Red);
  CHECK(e.t == 3);
  CHECK(e.n == 10);
  CHECK(e.body == std::vector<Vertex>{0, 1, 2});
  REQUIRE(e.spine.size() == 3);
  // Augmenting paths displace earlier pairs: each new pair claims w = 3 and
  // pushes the previous owner one slot up, so the final order is 5, 4, 3.
  CHECK(e.spine[0].i == 0);
  CHECK(e.spine[0].j == 1);
  CHECK(e.spine[0].w == 5);
  CHECK(e.spine[1].i == 0);
  CHECK(e.spine[1].j == 2);
  CHECK(e.spine[1].w == 4);
  CHECK(e.spine[2].i == 1);
  CHECK(e.spine[2].j == 2);
  CHECK(e.spine[2].w == 3);
  CHECK(verify_embedding(h, e).empty());
}

TEST_CASE("wrong color on an all-red instance yields a total witness") {
  ConstantColoring h(10, Color::Red);
  FindResult r = find_hedgehog(h, Color::Blue, {0, 1, 2});
  REQUIRE_FALSE(found(r));
  const auto& w = std::get<DeficiencyWitness>(r);
  CHECK(w.color == Color::Blue);
  CHECK(w.pairs.size() == 3);  // nothing matches, every pair is reachable
  CHECK(w.witness_count == 0);
  CHECK(w.witness_count < w.pairs.size());
}

TEST_CASE("competing pairs produce a Hall deficiency witness") {
  // Pairs (0,1) and (0,2) share the single red completer 5.
  ExplicitColoring h(8, Color::Blue);
  h.paint(0, 1, 5, Color::Red);
  h.paint(0, 2, 5, Color::Red);
  h.paint(1, 2, 6, Color::Red);
  h.paint(1, 2, 7, Color::Red);

  FindResult r = find_hedgehog(h, Color::Red, {0, 1, 2});
  REQUIRE_FALSE(found(r));
  const auto& w = std::get<DeficiencyWitness>(r);
  CHECK(w.body == std::vector<Vertex>{0, 1, 2});
  REQUIRE(w.pairs.size() == 2);
  CHECK(w.pairs[0] == make_pair_sorted(0, 1));
  CHECK(w.pairs[1] == make_pair_sorted(0, 2));
  CHECK(w.witness_count == 1);
  CHECK_FALSE(testo::backtrack_embeddable(h, Color::Red, {0, 1, 2}));

  // One more completer for (0,2) flips the verdict.
  h.paint(0, 2, 7, Color::Red);
  FindResult r2 = find_hedgehog(h, Color::Red, {0, 1, 2});
  REQUIRE(found(r2));
  CHECK(verify_embedding(h, std::get<HedgehogEmbedding>(r2)).empty());
  CHECK(testo::backtrack_embeddable(h, Color::Red, {0, 1, 2}));
}

TEST_CASE("find_hedgehog agrees with the backtracking search everywhere") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    RandomColoring h(9, 0.5, seed);
    for (Vertex a = 0; a < 9; ++a)
      for (Vertex b = a + 1; b < 9; ++b)
        for (Vertex c = b + 1; c < 9; ++c) {
          std::vector<Vertex> body{a, b, c};
          for (Color col : {Color::Red, Color::Blue}) {
            FindResult r = find_hedgehog(h, col, body);
            CHECK(found(r) == testo::backtrack_embeddable(h, col, body));
            if (found(r)) {
              CHECK(verify_embedding(h, std::get<HedgehogEmbedding>(r)).empty());
            } else {
              const auto& w = std::get<DeficiencyWitness>(r);
              CHECK(w.witness_count < w.pairs.size());
              // The claimed deficiency is real: recount N^c(F) \ body.
              VertexSet nbr = testo::naive_neighborhood(h, col, w.pairs);
              std::size_t outside = 0;
              for (Vertex v : nbr)
                if (v != a && v != b && v != c) ++outside;
              CHECK(outside == w.witness_count);
            }
          }
        }
  }
}

TEST_CASE("find_hedgehog validates its body") {
  ConstantColoring h(10, Color::Red);
  CHECK_THROWS_AS(find_hedgehog(h, Color::Red, {0}), std::invalid_argument);
  CHECK_THROWS_AS(find_hedgehog(h, Color::Red, {0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(find_hedgehog(h, Color::Red, {0, 1, 99}), std::invalid_argument);
  // t=4 needs 4 + 6 = 10 > 9 vertices.
  ConstantColoring tiny(9, Color::Red);
  CHECK_THROWS_AS(find_hedgehog(tiny, Color::Red, {0, 1, 2, 3}),
                  std::invalid_argument);
}

TEST_CASE("verify_embedding names each violated clause") {
  ConstantColoring h(12, Color::Red);
  auto e = std::get<HedgehogEmbedding>(find_hedgehog(h, Color::Red, {0, 1, 2}));

  auto has = [](const std::vector<std::string>& v, const char* needle) {
    for (const auto& s : v)
      if (s.find(needle) != std::string::npos) return true;
    return false;
  };

  {
    auto bad = e;
    bad.color = Color::Blue;
    CHECK(has(verify_embedding(h, bad), "wrong color"));
  }
  {
    auto bad = e;
    bad.spine[1].w = bad.spine[0].w;
    CHECK(has(verify_embedding(h, bad), "not injective"));
  }
  {
    auto bad = e;
    bad.spine[0].w = bad.body[2];
    CHECK(has(verify_embedding(h, bad), "spine meets body"));
  }
  {
    auto bad = e;
    bad.spine.pop_back();
    CHECK(has(verify_embedding(h, bad), "cover all body pairs"));
  }
  {
    auto bad = e;
    bad.spine[2].i = 1;
    bad.spine[2].j = 1;
    CHECK(has(verify_embedding(h, bad), "invalid body positions"));
  }
  {
    auto bad = e;
    bad.spine[2] = bad.spine[0];
    CHECK(has(verify_embedding(h, bad), "twice"));
  }
  {
    auto bad = e;
    bad.body[0] = bad.body[1];
    CHECK(has(verify_embedding(h, bad), "not distinct"));
  }
  {
    auto bad = e;
    bad.n = 13;
    CHECK(has(verify_embedding(h, bad), "vertex count mismatch"));
  }
  CHECK(verify_embedding(h, e).empty());
}

TEST_CASE("hall_margin arithmetic on known instances") {
  ConstantColoring h(10, Color::Red);
  std::vector<Vertex> body{0, 1, 2};
  // N of one pair = everything but its endpoints: 8; margin 8 - (1+3).
  CHECK(hall_margin(h, Color::Red, body, {make_pair_sorted(0, 1)}) == 4);
  // All three pairs: N = all 10 vertices minus none that dodge every pair:
  // each w != endpoints of some pair, so N = {0..9} minus nothing shared:
  // every vertex completes at least one pair, |N| = 10; margin 10 - (3+3).
  std::vector<VertexPair> all{make_pair_sorted(0, 1), make_pair_sorted(0, 2),
                              make_pair_sorted(1, 2)};
  CHECK(hall_margin(h, Color::Red, body, all) == 4);
  CHECK(hall_margin(h, Color::Blue, body, all) == -6);  // empty N
  CHECK_THROWS_AS(hall_margin(h, Color::Red, body, {}), std::invalid_argument);
  CHECK_THROWS_AS(hall_margin(h, Color::Red, body, {make_pair_sorted(5, 6)}),
                  std::invalid_argument);
}
