#include <doctest.h>

#include <vector>

#include "hh/rational.hpp"
#include "hh/vertex_set.hpp"

using namespace hh;

TEST_CASE("VertexSet membership, counting, ascending iteration") {
  VertexSet s(10);
  CHECK(s.empty());
  s.insert(7);
  s.insert(2);
  s.insert(7);  // idempotent
  CHECK(s.size() == 2);
  CHECK(s.contains(2));
  CHECK(s.contains(7));
  CHECK_FALSE(s.contains(3));
  CHECK_FALSE(s.contains(99));  // out of range is just "not a member"

  std::vector<Vertex> seen;
  for (Vertex v : s) seen.push_back(v);
  CHECK(seen == std::vector<Vertex>{2, 7});

  s.erase(2);
  s.erase(2);
  CHECK(s.size() == 1);
  CHECK(s.to_vector() == std::vector<Vertex>{7});

  CHECK_THROWS_AS(s.insert(10), std::invalid_argument);
  CHECK_THROWS_AS(s.erase(10), std::invalid_argument);
}

TEST_CASE("VertexSet full construction and of()") {
  VertexSet full(5, true);
  CHECK(full.size() == 5);
  CHECK(full.to_vector() == std::vector<Vertex>{0, 1, 2, 3, 4});

  VertexSet s = VertexSet::of(6, {5, 0, 3});
  CHECK(s.size() == 3);
  CHECK(s.to_vector() == std::vector<Vertex>{0, 3, 5});
  CHECK(s.universe_size() == 6);
}

TEST_CASE("rational ledger arithmetic is exact") {
  // Ten increments of t/m at t=3, m=6 give exactly 5, not 4.9999....
  Rat acc(0);
  for (int i = 0; i < 10; ++i) acc += rat(3, 6);
  CHECK(acc == Rat(5));

  // Harmonic-style sums compare exactly against a hand fraction.
  Rat h = rat(1, 2) + rat(1, 3) + rat(1, 7);
  CHECK(h == rat(41, 42));
  CHECK(h < Rat(1));

  // Threshold semantics: 1/4 is reached by 0.25 exactly, never by 0.2499...
  Rat q = rat(1, 158) + rat(3, 158);
  CHECK(q < rat(1, 4));
  CHECK(rat(2, 8) >= rat(1, 4));
  CHECK(rat_str(rat(6, 4)) == "3/2");
  CHECK(rat_double(rat(1, 2)) == 0.5);
}
