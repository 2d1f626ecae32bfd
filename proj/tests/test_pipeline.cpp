#include <doctest.h>

#include <memory>
#include <vector>

#include "hh/json_io.hpp"
#include "hh/pipeline.hpp"

using namespace hh;

TEST_CASE("guarantee threshold arithmetic") {
  CHECK(theorem_threshold(10) == doctest::Approx(86051.70185988092).epsilon(1e-12));
  CHECK(theorem_n(10) == 86052);
  CHECK(theorem_n(2) == 2155);  // 800 ln 2 + 1600, rounded up
  CHECK(theorem_threshold(30) > theorem_threshold(29));
  CHECK_THROWS_AS(theorem_threshold(1), std::invalid_argument);
}

TEST_CASE("auto mode rides the finished path on constant colorings") {
  auto red = std::make_shared<ConstantColoring>(300, Color::Red);
  SolveReport rep = solve(red, 3);
  REQUIRE(rep.found());
  CHECK(rep.path == "finished-red");
  CHECK(rep.embedding->color == Color::Red);
  CHECK(rep.embedding->body == std::vector<Vertex>{0, 61, 122});
  CHECK(rep.peels == 3);
  CHECK(rep.deleted == 183);
  CHECK_FALSE(rep.guaranteed);
  REQUIRE(rep.trace.has_value());
  CHECK(rep.trace->events.size() == 3);
  CHECK(verify_embedding(*red, *rep.embedding).empty());

  auto blue = std::make_shared<ConstantColoring>(300, Color::Blue);
  SolveReport brep = solve(blue, 3);
  REQUIRE(brep.found());
  CHECK(brep.path == "finished-blue");
  CHECK(brep.embedding->color == Color::Blue);
}

TEST_CASE("auto mode falls back to the balanced sampler when stuck") {
  ColoringPtr h = make_random_coloring(200, 0.5, 5);
  SolveReport rep = solve(h, 3);
  REQUIRE(rep.found());
  CHECK(rep.path == "stuck-balanced");
  CHECK(rep.peels == 0);
  CHECK(rep.retries >= 1);
  REQUIRE(rep.balanced_stats.has_value());
  CHECK(rep.balanced_stats->success);
  CHECK(rep.embedding->color == Color::Red);
  CHECK(rep.embedding->n == 200);
  CHECK(rep.embedding->coloring == h->descriptor());
  CHECK(verify_embedding(*h, *rep.embedding).empty());
}

TEST_CASE("a stuck residual below the sampler floor fails with diagnostics") {
  ColoringPtr h = make_random_coloring(13, 0.5, 2);
  SolveReport rep = solve(h, 4);  // 4t = 16 > 13
  CHECK_FALSE(rep.found());
  CHECK(rep.status == SolveReport::Status::NotFound);
  CHECK(rep.path == "stuck-balanced");
  bool mentioned = false;
  for (const std::string& d : rep.diagnostics)
    mentioned = mentioned || d.find("sampler floor") != std::string::npos;
  CHECK(mentioned);
}

TEST_CASE("peel mode refuses the fallback") {
  ColoringPtr h = make_random_coloring(200, 0.5, 5);
  SolveOptions opt;
  opt.mode = "peel";
  SolveReport rep = solve(h, 3, opt);
  CHECK_FALSE(rep.found());
  CHECK(rep.path == "stuck");
  bool mentioned = false;
  for (const std::string& d : rep.diagnostics)
    mentioned = mentioned || d.find("fallback disabled") != std::string::npos;
  CHECK(mentioned);
}

TEST_CASE("balanced mode succeeds on red-rich and exhausts on all-blue") {
  SolveOptions opt;
  opt.mode = "balanced";
  opt.max_retries = 6;
  auto red = std::make_shared<ConstantColoring>(60, Color::Red);
  SolveReport ok = solve(red, 3, opt);
  REQUIRE(ok.found());
  CHECK(ok.path == "balanced");
  CHECK(ok.embedding->color == Color::Red);

  auto blue = std::make_shared<ConstantColoring>(60, Color::Blue);
  SolveReport bad = solve(blue, 3, opt);
  CHECK_FALSE(bad.found());
  CHECK(bad.status == SolveReport::Status::NotFound);
  CHECK(bad.retries == 6);
  bool mentioned = false;
  for (const std::string& d : bad.diagnostics)
    mentioned = mentioned || d.find("exhausted") != std::string::npos;
  CHECK(mentioned);
}

TEST_CASE("oracle mode answers exactly on small instances") {
  auto red = std::make_shared<ConstantColoring>(12, Color::Red);
  SolveOptions opt;
  opt.mode = "oracle";
  SolveReport rep = solve(red, 3, opt);
  REQUIRE(rep.found());
  CHECK(rep.path == "oracle");
  CHECK(rep.embedding->color == Color::Red);  // blue pass finds nothing first
  CHECK(verify_embedding(*red, *rep.embedding).empty());
}

TEST_CASE("simple mode requires a graph-induced coloring") {
  auto g = make_gnp_graph(30, 0.5, 3);
  ColoringPtr sc = make_simple_coloring(g);
  SolveOptions opt;
  opt.mode = "simple";
  SolveReport rep = solve(sc, 4, opt);
  REQUIRE(rep.found());
  CHECK(rep.path == "simple");
  CHECK(verify_embedding(*sc, *rep.embedding).empty());

  auto cc = std::make_shared<ConstantColoring>(30, Color::Red);
  CHECK_THROWS_AS(solve(cc, 4, opt), std::invalid_argument);
}

TEST_CASE("solve validates its arguments") {
  auto h = std::make_shared<ConstantColoring>(20, Color::Red);
  SolveOptions bad;
  bad.mode = "quantum";
  CHECK_THROWS_AS(solve(h, 3, bad), std::invalid_argument);
  CHECK_THROWS_AS(solve(nullptr, 3), std::invalid_argument);
  CHECK_THROWS_AS(solve(h, 1), std::invalid_argument);
  auto tiny = std::make_shared<ConstantColoring>(5, Color::Red);
  CHECK_THROWS_AS(solve(tiny, 3), std::invalid_argument);
}

TEST_CASE("solve is reproducible run to run") {
  ColoringPtr h = make_random_coloring(200, 0.5, 9);
  SolveOptions opt;
  opt.seed = 77;
  SolveReport a = solve(h, 3, opt);
  SolveReport b = solve(h, 3, opt);
  REQUIRE(a.found());
  REQUIRE(b.found());
  CHECK(certificate_json(*a.embedding) == certificate_json(*b.embedding));
  REQUIRE(a.trace.has_value());
  REQUIRE(b.trace.has_value());
  CHECK(trace_jsonl(*a.trace) == trace_jsonl(*b.trace));
  CHECK(balanced_stats_json(*a.balanced_stats) ==
        balanced_stats_json(*b.balanced_stats));
}
