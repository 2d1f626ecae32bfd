#include <doctest.h>

#include <algorithm>
#include <memory>
#include <vector>

#include "hh/json_io.hpp"
#include "hh/peel.hpp"
#include "oracles.hpp"

using namespace hh;

namespace {

// Hand-built instance with a known three-peel run: default red on 200
// vertices, with just enough blue to give vertex 0 a nonempty bad set.
//   * {0,u,61} blue for u in 1..39  -> 61 lands in B(0) with d^r(0,61)=158
//   * {0,x,190} blue for all x!=190 -> d^r(0,190)=0, so 190 takes the full
//     quarter beta charge and is evicted immediately
// Expected: red peels at 0, 61, 122; (0,61) is the lone bad body pair.
ExplicitColoring crafted_coloring() {
  ExplicitColoring h(200, Color::Red);
  for (Vertex u = 1; u <= 39; ++u) h.paint(0, u, 61, Color::Blue);
  for (Vertex x = 1; x < 200; ++x)
    if (x != 190) h.paint(0, x, 190, Color::Blue);
  return h;
}

std::vector<Vertex> iota_range(Vertex lo, Vertex hi) {  // [lo, hi]
  std::vector<Vertex> out;
  for (Vertex v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

}  // namespace

TEST_CASE("PeelState ledgers and eviction thresholds") {
  PeelState st(50, 3);
  CHECK(st.t() == 3);
  CHECK(st.stage() == 6);
  CHECK(st.live().size() == 50);
  CHECK(st.alpha(Color::Red, 7) == Rat(0));

  st.add_alpha(Color::Red, 7, rat(1, 4));
  CHECK_FALSE(st.over_threshold(7));
  st.add_alpha(Color::Red, 7, rat(1, 4));  // exactly 1/2
  CHECK(st.over_threshold(7));

  st.add_beta(Color::Blue, 8, rat(3, 13));
  CHECK_FALSE(st.over_threshold(8));
  st.add_beta(Color::Blue, 8, rat(1, 52));  // 3/13 + 1/52 = 1/4 exactly
  CHECK(st.over_threshold(8));

  st.push_body(Color::Red, 7);
  CHECK(st.body(Color::Red) == std::vector<Vertex>{7});
  st.count_deletions(5);
  CHECK(st.total_deleted() == 5);
}

TEST_CASE("bad_set matches a naive recount") {
  RandomColoring h(70, 0.5, 21);
  VertexSet x(70, true);
  x.erase(3);
  std::vector<Vertex> hat;
  for (Vertex u = 10; u < 40; ++u) hat.push_back(u);
  const int m = 6;
  std::vector<Vertex> got = bad_set(h, 5, Color::Red, hat, m, x);
  std::vector<Vertex> want;
  for (Vertex w : x) {
    if (w == 5) continue;
    int cnt = 0;
    for (Vertex u : hat)
      if (u != w && h.color(u, 5, w) == Color::Red) ++cnt;
    if (cnt <= 4 * m) want.push_back(w);
  }
  CHECK(got == want);
}

TEST_CASE("all-red run: three red peels with full-hat evictions") {
  ConstantColoring h(300, Color::Red);
  PeelOutcome out = run_peeling(h, 3);
  REQUIRE(out.kind == PeelOutcome::Kind::Finished);
  CHECK(out.chi == Color::Red);
  CHECK(out.body == std::vector<Vertex>{0, 61, 122});
  CHECK(out.total_deleted == 183);  // 3 * (1 + 60)
  REQUIRE(out.trace.events.size() == 3);
  const PeelEvent& e0 = out.trace.events[0];
  CHECK(e0.v == 0);
  CHECK(e0.chi == Color::Red);
  CHECK(e0.m == 6);
  CHECK(e0.hat_u == iota_range(1, 60));
  CHECK(e0.bad_set.empty());
  CHECK(e0.deleted == iota_range(1, 60));
  CHECK(out.trace.events[1].v == 61);
  CHECK(out.trace.events[2].v == 122);
  CHECK(out.trace.t == 3);
  CHECK(out.trace.n == 300);
  CHECK(out.trace.coloring == "allred");

  AuditReport rep = audit_trace(h, 3, out.trace);
  CHECK(rep.passed());
  CHECK(rep.events_checked == 3);
  CHECK(rep.checkpoints == 0);  // finished run: no stage-end sweep owed

  PairClass pc = classify_pairs(h, out);
  CHECK(pc.bad.empty());
  CHECK(pc.good.size() == 3);
  CHECK(pc.bad_degree_sum == Rat(0));
  CHECK(pc.sum_below_quarter);
}

TEST_CASE("all-blue run peels blue first") {
  ConstantColoring h(300, Color::Blue);
  PeelOutcome out = run_peeling(h, 3);
  REQUIRE(out.kind == PeelOutcome::Kind::Finished);
  CHECK(out.chi == Color::Blue);
  CHECK(out.body == std::vector<Vertex>{0, 61, 122});
  CHECK(audit_trace(h, 3, out.trace).passed());
}

TEST_CASE("balanced random coloring gets stuck with an untouched pool") {
  RandomColoring h(200, 0.5, 5);
  PeelOutcome out = run_peeling(h, 3);
  REQUIRE(out.kind == PeelOutcome::Kind::Stuck);
  CHECK(out.trace.events.empty());
  CHECK(out.total_deleted == 0);
  CHECK(out.residual.size() == 200);
  AuditReport rep = audit_trace(h, 3, out.trace);
  CHECK(rep.passed());
  CHECK(rep.events_checked == 0);
  CHECK(rep.checkpoints == 1);  // final stage-end certification still runs
}

TEST_CASE("crafted instance: bad sets, fractional beta, quarter eviction") {
  ExplicitColoring h = crafted_coloring();

  // The designed degrees, straight from the paint pattern.
  CHECK(testo::naive_degree(h, 0, 61, Color::Blue) == 40);
  CHECK(testo::naive_degree(h, 0, 61, Color::Red) == 158);
  CHECK(testo::naive_degree(h, 0, 190, Color::Red) == 0);

  PeelOutcome out = run_peeling(h, 3);
  REQUIRE(out.kind == PeelOutcome::Kind::Finished);
  CHECK(out.chi == Color::Red);
  CHECK(out.body == std::vector<Vertex>{0, 61, 122});
  REQUIRE(out.trace.events.size() == 3);

  const PeelEvent& e0 = out.trace.events[0];
  CHECK(e0.v == 0);
  CHECK(e0.m == 6);
  CHECK(e0.hat_u == iota_range(1, 60));
  CHECK(e0.bad_set == std::vector<Vertex>{61, 190});
  // Hat is alpha-evicted wholesale; 190 hits beta = 1/4; 61 survives on 3/158.
  std::vector<Vertex> want_del = iota_range(1, 60);
  want_del.push_back(190);
  CHECK(e0.deleted == want_del);

  const PeelEvent& e1 = out.trace.events[1];
  CHECK(e1.v == 61);
  CHECK(e1.hat_u == iota_range(62, 121));
  CHECK(e1.bad_set.empty());
  CHECK(e1.deleted == iota_range(62, 121));

  const PeelEvent& e2 = out.trace.events[2];
  CHECK(e2.v == 122);
  CHECK(e2.hat_u == iota_range(123, 182));
  CHECK(e2.deleted == iota_range(123, 182));

  CHECK(out.total_deleted == 3 + 61 + 60 + 60);

  PairClass pc = classify_pairs(h, out);
  REQUIRE(pc.bad.size() == 1);
  CHECK(pc.bad[0] == make_pair_sorted(0, 61));
  CHECK(pc.good.size() == 2);
  CHECK(pc.bad_degree_sum == rat(1, 158));
  CHECK(pc.sum_below_quarter);

  AuditReport rep = audit_trace(h, 3, out.trace);
  CHECK(rep.passed());
  CHECK(rep.events_checked == 3);

  // The finished body embeds and verifies.
  FindResult fr = find_hedgehog(h, Color::Red, out.body);
  REQUIRE(found(fr));
  CHECK(verify_embedding(h, std::get<HedgehogEmbedding>(fr)).empty());
}

TEST_CASE("graph-induced coloring peels blue along neighborhoods") {
  auto g = std::make_shared<BitGraph>(BitGraph::gnp(1200, 0.5, 7));
  SimpleColoring h(g);
  PeelOutcome out = run_peeling(h, 5);
  REQUIRE(out.kind == PeelOutcome::Kind::Finished);
  CHECK(out.chi == Color::Blue);
  CHECK(out.body.size() == 5);
  REQUIRE(out.trace.events.size() == 5);
  for (const PeelEvent& ev : out.trace.events) {
    CHECK(ev.m == 10);
    CHECK(ev.hat_u.size() == 100);
    CHECK(ev.bad_set.empty());   // every hat triple is blue via the uv edge
    CHECK(ev.deleted == ev.hat_u);
    for (Vertex u : ev.hat_u) CHECK(g->has_edge(ev.v, u));
  }
  CHECK(audit_trace(h, 5, out.trace).passed());
  FindResult fr = find_hedgehog(h, Color::Blue, out.body);
  REQUIRE(found(fr));
  CHECK(verify_embedding(h, std::get<HedgehogEmbedding>(fr)).empty());
}

TEST_CASE("peeling is deterministic across thread counts") {
  ExplicitColoring h = crafted_coloring();
  PeelOutcome a = run_peeling(h, 3, {1});
  PeelOutcome b = run_peeling(h, 3, {4});
  CHECK(trace_jsonl(a.trace) == trace_jsonl(b.trace));
  CHECK(a.body == b.body);

  RandomColoring r(400, 0.9, 12);
  PeelOutcome c = run_peeling(r, 3, {1});
  PeelOutcome d = run_peeling(r, 3, {4});
  CHECK(trace_jsonl(c.trace) == trace_jsonl(d.trace));
}

TEST_CASE("peel_step rejects dead vertices and short U-sets") {
  ConstantColoring h(100, Color::Red);
  PeelState st(100, 3);
  st.live().erase(5);
  CHECK_THROWS_AS(peel_step(h, st, 5, Color::Red, 6), std::logic_error);
  // Blue U-sets are empty on an all-red instance: selection would be a bug.
  CHECK_THROWS_AS(peel_step(h, st, 0, Color::Blue, 6), std::logic_error);
}

TEST_CASE("run_peeling validates inputs") {
  ConstantColoring h(5, Color::Red);
  CHECK_THROWS_AS(run_peeling(h, 1), std::invalid_argument);
  CHECK_THROWS_AS(run_peeling(h, 3), std::invalid_argument);  // 3+3 > 5
}

TEST_CASE("classify_pairs demands a finished outcome with full trace") {
  ConstantColoring h(300, Color::Red);
  PeelOutcome out = run_peeling(h, 3);
  REQUIRE(out.kind == PeelOutcome::Kind::Finished);
  PeelOutcome broken = out;
  broken.trace.events.erase(broken.trace.events.begin());
  CHECK_THROWS_AS(classify_pairs(h, broken), std::invalid_argument);
  PeelOutcome stuck = out;
  stuck.kind = PeelOutcome::Kind::Stuck;
  CHECK_THROWS_AS(classify_pairs(h, stuck), std::invalid_argument);
}

TEST_CASE("the audit flags doctored traces") {
  ExplicitColoring h = crafted_coloring();
  PeelOutcome out = run_peeling(h, 3);
  REQUIRE(out.kind == PeelOutcome::Kind::Finished);
  REQUIRE(audit_trace(h, 3, out.trace).passed());

  auto violated = [&](const PeelTrace& tr, const char* needle) {
    AuditReport rep = audit_trace(h, 3, tr);
    for (const std::string& v : rep.violations)
      if (v.find(needle) != std::string::npos) return true;
    return false;
  };

  {
    PeelTrace tr = out.trace;
    tr.events[0].deleted.pop_back();  // hide 190's eviction
    CHECK(violated(tr, "threshold deletions differ"));
  }
  {
    PeelTrace tr = out.trace;
    tr.events[0].bad_set.push_back(199);
    CHECK(violated(tr, "bad set differs"));
  }
  {
    PeelTrace tr = out.trace;
    std::swap(tr.events[0].hat_u[0], tr.events[0].hat_u[1]);
    CHECK(violated(tr, "not strictly ascending"));
  }
  {
    PeelTrace tr = out.trace;
    tr.events[0].hat_u.pop_back();
    CHECK(violated(tr, "differs from 10m"));
    CHECK(violated(tr, "alpha mass"));
  }
  {
    PeelTrace tr = out.trace;
    tr.events[1].m = 5;  // below 2t and below its predecessor
    CHECK(violated(tr, "out of range"));
  }
  {
    PeelTrace tr = out.trace;
    tr.events[1].v = 190;  // deleted in event 0
    CHECK(violated(tr, "not live"));
  }
  {
    PeelTrace tr = out.trace;
    tr.events[0].hat_u[0] = 61;  // d^b(61,0) = 40 > m: not a U-set member
    CHECK(violated(tr, "fails the U-set degree bound"));
  }
}

TEST_CASE("audit catches a run that stopped while a vertex stayed peelable") {
  // Truncating the trace of a finishable run leaves vertex 61 with a huge
  // red U-set at every stage, which the final checkpoint must flag.
  ExplicitColoring h = crafted_coloring();
  PeelOutcome out = run_peeling(h, 3);
  PeelTrace tr = out.trace;
  tr.events.resize(1);
  AuditReport rep = audit_trace(h, 3, tr);
  CHECK_FALSE(rep.passed());
  bool stage_viol = false;
  for (const std::string& v : rep.violations)
    stage_viol = stage_viol || v.find(">= 10m after stage end") != std::string::npos;
  CHECK(stage_viol);
}
