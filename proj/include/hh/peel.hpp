#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hh/coloring.hpp"
#include "hh/common.hpp"
#include "hh/rational.hpp"
#include "hh/vertex_set.hpp"

namespace hh {

/** One peel: vertex, color, stage, the reserved 10m vertices, the bad set,
 *  and the threshold deletions it triggered (v itself excluded). */
struct PeelEvent {
  Vertex v = 0;
  Color chi = Color::Blue;
  int m = 0;
  std::vector<Vertex> hat_u;    // ascending, exactly 10m
  std::vector<Vertex> bad_set;  // ascending
  std::vector<Vertex> deleted;  // ascending
};

struct PeelTrace {
  int t = 0;
  Vertex n = 0;
  std::string coloring;
  std::optional<std::uint64_t> seed;
  std::vector<PeelEvent> events;
};

/**
 * Live peeling state: pool X, the two growing bodies, and the four exact
 * rational penalty ledgers.  Exposed so steps can be driven and inspected
 * by tests; run_peeling owns one per run.
 */
class PeelState {
 public:
  PeelState(Vertex n, int t);

  int t() const { return t_; }
  int stage() const { return m_; }
  void set_stage(int m) { m_ = m; }

  const VertexSet& live() const { return x_; }
  VertexSet& live() { return x_; }
  const std::vector<Vertex>& body(Color c) const { return s_[int(c)]; }

  Rat alpha(Color c, Vertex v) const { return lookup(alpha_[int(c)], v); }
  Rat beta(Color c, Vertex v) const { return lookup(beta_[int(c)], v); }
  void add_alpha(Color c, Vertex v, const Rat& r) { alpha_[int(c)][v] += r; }
  void add_beta(Color c, Vertex v, const Rat& r) { beta_[int(c)][v] += r; }

  // Any ledger at or past its eviction threshold (alpha 1/2, beta 1/4)?
  bool over_threshold(Vertex v) const;

  void push_body(Color c, Vertex v) { s_[int(c)].push_back(v); }

  std::size_t total_deleted() const { return total_deleted_; }
  void count_deletions(std::size_t k) { total_deleted_ += k; }

 private:
  static Rat lookup(const std::unordered_map<Vertex, Rat>& m, Vertex v) {
    auto it = m.find(v);
    return it == m.end() ? Rat(0) : it->second;
  }

  int t_;
  int m_;
  VertexSet x_;
  std::vector<Vertex> s_[2];
  std::unordered_map<Vertex, Rat> alpha_[2];
  std::unordered_map<Vertex, Rat> beta_[2];
  std::size_t total_deleted_ = 0;
};

struct PeelOutcome {
  enum class Kind { Finished, Stuck };
  Kind kind = Kind::Stuck;
  Color chi = Color::Blue;       // meaningful when Finished
  std::vector<Vertex> body;      // peel order, size t, when Finished
  std::vector<Vertex> residual;  // live set after the last stage, when Stuck
  std::size_t total_deleted = 0;
  PeelTrace trace;
};

struct PeelOptions {
  int threads = 1;
};

/**
 * The staged procedure: stages m = 2t .. m_max; within a stage, scan v
 * ascending testing Blue then Red, peel the first (v, chi) whose U-set in
 * the live pool reaches 10m, rescan from the lowest id after every peel;
 * stop the moment either body has t vertices.  Returns Stuck when the last
 * stage ends with both bodies short.
 */
PeelOutcome run_peeling(const TripleColoring& h, int t,
                        const PeelOptions& opt = {});

// One peel of v with color chi at stage m.  hat_u, when supplied, must be
// the first 10m live U-set members ascending (the engine passes its scan
// result); otherwise it is recomputed.  Throws if the U-set is short
// (selection bug, not data).
PeelEvent peel_step(const TripleColoring& h, PeelState& state, Vertex v,
                    Color chi, int m,
                    const std::vector<Vertex>* hat_u = nullptr);

// B^chi(v): live w (v excluded, hat_u members not excluded) whose chi-count
// over hat_u is at most 4m.
std::vector<Vertex> bad_set(const TripleColoring& h, Vertex v, Color chi,
                            const std::vector<Vertex>& hat_u, int m,
                            const VertexSet& x);

/** Good/bad partition of the finished body's pairs (bad: the later vertex
 *  sits in the earlier one's bad set), plus the bad-pair degree-reciprocal
 *  sum whose bound (< 1/4) the embedding argument leans on. */
struct PairClass {
  std::vector<VertexPair> good;
  std::vector<VertexPair> bad;
  Rat bad_degree_sum;      // sum over bad pairs of 1/d^chi
  bool sum_below_quarter = true;
};

PairClass classify_pairs(const TripleColoring& h, const PeelOutcome& outcome);

/** Replay audit against the lemma ledger.  violations = lemma breaches
 *  (empty means pass); notes = informational recomputations (the bad-set
 *  bound under the all-vertices reading). */
struct AuditReport {
  std::vector<std::string> violations;
  std::vector<std::string> notes;
  std::size_t events_checked = 0;
  std::size_t checkpoints = 0;
  bool passed() const { return violations.empty(); }
};

AuditReport audit_trace(const TripleColoring& h, int t, const PeelTrace& trace);

}  // namespace hh
