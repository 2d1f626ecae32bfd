#include "hh/pipeline.hpp"

#include <cmath>

#include "hh/oracle.hpp"
#include "hh/simple_solver.hpp"
#include "hh/vertex_set.hpp"

namespace hh {

double theorem_threshold(int t) {
  require(t >= 2, "t must be at least 2");
  return 200.0 * t * t * std::log(double(t)) + 400.0 * t * t;
}

Vertex theorem_n(int t) {
  return Vertex(std::ceil(theorem_threshold(t)));
}

namespace {

void fail_or_escalate(SolveReport& rep, const std::string& what) {
  rep.diagnostics.push_back(what);
  if (rep.guaranteed) {
    rep.status = SolveReport::Status::Critical;
    rep.diagnostics.push_back(
        "CRITICAL: failure on an instance meeting the guarantee clause "
        "(contradicts the theorem or reveals a bug)");
  } else {
    rep.status = SolveReport::Status::NotFound;
  }
}

}  // namespace

SolveReport solve(ColoringPtr h, int t, const SolveOptions& opt) {
  require(h != nullptr, "coloring required");
  require(t >= 2, "t must be at least 2");
  const Vertex n = h->vertex_count();
  require(std::size_t(t) + std::size_t(t) * (t - 1) / 2 <= n,
          "hedgehog cannot fit: t + t(t-1)/2 exceeds n");
  const std::string& mode = opt.mode;
  require(mode == "auto" || mode == "peel" || mode == "balanced" ||
              mode == "simple" || mode == "oracle",
          "unknown mode: " + mode);

  SolveReport rep;
  rep.guaranteed = t >= 10 && double(n) >= theorem_threshold(t);

  if (mode == "simple") {
    const auto* sc = dynamic_cast<const SimpleColoring*>(h.get());
    require(sc != nullptr, "simple mode needs a graph-induced coloring");
    rep.embedding = find_hedgehog_simple(sc->graph_ptr(), t);
    rep.status = SolveReport::Status::Found;
    rep.path = "simple";
    return rep;
  }

  if (mode == "balanced") {
    BalancedResult br =
        find_red_hedgehog_balanced(*h, t, opt.max_retries, opt.seed);
    rep.retries = br.stats.retries;
    rep.path = "balanced";
    if (br.embedding) {
      rep.embedding = std::move(br.embedding);
      rep.status = SolveReport::Status::Found;
    } else {
      fail_or_escalate(rep, "balanced sampler exhausted " +
                                std::to_string(br.stats.retries) + " retries");
    }
    rep.balanced_stats = std::move(br.stats);
    return rep;
  }

  if (mode == "oracle") {
    rep.path = "oracle";
    for (Color c : {Color::Blue, Color::Red}) {
      std::optional<HedgehogEmbedding> e = exhaustive_find(*h, t, c);
      if (e) {
        rep.embedding = std::move(e);
        rep.status = SolveReport::Status::Found;
        return rep;
      }
    }
    fail_or_escalate(rep, "exhaustive search found no hedgehog in either color");
    return rep;
  }

  // auto / peel: the staged procedure first.
  PeelOptions popt;
  popt.threads = opt.threads;
  PeelOutcome po = run_peeling(*h, t, popt);
  rep.peels = po.trace.events.size();
  rep.deleted = po.total_deleted;

  if (po.kind == PeelOutcome::Kind::Finished) {
    rep.path =
        po.chi == Color::Blue ? "finished-blue" : "finished-red";
    FindResult fr = find_hedgehog(*h, po.chi, po.body);
    if (found(fr)) {
      rep.embedding = std::get<HedgehogEmbedding>(std::move(fr));
      rep.status = SolveReport::Status::Found;
    } else {
      rep.witness = std::get<DeficiencyWitness>(std::move(fr));
      fail_or_escalate(
          rep, "deficiency witness on a finished body (matching invariant)");
    }
    rep.trace = std::move(po.trace);
    return rep;
  }

  rep.trace = std::move(po.trace);
  if (mode == "peel") {
    rep.path = "stuck";
    rep.status = SolveReport::Status::NotFound;
    rep.diagnostics.push_back(
        "peeling stuck with both bodies short; balanced fallback disabled");
    return rep;
  }

  // Stuck residual: balanced sampler on the induced sub-coloring (c = 10).
  if (po.residual.size() < std::size_t(4) * t) {
    rep.path = "stuck-balanced";
    fail_or_escalate(rep, "stuck residual of " +
                              std::to_string(po.residual.size()) +
                              " vertices is below the sampler floor of 4t");
    return rep;
  }
  ColoringPtr restricted = restrict_coloring(h, VertexSet::of(n, po.residual));
  BalancedResult br =
      find_red_hedgehog_balanced(*restricted, t, opt.max_retries, opt.seed);
  rep.retries = br.stats.retries;
  rep.path = "stuck-balanced";
  if (br.embedding) {
    HedgehogEmbedding emb = std::move(*br.embedding);
    const auto* rc = dynamic_cast<const RestrictedColoring*>(restricted.get());
    if (rc == nullptr)
      throw std::logic_error("restriction lost its relabeling");
    for (Vertex& b : emb.body) b = rc->to_parent(b);
    for (SpineEntry& s : emb.spine) s.w = rc->to_parent(s.w);
    emb.n = n;
    emb.coloring = h->descriptor();
    emb.seed = h->seed();
    std::vector<std::string> problems = verify_embedding(*h, emb);
    if (!problems.empty())
      throw std::logic_error("mapped-back embedding failed verification: " +
                             problems.front());
    rep.embedding = std::move(emb);
    rep.status = SolveReport::Status::Found;
  } else {
    fail_or_escalate(rep, "balanced fallback exhausted " +
                              std::to_string(br.stats.retries) +
                              " retries on the stuck residual");
  }
  rep.balanced_stats = std::move(br.stats);
  return rep;
}

}  // namespace hh
