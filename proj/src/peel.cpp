#include "hh/peel.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "hh/uset.hpp"

namespace hh {

namespace {

// Per-vertex partner cache for the stage scans.  A vertex's list holds every
// partner u with min(d^r, d^b) <= m_max together with both capped degrees:
// degrees never change, so the list is computed once per run and liveness is
// filtered at query time.  Vertices with more than kMaxList relevant
// partners are marked dense and answered by direct threshold scans instead
// (exact either way; the list is purely an accelerator).
//
// Pair work is shared across the two endpoints: scanning v looks up u < v in
// u's finished list (absence there proves irrelevance) and only computes
// pairs against unfinished or dense partners, so each unordered pair is
// evaluated roughly once per run even though every vertex gets scanned.
struct PartnerEnt {
  Vertex u;
  std::uint16_t dr, db;  // min(d, cap + 1)
};

class StageScanner {
 public:
  static constexpr std::size_t kMaxList = 1024;
  static constexpr std::size_t kGlobalBudget = 24u * 1000 * 1000;

  StageScanner(const TripleColoring& h, int cap, int threads)
      : h_(h),
        n_(h.vertex_count()),
        cap_(cap),
        threads_(std::max(1, threads)),
        state_(n_, kUnscanned),
        lists_(n_) {}

  // First `need` live members of U^chi_{<=m}(v, x), ascending; nullopt when
  // the U-set is short.
  std::optional<std::vector<Vertex>> collect(Vertex v, Color chi, int m,
                                             const VertexSet& x,
                                             std::size_t need) {
    if (state_[v] == kUnscanned) ensure(v);
    std::vector<Vertex> out;
    out.reserve(need);
    if (state_[v] == kComplete) {
      for (const PartnerEnt& e : lists_[v]) {
        int d = chi == Color::Blue ? e.dr : e.db;  // U^b keys on d^r
        if (d <= m && x.contains(e.u)) {
          out.push_back(e.u);
          if (out.size() == need) return out;
        }
      }
      return std::nullopt;
    }
    Color opp = flip(chi);
    std::size_t remaining = x.size() - (x.contains(v) ? 1 : 0);
    for (Vertex u : x) {
      if (u == v) continue;
      if (out.size() + remaining < need) return std::nullopt;
      --remaining;
      if (h_.degree_at_most(u, v, opp, m)) {
        out.push_back(u);
        if (out.size() == need) return out;
      }
    }
    return std::nullopt;
  }

  bool scanned(Vertex v) const { return state_[v] != kUnscanned; }

  // Phase-A a batch in parallel (used ahead of sequential evaluation; safe
  // because batch members read only already-committed lists, and commit
  // order is ascending regardless of thread interleaving).
  void ensure_batch(const std::vector<Vertex>& ids) {
    if (ids.size() <= 1 || threads_ == 1) {
      for (Vertex v : ids) if (state_[v] == kUnscanned) ensure(v);
      return;
    }
    std::vector<std::vector<PartnerEnt>> slot(ids.size());
    std::vector<std::uint8_t> dense(ids.size(), 0);
    std::size_t workers = std::min<std::size_t>(threads_, ids.size());
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < ids.size(); i += workers)
          if (state_[ids[i]] == kUnscanned)
            dense[i] = !build_list(ids[i], slot[i]);
      });
    for (auto& th : pool) th.join();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (state_[ids[i]] != kUnscanned) continue;
      if (dense[i]) {
        state_[ids[i]] = kDense;
      } else {
        commit(ids[i], std::move(slot[i]));
      }
    }
  }

 private:
  enum : std::uint8_t { kUnscanned = 0, kComplete = 1, kDense = 2 };

  void ensure(Vertex v) {
    std::vector<PartnerEnt> list;
    if (build_list(v, list))
      commit(v, std::move(list));
    else
      state_[v] = kDense;
  }

  // False when v overflows the list cap (dense).
  bool build_list(Vertex v, std::vector<PartnerEnt>& list) const {
    for (Vertex u = 0; u < n_; ++u) {
      if (u == v) continue;
      if (state_[u] == kComplete) {
        const auto& lu = lists_[u];
        auto it = std::lower_bound(
            lu.begin(), lu.end(), v,
            [](const PartnerEnt& e, Vertex x) { return e.u < x; });
        if (it != lu.end() && it->u == v) list.push_back({u, it->dr, it->db});
      } else {
        CappedDegrees d = h_.degrees_capped(u, v, cap_);
        if (std::min(d.red, d.blue) <= cap_)
          list.push_back(
              {u, std::uint16_t(d.red), std::uint16_t(d.blue)});
      }
      if (list.size() > kMaxList) return false;
    }
    return true;
  }

  void commit(Vertex v, std::vector<PartnerEnt> list) {
    if (entries_ + list.size() > kGlobalBudget) {
      state_[v] = kDense;
      return;
    }
    entries_ += list.size();
    lists_[v] = std::move(list);
    state_[v] = kComplete;
  }

  const TripleColoring& h_;
  Vertex n_;
  int cap_;
  int threads_;
  std::vector<std::uint8_t> state_;
  std::vector<std::vector<PartnerEnt>> lists_;
  std::size_t entries_ = 0;
};

std::vector<Vertex> recompute_hat(const TripleColoring& h, Vertex v, Color chi,
                                  int m, const VertexSet& x,
                                  std::size_t need) {
  std::vector<Vertex> out;
  Color opp = flip(chi);
  for (Vertex u : x) {
    if (u == v) continue;
    if (h.degree_at_most(u, v, opp, m)) {
      out.push_back(u);
      if (out.size() == need) break;
    }
  }
  return out;
}

std::vector<Vertex> merge_sorted(const std::vector<Vertex>& a,
                                 const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

}  // namespace

PeelState::PeelState(Vertex n, int t) : t_(t), m_(2 * t), x_(n, true) {}

bool PeelState::over_threshold(Vertex v) const {
  static const Rat half(1, 2), quarter(1, 4);
  for (int c = 0; c < 2; ++c) {
    auto a = alpha_[c].find(v);
    if (a != alpha_[c].end() && a->second >= half) return true;
    auto b = beta_[c].find(v);
    if (b != beta_[c].end() && b->second >= quarter) return true;
  }
  return false;
}

std::vector<Vertex> bad_set(const TripleColoring& h, Vertex v, Color chi,
                            const std::vector<Vertex>& hat_u, int m,
                            const VertexSet& x) {
  std::vector<Vertex> out;
  const int bound = 4 * m;
  for (Vertex w : x) {
    if (w == v) continue;
    int cnt = 0;
    bool over = false;
    for (Vertex u : hat_u) {
      if (u == w) continue;
      if (h.color(u, v, w) == chi && ++cnt > bound) {
        over = true;
        break;
      }
    }
    if (!over) out.push_back(w);
  }
  return out;
}

PeelEvent peel_step(const TripleColoring& h, PeelState& state, Vertex v,
                    Color chi, int m, const std::vector<Vertex>* pre) {
  VertexSet& x = state.live();
  if (!x.contains(v))
    throw std::logic_error("peel_step: vertex not in the live pool");
  const std::size_t need = std::size_t(10) * m;
  const int t = state.t();

  PeelEvent ev;
  ev.v = v;
  ev.chi = chi;
  ev.m = m;
  ev.hat_u = pre ? *pre : recompute_hat(h, v, chi, m, x, need);
  if (ev.hat_u.size() != need)
    throw std::logic_error("peel_step: U-set shorter than 10m (selection bug)");

  ev.bad_set = bad_set(h, v, chi, ev.hat_u, m, x);

  Rat alpha_inc(t, m);
  alpha_inc.canonicalize();
  for (Vertex u : ev.hat_u) state.add_alpha(chi, u, alpha_inc);

  static const Rat quarter(1, 4);
  for (Vertex w : ev.bad_set) {
    int d = h.pair_degree(v, w, chi);
    Rat inc = quarter;
    if (d > 0) {
      Rat frac(t, d);
      frac.canonicalize();
      if (frac < quarter) inc = frac;
    }
    state.add_beta(chi, w, inc);
  }

  for (Vertex u : merge_sorted(ev.hat_u, ev.bad_set)) {
    if (u == v || !x.contains(u)) continue;
    if (state.over_threshold(u)) {
      x.erase(u);
      ev.deleted.push_back(u);
    }
  }

  x.erase(v);
  state.push_body(chi, v);
  state.count_deletions(1 + ev.deleted.size());
  return ev;
}

PeelOutcome run_peeling(const TripleColoring& h, int t,
                        const PeelOptions& opt) {
  require(t >= 2, "t must be at least 2");
  Vertex n = h.vertex_count();
  require(std::size_t(t) + std::size_t(t) * (t - 1) / 2 <= n,
          "hedgehog cannot fit: t + t(t-1)/2 exceeds n");

  const int mmax = m_max_for(t);
  PeelState state(n, t);
  StageScanner scan(h, mmax, opt.threads);

  PeelOutcome out;
  out.trace.t = t;
  out.trace.n = n;
  out.trace.coloring = h.descriptor();
  out.trace.seed = h.seed();

  const std::size_t prefetch_window = std::size_t(128) * std::max(1, opt.threads);

  for (int m = 2 * t; m <= mmax; ++m) {
    state.set_stage(m);
    const std::size_t need = std::size_t(10) * m;
    // The pool only shrinks and the requirement only grows, so a pool too
    // small for this stage is too small for every later one as well.
    if (state.live().size() < need + 1) break;
    bool peeled = true;
    while (peeled) {
      peeled = false;
      if (state.live().size() < need + 1) break;
      for (Vertex v : state.live()) {
        if (opt.threads > 1 && !scan.scanned(v)) {
          // Walk ahead and Phase-A a window concurrently.
          std::vector<Vertex> ahead;
          for (Vertex u = v; u < n && ahead.size() < prefetch_window; ++u)
            if (state.live().contains(u) && !scan.scanned(u)) ahead.push_back(u);
          scan.ensure_batch(ahead);
        }
        std::optional<std::vector<Vertex>> hat;
        Color chi = Color::Blue;
        for (Color c : {Color::Blue, Color::Red}) {
          hat = scan.collect(v, c, m, state.live(), need);
          if (hat) { chi = c; break; }
        }
        if (!hat) continue;
        out.trace.events.push_back(
            peel_step(h, state, v, chi, m, &*hat));
        peeled = true;
        if (int(state.body(chi).size()) == t) {
          out.kind = PeelOutcome::Kind::Finished;
          out.chi = chi;
          out.body = state.body(chi);
          out.total_deleted = state.total_deleted();
          return out;
        }
        break;  // restart the scan from the lowest id
      }
    }
  }

  out.kind = PeelOutcome::Kind::Stuck;
  out.residual = state.live().to_vector();
  out.total_deleted = state.total_deleted();
  return out;
}

PairClass classify_pairs(const TripleColoring& h, const PeelOutcome& outcome) {
  if (outcome.kind != PeelOutcome::Kind::Finished)
    throw std::invalid_argument("classify_pairs needs a finished outcome");
  const Color chi = outcome.chi;
  const std::vector<Vertex>& body = outcome.body;

  std::unordered_map<Vertex, const PeelEvent*> ev_of;
  for (const PeelEvent& ev : outcome.trace.events)
    if (ev.chi == chi) ev_of[ev.v] = &ev;

  PairClass pc;
  pc.bad_degree_sum = Rat(0);
  for (std::size_t i = 0; i < body.size(); ++i) {
    auto it = ev_of.find(body[i]);
    if (it == ev_of.end())
      throw std::invalid_argument("trace is missing a body vertex's event");
    const std::vector<Vertex>& b = it->second->bad_set;
    for (std::size_t j = i + 1; j < body.size(); ++j) {
      VertexPair p = make_pair_sorted(body[i], body[j]);
      if (std::binary_search(b.begin(), b.end(), body[j])) {
        pc.bad.push_back(p);
        int d = h.pair_degree(body[i], body[j], chi);
        if (d == 0) {
          pc.sum_below_quarter = false;  // 1/d unbounded; cannot happen per lemma
        } else {
          Rat r(1, d);
          r.canonicalize();
          pc.bad_degree_sum += r;
        }
      } else {
        pc.good.push_back(p);
      }
    }
  }
  static const Rat quarter(1, 4);
  if (!(pc.bad_degree_sum < quarter)) pc.sum_below_quarter = false;
  return pc;
}

AuditReport audit_trace(const TripleColoring& h, int t,
                        const PeelTrace& trace) {
  AuditReport rep;
  const Vertex n = h.vertex_count();
  if (trace.n != n)
    throw std::invalid_argument("trace/coloring vertex count mismatch");
  if (!trace.coloring.empty() && trace.coloring != h.descriptor())
    throw std::invalid_argument("trace/coloring descriptor mismatch");
  if (trace.t != t) throw std::invalid_argument("trace t mismatch");
  require(t >= 2, "t must be at least 2");

  const int mmax = m_max_for(t);
  const double beta_bound = 20.0 * t * std::log(double(t));
  const double deletion_bound = 200.0 * t * t * std::log(double(t));
  static const Rat quarter(1, 4);

  PeelState state(n, t);
  VertexSet everyone(n, true);
  Rat alpha_total[2] = {Rat(0), Rat(0)};

  auto viol = [&](std::size_t idx, const std::string& s) {
    rep.violations.push_back("event " + std::to_string(idx) + ": " + s);
  };

  // Stage-end U-set bound (alg-1): every surviving v, every stage m' that
  // has fully ended with the current pool, both colors: |U| < 10 m'.
  auto checkpoint = [&](int m_hi) {
    ++rep.checkpoints;
    const VertexSet& x = state.live();
    std::vector<Vertex> sample;
    if (x.size() <= 300) {
      sample = x.to_vector();
    } else {
      std::size_t stride = x.size() / 64;
      std::size_t i = 0;
      for (Vertex v : x)
        if (i++ % stride == 0) sample.push_back(v);
    }
    for (Vertex v : sample) {
      CumulativeCounts cc = u_counts_cumulative(h, v, x, m_hi);
      for (int mm = 2 * t; mm <= m_hi; ++mm) {
        if (cc.red[mm] >= std::size_t(10) * mm)
          rep.violations.push_back(
              "stage " + std::to_string(mm) + ": |U^b(" + std::to_string(v) +
              ")| = " + std::to_string(cc.red[mm]) + " >= 10m after stage end");
        if (cc.blue[mm] >= std::size_t(10) * mm)
          rep.violations.push_back(
              "stage " + std::to_string(mm) + ": |U^r(" + std::to_string(v) +
              ")| = " + std::to_string(cc.blue[mm]) + " >= 10m after stage end");
      }
    }
  };

  int cur_m = 2 * t;
  for (std::size_t idx = 0; idx < trace.events.size(); ++idx) {
    const PeelEvent& ev = trace.events[idx];
    ++rep.events_checked;

    if (ev.m < cur_m) viol(idx, "stage parameter decreased");
    if (ev.m < 2 * t || ev.m > mmax) viol(idx, "stage parameter out of range");
    if (ev.m > cur_m) {
      checkpoint(std::min(ev.m - 1, mmax));
      cur_m = ev.m;
    }

    const VertexSet& x = state.live();
    if (!x.contains(ev.v)) viol(idx, "peeled vertex was not live");

    const std::size_t need = std::size_t(10) * ev.m;
    if (ev.hat_u.size() != need)
      viol(idx, "hat_U size " + std::to_string(ev.hat_u.size()) +
                    " differs from 10m");
    const Color opp = flip(ev.chi);
    bool hat_sorted = true;
    std::size_t hat_detail = 0;
    for (std::size_t i = 0; i < ev.hat_u.size(); ++i) {
      Vertex u = ev.hat_u[i];
      if (i > 0 && ev.hat_u[i - 1] >= u) hat_sorted = false;
      if (u >= n || u == ev.v || !x.contains(u)) {
        if (hat_detail++ < 3) viol(idx, "hat_U member not live/valid");
        continue;
      }
      if (!h.degree_at_most(u, ev.v, opp, ev.m) && hat_detail++ < 3)
        viol(idx, "hat_U member " + std::to_string(u) +
                      " fails the U-set degree bound");
    }
    if (!hat_sorted) viol(idx, "hat_U not strictly ascending");

    // alg-7: alpha mass of this event is exactly 10t.
    Rat alpha_inc(t, ev.m);
    alpha_inc.canonicalize();
    Rat mass = alpha_inc * int(ev.hat_u.size());
    if (mass != Rat(10 * t))
      viol(idx, "alpha mass " + rat_str(mass) + " != 10t exactly");

    // Bad set recomputation, both range readings.
    std::vector<Vertex> b_live = bad_set(h, ev.v, ev.chi, ev.hat_u, ev.m, x);
    if (b_live != ev.bad_set) viol(idx, "bad set differs from recomputation");
    if (ev.bad_set.size() > std::size_t(2) * ev.m)
      viol(idx, "|B| = " + std::to_string(ev.bad_set.size()) + " > 2m");
    std::vector<Vertex> b_all =
        bad_set(h, ev.v, ev.chi, ev.hat_u, ev.m, everyone);
    if (b_all.size() > std::size_t(2) * ev.m)
      rep.notes.push_back(
          "event " + std::to_string(idx) +
          ": bad set under the all-vertices reading has size " +
          std::to_string(b_all.size()) + " > 2m (chosen reading still holds)");

    // alg-4: same-color pairs with already-peeled body vertices.
    for (Vertex w : state.body(ev.chi)) {
      int d = h.pair_degree(ev.v, w, ev.chi);
      if (d < 4 * t)
        viol(idx, "peeled pair (" + std::to_string(ev.v) + "," +
                      std::to_string(w) + ") has d^chi = " + std::to_string(d) +
                      " < 4t");
    }

    // Apply penalties from the event's own sets (recomputation mismatches
    // are already flagged; replay stays faithful to the trace's claims).
    for (Vertex u : ev.hat_u)
      if (u < n && u != ev.v) {
        state.add_alpha(ev.chi, u, alpha_inc);
        alpha_total[int(ev.chi)] += alpha_inc;
      }
    Rat beta_mass(0);
    for (Vertex w : ev.bad_set) {
      if (w >= n || w == ev.v) continue;
      int d = h.pair_degree(ev.v, w, ev.chi);
      Rat inc = quarter;
      if (d > 0) {
        Rat frac(t, d);
        frac.canonicalize();
        if (frac < quarter) inc = frac;
      }
      state.add_beta(ev.chi, w, inc);
      beta_mass += inc;
    }
    // alg-3 (the true bound has enormous slack; compare in doubles).
    if (rat_double(beta_mass) >= beta_bound - 1e-9)
      viol(idx, "beta mass " + rat_str(beta_mass) + " reaches 20 t ln t");

    // Threshold deletions must equal the replayed ledgers' verdict.
    std::vector<Vertex> expect;
    for (Vertex u : merge_sorted(ev.hat_u, ev.bad_set)) {
      if (u >= n || u == ev.v || !x.contains(u)) continue;
      if (state.over_threshold(u)) expect.push_back(u);
    }
    if (expect != ev.deleted)
      viol(idx, "threshold deletions differ from replayed ledgers");
    for (Vertex u : ev.deleted)
      if (u < n) state.live().erase(u);
    if (x.contains(ev.v)) state.live().erase(ev.v);
    state.push_body(ev.chi, ev.v);
    state.count_deletions(1 + ev.deleted.size());

    // Ledger conservation: total alpha mass tracks 10t per peel of its color.
    Rat want = Rat(10 * t) * int(state.body(ev.chi).size());
    if (alpha_total[int(ev.chi)] != want)
      viol(idx, "cumulative alpha mass " + rat_str(alpha_total[int(ev.chi)]) +
                    " != 10t * |S|");
  }

  // The stage-end sweep only constrains a run that exhausted its stages; a
  // run that stopped on a full body leaves the survivors' U-sets large.
  bool finished = int(state.body(Color::Blue).size()) >= t ||
                  int(state.body(Color::Red).size()) >= t;
  if (!finished) checkpoint(mmax);

  // alg-8: total deletions (peeled vertices included).
  if (double(state.total_deleted()) > deletion_bound + 1e-6)
    rep.violations.push_back(
        "total deletions " + std::to_string(state.total_deleted()) +
        " exceed 200 t^2 ln t = " + std::to_string(deletion_bound));

  return rep;
}

}  // namespace hh
