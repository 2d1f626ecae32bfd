#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hh/balanced.hpp"
#include "hh/coloring.hpp"
#include "hh/hedgehog.hpp"
#include "hh/peel.hpp"

namespace hh {

// The guarantee clause of the main theorem: any 2-coloring on
// n >= 200 t^2 ln t + 400 t^2 vertices (t >= 10) has a monochromatic H_t.
double theorem_threshold(int t);
Vertex theorem_n(int t);  // smallest n meeting the threshold

struct SolveOptions {
  std::string mode = "auto";  // auto | peel | balanced | simple | oracle
  int max_retries = 10;
  std::uint64_t seed = 0;  // drives the balanced sampler
  int threads = 1;
};

struct SolveReport {
  enum class Status { Found, NotFound, Critical };
  Status status = Status::NotFound;
  std::optional<HedgehogEmbedding> embedding;
  std::string path;  // finished-blue | finished-red | stuck-balanced |
                     // simple | balanced | oracle | stuck
  std::size_t peels = 0;
  std::size_t deleted = 0;
  int retries = 0;
  bool guaranteed = false;  // theorem hypotheses held for this instance
  std::vector<std::string> diagnostics;
  std::optional<PeelTrace> trace;
  std::optional<BalancedRunStats> balanced_stats;
  std::optional<DeficiencyWitness> witness;

  bool found() const { return status == Status::Found; }
};

/**
 * End-to-end driver.  auto: run the staged peeling; a finished body goes to
 * the matcher (a deficiency witness there is an invariant violation —
 * Critical when the guarantee clause applies); a stuck residual goes to the
 * balanced sampler on the induced sub-coloring (hypothesis constant c = 10)
 * with ids mapped back.  The named modes run their branch alone.
 */
SolveReport solve(ColoringPtr h, int t, const SolveOptions& opt = {});

}  // namespace hh
