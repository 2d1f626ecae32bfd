#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hh/common.hpp"

namespace hh {

struct SweepRecord {
  std::string family;
  std::uint64_t seed = 0;
  int t = 0;
  Vertex n = 0;
  std::string path;
  std::string outcome;  // found | not-found | critical | error
  std::size_t peels = 0;
  std::size_t deleted = 0;
  int retries = 0;
  long long millis = 0;  // wall time; excluded from determinism
  std::string audit;     // pass | fail | "-" (not requested / no trace)
};

/**
 * Config (JSON): {"families": [{"name": str?, "coloring": template}, ...],
 * "t": [ints], "n": [ints], "seeds": [u64s], "mode": str?, "max_retries":
 * int?, "audit": bool?}.  Coloring templates may use {seed}, {t}, {n}.
 * Records enumerate family-major, then t, n, seed.  Malformed configs throw
 * with the offending field named.
 */
std::vector<SweepRecord> run_sweep(const std::string& config_json,
                                   int threads = 1);

// Exact column set, one line per record:
// family,seed,t,n,path,outcome,peels,deleted,retries,millis,audit
std::string sweep_csv(const std::vector<SweepRecord>& records);

}  // namespace hh
