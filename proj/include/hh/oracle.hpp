#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "hh/coloring.hpp"
#include "hh/hedgehog.hpp"

namespace hh {

/** Enumeration would outrun the configured budget; never a partial answer. */
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultBodyBudget = 20'000'000;
inline constexpr std::uint64_t kDefaultColoringBudget = 1ull << 22;

// Tries every t-subset as a body in lexicographic order; the first embedding
// wins and "nullopt" is exact (no c-hedgehog exists).  Throws BudgetError
// upfront when C(n, t) exceeds max_bodies.
std::optional<HedgehogEmbedding> exhaustive_find(
    const TripleColoring& h, int t, Color c,
    std::size_t max_bodies = kDefaultBodyBudget);

// Enumerates 2-colorings of the complete triple system on n vertices (modulo
// the global color flip) and returns the first with no monochromatic H_t, or
// nullopt when every coloring has one.  When the hedgehog cannot even fit
// (t + C(t,2) > n) the default coloring is returned as a vacuous witness.
std::optional<ExplicitColoring> min_coloring_search(
    Vertex n, int t, std::uint64_t max_colorings = kDefaultColoringBudget);

/** Agreement record between the full pipeline and the exhaustive searches. */
struct OracleComparison {
  bool feasible = false;  // t + C(t,2) <= n
  bool pipeline_found = false;
  bool pipeline_critical = false;
  std::optional<Color> pipeline_color;
  std::string pipeline_path;
  bool oracle_blue = false;
  bool oracle_red = false;
  bool sound = true;  // pipeline certificate implies oracle agreement
  std::string note;
};

OracleComparison pipeline_vs_oracle(ColoringPtr h, int t);

}  // namespace hh
