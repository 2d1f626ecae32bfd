#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hh/color.hpp"
#include "hh/common.hpp"
#include "hh/graph.hpp"
#include "hh/vertex_set.hpp"

namespace hh {

// Pair degree counts truncated at cap: each component is min(d, cap + 1),
// so a value of cap + 1 means "more than cap" and nothing else.
struct CappedDegrees {
  int red = 0;
  int blue = 0;

  int get(Color c) const { return c == Color::Red ? red : blue; }
};

/**
 * Two-coloring of the complete 3-uniform hypergraph on {0..n-1}.
 *
 * Implementations are immutable after construction and safe for concurrent
 * readers.  Degree queries have generic triple-scan implementations here;
 * subclasses override them when a closed form or a tighter loop exists,
 * which is what makes n ~ 86,000 runs feasible (a full pair-degree table
 * would need ~10^10 counters).
 */
class TripleColoring {
 public:
  explicit TripleColoring(Vertex n) : n_(n) {
    require(n <= kMaxVertices, "vertex count exceeds 2^21 - 1");
  }
  virtual ~TripleColoring() = default;

  Vertex vertex_count() const { return n_; }

  // Color of an unordered triple of distinct vertices.
  Color color(Vertex a, Vertex b, Vertex c) const;

  // Descriptor string; parseable back via make_coloring except for internal
  // wrappers (restrictions), which never reach certificates.  make_coloring
  // stores the user's text verbatim so certificates echo it byte-for-byte.
  std::string descriptor() const {
    return descriptor_override_.empty() ? default_descriptor()
                                        : descriptor_override_;
  }
  void set_descriptor(std::string s) { descriptor_override_ = std::move(s); }

  virtual std::optional<std::uint64_t> seed() const { return std::nullopt; }

  // d^red, d^blue of the pair uv, each truncated at cap + 1.  cap >= n - 2
  // gives exact degrees.  Generic version scans w and stops as soon as both
  // counts pass cap.
  virtual CappedDegrees degrees_capped(Vertex u, Vertex v, int cap) const;

  // Decides d^c_uv <= m without always scanning everything: false as soon as
  // the c-count passes m, true as soon as the opposite count reaches
  // n - 2 - m.
  virtual bool degree_at_most(Vertex u, Vertex v, Color c, int m) const;

  int pair_degree(Vertex u, Vertex v, Color c) const {
    int cap = n_ >= 2 ? int(n_) - 2 : 0;
    return degrees_capped(u, v, cap).get(c);
  }

 protected:
  // a < b < c guaranteed by callers.
  virtual Color color_impl(Vertex a, Vertex b, Vertex c) const = 0;
  virtual std::string default_descriptor() const = 0;

  Vertex n_;

 private:
  std::string descriptor_override_;
};

using ColoringPtr = std::shared_ptr<const TripleColoring>;

/** allred / allblue. */
class ConstantColoring : public TripleColoring {
 public:
  ConstantColoring(Vertex n, Color c) : TripleColoring(n), c_(c) {}

  CappedDegrees degrees_capped(Vertex u, Vertex v, int cap) const override;
  bool degree_at_most(Vertex u, Vertex v, Color c, int m) const override;

 protected:
  Color color_impl(Vertex, Vertex, Vertex) const override { return c_; }
  std::string default_descriptor() const override {
    return c_ == Color::Red ? "allred" : "allblue";
  }

 private:
  Color c_;
};

/**
 * Seeded implicit coloring: triple red iff the mixed hash of (seed, canonical
 * key) lands below the p_red threshold.  O(1) per query, no storage, and the
 * degree scans below are the hot loop of theorem-scale stage scans.
 */
class RandomColoring : public TripleColoring {
 public:
  RandomColoring(Vertex n, double p_red, std::uint64_t seed);

  std::optional<std::uint64_t> seed() const override { return user_seed_; }
  double p_red() const { return p_; }

  CappedDegrees degrees_capped(Vertex u, Vertex v, int cap) const override;
  bool degree_at_most(Vertex u, Vertex v, Color c, int m) const override;

 protected:
  Color color_impl(Vertex a, Vertex b, Vertex c) const override;
  std::string default_descriptor() const override;

 private:
  double p_;
  std::uint64_t user_seed_;
  std::uint64_t mixed_seed_;
  std::uint64_t threshold_;
};

/**
 * Graph-induced coloring: a triple is blue iff it contains at least one edge
 * of G, red otherwise.  Degree queries use closed forms: d^b_uv = n - 2 when
 * uv is an edge, else |N(u) ∪ N(v)| (popcount of the row OR; no endpoint
 * correction needed since u,v are then not adjacent to each other and never
 * to themselves).
 */
class SimpleColoring : public TripleColoring {
 public:
  explicit SimpleColoring(std::shared_ptr<const Graph> g);

  const Graph& graph() const { return *g_; }
  std::shared_ptr<const Graph> graph_ptr() const { return g_; }

  std::optional<std::uint64_t> seed() const override { return g_->seed(); }

  CappedDegrees degrees_capped(Vertex u, Vertex v, int cap) const override;
  bool degree_at_most(Vertex u, Vertex v, Color c, int m) const override;

 protected:
  Color color_impl(Vertex a, Vertex b, Vertex c) const override;
  std::string default_descriptor() const override;

 private:
  CappedDegrees degrees_exact_bit(Vertex u, Vertex v) const;

  std::shared_ptr<const Graph> g_;
  const BitGraph* bit_ = nullptr;  // set when g_ is bitmap-backed
  const GnpGraph* gnp_ = nullptr;  // set when g_ is implicit G(n,p)
};

/**
 * Stored coloring, one bit per triple in colex order.  Practical only for
 * small n; the guard keeps memory honest.
 */
class ExplicitColoring : public TripleColoring {
 public:
  static constexpr Vertex kMaxN = 300;

  // All-default coloring; triples are painted afterwards (before first use).
  ExplicitColoring(Vertex n, Color default_color = Color::Blue);

  void paint(Vertex a, Vertex b, Vertex c, Color col);

  // File format: header "n" or "n default=r", then "u v w c" lines.
  static ExplicitColoring load(const std::string& path);
  void save(const std::string& path) const;

  Color default_color() const { return default_; }

  static std::size_t colex_rank(Vertex a, Vertex b, Vertex c);  // a < b < c

 protected:
  Color color_impl(Vertex a, Vertex b, Vertex c) const override;
  std::string default_descriptor() const override { return "explicit"; }

 private:
  Color default_ = Color::Blue;
  std::vector<std::uint64_t> red_bits_;
};

/** Every triple's color flipped; used for duality tests and red-leaning families. */
class FlippedColoring : public TripleColoring {
 public:
  explicit FlippedColoring(ColoringPtr inner)
      : TripleColoring(inner->vertex_count()), inner_(std::move(inner)) {}

  std::optional<std::uint64_t> seed() const override { return inner_->seed(); }

  CappedDegrees degrees_capped(Vertex u, Vertex v, int cap) const override {
    CappedDegrees d = inner_->degrees_capped(u, v, cap);
    return {d.blue, d.red};
  }
  bool degree_at_most(Vertex u, Vertex v, Color c, int m) const override {
    return inner_->degree_at_most(u, v, flip(c), m);
  }

 protected:
  Color color_impl(Vertex a, Vertex b, Vertex c) const override {
    return flip(inner_->color(a, b, c));
  }
  std::string default_descriptor() const override {
    return "flip:" + inner_->descriptor();
  }

 private:
  ColoringPtr inner_;
};

/**
 * Induced sub-coloring on a kept vertex set, relabeled to {0..k-1} in
 * ascending order of the original ids.  Degrees are over the restricted
 * universe (it *is* the universe of this coloring).
 */
class RestrictedColoring : public TripleColoring {
 public:
  RestrictedColoring(ColoringPtr parent, std::vector<Vertex> keep);

  std::optional<std::uint64_t> seed() const override { return parent_->seed(); }

  Vertex to_parent(Vertex v) const { return keep_[v]; }
  const std::vector<Vertex>& kept() const { return keep_; }

 protected:
  Color color_impl(Vertex a, Vertex b, Vertex c) const override {
    return parent_->color(keep_[a], keep_[b], keep_[c]);
  }
  std::string default_descriptor() const override;

 private:
  ColoringPtr parent_;
  std::vector<Vertex> keep_;
};

ColoringPtr restrict_coloring(ColoringPtr h, const VertexSet& keep);

// Parses a CLI descriptor: allred | allblue | random:p=<float>:seed=<u64> |
// simple:<path> | gnp:p=<float>:seed=<u64> | file:<path> | flip:<descriptor>.
// Generative families need n; file-backed ones read n from the file (and n,
// when also given, must agree).
ColoringPtr make_coloring(const std::string& descriptor,
                          std::optional<Vertex> n = std::nullopt);

ColoringPtr make_simple_coloring(std::shared_ptr<const Graph> g);
ColoringPtr make_random_coloring(Vertex n, double p_red, std::uint64_t seed);

}  // namespace hh
