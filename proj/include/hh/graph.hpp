#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hh/common.hpp"
#include "hh/rng.hpp"

namespace hh {

/**
 * Simple undirected graph on {0..n-1}.  Backs the graph-induced colorings:
 * a triple is blue iff it contains at least one edge of G.
 */
class Graph {
 public:
  explicit Graph(Vertex n) : n_(n) {}
  virtual ~Graph() = default;

  Vertex vertex_count() const { return n_; }

  bool has_edge(Vertex a, Vertex b) const {
    require(a < n_ && b < n_, "graph vertex out of range");
    if (a == b) return false;
    return a < b ? edge_impl(a, b) : edge_impl(b, a);
  }

  // Canonical descriptor recorded in certificates ("simple:<path>" strips to
  // the gnp/file string it was built from).
  virtual std::string descriptor() const = 0;

  // Generator seed when the graph was hashed into existence.
  virtual std::optional<std::uint64_t> seed() const { return std::nullopt; }

 protected:
  virtual bool edge_impl(Vertex a, Vertex b) const = 0;  // a < b

  Vertex n_;
};

/** Adjacency-bitmap graph; the workhorse for explicit inputs. */
class BitGraph : public Graph {
 public:
  explicit BitGraph(Vertex n, std::string source = "");

  void add_edge(Vertex a, Vertex b);
  Vertex degree(Vertex v) const { return deg_[v]; }
  std::size_t edge_count() const { return edges_; }
  std::span<const std::uint64_t> row(Vertex v) const;

  // Plain-text format: first line "n", then one "u v" edge per line.
  static BitGraph load(const std::string& path);
  void save(const std::string& path) const;

  // Materialized G(n, p) with hashed edge indicators; descriptor keeps the
  // gnp string so certificates stay reconstructible without a file.
  static BitGraph gnp(Vertex n, double p, std::uint64_t seed);

  std::string descriptor() const override { return source_; }
  void set_descriptor(std::string s) { source_ = std::move(s); }
  std::optional<std::uint64_t> seed() const override { return seed_; }

 protected:
  bool edge_impl(Vertex a, Vertex b) const override {
    return (rows_[std::size_t(a) * words_ + (b >> 6)] >> (b & 63)) & 1;
  }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
  std::vector<Vertex> deg_;
  std::size_t edges_ = 0;
  std::string source_;
  std::optional<std::uint64_t> seed_;
};

/**
 * Implicit G(n, p): edge indicators hashed from (seed, pair key).  Used when
 * n is too large to materialize the bitmap.
 */
class GnpGraph : public Graph {
 public:
  GnpGraph(Vertex n, double p, std::uint64_t seed);

  std::string descriptor() const override;
  double edge_probability() const { return p_; }
  std::optional<std::uint64_t> seed() const override { return seed_; }

  bool edge_hash(Vertex a, Vertex b) const {  // a < b, unchecked
    return hash_pair(seed_, (std::uint64_t(a) << 21) | b) < threshold_;
  }

 protected:
  bool edge_impl(Vertex a, Vertex b) const override { return edge_hash(a, b); }

 private:
  double p_;
  std::uint64_t seed_;
  std::uint64_t threshold_;
};

// Chooses BitGraph below this many vertices, GnpGraph above.
std::shared_ptr<const Graph> make_gnp_graph(Vertex n, double p, std::uint64_t seed);

}  // namespace hh
