#include "hh/graph.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace hh {

namespace {

std::string format_gnp(double p, std::uint64_t seed) {
  return "gnp:p=" + format_double(p) + ":seed=" + std::to_string(seed);
}

}  // namespace

BitGraph::BitGraph(Vertex n, std::string source)
    : Graph(n),
      words_((std::size_t(n) + 63) / 64),
      rows_(std::size_t(n) * words_, 0),
      deg_(n, 0),
      source_(std::move(source)) {}

void BitGraph::add_edge(Vertex a, Vertex b) {
  require(a < n_ && b < n_, "edge endpoint out of range");
  require(a != b, "self-loops not allowed");
  if (has_edge(a, b)) return;
  rows_[std::size_t(a) * words_ + (b >> 6)] |= 1ULL << (b & 63);
  rows_[std::size_t(b) * words_ + (a >> 6)] |= 1ULL << (a & 63);
  ++deg_[a];
  ++deg_[b];
  ++edges_;
}

std::span<const std::uint64_t> BitGraph::row(Vertex v) const {
  return {rows_.data() + std::size_t(v) * words_, words_};
}

BitGraph BitGraph::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  Vertex n = 0;
  if (!(in >> n)) throw std::runtime_error("graph file missing vertex count: " + path);
  BitGraph g(n, path);
  Vertex a, b;
  while (in >> a >> b) g.add_edge(a, b);
  return g;
}

void BitGraph::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file: " + path);
  out << n_ << "\n";
  for (Vertex a = 0; a < n_; ++a)
    for (Vertex b = a + 1; b < n_; ++b)
      if (edge_impl(a, b)) out << a << " " << b << "\n";
}

BitGraph BitGraph::gnp(Vertex n, double p, std::uint64_t seed) {
  BitGraph g(n, format_gnp(p, seed));
  g.seed_ = seed;
  GnpGraph ref(n, p, seed);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (ref.edge_hash(a, b)) g.add_edge(a, b);
  return g;
}

GnpGraph::GnpGraph(Vertex n, double p, std::uint64_t seed)
    : Graph(n), p_(p), seed_(seed), threshold_(prob_threshold(p)) {
  require(p >= 0.0 && p <= 1.0, "edge probability out of [0,1]");
}

std::string GnpGraph::descriptor() const { return format_gnp(p_, seed_); }

std::shared_ptr<const Graph> make_gnp_graph(Vertex n, double p,
                                            std::uint64_t seed) {
  // Bitmap rows cost n^2/8 bytes; cap materialization at ~128 MB.
  constexpr Vertex kMaterializeLimit = 32000;
  if (n <= kMaterializeLimit)
    return std::make_shared<BitGraph>(BitGraph::gnp(n, p, seed));
  return std::make_shared<GnpGraph>(n, p, seed);
}

}  // namespace hh
