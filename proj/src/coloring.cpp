#include "hh/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hh/rng.hpp"

namespace hh {

namespace {

// Distinct hash streams so triples, gnp edges, and samplers never share
// inputs even under equal user seeds.
constexpr std::uint64_t kTripleStream = 0x5452495045ULL;

}  // namespace

Color TripleColoring::color(Vertex a, Vertex b, Vertex c) const {
  require(a < n_ && b < n_ && c < n_, "triple vertex out of range");
  require(a != b && a != c && b != c, "triple vertices must be distinct");
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return color_impl(a, b, c);
}

CappedDegrees TripleColoring::degrees_capped(Vertex u, Vertex v, int cap) const {
  require(u < n_ && v < n_ && u != v, "pair out of range");
  require(cap >= 0, "cap must be nonnegative");
  if (u > v) std::swap(u, v);
  long red = 0, seen = 0;
  auto done = [&] { return red > cap && seen - red > cap; };
  for (Vertex w = 0; w < u && !done(); ++w, ++seen)
    red += color_impl(w, u, v) == Color::Red;
  for (Vertex w = u + 1; w < v && !done(); ++w, ++seen)
    red += color_impl(u, w, v) == Color::Red;
  for (Vertex w = v + 1; w < n_ && !done(); ++w, ++seen)
    red += color_impl(u, v, w) == Color::Red;
  long lim = cap + 1;
  return {int(std::min(red, lim)), int(std::min(seen - red, lim))};
}

bool TripleColoring::degree_at_most(Vertex u, Vertex v, Color c, int m) const {
  require(u < n_ && v < n_ && u != v, "pair out of range");
  if (m < 0) return false;
  if (m >= int(n_) - 2) return true;
  if (u > v) std::swap(u, v);
  long cnt = 0, other = 0;
  const long need_other = long(n_) - 2 - m;  // opposite count certifying "yes"
  auto step = [&](Color got) {
    if (got == c) ++cnt; else ++other;
    return cnt > m ? 1 : (other >= need_other ? 2 : 0);
  };
  for (Vertex w = 0; w < u; ++w)
    if (int r = step(color_impl(w, u, v))) return r == 2;
  for (Vertex w = u + 1; w < v; ++w)
    if (int r = step(color_impl(u, w, v))) return r == 2;
  for (Vertex w = v + 1; w < n_; ++w)
    if (int r = step(color_impl(u, v, w))) return r == 2;
  return true;  // full scan and cnt never passed m
}

// ---------------------------------------------------------------- constant

CappedDegrees ConstantColoring::degrees_capped(Vertex u, Vertex v, int cap) const {
  require(u < n_ && v < n_ && u != v, "pair out of range");
  int full = std::min(int(n_) - 2, cap + 1);
  return c_ == Color::Red ? CappedDegrees{full, 0} : CappedDegrees{0, full};
}

bool ConstantColoring::degree_at_most(Vertex u, Vertex v, Color c, int m) const {
  require(u < n_ && v < n_ && u != v, "pair out of range");
  int d = c == c_ ? int(n_) - 2 : 0;
  return d <= m;
}

// ------------------------------------------------------------------ random

RandomColoring::RandomColoring(Vertex n, double p_red, std::uint64_t seed)
    : TripleColoring(n),
      p_(p_red),
      user_seed_(seed),
      mixed_seed_(mix64(seed ^ kTripleStream)),
      threshold_(prob_threshold(p_red)) {
  require(p_red >= 0.0 && p_red <= 1.0, "p_red out of [0,1]");
}

std::string RandomColoring::default_descriptor() const {
  return "random:p=" + format_double(p_) + ":seed=" + std::to_string(user_seed_);
}

Color RandomColoring::color_impl(Vertex a, Vertex b, Vertex c) const {
  std::uint64_t key =
      (std::uint64_t(a) << 42) | (std::uint64_t(b) << 21) | std::uint64_t(c);
  return mix64(mixed_seed_ ^ key) < threshold_ ? Color::Red : Color::Blue;
}

// The stage scans at n ~ 86,000 funnel ~10^11 triple evaluations through
// these two loops, so the w-scan is split into three add-strided key
// segments with no per-iteration branching beyond the exit tests.
CappedDegrees RandomColoring::degrees_capped(Vertex u, Vertex v, int cap) const {
  require(u < n_ && v < n_ && u != v, "pair out of range");
  require(cap >= 0, "cap must be nonnegative");
  if (u > v) std::swap(u, v);
  const std::uint64_t sx = mixed_seed_, thr = threshold_;
  long red = 0, seen = 0;
  struct Seg { std::uint64_t base, stride; Vertex count; };
  const Seg segs[3] = {
      {(std::uint64_t(u) << 21) | v, 1ULL << 42, u},
      {(std::uint64_t(u) << 42) | (std::uint64_t(u + 1) << 21) | v, 1ULL << 21,
       v - u - 1},
      {(std::uint64_t(u) << 42) | (std::uint64_t(v) << 21) | (v + 1), 1, n_ - v - 1},
  };
  for (const Seg& s : segs) {
    std::uint64_t k = s.base;
    for (Vertex i = 0; i < s.count; ++i, k += s.stride) {
      red += mix64(sx ^ k) < thr;
      ++seen;
      if (red > cap && seen - red > cap) goto out;
    }
  }
out:
  long lim = cap + 1;
  return {int(std::min(red, lim)), int(std::min(seen - red, lim))};
}

bool RandomColoring::degree_at_most(Vertex u, Vertex v, Color c, int m) const {
  require(u < n_ && v < n_ && u != v, "pair out of range");
  if (m < 0) return false;
  if (m >= int(n_) - 2) return true;
  if (u > v) std::swap(u, v);
  const std::uint64_t sx = mixed_seed_, thr = threshold_;
  const bool want_red = c == Color::Red;
  long cnt = 0, seen = 0;
  const long need_other = long(n_) - 2 - m;
  struct Seg { std::uint64_t base, stride; Vertex count; };
  const Seg segs[3] = {
      {(std::uint64_t(u) << 21) | v, 1ULL << 42, u},
      {(std::uint64_t(u) << 42) | (std::uint64_t(u + 1) << 21) | v, 1ULL << 21,
       v - u - 1},
      {(std::uint64_t(u) << 42) | (std::uint64_t(v) << 21) | (v + 1), 1, n_ - v - 1},
  };
  for (const Seg& s : segs) {
    std::uint64_t k = s.base;
    for (Vertex i = 0; i < s.count; ++i, k += s.stride) {
      bool red = mix64(sx ^ k) < thr;
      cnt += red == want_red;
      ++seen;
      if (cnt > m) return false;
      if (seen - cnt >= need_other) return true;
    }
  }
  return true;
}

// ------------------------------------------------------------------ simple

SimpleColoring::SimpleColoring(std::shared_ptr<const Graph> g)
    : TripleColoring(g->vertex_count()), g_(std::move(g)) {
  bit_ = dynamic_cast<const BitGraph*>(g_.get());
  gnp_ = dynamic_cast<const GnpGraph*>(g_.get());
}

std::string SimpleColoring::default_descriptor() const {
  std::string d = g_->descriptor();
  if (d.rfind("gnp:", 0) == 0) return d;
  return "simple:" + d;
}

Color SimpleColoring::color_impl(Vertex a, Vertex b, Vertex c) const {
  bool blue;
  if (bit_) {
    auto r = [&](Vertex x, Vertex y) {
      return (bit_->row(x)[y >> 6] >> (y & 63)) & 1;
    };
    blue = r(a, b) | r(a, c) | r(b, c);
  } else if (gnp_) {
    blue = gnp_->edge_hash(a, b) || gnp_->edge_hash(a, c) || gnp_->edge_hash(b, c);
  } else {
    blue = g_->has_edge(a, b) || g_->has_edge(a, c) || g_->has_edge(b, c);
  }
  return blue ? Color::Blue : Color::Red;
}

CappedDegrees SimpleColoring::degrees_exact_bit(Vertex u, Vertex v) const {
  // uv not an edge here: d^b = |N(u) ∪ N(v)|; u,v can't appear in the union
  // (no loops, not adjacent to each other), so no endpoint correction.
  auto ru = bit_->row(u), rv = bit_->row(v);
  long db = 0;
  for (std::size_t i = 0; i < ru.size(); ++i)
    db += std::popcount(ru[i] | rv[i]);
  return {int(long(n_) - 2 - db), int(db)};
}

CappedDegrees SimpleColoring::degrees_capped(Vertex u, Vertex v, int cap) const {
  require(u < n_ && v < n_ && u != v, "pair out of range");
  require(cap >= 0, "cap must be nonnegative");
  if (u > v) std::swap(u, v);
  long lim = cap + 1;
  auto clamp = [&](CappedDegrees d) {
    return CappedDegrees{int(std::min(long(d.red), lim)),
                         int(std::min(long(d.blue), lim))};
  };
  if (bit_) {
    if (bit_->has_edge(u, v)) return clamp({0, int(n_) - 2});
    return clamp(degrees_exact_bit(u, v));
  }
  if (gnp_) {
    if (gnp_->edge_hash(u, v)) return clamp({0, int(n_) - 2});
    // uv not an edge, so the triple {u,v,w} is blue iff uw or vw is.
    long blue = 0, seen = 0;
    for (Vertex w = 0; w < n_; ++w) {
      if (w == u || w == v) continue;
      blue += gnp_->edge_hash(std::min(u, w), std::max(u, w)) ||
              gnp_->edge_hash(std::min(v, w), std::max(v, w));
      ++seen;
      if (blue > cap && seen - blue > cap) break;
    }
    return {int(std::min(seen - blue, lim)), int(std::min(blue, lim))};
  }
  return TripleColoring::degrees_capped(u, v, cap);
}

bool SimpleColoring::degree_at_most(Vertex u, Vertex v, Color c, int m) const {
  require(u < n_ && v < n_ && u != v, "pair out of range");
  if (m < 0) return false;
  if (m >= int(n_) - 2) return true;
  if (bit_) {
    if (u > v) std::swap(u, v);
    CappedDegrees d = bit_->has_edge(u, v) ? CappedDegrees{0, int(n_) - 2}
                                           : degrees_exact_bit(u, v);
    return d.get(c) <= m;
  }
  if (gnp_) {
    if (u > v) std::swap(u, v);
    if (gnp_->edge_hash(u, v))
      return (c == Color::Blue ? int(n_) - 2 : 0) <= m;
  }
  return TripleColoring::degree_at_most(u, v, c, m);
}

// ---------------------------------------------------------------- explicit

ExplicitColoring::ExplicitColoring(Vertex n, Color default_color)
    : TripleColoring(n), default_(default_color) {
  require(n <= kMaxN, "explicit colorings are guarded to n <= 300");
  std::size_t triples =
      n >= 3 ? std::size_t(n) * (n - 1) * (n - 2) / 6 : std::size_t(0);
  red_bits_.assign((triples + 63) / 64, default_ == Color::Red ? ~0ULL : 0ULL);
}

std::size_t ExplicitColoring::colex_rank(Vertex a, Vertex b, Vertex c) {
  // a < b < c; rank = C(c,3) + C(b,2) + C(a,1).
  return std::size_t(c) * (c - 1) * (c - 2) / 6 + std::size_t(b) * (b - 1) / 2 + a;
}

void ExplicitColoring::paint(Vertex a, Vertex b, Vertex c, Color col) {
  require(a < n_ && b < n_ && c < n_, "triple vertex out of range");
  require(a != b && a != c && b != c, "triple vertices must be distinct");
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  std::size_t r = colex_rank(a, b, c);
  if (col == Color::Red)
    red_bits_[r >> 6] |= 1ULL << (r & 63);
  else
    red_bits_[r >> 6] &= ~(1ULL << (r & 63));
}

Color ExplicitColoring::color_impl(Vertex a, Vertex b, Vertex c) const {
  std::size_t r = colex_rank(a, b, c);
  return (red_bits_[r >> 6] >> (r & 63)) & 1 ? Color::Red : Color::Blue;
}

ExplicitColoring ExplicitColoring::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open coloring file: " + path);
  std::string header;
  if (!std::getline(in, header))
    throw std::runtime_error("coloring file empty: " + path);
  std::istringstream hs(header);
  long n = -1;
  hs >> n;
  if (n < 0) throw std::runtime_error("coloring file missing vertex count: " + path);
  Color def = Color::Blue;
  std::string flag;
  while (hs >> flag) {
    if (flag == "default=r") def = Color::Red;
    else if (flag == "default=b") def = Color::Blue;
    else throw std::runtime_error("unknown coloring header flag: " + flag);
  }
  ExplicitColoring h(Vertex(n), def);
  Vertex a, b, c;
  std::string col;
  while (in >> a >> b >> c >> col) h.paint(a, b, c, parse_color(col));
  h.set_descriptor("file:" + path);
  return h;
}

void ExplicitColoring::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write coloring file: " + path);
  out << n_;
  if (default_ == Color::Red) out << " default=r";
  out << "\n";
  for (Vertex a = 0; a + 2 < n_; ++a)
    for (Vertex b = a + 1; b + 1 < n_; ++b)
      for (Vertex c = b + 1; c < n_; ++c)
        if (color_impl(a, b, c) != default_)
          out << a << " " << b << " " << c << " "
              << color_char(color_impl(a, b, c)) << "\n";
}

// -------------------------------------------------------------- restricted

RestrictedColoring::RestrictedColoring(ColoringPtr parent, std::vector<Vertex> keep)
    : TripleColoring(Vertex(keep.size())),
      parent_(std::move(parent)),
      keep_(std::move(keep)) {
  require(!keep_.empty(), "restriction must keep at least one vertex");
  Vertex prev = 0;
  for (std::size_t i = 0; i < keep_.size(); ++i) {
    require(keep_[i] < parent_->vertex_count(), "kept vertex out of range");
    require(i == 0 || keep_[i] > prev, "kept vertices must be ascending");
    prev = keep_[i];
  }
}

std::string RestrictedColoring::default_descriptor() const {
  return "restrict(" + parent_->descriptor() + ",k=" +
         std::to_string(keep_.size()) + ")";
}

ColoringPtr restrict_coloring(ColoringPtr h, const VertexSet& keep) {
  return std::make_shared<RestrictedColoring>(std::move(h), keep.to_vector());
}

// -------------------------------------------------------------- descriptors

namespace {

[[noreturn]] void bad_descriptor(const std::string& d, const std::string& why) {
  throw std::invalid_argument("bad coloring descriptor \"" + d + "\": " + why);
}

double parse_p_field(const std::string& d, const std::string& tok) {
  if (tok.rfind("p=", 0) != 0) bad_descriptor(d, "expected p=<float>");
  const char* s = tok.c_str() + 2;
  char* end = nullptr;
  double p = std::strtod(s, &end);
  if (end == s || *end != '\0') bad_descriptor(d, "unparseable p value");
  return p;
}

std::uint64_t parse_seed_field(const std::string& d, const std::string& tok) {
  if (tok.rfind("seed=", 0) != 0) bad_descriptor(d, "expected seed=<u64>");
  const char* s = tok.c_str() + 5;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (end == s || *end != '\0') bad_descriptor(d, "unparseable seed value");
  return v;
}

Vertex need_n(const std::string& d, std::optional<Vertex> n) {
  if (!n) bad_descriptor(d, "this family needs an explicit vertex count");
  return *n;
}

}  // namespace

ColoringPtr make_coloring(const std::string& d, std::optional<Vertex> n) {
  std::shared_ptr<TripleColoring> out;
  if (d == "allred" || d == "allblue") {
    out = std::make_shared<ConstantColoring>(
        need_n(d, n), d == "allred" ? Color::Red : Color::Blue);
  } else if (d.rfind("random:", 0) == 0 || d.rfind("gnp:", 0) == 0) {
    bool is_random = d[0] == 'r';
    std::string rest = d.substr(d.find(':') + 1);
    auto colon = rest.find(':');
    if (colon == std::string::npos) bad_descriptor(d, "missing seed field");
    double p = parse_p_field(d, rest.substr(0, colon));
    std::uint64_t seed = parse_seed_field(d, rest.substr(colon + 1));
    if (p < 0.0 || p > 1.0) bad_descriptor(d, "p out of [0,1]");
    Vertex nn = need_n(d, n);
    if (is_random)
      out = std::make_shared<RandomColoring>(nn, p, seed);
    else
      out = std::make_shared<SimpleColoring>(make_gnp_graph(nn, p, seed));
  } else if (d.rfind("simple:", 0) == 0) {
    std::string path = d.substr(7);
    if (path.empty()) bad_descriptor(d, "missing graph path");
    auto g = std::make_shared<BitGraph>(BitGraph::load(path));
    if (n && *n != g->vertex_count())
      bad_descriptor(d, "graph file vertex count disagrees with --n");
    out = std::make_shared<SimpleColoring>(std::move(g));
  } else if (d.rfind("file:", 0) == 0) {
    std::string path = d.substr(5);
    if (path.empty()) bad_descriptor(d, "missing coloring path");
    auto h = std::make_shared<ExplicitColoring>(ExplicitColoring::load(path));
    if (n && *n != h->vertex_count())
      bad_descriptor(d, "coloring file vertex count disagrees with --n");
    out = std::move(h);
  } else if (d.rfind("flip:", 0) == 0) {
    ColoringPtr inner = make_coloring(d.substr(5), n);
    out = std::make_shared<FlippedColoring>(std::move(inner));
  } else {
    bad_descriptor(d, "unknown family");
  }
  out->set_descriptor(d);
  return out;
}

ColoringPtr make_simple_coloring(std::shared_ptr<const Graph> g) {
  return std::make_shared<SimpleColoring>(std::move(g));
}

ColoringPtr make_random_coloring(Vertex n, double p_red, std::uint64_t seed) {
  return std::make_shared<RandomColoring>(n, p_red, seed);
}

}  // namespace hh
