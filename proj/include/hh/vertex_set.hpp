#pragma once

#include <cstdint>
#include <vector>

#include "hh/common.hpp"

namespace hh {

/**
 * Subset of {0, ..., n-1} with O(1) membership and ascending iteration.
 * Used for the live vertex set during peeling, sampled bodies, witness
 * sets, and restriction domains.
 */
class VertexSet {
 public:
  VertexSet() = default;

  // Full or empty ground set of size n.
  explicit VertexSet(Vertex n, bool full = false)
      : member_(n, full ? 1 : 0), count_(full ? n : 0) {}

  static VertexSet of(Vertex n, const std::vector<Vertex>& vs) {
    VertexSet s(n);
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  Vertex universe_size() const { return static_cast<Vertex>(member_.size()); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(Vertex v) const {
    return v < member_.size() && member_[v] != 0;
  }

  void insert(Vertex v) {
    require(v < member_.size(), "vertex out of range");
    if (!member_[v]) { member_[v] = 1; ++count_; }
  }

  void erase(Vertex v) {
    require(v < member_.size(), "vertex out of range");
    if (member_[v]) { member_[v] = 0; --count_; }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count_);
    for (Vertex v = 0; v < member_.size(); ++v)
      if (member_[v]) out.push_back(v);
    return out;
  }

  // Ascending iteration over members.
  class iterator {
   public:
    iterator(const VertexSet* s, Vertex v) : s_(s), v_(v) { settle(); }
    Vertex operator*() const { return v_; }
    iterator& operator++() { ++v_; settle(); return *this; }
    bool operator!=(const iterator& o) const { return v_ != o.v_; }

   private:
    void settle() {
      while (v_ < s_->member_.size() && !s_->member_[v_]) ++v_;
    }
    const VertexSet* s_;
    Vertex v_;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, universe_size()); }

 private:
  std::vector<std::uint8_t> member_;
  std::size_t count_ = 0;
};

}  // namespace hh
