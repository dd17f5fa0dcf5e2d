#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "igcount/common.hpp"

namespace igcount {

// Fixed-universe vertex set backed by 64-bit words. The brute-force oracle
// walks 2^n of these, so all set operations are branch-light word loops.
class VertexSet {
 public:
  VertexSet() : n_(0) {}
  explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {
    if (universe < 0) throw InputError("vertex set: negative universe");
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int i = 0; i < universe; ++i) s.set(i);
    return s;
  }

  static VertexSet of(int universe, std::initializer_list<int> members) {
    VertexSet s(universe);
    for (int v : members) s.set(v);
    return s;
  }

  /// Set built from the low bits of `mask` mapped through `ids`.
  static VertexSet from_mask(int universe, const std::vector<int>& ids,
                             std::uint64_t mask) {
    VertexSet s(universe);
    for (std::size_t j = 0; j < ids.size(); ++j)
      if (mask >> j & 1) s.set(ids[j]);
    return s;
  }

  int universe() const { return n_; }
  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  bool test(int i) const { return w_[i >> 6] >> (i & 63) & 1; }
  void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  void assign(int i, bool value) { value ? set(i) : reset(i); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  int intersection_count(const VertexSet& o) const {
    int c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }
  friend bool operator!=(const VertexSet& a, const VertexSet& b) {
    return !(a == b);
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  /// Low 64 bits; only meaningful when universe <= 64.
  std::uint64_t low_word() const { return w_.empty() ? 0 : w_[0]; }

 private:
  int n_;
  std::vector<std::uint64_t> w_;
};

}  // namespace igcount
