#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace gburn::detail {

/// Dense vertex bitset sized at construction.
class VertexBits {
public:
  VertexBits() = default;
  explicit VertexBits(int n, bool fill = false) : n_(n), words_((n + 63) / 64, fill ? ~0ULL : 0ULL) {
    if (fill && n % 64 != 0) words_.back() = (1ULL << (n % 64)) - 1;
  }

  int universe() const noexcept { return n_; }
  void set(int v) { words_[v >> 6] |= 1ULL << (v & 63); }
  void reset(int v) { words_[v >> 6] &= ~(1ULL << (v & 63)); }
  bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1ULL; }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  /// |this & other|
  int count_and(const VertexBits& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }
  /// this &= ~other
  void subtract(const VertexBits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  }
  VertexBits intersect(const VertexBits& o) const {
    VertexBits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  bool subset_of(const VertexBits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool operator==(const VertexBits&) const = default;

private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace gburn::detail
