#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace dfsrg {

/// Fixed-size dynamic bitset. Word-parallel AND/popcount is what the common
/// neighbor counts in the graph code reduce to.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const noexcept {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  Bitset& operator&=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// this &= ~o
  Bitset& subtract(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) noexcept { return a |= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

  /// |a & b| without materializing the intersection.
  friend std::size_t intersect_count(const Bitset& a, const Bitset& b) noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
    return c;
  }
  /// |a & b & c|
  friend std::size_t intersect_count(const Bitset& a, const Bitset& b, const Bitset& c) noexcept {
    std::size_t n = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      n += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i] & c.words_[i]));
    return n;
  }

  /// Calls f(index) for every set bit, ascending.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  template <class T = std::uint32_t>
  std::vector<T> to_vector() const {
    std::vector<T> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<T>(i)); });
    return out;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace dfsrg
