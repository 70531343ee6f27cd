#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace classlab {

/// Fixed-width set of small integers, used for subsets of a group's
/// element-table indices.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool subset_of(const Bits& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  Bits operator&(const Bits& o) const {
    Bits r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      for (std::uint64_t x = words_[w]; x; x &= x - 1) f(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
  }
  std::vector<std::uint32_t> indices() const {
    std::vector<std::uint32_t> out;
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
  }

  friend bool operator==(const Bits&, const Bits&) = default;
  /// Orders by the sorted index list, lexicographically.
  friend bool lex_less(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      if (a.words_[i] == b.words_[i]) continue;
      std::uint64_t diff = a.words_[i] ^ b.words_[i];
      std::uint64_t low = diff & (~diff + 1);
      // the set holding the lowest differing index comes first
      return (a.words_[i] & low) != 0;
    }
    return false;
  }
  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept { return b.hash(); }
};

}  // namespace classlab
