#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace grpbounds {

/// Fixed-size bitset over element ids, sized at construction.
class Bitset {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= word_type{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(word_type{1} << (i % kWordBits)); }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
  }

  bool is_subset_of(const Bitset& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if ((words_[k] & ~other.words_[k]) != 0) return false;
    }
    return true;
  }

  std::size_t intersection_count(const Bitset& other) const noexcept {
    std::size_t n = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      n += static_cast<std::size_t>(std::popcount(words_[k] & other.words_[k]));
    }
    return n;
  }

  Bitset& operator&=(const Bitset& other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }

  /// Calls fn(i) for every set bit, ascending.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      word_type w = words_[k];
      while (w != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        fn(k * kWordBits + bit);
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint32_t> to_vector() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
  }

  bool operator==(const Bitset&) const = default;

  /// Lexicographic on the ascending member list: the set whose first
  /// differing element is smaller sorts first.
  friend bool lex_less(const Bitset& a, const Bitset& b) noexcept {
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      const word_type diff = a.words_[k] ^ b.words_[k];
      if (diff != 0) return (a.words_[k] >> std::countr_zero(diff)) & 1U;
    }
    return false;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto w : words_) {
      h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

}  // namespace grpbounds
