#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <vector>

namespace proxlat {

/// Fixed-capacity bitset over element indices [0, kCapacity).
///
/// Every carrier in the workbench (lattice elements, round filters, space
/// points) is indexed by small integers, so sets of them are plain values
/// that copy in four words.
class ElementSet {
 public:
  static constexpr std::size_t kCapacity = 256;
  static constexpr std::size_t kWords = kCapacity / 64;

  ElementSet() = default;
  ElementSet(std::initializer_list<std::size_t> members) {
    for (auto m : members) insert(m);
  }

  static ElementSet full(std::size_t n) {
    ElementSet s;
    for (std::size_t w = 0; w < kWords && n > 0; ++w) {
      if (n >= 64) {
        s.words_[w] = ~std::uint64_t{0};
        n -= 64;
      } else {
        s.words_[w] = (std::uint64_t{1} << n) - 1;
        n = 0;
      }
    }
    return s;
  }

  static ElementSet singleton(std::size_t i) {
    ElementSet s;
    s.insert(i);
    return s;
  }

  bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool subset_of(const ElementSet& o) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }
  bool intersects(const ElementSet& o) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }

  std::optional<std::size_t> first() const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return std::nullopt;
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Canonical total order: smaller sets first, then by the least member at
  /// which the two sets differ (the set containing it comes first).
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    for (std::size_t w = 0; w < kWords; ++w) {
      if (a.words_[w] == b.words_[w]) continue;
      auto diff = a.words_[w] ^ b.words_[w];
      auto bit = std::uint64_t{1} << std::countr_zero(diff);
      return (a.words_[w] & bit) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = std::size_t;

    const_iterator() = default;
    const_iterator(const ElementSet* s, std::size_t pos) : set_(s), pos_(pos) { advance(); }
    std::size_t operator*() const { return pos_; }
    const_iterator& operator++() {
      ++pos_;
      advance();
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) { return a.pos_ == b.pos_; }

   private:
    void advance() {
      while (pos_ < kCapacity) {
        auto w = set_->words_[pos_ >> 6] >> (pos_ & 63);
        if (w != 0) {
          pos_ += static_cast<std::size_t>(std::countr_zero(w));
          return;
        }
        pos_ = ((pos_ >> 6) + 1) << 6;
      }
      pos_ = kCapacity;
    }
    const ElementSet* set_ = nullptr;
    std::size_t pos_ = kCapacity;
  };

  const_iterator begin() const { return {this, 0}; }
  const_iterator end() const { return {this, kCapacity}; }

  std::vector<std::size_t> to_vector() const { return {begin(), end()}; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (auto w : words_) h = (h ^ w) * 1099511628211ULL;
    return h;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace proxlat
