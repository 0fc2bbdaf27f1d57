#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ecg {

// Fixed-capacity dynamic bitset used for adjacency rows and search frontiers.
// All binary operations require both operands to have the same capacity.
class Bitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t capacity() const { return bits_; }

  void set(std::size_t i) { words_[i >> 6] |= word_bit(i); }
  void reset(std::size_t i) { words_[i >> 6] &= ~word_bit(i); }
  bool test(std::size_t i) const { return (words_[i >> 6] & word_bit(i)) != 0; }

  void set_all() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    trim();
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  std::size_t find_first() const { return find_from_word(0); }
  // First set bit strictly after i.
  std::size_t find_next(std::size_t i) const {
    std::size_t j = i + 1;
    if (j >= bits_) return npos;
    std::size_t wi = j >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (j & 63));
    if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
    return find_from_word(wi + 1);
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator^=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  // Set difference: this \ o.
  Bitset& operator-=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  Bitset complement() const {
    Bitset r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  std::size_t intersection_count(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }
  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        f((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const Bitset&, const Bitset&) = default;
  // Word-wise ordering; only used as a map key.
  friend bool operator<(const Bitset& a, const Bitset& b) {
    if (a.bits_ != b.bits_) return a.bits_ < b.bits_;
    return a.words_ < b.words_;
  }

 private:
  static std::uint64_t word_bit(std::size_t i) { return std::uint64_t{1} << (i & 63); }

  std::size_t find_from_word(std::size_t wi) const {
    for (; wi < words_.size(); ++wi)
      if (words_[wi]) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(words_[wi]));
    return npos;
  }

  void trim() {
    if (bits_ & 63) words_.back() &= (std::uint64_t{1} << (bits_ & 63)) - 1;
  }

  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace ecg
