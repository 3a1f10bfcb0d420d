#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace stit {

/// Maximum number of moment-history pairs a model may have.
inline constexpr std::size_t kMaxPoints = 256;

/// A set of moment-history pairs, stored as a bit set over the model's
/// point indices (see ImaginationModel::points()).
class Proposition {
 public:
  constexpr Proposition() = default;

  /// The first `n` points.
  static Proposition prefix(std::size_t n) {
    Proposition p;
    for (std::size_t w = 0; w < kWords && n > 0; ++w) {
      const std::size_t take = n < 64 ? n : 64;
      p.words_[w] = take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1);
      n -= take;
    }
    return p;
  }

  static Proposition singleton(std::size_t i) {
    Proposition p;
    p.insert(i);
    return p;
  }

  bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  bool empty() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool subset_of(const Proposition& o) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      if (words_[w] & ~o.words_[w]) return false;
    }
    return true;
  }

  bool intersects(const Proposition& o) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      if (words_[w] & o.words_[w]) return true;
    }
    return false;
  }

  Proposition& operator&=(const Proposition& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  Proposition& operator|=(const Proposition& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  /// Set difference.
  Proposition& operator-=(const Proposition& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend Proposition operator&(Proposition a, const Proposition& b) { return a &= b; }
  friend Proposition operator|(Proposition a, const Proposition& b) { return a |= b; }
  friend Proposition operator-(Proposition a, const Proposition& b) { return a -= b; }

  friend bool operator==(const Proposition&, const Proposition&) = default;
  friend auto operator<=>(const Proposition&, const Proposition&) = default;

  /// Calls fn(i) for every member, ascending.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto w : words_) h = h * 0x100000001b3ULL ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  static constexpr std::size_t kWords = kMaxPoints / 64;
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace stit

template <>
struct std::hash<stit::Proposition> {
  std::size_t operator()(const stit::Proposition& p) const noexcept { return p.hash(); }
};
