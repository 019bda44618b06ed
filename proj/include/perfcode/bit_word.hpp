#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace perfcode {

/// Fixed-length vector over GF(2), stored inline (at most kMaxBits coordinates).
///
/// Coordinate i is bit i; the numeric encoding of a word is sum_i bit_i * 2^i and
/// ordering compares these encodings. Text form writes coordinate 0 first.
class BitWord {
 public:
  static constexpr std::size_t kMaxBits = 512;
  static constexpr std::size_t kBlocks = kMaxBits / 64;

  BitWord() = default;
  explicit BitWord(std::size_t length);

  static BitWord unit(std::size_t length, std::size_t pos);
  static BitWord ones(std::size_t length);
  /// Parses a string of '0'/'1' characters; throws MalformedInput otherwise.
  static BitWord from_string(std::string_view bits);
  /// Low `length` bits of `value` (length <= 64).
  static BitWord from_uint(std::size_t length, std::uint64_t value);

  std::size_t size() const { return length_; }
  bool empty() const { return length_ == 0; }

  bool test(std::size_t i) const { return (blocks_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      blocks_[i >> 6] |= mask;
    } else {
      blocks_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { blocks_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t weight() const {
    std::size_t w = 0;
    for (std::size_t b = 0; b < used_blocks(); ++b) w += static_cast<std::size_t>(std::popcount(blocks_[b]));
    return w;
  }
  bool any() const {
    for (std::size_t b = 0; b < used_blocks(); ++b)
      if (blocks_[b] != 0) return true;
    return false;
  }
  /// Index of the lowest set coordinate, or size() when zero.
  std::size_t lowest_set() const;
  /// Index of the highest set coordinate, or size() when zero.
  std::size_t highest_set() const;
  /// Inner product over GF(2).
  bool dot(const BitWord& other) const;

  BitWord& operator^=(const BitWord& other);
  BitWord& operator&=(const BitWord& other);
  friend BitWord operator^(BitWord a, const BitWord& b) { return a ^= b; }
  friend BitWord operator&(BitWord a, const BitWord& b) { return a &= b; }
  friend BitWord operator+(BitWord a, const BitWord& b) { return a ^= b; }

  /// Concatenation x|y: coordinates of `a` first.
  friend BitWord concat(const BitWord& a, const BitWord& b);
  /// Coordinates [offset, offset + length).
  BitWord slice(std::size_t offset, std::size_t length) const;

  std::uint64_t low_block() const { return blocks_[0]; }

  std::string to_string() const;
  std::size_t hash() const;

  friend bool operator==(const BitWord& a, const BitWord& b) {
    return a.length_ == b.length_ && a.blocks_ == b.blocks_;
  }
  friend std::strong_ordering operator<=>(const BitWord& a, const BitWord& b);

 private:
  std::size_t used_blocks() const { return (length_ + 63) / 64; }

  std::uint32_t length_ = 0;
  std::array<std::uint64_t, kBlocks> blocks_{};
};

inline std::size_t distance(const BitWord& a, const BitWord& b) { return (a ^ b).weight(); }

}  // namespace perfcode

template <>
struct std::hash<perfcode::BitWord> {
  std::size_t operator()(const perfcode::BitWord& w) const noexcept { return w.hash(); }
};
