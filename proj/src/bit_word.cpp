#include "perfcode/bit_word.hpp"

#include "perfcode/errors.hpp"

namespace perfcode {

BitWord::BitWord(std::size_t length) : length_(static_cast<std::uint32_t>(length)) {
  if (length > kMaxBits) throw DimensionMismatch("BitWord length exceeds " + std::to_string(kMaxBits));
}

BitWord BitWord::unit(std::size_t length, std::size_t pos) {
  BitWord w(length);
  w.set(pos);
  return w;
}

BitWord BitWord::ones(std::size_t length) {
  BitWord w(length);
  for (std::size_t i = 0; i < length; ++i) w.set(i);
  return w;
}

BitWord BitWord::from_string(std::string_view bits) {
  BitWord w(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      w.set(i);
    } else if (bits[i] != '0') {
      throw MalformedInput("bit string contains '" + std::string(1, bits[i]) + "'");
    }
  }
  return w;
}

BitWord BitWord::from_uint(std::size_t length, std::uint64_t value) {
  BitWord w(length);
  if (length < 64) value &= (std::uint64_t{1} << length) - 1;
  w.blocks_[0] = value;
  return w;
}

std::size_t BitWord::lowest_set() const {
  for (std::size_t b = 0; b < used_blocks(); ++b)
    if (blocks_[b] != 0) return b * 64 + static_cast<std::size_t>(std::countr_zero(blocks_[b]));
  return length_;
}

std::size_t BitWord::highest_set() const {
  for (std::size_t b = used_blocks(); b-- > 0;)
    if (blocks_[b] != 0) return b * 64 + 63 - static_cast<std::size_t>(std::countl_zero(blocks_[b]));
  return length_;
}

bool BitWord::dot(const BitWord& other) const {
  std::uint64_t acc = 0;
  for (std::size_t b = 0; b < used_blocks(); ++b) acc ^= blocks_[b] & other.blocks_[b];
  return (std::popcount(acc) & 1) != 0;
}

BitWord& BitWord::operator^=(const BitWord& other) {
  if (other.length_ != length_) throw DimensionMismatch("BitWord lengths differ");
  for (std::size_t b = 0; b < used_blocks(); ++b) blocks_[b] ^= other.blocks_[b];
  return *this;
}

BitWord& BitWord::operator&=(const BitWord& other) {
  if (other.length_ != length_) throw DimensionMismatch("BitWord lengths differ");
  for (std::size_t b = 0; b < used_blocks(); ++b) blocks_[b] &= other.blocks_[b];
  return *this;
}

BitWord concat(const BitWord& a, const BitWord& b) {
  BitWord w(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.test(i)) w.set(i);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b.test(i)) w.set(a.size() + i);
  return w;
}

BitWord BitWord::slice(std::size_t offset, std::size_t length) const {
  if (offset + length > length_) throw DimensionMismatch("slice out of range");
  BitWord w(length);
  for (std::size_t i = 0; i < length; ++i)
    if (test(offset + i)) w.set(i);
  return w;
}

std::string BitWord::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

std::size_t BitWord::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ length_;
  for (std::size_t b = 0; b < used_blocks(); ++b) {
    h ^= blocks_[b] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const BitWord& a, const BitWord& b) {
  if (a.length_ != b.length_) return a.length_ <=> b.length_;
  for (std::size_t blk = a.used_blocks(); blk-- > 0;) {
    if (a.blocks_[blk] != b.blocks_[blk]) return a.blocks_[blk] <=> b.blocks_[blk];
  }
  return std::strong_ordering::equal;
}

}  // namespace perfcode
