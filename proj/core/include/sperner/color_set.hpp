#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace sperner {

/// Interval / color label. Labels are 1-based: the colors of P[1,n] are 1..n.
using Color = int;

inline constexpr int kMaxColors = 63;

/// A subset of [1, kMaxColors] stored as a bitmask.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  ColorSet(std::initializer_list<Color> colors) {
    for (Color c : colors) insert(c);
  }

  static ColorSet range(Color first, Color last) {
    ColorSet s;
    for (Color c = first; c <= last; ++c) s.insert(c);
    return s;
  }
  static constexpr ColorSet from_bits(std::uint64_t bits) {
    ColorSet s;
    s.bits_ = bits;
    return s;
  }

  void insert(Color c) {
    if (c < 1 || c > kMaxColors) throw std::out_of_range("color label out of range");
    bits_ |= std::uint64_t{1} << c;
  }
  constexpr bool contains(Color c) const {
    return c >= 1 && c <= kMaxColors && ((bits_ >> c) & 1U) != 0;
  }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_subset_of(ColorSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr std::uint64_t bits() const { return bits_; }

  std::vector<Color> to_vector() const {
    std::vector<Color> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  constexpr ColorSet operator|(ColorSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr ColorSet operator&(ColorSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr ColorSet& operator|=(ColorSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr bool operator==(const ColorSet&) const = default;
  constexpr auto operator<=>(const ColorSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace sperner
