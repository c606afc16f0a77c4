#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace royal {

// A set of colors drawn from {1, ..., k}, stored as a bitmask with color i on
// bit i-1. Palettes are capped at kMaxPalette; everything in this project is
// comfortable well below that (index k grows like log2 of the order).
class ColorSet {
public:
    static constexpr int kMaxPalette = 16;

    constexpr ColorSet() = default;

    static constexpr ColorSet from_mask(std::uint32_t mask) { return ColorSet(mask); }
    static ColorSet single(int color);
    static ColorSet from_list(const std::vector<int>& colors);
    // {1, ..., k}
    static constexpr ColorSet full(int k) { return ColorSet((1u << k) - 1u); }

    constexpr std::uint32_t mask() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool contains(int color) const {
        return color >= 1 && color <= 32 && (bits_ >> (color - 1)) & 1u;
    }
    // Largest color present; 0 for the empty set.
    constexpr int max_color() const { return bits_ == 0 ? 0 : 32 - std::countl_zero(bits_); }

    constexpr bool intersects(ColorSet o) const { return (bits_ & o.bits_) != 0; }
    constexpr bool subset_of(ColorSet o) const { return (bits_ & ~o.bits_) == 0; }

    constexpr ColorSet operator|(ColorSet o) const { return ColorSet(bits_ | o.bits_); }
    constexpr ColorSet operator&(ColorSet o) const { return ColorSet(bits_ & o.bits_); }
    // Set difference.
    constexpr ColorSet operator-(ColorSet o) const { return ColorSet(bits_ & ~o.bits_); }
    ColorSet& operator|=(ColorSet o) { bits_ |= o.bits_; return *this; }
    ColorSet& operator&=(ColorSet o) { bits_ &= o.bits_; return *this; }

    constexpr bool operator==(const ColorSet&) const = default;
    constexpr bool operator<(ColorSet o) const { return bits_ < o.bits_; }

    ColorSet with(int color) const;
    ColorSet without(int color) const;

    std::vector<int> to_list() const;
    // "{1,3}" — mostly for diagnostics and DOT labels.
    std::string to_string() const;

private:
    constexpr explicit ColorSet(std::uint32_t bits) : bits_(bits) {}
    std::uint32_t bits_ = 0;
};

}  // namespace royal
