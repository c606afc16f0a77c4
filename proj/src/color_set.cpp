#include "royal/color_set.hpp"

#include <stdexcept>

namespace royal {

ColorSet ColorSet::single(int color) {
    if (color < 1 || color > kMaxPalette)
        throw std::invalid_argument("color out of range 1..16: " + std::to_string(color));
    return from_mask(1u << (color - 1));
}

ColorSet ColorSet::from_list(const std::vector<int>& colors) {
    ColorSet s;
    for (int c : colors) s |= single(c);
    return s;
}

ColorSet ColorSet::with(int color) const { return *this | single(color); }

ColorSet ColorSet::without(int color) const { return *this - single(color); }

std::vector<int> ColorSet::to_list() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b; b &= b - 1)
        out.push_back(std::countr_zero(b) + 1);
    return out;
}

std::string ColorSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int c : to_list()) {
        if (!first) out += ',';
        out += std::to_string(c);
        first = false;
    }
    return out + "}";
}

}  // namespace royal
