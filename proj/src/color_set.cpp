#include "melonforge/color_set.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "melonforge/error.hpp"

namespace melonforge {

namespace {

std::uint32_t normalize(int d, std::uint32_t mask) {
  const std::uint32_t full = ColorSet::full_mask(d);
  if (mask == 0 || mask == full) {
    throw Error(Errc::EmptyOrFullColorSet, "color set must be a proper non-empty subset of {1.." +
                                               std::to_string(d) + "}");
  }
  const int k = std::popcount(mask);
  if (2 * k > d || (2 * k == d && !(mask & 1U))) return full ^ mask;
  return mask;
}

void check_d(int d) {
  if (d < 1 || d > ColorSet::kMaxColors) {
    throw Error(Errc::InvalidColorCount, "unsupported number of colors " + std::to_string(d));
  }
}

}  // namespace

ColorSet::ColorSet(int d, std::span<const Color> colors) : d_(d), mask_(0) {
  check_d(d);
  for (Color c : colors) {
    if (c < 1 || c > d) {
      throw Error(Errc::NotProperlyColored, "color " + std::to_string(c) + " outside {1.." +
                                                std::to_string(d) + "}");
    }
    mask_ |= 1U << (c - 1);
  }
  mask_ = normalize(d, mask_);
}

ColorSet ColorSet::from_mask(int d, std::uint32_t mask) {
  check_d(d);
  if (mask & ~full_mask(d)) {
    throw Error(Errc::NotProperlyColored, "color mask has bits beyond d=" + std::to_string(d));
  }
  return ColorSet(d, normalize(d, mask), true);
}

int ColorSet::size() const noexcept { return std::popcount(mask_); }

std::vector<Color> ColorSet::members() const {
  std::vector<Color> out;
  for (Color c = 1; c <= d_; ++c)
    if (contains(c)) out.push_back(c);
  return out;
}

std::vector<Color> ColorSet::complement_members() const {
  std::vector<Color> out;
  for (Color c = 1; c <= d_; ++c)
    if (!contains(c)) out.push_back(c);
  return out;
}

std::string ColorSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Color c : members()) {
    if (!first) os << ',';
    os << c;
    first = false;
  }
  os << '}';
  return os.str();
}

std::vector<ColorSet> ColorSet::all_admissible(int d) {
  check_d(d);
  std::vector<ColorSet> out;
  for (std::uint32_t m = 1; m < full_mask(d); ++m) {
    if (normalize(d, m) == m) out.push_back(ColorSet(d, m, true));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::strong_ordering operator<=>(const ColorSet& a, const ColorSet& b) {
  if (auto c = a.d_ <=> b.d_; c != 0) return c;
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace melonforge
