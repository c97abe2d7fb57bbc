#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace melonforge {

using Color = int;

/// A subset C of the colors {1..d}, always stored in admissible form:
/// |C| <= d/2, and 1 in C when |C| = d/2. C and its complement normalize to
/// the same value since they label the same quartic bubble.
class ColorSet {
 public:
  static constexpr int kMaxColors = 30;

  ColorSet(int d, std::span<const Color> colors);
  ColorSet(int d, std::initializer_list<Color> colors)
      : ColorSet(d, std::span<const Color>(colors.begin(), colors.size())) {}
  /// Bit c-1 set for each color c.
  static ColorSet from_mask(int d, std::uint32_t mask);

  int d() const noexcept { return d_; }
  std::uint32_t mask() const noexcept { return mask_; }
  std::uint32_t complement_mask() const noexcept { return full_mask(d_) ^ mask_; }
  int size() const noexcept;
  bool contains(Color c) const noexcept { return c >= 1 && c <= d_ && (mask_ >> (c - 1)) & 1U; }
  /// |C| = d/2.
  bool balanced() const noexcept { return 2 * size() == d_; }
  std::vector<Color> members() const;
  std::vector<Color> complement_members() const;
  std::string to_string() const;

  static std::uint32_t full_mask(int d) noexcept { return d >= 32 ? ~0U : (1U << d) - 1U; }
  /// Every admissible set for d colors, sorted.
  static std::vector<ColorSet> all_admissible(int d);

  friend bool operator==(const ColorSet&, const ColorSet&) = default;
  /// Lexicographic on the sorted member lists (d compared first).
  friend std::strong_ordering operator<=>(const ColorSet& a, const ColorSet& b);

 private:
  ColorSet(int d, std::uint32_t mask, bool) : d_(d), mask_(mask) {}

  int d_;
  std::uint32_t mask_;
};

}  // namespace melonforge
