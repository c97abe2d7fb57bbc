#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "melonforge/bubble.hpp"
#include "melonforge/rational.hpp"

namespace melonforge {

/// One bidipole insertion: `at` keeps its id, `new_v` takes over its edges
/// with colors in `colors`, `new_vbar` is the middle vertex.
struct InsertionStep {
  VertexId at;
  ColorSet colors;
  VertexId new_v;
  VertexId new_vbar;
  friend bool operator==(const InsertionStep&, const InsertionStep&) = default;
};

using VertexPair = std::pair<VertexId, VertexId>;  // (white, black)

/// Witness that a bubble is generalized melonic: the insertion sequence that
/// rebuilds it from the 2-vertex bubble (base_white, base_black), the
/// multiset of insertion color sets (the first insertion produces the initial
/// quartic and is counted too, so the counts sum to V/2 - 1) and the
/// canonical pairing.
struct GmCertificate {
  int d = 0;
  VertexId base_white = 0;
  VertexId base_black = 1;
  std::vector<InsertionStep> sequence;
  std::map<ColorSet, int> multiset;
  std::vector<VertexPair> pairing;  // sorted by white id

  int num_vertices() const noexcept { return 2 + 2 * static_cast<int>(sequence.size()); }
};

/// Fills in the multiset and pairing from the base pair and sequence.
GmCertificate make_certificate(int d, VertexId base_white, VertexId base_black,
                               std::vector<InsertionStep> sequence);

/// Rebuilds the bubble described by the certificate.
Bubble replay(const GmCertificate& cert);

/// Picks which of the available bidipoles to remove next.
using BidipoleChooser = std::function<std::size_t(const std::vector<Bidipole>&)>;

/// Greedy recognition: removes bidipoles until two vertices remain. Returns
/// nothing when it gets stuck, which means the bubble is not GM.
std::optional<GmCertificate> recognize_gm(const Bubble& b);
std::optional<GmCertificate> recognize_gm(const Bubble& b, const BidipoleChooser& choose);

/// Exhaustive search over all removal orders, independent of any confluence
/// argument. Throws SizeLimitExceeded above max_vertices.
std::optional<GmCertificate> recognize_gm_backtracking(const Bubble& b, int max_vertices = 12);

/// Certificates of every complete removal order, up to `limit` of them.
std::vector<GmCertificate> all_removal_certificates(const Bubble& b, std::size_t limit,
                                                    int max_vertices = 12);

/// The canonical pairing as (white, black) pairs sorted by white id.
std::vector<VertexPair> canonical_pairing(const GmCertificate& cert);

/// Every insertion set has fewer than d/2 colors.
bool is_totally_unbalanced(const GmCertificate& cert);

/// s = sum_C |C| b_C - d (V - 2) / 2.
Rational scaling_coefficient(const GmCertificate& cert);
Rational scaling_coefficient(const GmCertificate& cert, int d, int num_vertices);

/// sum_C |C| b_C.
int weighted_insertion_count(const GmCertificate& cert);

}  // namespace melonforge
