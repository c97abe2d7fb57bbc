#include "melonforge/intermediate_field.hpp"

#include <algorithm>

#include "melonforge/error.hpp"

namespace melonforge {

std::pair<ColorSet, std::array<VertexId, 4>> quartic_layout(const Bubble& b) {
  if (b.num_vertices() != 4) {
    throw Error(Errc::NonQuarticBubble, "bubble with " + std::to_string(b.num_vertices()) + " vertices is not quartic");
  }
  const int d = b.d();
  std::uint32_t to_first = 0;  // colors joining white 0 to black index 2
  for (Color c = 1; c <= d; ++c)
    if (b.neighbor_index(0, c) == 2) to_first |= 1U << (c - 1);
  const ColorSet colors = ColorSet::from_mask(d, to_first);
  // the canonical partner is reached through the complement of C
  const bool first_is_partner = colors.mask() != to_first;
  const int p0 = first_is_partner ? 2 : 3;
  const int p1 = first_is_partner ? 3 : 2;
  return {colors, {b.id_at(0), b.id_at(p0), b.id_at(1), b.id_at(p1)}};
}

DecoratedMap j_quartic(const FeynmanGraph& g) {
  const int n = g.num_whites();
  DecoratedMap m;
  m.d = g.d();
  // half-edge of every global white, and the global black paired with it
  std::vector<int> halfedge_of_white(n), partner_black(n);
  for (int j = 0; j < g.num_copies(); ++j) {
    const Bubble& b = *g.copies()[j].bubble;
    const auto [colors, layout] = quartic_layout(b);
    m.edges.push_back({2 * j, 2 * j + 1, colors});
    for (int k = 0; k < 2; ++k) {
      const int w = g.global_white({j, layout[2 * k]});
      halfedge_of_white[w] = 2 * j + k;
      partner_black[w] = g.global_black({j, layout[2 * k + 1]});
    }
  }
  std::vector<char> seen(n, 0);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> rot;
    int w = start;
    while (!seen[w]) {
      seen[w] = 1;
      rot.push_back(halfedge_of_white[w]);
      w = g.white_of_black()[partner_black[w]];
    }
    m.rotation.push_back(std::move(rot));
  }
  return m;
}

FeynmanGraph j_quartic_inverse(const DecoratedMap& m) {
  validate_map(m);
  const auto admissible = ColorSet::all_admissible(m.d);
  std::map<ColorSet, std::shared_ptr<const Bubble>> cache;
  std::vector<BubbleCopy> copies;
  // (copy, white id, black id) for every half-edge
  std::vector<VertexRef> white_of(2 * m.num_edges()), black_of(2 * m.num_edges());
  for (int j = 0; j < m.num_edges(); ++j) {
    const auto& e = m.edges[j];
    auto& bubble = cache[e.colors];
    if (!bubble) bubble = std::make_shared<const Bubble>(quartic(m.d, e.colors));
    const int r = static_cast<int>(std::lower_bound(admissible.begin(), admissible.end(), e.colors) - admissible.begin());
    copies.push_back({r, bubble});
    white_of[e.h1] = {j, 0};
    black_of[e.h1] = {j, 1};
    white_of[e.h2] = {j, 2};
    black_of[e.h2] = {j, 3};
  }
  std::vector<std::pair<VertexRef, VertexRef>> pairs;
  for (const auto& rot : m.rotation) {
    if (rot.empty()) throw Error(Errc::InvalidMap, "an isolated vertex has no Feynman graph preimage");
    for (std::size_t i = 0; i < rot.size(); ++i)
      pairs.push_back({white_of[rot[(i + 1) % rot.size()]], black_of[rot[i]]});
  }
  return FeynmanGraph::from_pairs(std::move(copies), pairs);
}

}  // namespace melonforge
