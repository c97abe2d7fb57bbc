#include "melonforge/bubble.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "melonforge/error.hpp"

namespace melonforge {

namespace {

std::string edge_label(const ColoredEdge& e) {
  return "edge (c=" + std::to_string(e.c) + ", w=" + std::to_string(e.w) +
         ", b=" + std::to_string(e.b) + ")";
}

}  // namespace

Bubble Bubble::validate(const RawBubble& raw) {
  const int d = raw.d;
  if (d < 3 || d > ColorSet::kMaxColors) {
    throw Error(Errc::InvalidColorCount, "bubbles need 3 <= d <= " +
                                             std::to_string(ColorSet::kMaxColors) + ", got d=" +
                                             std::to_string(d));
  }
  if (raw.whites.empty() || raw.blacks.empty()) {
    throw Error(Errc::NotConnected, "a bubble needs at least one white and one black vertex");
  }

  Bubble out;
  out.d_ = d;
  std::vector<VertexId> whites = raw.whites;
  std::vector<VertexId> blacks = raw.blacks;
  std::sort(whites.begin(), whites.end());
  std::sort(blacks.begin(), blacks.end());
  for (std::size_t i = 1; i < whites.size(); ++i) {
    if (whites[i] == whites[i - 1])
      throw Error(Errc::NotBipartite, "white vertex " + std::to_string(whites[i]) + " listed twice");
  }
  for (std::size_t i = 1; i < blacks.size(); ++i) {
    if (blacks[i] == blacks[i - 1])
      throw Error(Errc::NotBipartite, "black vertex " + std::to_string(blacks[i]) + " listed twice");
  }
  for (VertexId w : whites) {
    if (std::binary_search(blacks.begin(), blacks.end(), w))
      throw Error(Errc::NotBipartite, "vertex " + std::to_string(w) + " is both white and black");
  }
  if (whites.size() != blacks.size()) {
    throw Error(Errc::NotRegular, std::to_string(whites.size()) + " white vs " +
                                      std::to_string(blacks.size()) +
                                      " black vertices cannot form a d-regular bipartite graph");
  }

  out.num_whites_ = static_cast<int>(whites.size());
  out.ids_ = whites;
  out.ids_.insert(out.ids_.end(), blacks.begin(), blacks.end());
  const int n = out.num_vertices();
  out.adj_.assign(static_cast<std::size_t>(n) * d, -1);

  for (const ColoredEdge& e : raw.edges) {
    if (e.c < 1 || e.c > d) {
      throw Error(Errc::NotProperlyColored, edge_label(e) + " has a color outside {1.." +
                                                std::to_string(d) + "}");
    }
    const int wi = out.find_index(e.w);
    const int bi = out.find_index(e.b);
    if (wi < 0) throw Error(Errc::VertexNotFound, edge_label(e) + ": unknown vertex " + std::to_string(e.w));
    if (bi < 0) throw Error(Errc::VertexNotFound, edge_label(e) + ": unknown vertex " + std::to_string(e.b));
    if (!out.white_at(wi) || out.white_at(bi)) {
      throw Error(Errc::NotBipartite, edge_label(e) + " does not join a white to a black vertex");
    }
    int& ws = out.adj_[wi * d + e.c - 1];
    int& bs = out.adj_[bi * d + e.c - 1];
    if (ws >= 0) {
      throw Error(Errc::NotProperlyColored, edge_label(e) + ": vertex " + std::to_string(e.w) +
                                                " already has an edge of color " + std::to_string(e.c));
    }
    if (bs >= 0) {
      throw Error(Errc::NotProperlyColored, edge_label(e) + ": vertex " + std::to_string(e.b) +
                                                " already has an edge of color " + std::to_string(e.c));
    }
    ws = bi;
    bs = wi;
  }
  for (int i = 0; i < n; ++i) {
    for (int c = 1; c <= d; ++c) {
      if (out.adj_[i * d + c - 1] < 0) {
        throw Error(Errc::NotRegular, "vertex " + std::to_string(out.ids_[i]) +
                                          " has no edge of color " + std::to_string(c));
      }
    }
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (int c = 1; c <= d; ++c) {
      const int j = out.adj_[i * d + c - 1];
      if (!seen[j]) {
        seen[j] = 1;
        stack.push_back(j);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!seen[i]) {
      throw Error(Errc::NotConnected, "vertex " + std::to_string(out.ids_[i]) +
                                          " is not reachable from vertex " + std::to_string(out.ids_[0]));
    }
  }
  return out;
}

Bubble Bubble::two_vertex(int d, VertexId white, VertexId black) {
  RawBubble raw{d, {white}, {black}, {}};
  for (int c = 1; c <= d; ++c) raw.edges.push_back({c, white, black});
  return validate(raw);
}

int Bubble::find_index(VertexId v) const noexcept {
  auto lo = ids_.begin();
  auto mid = ids_.begin() + num_whites_;
  auto it = std::lower_bound(lo, mid, v);
  if (it != mid && *it == v) return static_cast<int>(it - ids_.begin());
  it = std::lower_bound(mid, ids_.end(), v);
  if (it != ids_.end() && *it == v) return static_cast<int>(it - ids_.begin());
  return -1;
}

int Bubble::index_of(VertexId v) const {
  const int i = find_index(v);
  if (i < 0) throw Error(Errc::VertexNotFound, "vertex " + std::to_string(v) + " is not in the bubble");
  return i;
}

std::vector<VertexId> Bubble::whites() const {
  return {ids_.begin(), ids_.begin() + num_whites_};
}

std::vector<VertexId> Bubble::blacks() const {
  return {ids_.begin() + num_whites_, ids_.end()};
}

std::vector<ColoredEdge> Bubble::edges() const {
  std::vector<ColoredEdge> out;
  out.reserve(static_cast<std::size_t>(num_whites_) * d_);
  for (int c = 1; c <= d_; ++c)
    for (int i = 0; i < num_whites_; ++i) out.push_back({c, ids_[i], ids_[neighbor_index(i, c)]});
  std::sort(out.begin(), out.end());
  return out;
}

RawBubble Bubble::raw() const { return {d_, whites(), blacks(), edges()}; }

VertexId Bubble::max_id() const noexcept {
  return std::max(ids_[num_whites_ - 1], ids_.back());
}

bool Bubble::is_white(VertexId v) const { return white_at(index_of(v)); }

VertexId Bubble::neighbor(VertexId v, Color c) const {
  if (c < 1 || c > d_) throw Error(Errc::NotProperlyColored, "color " + std::to_string(c) + " out of range");
  return ids_[neighbor_index(index_of(v), c)];
}

std::uint32_t Bubble::colors_between(VertexId a, VertexId b) const {
  const int ia = index_of(a);
  const int ib = index_of(b);
  std::uint32_t mask = 0;
  for (int c = 1; c <= d_; ++c)
    if (neighbor_index(ia, c) == ib) mask |= 1U << (c - 1);
  return mask;
}

Bubble quartic(int d, const ColorSet& colors) {
  if (colors.d() != d) {
    throw Error(Errc::InvalidColorCount, "color set for d=" + std::to_string(colors.d()) +
                                             " used with d=" + std::to_string(d));
  }
  RawBubble raw{d, {0, 2}, {1, 3}, {}};
  for (int c = 1; c <= d; ++c) {
    if (colors.contains(c)) {
      raw.edges.push_back({c, 0, 3});
      raw.edges.push_back({c, 2, 1});
    } else {
      raw.edges.push_back({c, 0, 1});
      raw.edges.push_back({c, 2, 3});
    }
  }
  return Bubble::validate(raw);
}

Bubble insert_bidipole(const Bubble& b, VertexId x, const ColorSet& colors) {
  const VertexId m = b.max_id();
  return insert_bidipole(b, x, colors, m + 1, m + 2);
}

Bubble insert_bidipole(const Bubble& b, VertexId x, const ColorSet& colors, VertexId new_v,
                       VertexId new_vbar) {
  if (!b.has_vertex(x)) throw Error(Errc::VertexNotFound, "vertex " + std::to_string(x) + " is not in the bubble");
  if (colors.d() != b.d()) throw Error(Errc::InvalidColorCount, "color set dimension does not match the bubble");
  if (new_v == new_vbar || b.has_vertex(new_v) || b.has_vertex(new_vbar)) {
    throw Error(Errc::InvalidArgument, "new vertex ids " + std::to_string(new_v) + ", " +
                                           std::to_string(new_vbar) + " must be fresh and distinct");
  }
  const bool white = b.is_white(x);
  RawBubble raw = b.raw();
  (white ? raw.whites : raw.blacks).push_back(new_v);
  (white ? raw.blacks : raw.whites).push_back(new_vbar);
  for (ColoredEdge& e : raw.edges) {
    VertexId& end = white ? e.w : e.b;
    if (end == x && colors.contains(e.c)) end = new_v;
  }
  for (int c = 1; c <= b.d(); ++c) {
    // x meets vbar through C, v meets vbar through the complement
    const VertexId partner = colors.contains(c) ? x : new_v;
    if (white) raw.edges.push_back({c, partner, new_vbar});
    else raw.edges.push_back({c, new_vbar, partner});
  }
  return Bubble::validate(raw);
}

std::vector<Bidipole> find_bidipoles(const Bubble& b) {
  std::vector<Bidipole> out;
  const int d = b.d();
  for (int i = 0; i < b.num_vertices(); ++i) {
    const int first = b.neighbor_index(i, 1);
    int other = -1;
    std::uint32_t mask = 0;
    bool two = true;
    for (int c = 1; c <= d && two; ++c) {
      const int j = b.neighbor_index(i, c);
      if (j == first) {
        mask |= 1U << (c - 1);
      } else if (other < 0 || other == j) {
        other = j;
      } else {
        two = false;
      }
    }
    if (!two || other < 0) continue;
    const ColorSet colors = ColorSet::from_mask(d, mask);
    // the neighbour reached through the admissible set is w
    const bool first_is_w = colors.mask() == mask;
    const int w = first_is_w ? first : other;
    const int v = first_is_w ? other : first;
    out.push_back({b.id_at(v), b.id_at(i), b.id_at(w), colors});
  }
  std::sort(out.begin(), out.end(), [](const Bidipole& x, const Bidipole& y) {
    if (x.w != y.w) return x.w < y.w;
    if (x.colors != y.colors) return x.colors < y.colors;
    return x.vbar < y.vbar;
  });
  return out;
}

Bubble remove_bidipole(const Bubble& b, const Bidipole& dipole) {
  const int vi = b.index_of(dipole.v);
  const int vbi = b.index_of(dipole.vbar);
  const int wi = b.index_of(dipole.w);
  const ColorSet& colors = dipole.colors;
  for (int c = 1; c <= b.d(); ++c) {
    const int expected = colors.contains(c) ? wi : vi;
    if (b.neighbor_index(vbi, c) != expected) {
      throw Error(Errc::InvalidArgument, "vertices " + std::to_string(dipole.v) + ", " +
                                             std::to_string(dipole.vbar) + ", " +
                                             std::to_string(dipole.w) + " do not form a " +
                                             colors.to_string() + "-bidipole");
    }
  }
  const bool white = b.white_at(wi);
  RawBubble raw;
  raw.d = b.d();
  for (VertexId u : b.whites())
    if (u != dipole.v && u != dipole.vbar) raw.whites.push_back(u);
  for (VertexId u : b.blacks())
    if (u != dipole.v && u != dipole.vbar) raw.blacks.push_back(u);
  for (int c = 1; c <= b.d(); ++c) {
    // w keeps its edges outside C and inherits those of v inside C
    const int src = colors.contains(c) ? vi : wi;
    for (int i = 0; i < b.num_vertices(); ++i) {
      if (b.white_at(i) != white || i == vi || i == wi) continue;
      const int j = b.neighbor_index(i, c);
      const VertexId a = b.id_at(i), o = b.id_at(j);
      raw.edges.push_back(white ? ColoredEdge{c, a, o} : ColoredEdge{c, o, a});
    }
    const VertexId o = b.id_at(b.neighbor_index(src, c));
    raw.edges.push_back(white ? ColoredEdge{c, dipole.w, o} : ColoredEdge{c, o, dipole.w});
  }
  return Bubble::validate(raw);
}

bool iso_check(const Bubble& a, const Bubble& b, int size_limit) {
  if (a.num_vertices() > size_limit || b.num_vertices() > size_limit) {
    throw Error(Errc::SizeLimitExceeded, "isomorphism test limited to " + std::to_string(size_limit) +
                                             " vertices");
  }
  if (a.d() != b.d() || a.num_vertices() != b.num_vertices()) return false;
  const int n = a.num_vertices();
  const int d = a.d();
  std::vector<int> image(n), preimage(n);
  // A connected colored graph is determined by the image of one vertex.
  for (int start = 0; start < b.num_whites(); ++start) {
    std::fill(image.begin(), image.end(), -1);
    std::fill(preimage.begin(), preimage.end(), -1);
    image[0] = start;
    preimage[start] = 0;
    std::vector<int> stack{0};
    bool ok = true;
    while (ok && !stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int c = 1; c <= d && ok; ++c) {
        const int nx = a.neighbor_index(x, c);
        const int ny = b.neighbor_index(image[x], c);
        if (image[nx] < 0 && preimage[ny] < 0) {
          image[nx] = ny;
          preimage[ny] = nx;
          stack.push_back(nx);
        } else if (image[nx] != ny) {
          ok = false;
        }
      }
    }
    if (ok) return true;
  }
  return false;
}

std::string vertex_label(const Bubble& b, VertexId v) {
  return (b.is_white(v) ? "w" : "b") + std::to_string(v);
}

}  // namespace melonforge
