#include "melonforge/gluing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "melonforge/error.hpp"

namespace melonforge {

namespace {

// Colored adjacency of the union of all quartics.
struct QuarticAdjacency {
  int d;
  std::map<VertexId, std::vector<VertexId>> nbr;  // nbr[v][c-1]
  std::map<VertexId, bool> white;
  std::map<VertexId, int> quartic_of;
};

QuarticAdjacency build_adjacency(const GluingGraph& g) {
  QuarticAdjacency a{g.d, {}, {}, {}};
  for (std::size_t j = 0; j < g.quartics.size(); ++j) {
    const auto& q = g.quartics[j];
    const auto [w0, b0, w1, b1] = q.vertices;
    for (VertexId v : q.vertices) {
      if (a.nbr.count(v)) throw Error(Errc::InvalidGluing, "vertex " + std::to_string(v) + " appears in two quartics");
      a.nbr[v].assign(g.d, -1);
      a.quartic_of[v] = static_cast<int>(j);
    }
    a.white[w0] = a.white[w1] = true;
    a.white[b0] = a.white[b1] = false;
    for (int c = 1; c <= g.d; ++c) {
      const bool in = q.colors.contains(c);
      const VertexId p0 = in ? b1 : b0;
      const VertexId p1 = in ? b0 : b1;
      a.nbr[w0][c - 1] = p0;
      a.nbr[p0][c - 1] = w0;
      a.nbr[w1][c - 1] = p1;
      a.nbr[p1][c - 1] = w1;
    }
  }
  return a;
}

}  // namespace

std::vector<VertexId> GluingGraph::free_vertices() const {
  std::set<VertexId> touched;
  for (const auto& [w, b] : dashed) {
    touched.insert(w);
    touched.insert(b);
  }
  std::vector<VertexId> out;
  for (const auto& q : quartics)
    for (VertexId v : q.vertices)
      if (!touched.count(v)) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

void validate_gluing(const GluingGraph& g) {
  if (g.quartics.empty()) throw Error(Errc::InvalidGluing, "a gluing graph needs at least one quartic");
  for (const auto& q : g.quartics) {
    if (q.colors.d() != g.d) throw Error(Errc::InvalidColorCount, "quartic color set " + q.colors.to_string() + " has the wrong d");
  }
  const QuarticAdjacency a = build_adjacency(g);
  std::set<VertexId> used;
  for (const auto& [w, b] : g.dashed) {
    for (VertexId v : {w, b}) {
      if (!a.white.count(v)) throw Error(Errc::VertexNotFound, "dashed line ends at unknown vertex " + std::to_string(v));
      if (!used.insert(v).second) throw Error(Errc::InvalidGluing, "vertex " + std::to_string(v) + " carries two dashed lines");
    }
    if (!a.white.at(w) || a.white.at(b)) {
      throw Error(Errc::NotBipartite, "dashed line (" + std::to_string(w) + "," + std::to_string(b) +
                                          ") must join a white to a black vertex");
    }
  }
}

Bubble boundary(const GluingGraph& g) {
  validate_gluing(g);
  QuarticAdjacency a = build_adjacency(g);
  auto& nbr = a.nbr;
  for (const auto& [x, y] : g.dashed) {
    for (int c = 0; c < g.d; ++c) {
      const VertexId p = nbr[x][c];
      const VertexId q = nbr[y][c];
      if (p == y) continue;  // the color-c edge x-y closes on itself
      nbr[p][c] = q;
      nbr[q][c] = p;
    }
    nbr.erase(x);
    nbr.erase(y);
  }
  RawBubble raw;
  raw.d = g.d;
  for (const auto& [v, adj] : nbr) {
    if (!a.white.at(v)) {
      raw.blacks.push_back(v);
      continue;
    }
    raw.whites.push_back(v);
    for (int c = 1; c <= g.d; ++c) raw.edges.push_back({c, v, adj[c - 1]});
  }
  return Bubble::validate(raw);
}

bool is_tree_gluing(const GluingGraph& g) {
  validate_gluing(g);
  const QuarticAdjacency a = build_adjacency(g);
  const int n = static_cast<int>(g.quartics.size());
  if (static_cast<int>(g.dashed.size()) != n - 1) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [w, b] : g.dashed) {
    const int p = find(a.quartic_of.at(w)), q = find(a.quartic_of.at(b));
    if (p == q) return false;
    parent[p] = q;
  }
  return true;
}

GluingGraph decompose(const Bubble& b, const GmCertificate& cert) {
  if (cert.sequence.empty()) {
    throw Error(Errc::CertificateMismatch, "the 2-vertex bubble has no quartic decomposition");
  }
  Bubble rebuilt = Bubble::two_vertex(cert.d, cert.base_white, cert.base_black);
  for (const auto& s : cert.sequence) {
    if (!rebuilt.has_vertex(s.at)) {
      throw Error(Errc::CertificateMismatch, "insertion at vertex " + std::to_string(s.at) + " which does not exist yet");
    }
    rebuilt = insert_bidipole(rebuilt, s.at, s.colors, s.new_v, s.new_vbar);
  }
  if (!(rebuilt == b)) throw Error(Errc::CertificateMismatch, "replaying the certificate does not give the bubble");

  VertexId fresh = b.max_id() + 1;
  GluingGraph g;
  g.d = cert.d;
  std::map<VertexId, std::pair<int, int>> slot;  // free vertex -> (quartic, position)
  auto add = [&](const ColorSet& colors, std::array<VertexId, 4> vs) {
    g.quartics.push_back({colors, vs});
    for (int k = 0; k < 4; ++k) slot[vs[k]] = {static_cast<int>(g.quartics.size()) - 1, k};
  };

  const auto& first = cert.sequence.front();
  const bool first_white = first.at == cert.base_white;
  if (first_white) add(first.colors, {first.new_v, first.new_vbar, cert.base_white, cert.base_black});
  else add(first.colors, {first.new_vbar, first.new_v, cert.base_white, cert.base_black});

  for (std::size_t i = 1; i < cert.sequence.size(); ++i) {
    const auto& s = cert.sequence[i];
    const auto [qj, pos] = slot.at(s.at);
    const VertexId renamed = fresh++;
    const VertexId end = fresh++;
    g.quartics[qj].vertices[pos] = renamed;
    slot.erase(s.at);
    slot[renamed] = {qj, pos};
    if (pos % 2 == 0) {  // white
      add(s.colors, {s.at, end, s.new_v, s.new_vbar});
      g.dashed.push_back({renamed, end});
    } else {
      add(s.colors, {end, s.at, s.new_vbar, s.new_v});
      g.dashed.push_back({end, renamed});
    }
  }
  return g;
}

PlaneTree to_plane_tree(const GluingGraph& g) {
  if (!is_tree_gluing(g)) throw Error(Errc::NotATreeGluing, "some dashed line is not an edge-cut");
  // pair k of quartic j is half-edge 2j + k; whites sit at positions 0 and 2
  std::map<VertexId, int> halfedge_of;
  for (std::size_t j = 0; j < g.quartics.size(); ++j)
    for (int k = 0; k < 4; ++k) halfedge_of[g.quartics[j].vertices[k]] = 2 * static_cast<int>(j) + k / 2;
  std::map<VertexId, VertexId> dashed_from_black;
  for (const auto& [w, b] : g.dashed) dashed_from_black[b] = w;

  PlaneTree t;
  t.d = g.d;
  for (std::size_t j = 0; j < g.quartics.size(); ++j) {
    const int h = 2 * static_cast<int>(j);
    t.edges.push_back({h, h + 1, g.quartics[j].colors});
  }
  for (VertexId start : g.free_vertices()) {
    const auto& q0 = g.quartics[halfedge_of.at(start) / 2];
    if (q0.vertices[0] != start && q0.vertices[2] != start) continue;  // paths start at free whites
    PlaneTreeVertex vx;
    VertexId white = start;
    while (true) {
      const int h = halfedge_of.at(white);
      vx.halfedges.push_back(h);
      const auto& q = g.quartics[h / 2];
      const VertexId black = q.vertices[2 * (h % 2) + 1];
      auto it = dashed_from_black.find(black);
      if (it == dashed_from_black.end()) break;
      white = it->second;
    }
    vx.marked_corner = static_cast<int>(vx.halfedges.size()) - 1;
    t.vertices.push_back(std::move(vx));
  }
  validate_plane_tree(t);
  return t;
}

GluingGraph from_plane_tree(const PlaneTree& t) {
  validate_plane_tree(t);
  GluingGraph g;
  g.d = t.d;
  std::vector<VertexId> white_of(t.num_halfedges()), black_of(t.num_halfedges());
  for (int j = 0; j < t.num_edges(); ++j) {
    const auto& e = t.edges[j];
    const VertexId base = 4 * j;
    g.quartics.push_back({e.colors, {base, base + 1, base + 2, base + 3}});
    white_of[e.h1] = base;
    black_of[e.h1] = base + 1;
    white_of[e.h2] = base + 2;
    black_of[e.h2] = base + 3;
  }
  for (const auto& v : t.vertices) {
    const auto path = ccw_from_marked(v);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) g.dashed.push_back({white_of[path[i + 1]], black_of[path[i]]});
  }
  std::sort(g.dashed.begin(), g.dashed.end());
  return g;
}

GluingGraph relabeled(const GluingGraph& g) {
  std::map<VertexId, VertexId> rename;
  GluingGraph out;
  out.d = g.d;
  for (std::size_t j = 0; j < g.quartics.size(); ++j) {
    QuarticNode q = g.quartics[j];
    for (int k = 0; k < 4; ++k) {
      const VertexId id = 4 * static_cast<VertexId>(j) + k;
      rename[q.vertices[k]] = id;
      q.vertices[k] = id;
    }
    out.quartics.push_back(q);
  }
  for (const auto& [w, b] : g.dashed) out.dashed.push_back({rename.at(w), rename.at(b)});
  std::sort(out.dashed.begin(), out.dashed.end());
  return out;
}

bool same_gluing(const GluingGraph& a, const GluingGraph& b) {
  const GluingGraph ra = relabeled(a), rb = relabeled(b);
  return ra.d == rb.d && ra.quartics == rb.quartics && ra.dashed == rb.dashed;
}

}  // namespace melonforge
