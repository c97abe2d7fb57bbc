#include "melonforge/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "melonforge/error.hpp"

namespace melonforge::io {

namespace {

// nlohmann's own exceptions become Parse errors with the same message
template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, std::string(what) + ": " + e.what());
  }
}

std::vector<Color> colors_of(const json& j) { return j.get<std::vector<Color>>(); }

json pair_array(const std::vector<VertexPair>& pairs) {
  json out = json::array();
  for (const auto& [w, b] : pairs) out.push_back({w, b});
  return out;
}

}  // namespace

json to_json(const ColorSet& c) { return c.members(); }

ColorSet color_set_from_json(int d, const json& j) {
  return guarded("color set", [&] { return ColorSet(d, colors_of(j)); });
}

json to_json(const Bubble& b) {
  json edges = json::array();
  for (const auto& e : b.edges()) edges.push_back({{"c", e.c}, {"w", e.w}, {"b", e.b}});
  return {{"d", b.d()}, {"whites", b.whites()}, {"blacks", b.blacks()}, {"edges", edges}};
}

Bubble bubble_from_json(const json& j) {
  const RawBubble raw = guarded("bubble", [&] {
    RawBubble r;
    r.d = j.at("d").get<int>();
    r.whites = j.at("whites").get<std::vector<VertexId>>();
    r.blacks = j.at("blacks").get<std::vector<VertexId>>();
    for (const auto& e : j.at("edges")) r.edges.push_back({e.at("c").get<int>(), e.at("w").get<int>(), e.at("b").get<int>()});
    return r;
  });
  return Bubble::validate(raw);
}

json to_json(const GmCertificate& cert) {
  json steps = json::array();
  for (const auto& s : cert.sequence)
    steps.push_back({{"at", s.at}, {"C", to_json(s.colors)}, {"v", s.new_v}, {"vbar", s.new_vbar}});
  json multiset = json::array();
  for (const auto& [c, n] : cert.multiset) multiset.push_back({{"C", to_json(c)}, {"count", n}});
  return {{"d", cert.d},
          {"base", {cert.base_white, cert.base_black}},
          {"sequence", steps},
          {"multiset", multiset},
          {"pairing", pair_array(cert.pairing)}};
}

GmCertificate certificate_from_json(const json& j) {
  GmCertificate cert = guarded("certificate", [&] {
    const int d = j.at("d").get<int>();
    std::vector<InsertionStep> steps;
    for (const auto& s : j.at("sequence")) {
      steps.push_back({s.at("at").get<int>(), ColorSet(d, colors_of(s.at("C"))), s.at("v").get<int>(),
                       s.at("vbar").get<int>()});
    }
    return make_certificate(d, j.at("base").at(0).get<int>(), j.at("base").at(1).get<int>(), std::move(steps));
  });
  if (j.contains("multiset") && to_json(cert).at("multiset") != j.at("multiset"))
    throw Error(Errc::CertificateMismatch, "stored multiset disagrees with the insertion steps");
  if (j.contains("pairing") && to_json(cert).at("pairing") != j.at("pairing"))
    throw Error(Errc::CertificateMismatch, "stored pairing disagrees with the insertion steps");
  return cert;
}

json to_json(const GluingGraph& g) {
  json quartics = json::array();
  for (const auto& q : g.quartics) quartics.push_back({{"C", to_json(q.colors)}, {"vertices", q.vertices}});
  return {{"d", g.d}, {"quartics", quartics}, {"dashed", pair_array(g.dashed)}};
}

GluingGraph gluing_from_json(const json& j) {
  GluingGraph g = guarded("gluing graph", [&] {
    GluingGraph out;
    out.d = j.at("d").get<int>();
    for (const auto& q : j.at("quartics"))
      out.quartics.push_back({ColorSet(out.d, colors_of(q.at("C"))), q.at("vertices").get<std::array<VertexId, 4>>()});
    for (const auto& p : j.at("dashed")) out.dashed.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    return out;
  });
  validate_gluing(g);
  return g;
}

json to_json(const PlaneTree& t) {
  json vertices = json::array();
  for (const auto& v : t.vertices) vertices.push_back({{"halfedges", v.halfedges}, {"marked_corner", v.marked_corner}});
  json edges = json::array();
  for (const auto& e : t.edges) edges.push_back({{"h1", e.h1}, {"h2", e.h2}, {"C", to_json(e.colors)}});
  return {{"d", t.d}, {"vertices", vertices}, {"edges", edges}};
}

PlaneTree plane_tree_from_json(const json& j) {
  PlaneTree t = guarded("plane tree", [&] {
    PlaneTree out;
    out.d = j.at("d").get<int>();
    for (const auto& v : j.at("vertices"))
      out.vertices.push_back({v.at("halfedges").get<std::vector<int>>(), v.value("marked_corner", 0)});
    for (const auto& e : j.at("edges"))
      out.edges.push_back({e.at("h1").get<int>(), e.at("h2").get<int>(), ColorSet(out.d, colors_of(e.at("C")))});
    return out;
  });
  validate_plane_tree(t);
  return t;
}

json to_json(const DecoratedMap& m) {
  json edges = json::array();
  for (const auto& e : m.edges) edges.push_back({{"h1", e.h1}, {"h2", e.h2}, {"C", to_json(e.colors)}});
  json out = {{"d", m.d}, {"vertices", m.rotation}, {"edges", edges}};
  if (!m.marked_corners.empty()) out["marked_corners"] = m.marked_corners;
  return out;
}

DecoratedMap map_from_json(const json& j) {
  DecoratedMap m = guarded("map", [&] {
    DecoratedMap out;
    out.d = j.at("d").get<int>();
    out.rotation = j.at("vertices").get<std::vector<std::vector<int>>>();
    for (const auto& e : j.at("edges"))
      out.edges.push_back({e.at("h1").get<int>(), e.at("h2").get<int>(), ColorSet(out.d, colors_of(e.at("C")))});
    if (j.contains("marked_corners")) out.marked_corners = j.at("marked_corners").get<std::vector<int>>();
    return out;
  });
  validate_map(m);
  return m;
}

json to_json(const FeynmanGraph& g) {
  // one entry per distinct interaction, in order of first appearance
  std::map<int, int> slot;
  json bubbles = json::array();
  json copies = json::array();
  for (const auto& c : g.copies()) {
    if (!slot.count(c.interaction)) {
      slot[c.interaction] = static_cast<int>(bubbles.size());
      bubbles.push_back(to_json(*c.bubble));
    }
    copies.push_back(c.interaction);
  }
  json interactions = json::array();
  for (const auto& [r, k] : slot) interactions.push_back({r, k});
  json matching = json::array();
  for (const auto& [w, b] : g.matching_pairs()) matching.push_back({w.copy, w.id, b.copy, b.id});
  return {{"d", g.d()}, {"bubbles", bubbles}, {"interactions", interactions}, {"copies", copies}, {"matching", matching}};
}

FeynmanGraph feynman_from_json(const json& j) {
  std::vector<std::shared_ptr<const Bubble>> bubbles;
  for (const auto& b : guarded("Feynman graph", [&] { return j.at("bubbles"); }))
    bubbles.push_back(std::make_shared<const Bubble>(bubble_from_json(b)));
  return guarded("Feynman graph", [&] {
    std::map<int, int> slot;
    if (j.contains("interactions")) {
      for (const auto& p : j.at("interactions")) slot[p.at(0).get<int>()] = p.at(1).get<int>();
    } else {
      for (std::size_t k = 0; k < bubbles.size(); ++k) slot[static_cast<int>(k)] = static_cast<int>(k);
    }
    std::vector<BubbleCopy> copies;
    for (const auto& c : j.at("copies")) {
      const int r = c.get<int>();
      auto it = slot.find(r);
      if (it == slot.end() || it->second < 0 || it->second >= static_cast<int>(bubbles.size()))
        throw Error(Errc::Parse, "copy refers to unknown interaction " + std::to_string(r));
      copies.push_back({r, bubbles[it->second]});
    }
    std::vector<std::pair<VertexRef, VertexRef>> pairs;
    for (const auto& p : j.at("matching"))
      pairs.push_back({{p.at(0).get<int>(), p.at(1).get<int>()}, {p.at(2).get<int>(), p.at(3).get<int>()}});
    return FeynmanGraph::from_pairs(std::move(copies), pairs);
  });
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw Error(Errc::Io, "cannot write " + path);
}

std::string to_dot(const Bubble& b) {
  std::ostringstream out;
  out << "graph bubble {\n";
  for (VertexId w : b.whites()) out << "  v" << w << " [label=\"" << w << "\", style=filled, fillcolor=white];\n";
  for (VertexId k : b.blacks())
    out << "  v" << k << " [label=\"" << k << "\", style=filled, fillcolor=black, fontcolor=white];\n";
  for (const auto& e : b.edges()) out << "  v" << e.w << " -- v" << e.b << " [label=\"" << e.c << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const PlaneTree& t) {
  const auto hv = halfedge_vertex(t);
  std::ostringstream out;
  out << "graph tree {\n";
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    out << "  n" << v << " [label=\"";
    for (int h : ccw_from_marked(t.vertices[v])) out << h << ' ';
    out << "\"];\n";
  }
  for (const auto& e : t.edges)
    out << "  n" << hv[e.h1] << " -- n" << hv[e.h2] << " [label=\"" << e.colors.to_string() << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const DecoratedMap& m) {
  std::vector<int> vertex(2 * m.num_edges(), -1);
  for (int v = 0; v < m.num_vertices(); ++v)
    for (int h : m.rotation[v]) vertex[h] = v;
  std::ostringstream out;
  out << "graph map {\n";
  for (int v = 0; v < m.num_vertices(); ++v) out << "  n" << v << ";\n";
  for (const auto& e : m.edges)
    out << "  n" << vertex[e.h1] << " -- n" << vertex[e.h2] << " [label=\"" << e.colors.to_string() << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const FeynmanGraph& g) {
  std::ostringstream out;
  out << "graph feynman {\n";
  for (int k = 0; k < g.num_copies(); ++k) {
    const Bubble& b = *g.copies()[k].bubble;
    out << "  subgraph cluster_" << k << " {\n    label=\"copy " << k << "\";\n";
    for (VertexId w : b.whites()) out << "    c" << k << "_" << w << " [label=\"" << w << "\"];\n";
    for (VertexId x : b.blacks())
      out << "    c" << k << "_" << x << " [label=\"" << x << "\", style=filled, fillcolor=black, fontcolor=white];\n";
    for (const auto& e : b.edges()) out << "    c" << k << "_" << e.w << " -- c" << k << "_" << e.b << " [label=\"" << e.c << "\"];\n";
    out << "  }\n";
  }
  for (const auto& [w, b] : g.matching_pairs())
    out << "  c" << w.copy << "_" << w.id << " -- c" << b.copy << "_" << b.id << " [style=dashed, label=\"0\"];\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const GluingGraph& g) {
  std::ostringstream out;
  out << "graph gluing {\n";
  for (std::size_t k = 0; k < g.quartics.size(); ++k) {
    const auto& q = g.quartics[k];
    const auto [w0, b0, w1, b1] = q.vertices;
    out << "  subgraph cluster_" << k << " {\n    label=\"" << q.colors.to_string() << "\";\n";
    out << "    v" << w0 << "; v" << b0 << "; v" << w1 << "; v" << b1 << ";\n";
    out << "    v" << w0 << " -- v" << b0 << "; v" << w1 << " -- v" << b1 << ";\n";
    out << "    v" << w0 << " -- v" << b1 << " [style=bold]; v" << w1 << " -- v" << b0 << " [style=bold];\n  }\n";
  }
  for (const auto& [w, b] : g.dashed) out << "  v" << w << " -- v" << b << " [style=dashed];\n";
  out << "}\n";
  return out.str();
}

}  // namespace melonforge::io
