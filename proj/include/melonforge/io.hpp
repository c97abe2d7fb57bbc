#pragma once

#include <string>

#include <json.hpp>

#include "melonforge/bubble.hpp"
#include "melonforge/decorated_map.hpp"
#include "melonforge/feynman.hpp"
#include "melonforge/gluing.hpp"
#include "melonforge/gm.hpp"
#include "melonforge/plane_tree.hpp"

namespace melonforge::io {

using nlohmann::json;

/// {"d", "whites", "blacks", "edges": [{"c", "w", "b"}]}
json to_json(const Bubble& b);
Bubble bubble_from_json(const json& j);

json to_json(const ColorSet& c);
ColorSet color_set_from_json(int d, const json& j);

/// {"d", "base": [w, b], "sequence": [{"at", "C", "v", "vbar"}],
///  "multiset": [{"C", "count"}], "pairing": [[w, b]]}. Reading rebuilds
/// multiset and pairing from the steps and rejects stored values that differ.
json to_json(const GmCertificate& cert);
GmCertificate certificate_from_json(const json& j);

/// {"d", "quartics": [{"C", "vertices": [w0, b0, w1, b1]}], "dashed": [[w, b]]}
json to_json(const GluingGraph& g);
GluingGraph gluing_from_json(const json& j);

/// {"d", "vertices": [{"halfedges", "marked_corner"}], "edges": [{"h1", "h2", "C"}]}
json to_json(const PlaneTree& t);
PlaneTree plane_tree_from_json(const json& j);

/// {"d", "vertices": [[h, ...] counter-clockwise], "edges": [...], "marked_corners": [k]}
json to_json(const DecoratedMap& m);
DecoratedMap map_from_json(const json& j);

/// {"d", "bubbles": [bubble], "copies": [interaction], "matching": [[copy, w, copy, b]]}
json to_json(const FeynmanGraph& g);
FeynmanGraph feynman_from_json(const json& j);

/// Throws Io when the file cannot be read and Parse on malformed JSON.
json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

std::string to_dot(const Bubble& b);
std::string to_dot(const PlaneTree& t);
std::string to_dot(const DecoratedMap& m);
std::string to_dot(const FeynmanGraph& g);
std::string to_dot(const GluingGraph& g);

}  // namespace melonforge::io
