#include "melonforge/feynman.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

#include "graph_util.hpp"
#include "melonforge/error.hpp"

namespace melonforge {

FeynmanGraph::FeynmanGraph(std::vector<BubbleCopy> copies, std::vector<int> black_of_white)
    : copies_(std::move(copies)) {
  if (copies_.empty()) throw Error(Errc::InvalidMatching, "a Feynman graph needs at least one bubble");
  d_ = copies_.front().bubble->d();
  for (const auto& c : copies_) {
    if (c.bubble->d() != d_) throw Error(Errc::InvalidColorCount, "bubbles with different numbers of colors");
  }
  build_tables();
  set_matching(black_of_white);
}

void FeynmanGraph::build_tables() {
  int nw = 0;
  for (std::size_t k = 0; k < copies_.size(); ++k) {
    white_base_.push_back(nw);
    black_base_.push_back(nw);
    nw += copies_[k].bubble->num_whites();
  }
  white_copy_.resize(nw);
  black_copy_.resize(nw);
  white_nbr_.resize(static_cast<std::size_t>(nw) * d_);
  black_nbr_.resize(static_cast<std::size_t>(nw) * d_);
  for (std::size_t k = 0; k < copies_.size(); ++k) {
    const Bubble& b = *copies_[k].bubble;
    const int n = b.num_whites();
    for (int i = 0; i < n; ++i) {
      white_copy_[white_base_[k] + i] = static_cast<int>(k);
      black_copy_[black_base_[k] + i] = static_cast<int>(k);
      for (int c = 1; c <= d_; ++c) {
        white_nbr_[(white_base_[k] + i) * d_ + c - 1] = black_base_[k] + b.neighbor_index(i, c) - n;
        black_nbr_[(black_base_[k] + i) * d_ + c - 1] = white_base_[k] + b.neighbor_index(n + i, c);
      }
    }
  }
}

void FeynmanGraph::set_matching(std::span<const int> black_of_white) {
  const int n = static_cast<int>(white_copy_.size());
  if (static_cast<int>(black_of_white.size()) != n) {
    throw Error(Errc::InvalidMatching, "matching has " + std::to_string(black_of_white.size()) +
                                           " entries for " + std::to_string(n) + " white vertices");
  }
  black_of_white_.assign(black_of_white.begin(), black_of_white.end());
  white_of_black_.assign(n, -1);
  for (int w = 0; w < n; ++w) {
    const int b = black_of_white_[w];
    if (b < 0 || b >= n || white_of_black_[b] >= 0) {
      throw Error(Errc::InvalidMatching, "color-0 edges do not form a perfect matching (white " +
                                             std::to_string(w) + ")");
    }
    white_of_black_[b] = w;
  }
}

FeynmanGraph FeynmanGraph::from_pairs(std::vector<BubbleCopy> copies,
                                      const std::vector<std::pair<VertexRef, VertexRef>>& pairs) {
  int n = 0;
  for (const auto& c : copies) n += c.bubble->num_whites();
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  FeynmanGraph g(std::move(copies), m);
  std::fill(m.begin(), m.end(), -1);
  for (const auto& [w, b] : pairs) {
    const int gw = g.global_white(w);
    if (m[gw] >= 0) throw Error(Errc::InvalidMatching, "white vertex " + std::to_string(w.id) + " matched twice");
    m[gw] = g.global_black(b);
  }
  g.set_matching(m);
  return g;
}

VertexRef FeynmanGraph::white(int global) const {
  const int k = white_copy_.at(global);
  return {k, copies_[k].bubble->id_at(global - white_base_[k])};
}

VertexRef FeynmanGraph::black(int global) const {
  const int k = black_copy_.at(global);
  const Bubble& b = *copies_[k].bubble;
  return {k, b.id_at(b.num_whites() + global - black_base_[k])};
}

int FeynmanGraph::global_white(const VertexRef& v) const {
  if (v.copy < 0 || v.copy >= num_copies()) throw Error(Errc::VertexNotFound, "no bubble copy " + std::to_string(v.copy));
  const Bubble& b = *copies_[v.copy].bubble;
  const int i = b.index_of(v.id);
  if (!b.white_at(i)) throw Error(Errc::NotBipartite, "vertex " + std::to_string(v.id) + " is black");
  return white_base_[v.copy] + i;
}

int FeynmanGraph::global_black(const VertexRef& v) const {
  if (v.copy < 0 || v.copy >= num_copies()) throw Error(Errc::VertexNotFound, "no bubble copy " + std::to_string(v.copy));
  const Bubble& b = *copies_[v.copy].bubble;
  const int i = b.index_of(v.id);
  if (b.white_at(i)) throw Error(Errc::NotBipartite, "vertex " + std::to_string(v.id) + " is white");
  return black_base_[v.copy] + i - b.num_whites();
}

std::vector<std::pair<VertexRef, VertexRef>> FeynmanGraph::matching_pairs() const {
  std::vector<std::pair<VertexRef, VertexRef>> out;
  for (int w = 0; w < num_whites(); ++w) out.push_back({white(w), black(black_of_white_[w])});
  return out;
}

std::map<int, int> FeynmanGraph::interaction_counts() const {
  std::map<int, int> out;
  for (const auto& c : copies_) out[c.interaction] += 1;
  return out;
}

bool FeynmanGraph::connected() const {
  detail::UnionFind uf(num_copies());
  int parts = num_copies();
  for (int w = 0; w < num_whites(); ++w)
    if (uf.unite(white_copy_[w], black_copy_[black_of_white_[w]])) --parts;
  return parts == 1;
}

int bicolored_cycles(const FeynmanGraph& g, Color c) {
  const int n = g.num_whites();
  std::vector<char> seen(n, 0);
  int cycles = 0;
  for (int w = 0; w < n; ++w) {
    if (seen[w]) continue;
    ++cycles;
    int x = w;
    while (!seen[x]) {
      seen[x] = 1;
      x = g.white_of_black()[g.color_neighbor_of_white(x, c)];
    }
  }
  return cycles;
}

int total_bicolored_cycles(const FeynmanGraph& g) {
  int total = 0;
  for (Color c = 1; c <= g.d(); ++c) total += bicolored_cycles(g, c);
  return total;
}

Amplitude delta(const FeynmanGraph& g, const std::map<int, Rational>& scalings) {
  Amplitude a;
  a.n_exponent = total_bicolored_cycles(g);
  a.coupling_powers = g.interaction_counts();
  for (const auto& [r, count] : a.coupling_powers) {
    auto it = scalings.find(r);
    if (it == scalings.end()) throw Error(Errc::MissingScaling, "no scaling coefficient for interaction " + std::to_string(r));
    a.n_exponent += it->second * count;
  }
  return a;
}

std::vector<BubbleCopy> make_copies(const std::vector<std::pair<Bubble, int>>& bubbles) {
  std::vector<BubbleCopy> copies;
  for (std::size_t r = 0; r < bubbles.size(); ++r) {
    auto shared = std::make_shared<const Bubble>(bubbles[r].first);
    for (int k = 0; k < bubbles[r].second; ++k) copies.push_back({static_cast<int>(r), shared});
  }
  return copies;
}

namespace {

int count_whites(const std::vector<BubbleCopy>& copies, int cap) {
  int n = 0;
  for (const auto& c : copies) n += c.bubble->num_whites();
  if (n > cap) {
    throw Error(Errc::CapExceeded, std::to_string(n) + " white vertices exceed the enumeration cap of " +
                                       std::to_string(cap));
  }
  if (copies.empty()) throw Error(Errc::InvalidArgument, "nothing to enumerate");
  return n;
}

// Visits the matchings whose first entries equal `prefix`, in lexicographic order.
void enumerate_with_prefix(FeynmanGraph& g, std::vector<int> perm, std::size_t prefix_len, bool connected_only,
                           const std::function<void(const FeynmanGraph&)>& visit) {
  do {
    g.set_matching(perm);
    if (!connected_only || g.connected()) visit(g);
  } while (std::next_permutation(perm.begin() + prefix_len, perm.end()));
}

}  // namespace

void enumerate(const std::vector<std::pair<Bubble, int>>& bubbles, const EnumerationOptions& options,
               const std::function<void(const FeynmanGraph&)>& visit) {
  enumerate(make_copies(bubbles), options, visit);
}

void enumerate(std::vector<BubbleCopy> copies, const EnumerationOptions& options,
               const std::function<void(const FeynmanGraph&)>& visit) {
  const int n = count_whites(copies, options.cap);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  FeynmanGraph g(std::move(copies), perm);
  enumerate_with_prefix(g, perm, 0, options.connected_only, visit);
}

std::map<int, std::size_t> cycle_histogram(std::vector<BubbleCopy> copies, const EnumerationOptions& options,
                                           int threads) {
  const int n = count_whites(copies, options.cap);
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  const FeynmanGraph proto(std::move(copies), identity);
  std::map<int, std::size_t> total;
  std::mutex lock;
  std::atomic<int> next_first{0};
  auto worker = [&] {
    FeynmanGraph g = proto;
    std::map<int, std::size_t> local;
    for (int first = next_first++; first < n; first = next_first++) {
      std::vector<int> perm{first};
      for (int b = 0; b < n; ++b)
        if (b != first) perm.push_back(b);
      enumerate_with_prefix(g, perm, 1, options.connected_only,
                            [&](const FeynmanGraph& x) { local[total_bicolored_cycles(x)] += 1; });
    }
    std::lock_guard<std::mutex> guard(lock);
    for (const auto& [k, v] : local) total[k] += v;
  };
  const int workers = std::max(1, std::min(threads, n));
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return total;
}

GmaxResult gmax_filter(const std::vector<FeynmanGraph>& graphs, const std::map<int, Rational>& scalings) {
  GmaxResult out;
  for (const auto& g : graphs) {
    const Rational x = delta(g, scalings).n_exponent;
    if (out.graphs.empty() || x > out.delta_max) {
      out.delta_max = x;
      out.graphs.clear();
    }
    if (x == out.delta_max) out.graphs.push_back(g);
    ++out.examined;
  }
  return out;
}

GmaxResult gmax(const std::vector<std::pair<Bubble, int>>& bubbles, const std::map<int, Rational>& scalings,
                const EnumerationOptions& options) {
  GmaxResult out;
  enumerate(bubbles, options, [&](const FeynmanGraph& g) {
    const Rational x = delta(g, scalings).n_exponent;
    if (out.graphs.empty() || x > out.delta_max) {
      out.delta_max = x;
      out.graphs.clear();
    }
    if (x == out.delta_max) out.graphs.push_back(g);
    ++out.examined;
  });
  return out;
}

std::vector<std::vector<int>> dominant_pairings(const Bubble& b, int cap) {
  std::vector<std::vector<int>> best;
  int best_cycles = -1;
  EnumerationOptions opts{false, cap};
  enumerate({{b, 1}}, opts, [&](const FeynmanGraph& g) {
    const int k = total_bicolored_cycles(g);
    if (k > best_cycles) {
      best_cycles = k;
      best.clear();
    }
    if (k == best_cycles) best.push_back(g.black_of_white());
  });
  return best;
}

std::vector<int> pairing_as_matching(const Bubble& b, const std::vector<VertexPair>& pairs) {
  const int n = b.num_whites();
  std::vector<int> m(n, -1);
  for (const auto& [w, bl] : pairs) {
    const int wi = b.index_of(w), bi = b.index_of(bl);
    if (!b.white_at(wi) || b.white_at(bi)) throw Error(Errc::NotBipartite, "pair (" + std::to_string(w) + "," + std::to_string(bl) + ") is not white-black");
    m[wi] = bi - n;
  }
  return m;
}

FeynmanGraph tree_family(const Bubble& b, const GmCertificate& cert, int copies) {
  if (copies < 1) throw Error(Errc::InvalidArgument, "need at least one copy");
  auto shared = std::make_shared<const Bubble>(b);
  std::vector<BubbleCopy> list(copies, BubbleCopy{0, shared});
  const auto single = pairing_as_matching(b, cert.pairing);
  const int n = b.num_whites();
  std::vector<int> m;
  for (int k = 0; k < copies; ++k)
    for (int i = 0; i < n; ++i) m.push_back(k * n + single[i]);
  const int base = b.index_of(cert.base_white);
  for (int k = 1; k < copies; ++k) std::swap(m[base], m[k * n + base]);
  return FeynmanGraph(std::move(list), std::move(m));
}

namespace {

// Whether removing the color-0 edges at global white w and global black b
// disconnects the graph.
bool is_two_cut(const FeynmanGraph& g, int w, int b) {
  const int n = g.num_whites();
  detail::UnionFind uf(2 * n);
  int parts = 2 * n;
  for (int x = 0; x < n; ++x) {
    for (Color c = 1; c <= g.d(); ++c)
      if (uf.unite(x, n + g.color_neighbor_of_white(x, c))) --parts;
    if (x == w || g.black_of_white()[x] == b) continue;
    if (uf.unite(x, n + g.black_of_white()[x])) --parts;
  }
  return parts > 1;
}

}  // namespace

TwoCutStatus maximal_2cut_check(const FeynmanGraph& g, int marked_copy) {
  if (marked_copy < 0 || marked_copy >= g.num_copies()) throw Error(Errc::InvalidArgument, "no bubble copy " + std::to_string(marked_copy));
  const Bubble& b = *g.copies()[marked_copy].bubble;
  const int n = b.num_whites();
  const int w0 = g.global_white({marked_copy, b.id_at(0)});
  const int b0 = g.global_black({marked_copy, b.id_at(n)});
  std::vector<char> ok(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int w = w0 + i, bl = b0 + j;
      ok[i * n + j] = g.black_of_white()[w] == bl || is_two_cut(g, w, bl);
    }
  }
  auto valid = [&](const std::vector<int>& pairing) {
    for (int i = 0; i < n; ++i)
      if (!ok[i * n + pairing[i]]) return false;
    return true;
  };
  for (const auto& p : dominant_pairings(b, std::max(9, n)))
    if (valid(p)) return TwoCutStatus::Maximal2Cut;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (valid(perm)) return TwoCutStatus::TwoCutOnly;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return TwoCutStatus::Neither;
}

namespace {

Bubble quartic_with_ids(int d, const QuarticNode& q) {
  const auto [w0, b0, w1, b1] = q.vertices;
  RawBubble raw{d, {w0, w1}, {b0, b1}, {}};
  for (Color c = 1; c <= d; ++c) {
    if (q.colors.contains(c)) {
      raw.edges.push_back({c, w0, b1});
      raw.edges.push_back({c, w1, b0});
    } else {
      raw.edges.push_back({c, w0, b0});
      raw.edges.push_back({c, w1, b1});
    }
  }
  return Bubble::validate(raw);
}

}  // namespace

FeynmanGraph as_quartic_graph(const GluedFeynmanGraph& g) {
  std::vector<BubbleCopy> copies;
  std::vector<std::map<VertexId, int>> where(g.copies.size());
  for (std::size_t k = 0; k < g.copies.size(); ++k) {
    for (const auto& q : g.copies[k].quartics) {
      for (VertexId v : q.vertices) where[k][v] = static_cast<int>(copies.size());
      copies.push_back({g.interactions.at(k), std::make_shared<const Bubble>(quartic_with_ids(g.d, q))});
    }
  }
  std::vector<std::pair<VertexRef, VertexRef>> pairs;
  for (std::size_t k = 0; k < g.copies.size(); ++k)
    for (const auto& [w, b] : g.copies[k].dashed) pairs.push_back({{where[k].at(w), w}, {where[k].at(b), b}});
  for (const auto& [w, b] : g.external)
    pairs.push_back({{where.at(w.copy).at(w.id), w.id}, {where.at(b.copy).at(b.id), b.id}});
  return FeynmanGraph::from_pairs(std::move(copies), pairs);
}

FeynmanGraph surjection_S(const GluedFeynmanGraph& g) {
  std::vector<BubbleCopy> copies;
  for (std::size_t k = 0; k < g.copies.size(); ++k)
    copies.push_back({g.interactions.at(k), std::make_shared<const Bubble>(boundary(g.copies[k]))});
  return FeynmanGraph::from_pairs(std::move(copies), g.external);
}

GluedFeynmanGraph lift(const FeynmanGraph& g, const std::vector<GluingGraph>& h_of_copy) {
  if (static_cast<int>(h_of_copy.size()) != g.num_copies()) {
    throw Error(Errc::InvalidArgument, "one gluing graph per bubble copy is required");
  }
  GluedFeynmanGraph out;
  out.d = g.d();
  for (int k = 0; k < g.num_copies(); ++k) {
    if (!(boundary(h_of_copy[k]) == *g.copies()[k].bubble)) {
      throw Error(Errc::CertificateMismatch, "gluing graph " + std::to_string(k) + " does not bound its bubble copy");
    }
    out.interactions.push_back(g.copies()[k].interaction);
    out.copies.push_back(h_of_copy[k]);
  }
  out.external = g.matching_pairs();
  return out;
}

}  // namespace melonforge
