#include "graph_util.hpp"

#include <algorithm>

namespace melonforge::detail {

BlockDecomposition blocks_and_bridges(const Multigraph& g) {
  const int m = static_cast<int>(g.edges.size());
  BlockDecomposition out;
  out.bridge.assign(m, false);
  out.block.assign(m, -1);
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);  // (neighbour, edge)
  for (int e = 0; e < m; ++e) {
    const auto [u, v] = g.edges[e];
    if (u == v) {
      out.block[e] = out.num_blocks++;
      continue;
    }
    adj[u].push_back({v, e});
    adj[v].push_back({u, e});
  }
  std::vector<int> disc(g.n, -1), low(g.n, 0);
  std::vector<int> edge_stack;
  int timer = 0;
  struct Frame {
    int v;
    int parent_edge;
    std::size_t next;
  };
  for (int root = 0; root < g.n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        const auto [w, e] = adj[f.v][f.next++];
        if (e == f.parent_edge) continue;
        if (disc[w] < 0) {
          edge_stack.push_back(e);
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(e);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const int v = f.v;
      const int pe = f.parent_edge;
      stack.pop_back();
      if (stack.empty()) break;
      const int u = stack.back().v;
      low[u] = std::min(low[u], low[v]);
      if (low[v] > disc[u]) out.bridge[pe] = true;
      if (low[v] >= disc[u]) {
        const int id = out.num_blocks++;
        while (true) {
          const int e = edge_stack.back();
          edge_stack.pop_back();
          out.block[e] = id;
          if (e == pe) break;
        }
      }
    }
  }
  return out;
}

}  // namespace melonforge::detail
