#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace melonforge::detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Undirected multigraph with parallel edges and self-loops.
struct Multigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

struct BlockDecomposition {
  std::vector<bool> bridge;
  std::vector<int> block;  // block id per edge
  int num_blocks = 0;
};

BlockDecomposition blocks_and_bridges(const Multigraph& g);

}  // namespace melonforge::detail
