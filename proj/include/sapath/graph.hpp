#pragma once
// Straight-line graph drawings: vertex coordinates plus an undirected edge
// list with normalized (sorted, deduplicated) pairs.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sapath/geom.hpp"

namespace sapath {

template <class T>
struct GraphDrawing {
  std::vector<Point<T>> vertices;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted, unique

  int dim() const { return vertices.empty() ? 2 : vertices.front().dim; }

  void normalize() {
    for (auto& e : edges)
      if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }

  void validate() const {
    int n = static_cast<int>(vertices.size());
    int d = dim();
    for (const auto& p : vertices) {
      if (p.dim != d) throw std::invalid_argument("drawing: mixed dimensions");
      for (int k = 0; k < 3; ++k)
        if (!finite_coord(p.c[k])) throw std::invalid_argument("drawing: non-finite coordinate");
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return vertices[a].c < vertices[b].c;
    });
    for (int i = 1; i < n; ++i)
      if (vertices[order[i - 1]] == vertices[order[i]])
        throw std::invalid_argument("drawing: coincident vertices");
    for (const auto& e : edges) {
      if (e.first < 0 || e.second >= n) throw std::invalid_argument("drawing: edge index out of range");
      if (e.first == e.second) throw std::invalid_argument("drawing: self-loop");
    }
  }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(vertices.size());
    for (const auto& e : edges) {
      adj[e.first].push_back(e.second);
      adj[e.second].push_back(e.first);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
  }

  Polyline<T> embed_path(const std::vector<int>& path) const {
    Polyline<T> p;
    p.v.reserve(path.size());
    for (int idx : path) p.v.push_back(vertices[idx]);
    return p;
  }
};

}  // namespace sapath
