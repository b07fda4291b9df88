#pragma once
// Tree shapes and the linear-time drawability classification: subdivisions
// of K_{1,4}, windmill subgraphs (crab-free max-degree-3 trees), and the
// non-drawable cases with witnesses.

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace sapath {

struct TreeShape {
  int n = 0;
  std::vector<std::vector<int>> adj;

  static TreeShape from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    TreeShape t;
    t.n = n;
    t.adj.assign(n, {});
    for (auto [a, b] : edges) {
      if (a < 0 || a >= n || b < 0 || b >= n || a == b)
        throw std::invalid_argument("tree: bad edge");
      t.adj[a].push_back(b);
      t.adj[b].push_back(a);
    }
    for (auto& nbrs : t.adj) std::sort(nbrs.begin(), nbrs.end());
    t.validate();
    return t;
  }

  int degree(int v) const { return static_cast<int>(adj[v].size()); }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
    return d;
  }

  void validate() const {
    if (n <= 0) throw std::invalid_argument("tree: empty");
    std::size_t m = 0;
    for (const auto& nbrs : adj) m += nbrs.size();
    if (m != 2u * (n - 1)) throw std::invalid_argument("tree: edge count is not n-1");
    // Connectivity.
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++count;
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    if (count != n) throw std::invalid_argument("tree: not connected");
  }
};

enum class TreeClassTag { K14Subdivision, WindmillSubgraph, NotDrawable };
enum class NotDrawableReason { None, DegreeGe5, Degree4NotK14, TwoCanonical };

struct TreeClass {
  TreeClassTag tag = TreeClassTag::WindmillSubgraph;
  NotDrawableReason reason = NotDrawableReason::None;
  std::vector<int> witness;  // offending vertices, if any
};

/// Degree-3 vertices s such that each of the three components of T \ s
/// contains a degree-3 vertex. Two-pass rerooting, O(n).
inline std::vector<int> canonical_vertices(const TreeShape& t) {
  int n = t.n;
  if (n == 1) return {};
  // Iterative DFS order from root 0.
  std::vector<int> parent(n, -1), order;
  order.reserve(n);
  {
    std::vector<int> stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int w : t.adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = v;
          stack.push_back(w);
        }
    }
  }
  auto deg3 = [&](int v) { return t.degree(v) == 3; };
  // down[v]: subtree of v (rooted at 0) contains a degree-3 vertex.
  std::vector<char> down(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    int v = order[i];
    if (deg3(v)) down[v] = 1;
    if (parent[v] != -1 && down[v]) down[parent[v]] = 1;
  }
  // up[v]: the component of T \ v containing parent(v) has a degree-3 vertex.
  std::vector<char> up(n, 0);
  for (int v : order) {
    int p = parent[v];
    if (p == -1) continue;
    bool has = up[p] || deg3(p);
    if (!has) {
      for (int w : t.adj[p]) {
        if (w == v || w == parent[p]) continue;
        if (down[w]) {
          has = true;
          break;
        }
      }
    }
    up[v] = has;
  }
  std::vector<int> result;
  for (int v = 0; v < n; ++v) {
    if (!deg3(v)) continue;
    bool all = true;
    for (int w : t.adj[v]) {
      bool comp_has = (w == parent[v]) ? up[v] : down[w];
      if (!comp_has) {
        all = false;
        break;
      }
    }
    if (all) result.push_back(v);
  }
  return result;
}

/// Linear-time drawability classification.
inline TreeClass classify_tree(const TreeShape& t) {
  int dmax = t.max_degree();
  if (dmax >= 5) {
    TreeClass c{TreeClassTag::NotDrawable, NotDrawableReason::DegreeGe5, {}};
    for (int v = 0; v < t.n; ++v)
      if (t.degree(v) >= 5) {
        c.witness.push_back(v);
        break;
      }
    return c;
  }
  if (dmax == 4) {
    // K_{1,4} subdivision: exactly one degree-4 vertex, all others degree <= 2.
    int deg4 = -1;
    bool ok = true;
    for (int v = 0; v < t.n; ++v) {
      int d = t.degree(v);
      if (d == 4) {
        if (deg4 != -1) ok = false;
        deg4 = v;
      } else if (d == 3) {
        ok = false;
      }
    }
    if (ok) return TreeClass{TreeClassTag::K14Subdivision, NotDrawableReason::None, {deg4}};
    return TreeClass{TreeClassTag::NotDrawable, NotDrawableReason::Degree4NotK14, {}};
  }
  auto canon = canonical_vertices(t);
  if (canon.size() >= 2)
    return TreeClass{TreeClassTag::NotDrawable, NotDrawableReason::TwoCanonical,
                     {canon[0], canon[1]}};
  return TreeClass{TreeClassTag::WindmillSubgraph, NotDrawableReason::None, canon};
}

}  // namespace sapath
