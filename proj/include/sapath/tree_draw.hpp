#pragma once
// Constructive self-approaching tree drawings: the K_{1,4} plus-sign case,
// windmill embeddings with explicit sweep geometry, and the slab verifier.

#include <cmath>
#include <optional>

#include "sapath/graph.hpp"
#include "sapath/tree.hpp"

namespace sapath {

/// Geometry knobs for the windmill construction. gamma and leaf_len are
/// derived per sweep from eps and the sweep length t.
struct WindmillParams {
  double eps = 0.1;  // small angle, in (0, pi/6)
  int max_retries = 8;

  static double gamma_for(double eps, int t) {
    return std::sin(kPi / 4 - eps / 2 - kPi / 6) / std::max(t, 1);
  }
  static double leaf_len_for(double eps, int t) {
    return gamma_for(eps, t) * std::tan(eps / (4 * std::max(t, 1)));
  }
};

struct TreeVerifyWitness {
  std::pair<int, int> edge;          // the edge whose slab is violated
  bool offending_is_vertex = false;
  std::pair<int, int> offending_edge{-1, -1};
  int offending_vertex = -1;
};

struct TreeVerifyResult {
  bool ok = true;
  std::optional<TreeVerifyWitness> witness;
};

///// Slab condition of self-approaching tree drawings: for every edge (u,v),
/// no other edge (as a closed segment) and no other vertex may intersect the
/// open slab(uv). O(m^2) segment-slab tests.
template <class T>
TreeVerifyResult verify_tree_drawing(const GraphDrawing<T>& g, const Tolerance& tol = Tolerance{}) {
  g.validate();
  int n = static_cast<int>(g.vertices.size());
  if (n == 0) return {true, std::nullopt};
  if (g.edges.size() != static_cast<std::size_t>(n - 1))
    throw std::invalid_argument("verify_tree_drawing: edge set is not a tree");
  {
    // Connectivity check on the edge set.
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : g.edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
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
    if (n > 0 && count != n) throw std::invalid_argument("verify_tree_drawing: edge set is not a tree");
  }
  for (const auto& e : g.edges) {
    Slab<T> slab{g.vertices[e.first], g.vertices[e.second]};
    for (const auto& f : g.edges) {
      if (f == e) continue;
      if (segment_intersects_slab(slab, g.vertices[f.first], g.vertices[f.second], tol)) {
        TreeVerifyWitness w;
        w.edge = e;
        w.offending_is_vertex = false;
        w.offending_edge = f;
        return {false, w};
      }
    }
    for (int v = 0; v < n; ++v) {
      if (v == e.first || v == e.second) continue;
      if (point_in_open_slab(slab, g.vertices[v], tol)) {
        TreeVerifyWitness w;
        w.edge = e;
        w.offending_is_vertex = true;
        w.offending_vertex = v;
        return {false, w};
      }
    }
  }
  return {true, std::nullopt};
}

enum class DrawStatus { Ok, NotDrawable, ConstructionFailed };

struct TreeDrawingResult {
  DrawStatus status = DrawStatus::Ok;
  GraphDrawing<double> drawing;
  double eps_used = 0;
};

namespace detail {

inline Point<double> polar(double r, double angle) {
  return Point<double>(r * std::cos(angle), r * std::sin(angle));
}

inline Point<double> lerp(const Point<double>& a, const Point<double>& b, double f) {
  return Point<double>(a.x() + f * (b.x() - a.x()), a.y() + f * (b.y() - a.y()));
}

// Rooted decomposition of one branch into spine + pendant paths.
struct BranchPlan {
  std::vector<int> spine;         // vertices from the root's neighbor outward
  std::vector<int> chain;         // positions (indices into spine) of degree-3 vertices
  std::vector<std::vector<int>> pendants;  // pendant path per chain vertex, in order
};

// Decompose the subtree hanging from root-neighbor c. Assumes the tree is a
// drawable windmill subgraph, so each degree-3 vertex has at most one child
// subtree containing further degree-3 vertices.
inline BranchPlan plan_branch(const TreeShape& t, int root, int c) {
  int n = t.n;
  std::vector<int> parent(n, -2);
  std::vector<int> order;
  parent[root] = -1;
  parent[c] = root;
  order.push_back(c);
  for (std::size_t head = 0; head < order.size(); ++head) {
    int v = order[head];
    for (int w : t.adj[v])
      if (parent[w] == -2 && w != parent[v]) {
        parent[w] = v;
        order.push_back(w);
      }
  }
  std::vector<char> has3(n, 0);
  for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
    int v = order[i];
    if (t.degree(v) == 3) has3[v] = 1;
    if (has3[v] && parent[v] != root && parent[v] >= 0) has3[parent[v]] = 1;
  }
  auto children = [&](int v) {
    std::vector<int> ch;
    for (int w : t.adj[v])
      if (w != parent[v]) ch.push_back(w);
    return ch;
  };
  auto descend_path = [&](int start, std::vector<int>& out) {
    int cur = start;
    out.push_back(cur);
    while (true) {
      auto ch = children(cur);
      if (ch.empty()) break;
      cur = ch.front();
      out.push_back(cur);
    }
  };

  BranchPlan plan;
  int cur = c;
  plan.spine.push_back(cur);
  while (true) {
    if (t.degree(cur) == 3) {
      plan.chain.push_back(static_cast<int>(plan.spine.size()) - 1);
      auto ch = children(cur);
      int next = -1, pend = -1;
      for (int w : ch)
        if (has3[w]) next = w;
      if (next == -1) {
        // Last chain vertex: first child continues the spine, second hangs.
        next = ch[0];
        pend = ch[1];
      } else {
        for (int w : ch)
          if (w != next) pend = w;
      }
      std::vector<int> pendant;
      descend_path(pend, pendant);
      plan.pendants.push_back(std::move(pendant));
      plan.spine.push_back(next);
      cur = next;
    } else {
      auto ch = children(cur);
      if (ch.empty()) break;
      plan.spine.push_back(ch.front());
      cur = ch.front();
    }
  }
  return plan;
}

// Place one branch of a windmill embedding. Writes coordinates for all
// vertices in the plan.
inline void place_branch(const BranchPlan& plan, double base_angle, double eps,
                         std::vector<Point<double>>& pos) {
  Point<double> origin(0.0, 0.0);
  Point<double> l = polar(1.0, base_angle);
  if (plan.chain.empty()) {
    // Pure path: subdivide the unit K_{1,3} edge.
    int L = static_cast<int>(plan.spine.size());
    for (int j = 0; j < L; ++j)
      pos[plan.spine[j]] = lerp(origin, l, double(j + 1) / L);
    return;
  }
  int t_sweep = static_cast<int>(plan.chain.size()) + 1;
  double gamma = WindmillParams::gamma_for(eps, t_sweep);
  double leaf_len = WindmillParams::leaf_len_for(eps, t_sweep);
  double ray_a = base_angle + (kPi / 4 + eps / 2);
  double ray_b = base_angle - (kPi / 4 + eps / 2);

  // Shaft anchor points h_1 .. h_t; the final edge is parallel to ray A.
  std::vector<Point<double>> shaft{l};
  std::vector<double> dirs;
  for (int j = 1; j <= t_sweep - 1; ++j) {
    double phi;
    if (t_sweep == 2)
      phi = ray_a;
    else
      phi = ray_a - eps / 2 + double(j - 1) * (eps / 2) / (t_sweep - 2);
    dirs.push_back(phi);
    const Point<double>& prev = shaft.back();
    shaft.push_back(Point<double>(prev.x() + gamma * std::cos(phi),
                                  prev.y() + gamma * std::sin(phi)));
  }

  // Spine placement: prefix subdivides the unit edge, chain vertices sit on
  // shaft anchors, spine segments between them subdivide shaft edges.
  int first_chain = plan.chain.front();
  for (int j = 0; j < first_chain; ++j)
    pos[plan.spine[j]] = lerp(origin, shaft[0], double(j + 1) / (first_chain + 1));
  for (std::size_t ci = 0; ci < plan.chain.size(); ++ci)
    pos[plan.spine[plan.chain[ci]]] = shaft[ci];
  for (std::size_t ci = 0; ci + 1 < plan.chain.size(); ++ci) {
    int a = plan.chain[ci], b = plan.chain[ci + 1];
    for (int j = a + 1; j < b; ++j)
      pos[plan.spine[j]] = lerp(shaft[ci], shaft[ci + 1], double(j - a) / (b - a));
  }
  int last_chain = plan.chain.back();
  int tail = static_cast<int>(plan.spine.size()) - 1 - last_chain;
  for (int j = 1; j <= tail; ++j)
    pos[plan.spine[last_chain + j]] =
        lerp(shaft[plan.chain.size() - 1], shaft[plan.chain.size()], double(j) / tail);

  // Pendant leaves: the one at h_1 lies on ray B inside the reflex angle;
  // the rest bisect the reflex angle of their incident shaft edges.
  for (std::size_t ci = 0; ci < plan.chain.size(); ++ci) {
    const Point<double>& anchor = shaft[ci];
    double leaf_angle;
    if (ci == 0) {
      leaf_angle = ray_b;
    } else {
      double in_angle = dirs[ci - 1] + kPi;  // toward previous anchor
      double out_angle = dirs[ci];           // toward next anchor
      double mx = std::cos(in_angle) + std::cos(out_angle);
      double my = std::sin(in_angle) + std::sin(out_angle);
      leaf_angle = std::atan2(-my, -mx);
    }
    Point<double> tip(anchor.x() + leaf_len * std::cos(leaf_angle),
                      anchor.y() + leaf_len * std::sin(leaf_angle));
    const auto& pendant = plan.pendants[ci];
    int k = static_cast<int>(pendant.size());
    for (int j = 0; j < k; ++j)
      pos[pendant[j]] = lerp(anchor, tip, double(j + 1) / k);
  }
}

inline GraphDrawing<double> drawing_from_positions(const TreeShape& t,
                                                   const std::vector<Point<double>>& pos) {
  GraphDrawing<double> g;
  g.vertices = pos;
  for (int v = 0; v < t.n; ++v)
    for (int w : t.adj[v])
      if (v < w) g.edges.emplace_back(v, w);
  g.normalize();
  return g;
}

}  // namespace detail

/// Construct a verified self-approaching drawing, or report NotDrawable.
/// The windmill case retries with halved eps until the slab verifier passes.
inline TreeDrawingResult draw_tree(const TreeShape& t, const WindmillParams& params = WindmillParams{}) {
  TreeClass cls = classify_tree(t);
  if (cls.tag == TreeClassTag::NotDrawable) return {DrawStatus::NotDrawable, {}, 0};

  std::vector<Point<double>> pos(t.n, Point<double>(0.0, 0.0));

  if (t.n == 1) {
    return {DrawStatus::Ok, detail::drawing_from_positions(t, pos), params.eps};
  }

  if (cls.tag == TreeClassTag::K14Subdivision) {
    int center = cls.witness.front();
    pos[center] = Point<double>(0.0, 0.0);
    static const double dirs[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    int b = 0;
    for (int c : t.adj[center]) {
      // Walk the subdivided ray outward with unit spacing.
      int prev = center, cur = c, step = 1;
      while (true) {
        pos[cur] = Point<double>(step * dirs[b][0], step * dirs[b][1]);
        int next = -1;
        for (int w : t.adj[cur])
          if (w != prev) next = w;
        if (next == -1) break;
        prev = cur;
        cur = next;
        ++step;
      }
      ++b;
    }
    auto g = detail::drawing_from_positions(t, pos);
    return {DrawStatus::Ok, std::move(g), params.eps};
  }

  if (t.max_degree() <= 2) {
    // Path: a straight line with unit spacing.
    int start = 0;
    for (int v = 0; v < t.n; ++v)
      if (t.degree(v) == 1) {
        start = v;
        break;
      }
    int prev = -1, cur = start, step = 0;
    while (cur != -1) {
      pos[cur] = Point<double>(double(step), 0.0);
      int next = -1;
      for (int w : t.adj[cur])
        if (w != prev) next = w;
      prev = cur;
      cur = next;
      ++step;
    }
    auto g = detail::drawing_from_positions(t, pos);
    return {DrawStatus::Ok, std::move(g), params.eps};
  }

  // Windmill case. Root at the canonical vertex when present, otherwise at
  // any degree-3 vertex (no canonical vertex means at most one branch holds
  // further degree-3 vertices).
  int root = -1;
  if (!cls.witness.empty())
    root = cls.witness.front();
  else
    for (int v = 0; v < t.n; ++v)
      if (t.degree(v) == 3) {
        root = v;
        break;
      }

  std::vector<detail::BranchPlan> plans;
  for (int c : t.adj[root]) plans.push_back(detail::plan_branch(t, root, c));

  double eps = params.eps;
  for (int attempt = 0; attempt <= params.max_retries; ++attempt, eps /= 2) {
    pos.assign(t.n, Point<double>(0.0, 0.0));
    for (std::size_t k = 0; k < plans.size(); ++k)
      detail::place_branch(plans[k], kPi / 2 + double(k) * 2 * kPi / 3, eps, pos);
    auto g = detail::drawing_from_positions(t, pos);
    if (verify_tree_drawing(g).ok) return {DrawStatus::Ok, std::move(g), eps};
  }
  return {DrawStatus::ConstructionFailed, {}, eps};
}

}  // namespace sapath
