#pragma once
// Linear-size increasing-chord Steiner networks: compressed quadtree,
// well-separated pair decomposition, square/bridge construction in two
// rotated frames, and verified monotone routing queries.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "sapath/graph.hpp"
#include "sapath/path_check.hpp"

namespace sapath {

/// Angle between line pq and the x-axis, the smaller of the two, in [0, pi/2].
inline double pair_angle(const Point<double>& p, const Point<double>& q) {
  if (p == q) throw std::invalid_argument("pair_angle: coincident points");
  return std::atan2(std::abs(q.y() - p.y()), std::abs(q.x() - p.x()));
}

/// Axis-aligned square, stored as center plus half-width. half == 0 encodes
/// the degenerate point-square used for leaves in separation tests.
struct SquareRegion {
  double cx = 0, cy = 0, half = 0;

  double xmin() const { return cx - half; }
  double xmax() const { return cx + half; }
  double ymin() const { return cy - half; }
  double ymax() const { return cy + half; }
  double diam() const { return 2 * half * std::sqrt(2.0); }

  double dist(const SquareRegion& o) const {
    double dx = std::max(0.0, std::max(xmin() - o.xmax(), o.xmin() - xmax()));
    double dy = std::max(0.0, std::max(ymin() - o.ymax(), o.ymin() - ymax()));
    return std::hypot(dx, dy);
  }
};

struct QuadtreeNode {
  SquareRegion square;
  std::array<std::unique_ptr<QuadtreeNode>, 4> children;  // quadrants, may be null
  std::optional<Point<double>> point;                      // set on leaves
  std::unique_ptr<QuadtreeNode> compressed_child;          // single-descendant link
  std::vector<int> terminal_ids;                           // input indices under this node

  bool is_leaf() const { return point.has_value(); }
};

struct WspdPair {
  SquareRegion a, b;
  bool separated_h = false;  // separated by a horizontal line (disjoint y-ranges)
  bool separated_v = false;  // separated by a vertical line (disjoint x-ranges)
  std::optional<std::pair<Point<double>, Point<double>>> bridge;
  const QuadtreeNode* a_node = nullptr;  // present when built from a tree
  const QuadtreeNode* b_node = nullptr;
};

namespace detail {

inline const QuadtreeNode* resolve(const QuadtreeNode* u) {
  while (u->compressed_child) u = u->compressed_child.get();
  return u;
}

// Quadrant assignment: points exactly on a split line go to the lower/left
// child, so x <= cx is left and y <= cy is bottom.
inline int quadrant_of(const SquareRegion& s, const Point<double>& p) {
  int qx = p.x() <= s.cx ? 0 : 1;
  int qy = p.y() <= s.cy ? 0 : 1;
  return qy * 2 + qx;
}

inline SquareRegion quadrant_square(const SquareRegion& s, int q) {
  double h = s.half / 2;
  double cx = s.cx + ((q & 1) ? h : -h);
  double cy = s.cy + ((q & 2) ? h : -h);
  return SquareRegion{cx, cy, h};
}

struct IndexedPoint {
  Point<double> p;
  int id;
};

inline std::unique_ptr<QuadtreeNode> build_quadtree_rec(const SquareRegion& sq,
                                                        std::vector<IndexedPoint> pts,
                                                        double root_width) {
  auto node = std::make_unique<QuadtreeNode>();
  node->square = sq;
  for (const auto& ip : pts) node->terminal_ids.push_back(ip.id);
  std::sort(node->terminal_ids.begin(), node->terminal_ids.end());
  if (pts.size() == 1) {
    node->point = pts.front().p;
    return node;
  }
  // Descend through quadrants while all points share one, then either attach
  // the branching square directly or behind a compressed link.
  SquareRegion cur = sq;
  std::array<std::vector<IndexedPoint>, 4> parts;
  while (true) {
    if (cur.half <= root_width * 0x1p-50)
      throw std::invalid_argument("build_quadtree: points too close relative to the spread");
    for (auto& part : parts) part.clear();
    for (const auto& ip : pts) parts[quadrant_of(cur, ip.p)].push_back(ip);
    int nonempty = 0, which = -1;
    for (int q = 0; q < 4; ++q)
      if (!parts[q].empty()) {
        ++nonempty;
        which = q;
      }
    if (nonempty > 1) break;
    cur = quadrant_square(cur, which);
  }
  auto attach = node.get();
  if (cur.cx != sq.cx || cur.cy != sq.cy || cur.half != sq.half) {
    node->compressed_child = std::make_unique<QuadtreeNode>();
    node->compressed_child->square = cur;
    node->compressed_child->terminal_ids = node->terminal_ids;
    attach = node->compressed_child.get();
  }
  for (int q = 0; q < 4; ++q)
    if (!parts[q].empty())
      attach->children[q] =
          build_quadtree_rec(quadrant_square(cur, q), std::move(parts[q]), root_width);
  return node;
}

}  // namespace detail

/// Compressed quadtree over >= 1 distinct points. The root square has
/// power-of-two width and is snapped so that every square boundary is an
/// exactly representable dyadic coordinate (squares at different levels then
/// share corner coordinates bit-for-bit).
inline std::unique_ptr<QuadtreeNode> build_quadtree(const std::vector<Point<double>>& points) {
  if (points.empty()) throw std::invalid_argument("build_quadtree: no points");
  {
    auto sorted = points;
    std::sort(sorted.begin(), sorted.end(),
              [](const Point<double>& a, const Point<double>& b) { return a.c < b.c; });
    for (std::size_t i = 1; i < sorted.size(); ++i)
      if (sorted[i] == sorted[i - 1])
        throw std::invalid_argument("build_quadtree: duplicate points");
  }
  double xmin = points[0].x(), xmax = xmin, ymin = points[0].y(), ymax = ymin;
  for (const auto& p : points) {
    if (!std::isfinite(p.x()) || !std::isfinite(p.y()))
      throw std::invalid_argument("build_quadtree: non-finite coordinate");
    if (p.dim != 2) throw std::invalid_argument("build_quadtree: 2D points only");
    xmin = std::min(xmin, p.x());
    xmax = std::max(xmax, p.x());
    ymin = std::min(ymin, p.y());
    ymax = std::max(ymax, p.y());
  }
  double w0 = std::max(xmax - xmin, ymax - ymin);
  double width = 1.0;
  if (w0 > 0) width = std::exp2(std::ceil(std::log2(w0)) + 1);
  SquareRegion root;
  while (true) {
    // Snap the center to a multiple of width/2 for exact dyadic boundaries.
    double g = width / 2;
    root = SquareRegion{std::round((xmin + xmax) / 2 / g) * g,
                        std::round((ymin + ymax) / 2 / g) * g, width / 2};
    if (root.xmin() <= xmin && xmax <= root.xmax() && root.ymin() <= ymin &&
        ymax <= root.ymax())
      break;
    width *= 2;
  }
  std::vector<detail::IndexedPoint> pts;
  pts.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    pts.push_back({points[i], static_cast<int>(i)});
  return detail::build_quadtree_rec(root, std::move(pts), width);
}

inline int quadtree_node_count(const QuadtreeNode& node) {
  int count = 1;
  if (node.compressed_child) count += quadtree_node_count(*node.compressed_child);
  for (const auto& c : node.children)
    if (c) count += quadtree_node_count(*c);
  return count;
}

namespace detail {

// Square used in separation tests: the point itself for leaves.
inline SquareRegion sep_square(const QuadtreeNode* u) {
  if (u->is_leaf()) return SquareRegion{u->point->x(), u->point->y(), 0};
  return u->square;
}

inline bool well_separated(const SquareRegion& a, const SquareRegion& b, double eps) {
  double d = a.dist(b);
  return d > 0 && std::max(a.diam(), b.diam()) <= eps * d;
}

inline void wspd_rec(const QuadtreeNode* u, const QuadtreeNode* v, double eps,
                     std::vector<WspdPair>& out) {
  u = resolve(u);
  v = resolve(v);
  SquareRegion a = sep_square(u), b = sep_square(v);
  if (well_separated(a, b, eps)) {
    WspdPair pair;
    pair.a = a;
    pair.b = b;
    pair.a_node = u;
    pair.b_node = v;
    pair.separated_v = a.xmax() <= b.xmin() || b.xmax() <= a.xmin();
    pair.separated_h = a.ymax() <= b.ymin() || b.ymax() <= a.ymin();
    out.push_back(pair);
    return;
  }
  // Split the node with the larger square (leaves count as width 0).
  const QuadtreeNode* split = u;
  const QuadtreeNode* keep = v;
  double wu = u->is_leaf() ? 0 : u->square.half;
  double wv = v->is_leaf() ? 0 : v->square.half;
  if (wv > wu) {
    split = v;
    keep = u;
  }
  for (const auto& c : split->children)
    if (c) wspd_rec(c.get(), keep, eps, out);
}

inline void wspd_all(const QuadtreeNode* u, double eps, std::vector<WspdPair>& out) {
  u = resolve(u);
  if (u->is_leaf()) return;
  std::vector<const QuadtreeNode*> ch;
  for (const auto& c : u->children)
    if (c) ch.push_back(c.get());
  for (std::size_t i = 0; i < ch.size(); ++i)
    for (std::size_t j = i + 1; j < ch.size(); ++j) wspd_rec(ch[i], ch[j], eps, out);
  for (const QuadtreeNode* c : ch) wspd_all(c, eps, out);
}

}  // namespace detail

/// Well-separated pair decomposition: every ordered terminal pair is covered
/// by exactly one emitted unordered pair, with diam(A), diam(B) <= eps * d(A,B)
/// (asserted per pair at build time).
inline std::vector<WspdPair> build_wspd(const QuadtreeNode& root, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("build_wspd: eps must be positive");
  std::vector<WspdPair> out;
  detail::wspd_all(&root, eps, out);
  for (const auto& p : out)
    if (!detail::well_separated(p.a, p.b, eps))
      throw std::logic_error("build_wspd: emitted pair is not well-separated");
  return out;
}

/// Largest separation parameter for which every pair whose angle falls in the
/// routing window [pi/8, 3pi/8] is guaranteed to be separated both
/// horizontally and vertically: 2*eps/(1-2*eps) < tan(pi/8).
inline double steiner_eps_max() {
  double t = std::tan(kPi / 8);
  return t / (2 * (1 + t));
}

struct RouteResult {
  enum class Frame { Axis, Rotated };
  Frame frame = Frame::Axis;
  std::vector<Point<double>> path;        // original-frame coordinates
  std::vector<Point<double>> path_frame;  // coordinates in the routing frame
};

namespace detail {

// One frame of the network: quadtree, pairs, the drawing, and the routing
// adjacency over the drawing's vertices after splitting overlapping
// collinear edges at every vertex that lies on them.
struct FrameNet {
  std::unique_ptr<QuadtreeNode> root;
  std::vector<WspdPair> pairs;
  GraphDrawing<double> g;
  std::vector<int> terminal_vertex;       // input index -> vertex id in g
  std::vector<std::vector<int>> routing;  // adjacency lists
};

struct CoordHash {
  std::size_t operator()(const std::pair<double, double>& p) const {
    std::uint64_t a = std::bit_cast<std::uint64_t>(p.first);
    std::uint64_t b = std::bit_cast<std::uint64_t>(p.second);
    a ^= b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2);
    return std::size_t(a * 0xff51afd7ed558ccdull);
  }
};

struct NetBuilder {
  std::unordered_map<std::pair<double, double>, int, CoordHash> vertex_id;
  GraphDrawing<double> g;

  int vertex(double x, double y) {
    if (x == 0) x = 0;  // fold -0.0 into +0.0 for bitwise hashing
    if (y == 0) y = 0;
    auto [it, inserted] = vertex_id.try_emplace({x, y}, int(g.vertices.size()));
    if (inserted) g.vertices.emplace_back(x, y);
    return it->second;
  }

  void segment(double x1, double y1, double x2, double y2) {
    if (x1 == x2 && y1 == y2) return;
    if (x1 != x2 && y1 != y2)
      throw std::logic_error("steiner segment must be axis-aligned");
    g.edges.emplace_back(vertex(x1, y1), vertex(x2, y2));
  }

  // Two axis-aligned links with the elbow taking the source x.
  void two_link(double sx, double sy, double tx, double ty) {
    segment(sx, sy, sx, ty);
    segment(sx, ty, tx, ty);
  }

  void square_boundary(const SquareRegion& s) {
    segment(s.xmin(), s.ymin(), s.xmax(), s.ymin());
    segment(s.xmax(), s.ymin(), s.xmax(), s.ymax());
    segment(s.xmin(), s.ymax(), s.xmax(), s.ymax());
    segment(s.xmin(), s.ymin(), s.xmin(), s.ymax());
  }
};

inline void add_tree_geometry(const QuadtreeNode& node, NetBuilder& nb) {
  nb.square_boundary(node.square);
  if (node.is_leaf()) {
    // 2-link monotone hookup from the terminal to each corner, with the
    // horizontal link leaving the terminal first.
    double px = node.point->x(), py = node.point->y();
    const double xs[2] = {node.square.xmin(), node.square.xmax()};
    const double ys[2] = {node.square.ymin(), node.square.ymax()};
    for (double cx : xs)
      for (double cy : ys) {
        nb.segment(px, py, cx, py);
        nb.segment(cx, py, cx, cy);
      }
  }
  if (node.compressed_child) {
    // Corner-to-corner connectors across the compressed link, elbow at
    // (x of inner corner, y of outer corner).
    const SquareRegion& in = node.compressed_child->square;
    const SquareRegion& out = node.square;
    nb.two_link(in.xmin(), in.ymin(), out.xmin(), out.ymin());
    nb.two_link(in.xmax(), in.ymin(), out.xmax(), out.ymin());
    nb.two_link(in.xmin(), in.ymax(), out.xmin(), out.ymax());
    nb.two_link(in.xmax(), in.ymax(), out.xmax(), out.ymax());
    add_tree_geometry(*node.compressed_child, nb);
  }
  for (const auto& c : node.children)
    if (c) add_tree_geometry(*c, nb);
}

inline void add_bridge(WspdPair& pair, NetBuilder& nb) {
  if (!(pair.separated_h && pair.separated_v)) return;
  const SquareRegion& a = pair.a;
  const SquareRegion& b = pair.b;
  // Facing corners: each square contributes the corner nearest the other.
  double ax = a.xmax() <= b.xmin() ? a.xmax() : a.xmin();
  double bx = a.xmax() <= b.xmin() ? b.xmin() : b.xmax();
  double ay = a.ymax() <= b.ymin() ? a.ymax() : a.ymin();
  double by = a.ymax() <= b.ymin() ? b.ymin() : b.ymax();
  pair.bridge = std::make_pair(Point<double>(ax, ay), Point<double>(bx, by));
  nb.two_link(ax, ay, bx, by);
}

inline std::vector<std::vector<int>> build_routing(const GraphDrawing<double>& g) {
  // Group edges and vertices by supporting line, merge the covered
  // intervals, and connect consecutive covered vertices.
  std::map<double, std::vector<std::pair<double, double>>> vert_iv, horz_iv;
  std::map<double, std::vector<std::pair<double, int>>> vert_pts, horz_pts;
  for (auto [i, j] : g.edges) {
    const auto& p = g.vertices[i];
    const auto& q = g.vertices[j];
    if (p.x() == q.x())
      vert_iv[p.x()].push_back(std::minmax(p.y(), q.y()));
    else if (p.y() == q.y())
      horz_iv[p.y()].push_back(std::minmax(p.x(), q.x()));
    else
      throw std::invalid_argument("build_routing: non-rectilinear edge");
  }
  for (int v = 0; v < int(g.vertices.size()); ++v) {
    const auto& p = g.vertices[v];
    if (vert_iv.count(p.x())) vert_pts[p.x()].push_back({p.y(), v});
    if (horz_iv.count(p.y())) horz_pts[p.y()].push_back({p.x(), v});
  }
  std::vector<std::vector<int>> adj(g.vertices.size());
  auto connect_line = [&](std::vector<std::pair<double, double>>& ivs,
                          std::vector<std::pair<double, int>>& pts) {
    std::sort(ivs.begin(), ivs.end());
    std::sort(pts.begin(), pts.end());
    std::size_t pi = 0;
    std::size_t k = 0;
    while (k < ivs.size()) {
      double lo = ivs[k].first, hi = ivs[k].second;
      ++k;
      while (k < ivs.size() && ivs[k].first <= hi) {
        hi = std::max(hi, ivs[k].second);
        ++k;
      }
      while (pi < pts.size() && pts[pi].first < lo) ++pi;
      int prev = -1;
      while (pi < pts.size() && pts[pi].first <= hi) {
        int v = pts[pi].second;
        if (prev != -1) {
          adj[prev].push_back(v);
          adj[v].push_back(prev);
        }
        prev = v;
        ++pi;
      }
    }
  };
  for (auto& [x, ivs] : vert_iv) connect_line(ivs, vert_pts[x]);
  for (auto& [y, ivs] : horz_iv) connect_line(ivs, horz_pts[y]);
  for (auto& nbrs : adj) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return adj;
}

inline FrameNet build_frame(const std::vector<Point<double>>& pts, double eps) {
  FrameNet f;
  f.root = build_quadtree(pts);
  f.pairs = build_wspd(*f.root, eps);
  NetBuilder nb;
  for (const auto& p : pts) nb.vertex(p.x(), p.y());
  add_tree_geometry(*f.root, nb);
  for (auto& pair : f.pairs) add_bridge(pair, nb);
  nb.g.normalize();
  f.g = std::move(nb.g);
  f.pairs.shrink_to_fit();
  f.g.vertices.shrink_to_fit();
  f.g.edges.shrink_to_fit();
  f.terminal_vertex.resize(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    f.terminal_vertex[i] = int(i);  // terminals were registered first, in order
  f.routing = build_routing(f.g);
  return f;
}

inline Point<double> rotate_cw45(const Point<double>& p) {
  const double s = std::sqrt(0.5);
  return Point<double>(s * (p.x() + p.y()), s * (p.y() - p.x()));
}

inline Point<double> rotate_ccw45(const Point<double>& p) {
  const double s = std::sqrt(0.5);
  return Point<double>(s * (p.x() - p.y()), s * (p.x() + p.y()));
}

}  // namespace detail

struct SteinerNetwork {
  detail::FrameNet axis, rotated;
  double eps = 0;
  std::vector<Point<double>> points;

  const GraphDrawing<double>& g() const { return axis.g; }
  const GraphDrawing<double>& g_rot() const { return rotated.g; }
  const std::vector<WspdPair>& pairs() const { return axis.pairs; }
  const std::vector<WspdPair>& pairs_rot() const { return rotated.pairs; }

  std::size_t size() const {
    return axis.g.vertices.size() + axis.g.edges.size() + rotated.g.vertices.size() +
           rotated.g.edges.size();
  }
};

/// Build the two-frame Steiner network for >= 2 distinct points.
inline SteinerNetwork build_network(const std::vector<Point<double>>& points, double eps) {
  if (points.size() < 2) throw std::invalid_argument("build_network: need >= 2 points");
  if (!(eps > 0) || eps > steiner_eps_max())
    throw std::invalid_argument("build_network: eps out of (0, eps_max]");
  SteinerNetwork net;
  net.eps = eps;
  net.points = points;
  net.axis = detail::build_frame(points, eps);
  std::vector<Point<double>> rot;
  rot.reserve(points.size());
  for (const auto& p : points) rot.push_back(detail::rotate_cw45(p));
  net.rotated = detail::build_frame(rot, eps);
  return net;
}

namespace detail {

// Monotone DAG search from vertex s to t within the axis-parallel rectangle
// spanned by the two endpoints; every step moves weakly toward t.
inline bool monotone_route(const FrameNet& f, int s, int t, std::vector<int>& out) {
  const auto& vs = f.g.vertices;
  double sx = vs[t].x() >= vs[s].x() ? 1 : -1;
  double sy = vs[t].y() >= vs[s].y() ? 1 : -1;
  double lox = std::min(vs[s].x(), vs[t].x()), hix = std::max(vs[s].x(), vs[t].x());
  double loy = std::min(vs[s].y(), vs[t].y()), hiy = std::max(vs[s].y(), vs[t].y());
  std::vector<char> visited(vs.size(), 0);
  std::vector<int> parent(vs.size(), -1);
  std::vector<int> stack{s};
  visited[s] = 1;
  bool found = false;
  while (!stack.empty() && !found) {
    int v = stack.back();
    stack.pop_back();
    if (v == t) {
      found = true;
      break;
    }
    for (int w : f.routing[v]) {
      if (visited[w]) continue;
      double dx = vs[w].x() - vs[v].x();
      double dy = vs[w].y() - vs[v].y();
      if (dx * sx < 0 || dy * sy < 0) continue;  // must move toward t
      if (vs[w].x() < lox || vs[w].x() > hix || vs[w].y() < loy || vs[w].y() > hiy)
        continue;
      visited[w] = 1;
      parent[w] = v;
      stack.push_back(w);
    }
  }
  if (!found) return false;
  out.clear();
  for (int v = t; v != -1; v = parent[v]) out.push_back(v);
  std::reverse(out.begin(), out.end());
  return true;
}

}  // namespace detail

/// Route between two terminals: pick the frame whose pair angle lies in
/// [pi/8, 3pi/8] (both are tried near the window boundary), find a monotone
/// rectilinear path, and verify it is increasing-chord with length at most
/// sqrt(2) times the Euclidean distance.
inline RouteResult route(const SteinerNetwork& net, int p_idx, int q_idx) {
  int n = static_cast<int>(net.points.size());
  if (p_idx < 0 || p_idx >= n || q_idx < 0 || q_idx >= n || p_idx == q_idx)
    throw std::invalid_argument("route: bad terminal indices");
  const double band = 1e-9;
  const Point<double>& p = net.points[p_idx];
  const Point<double>& q = net.points[q_idx];
  double theta_axis = pair_angle(p, q);
  double theta_rot = pair_angle(detail::rotate_cw45(p), detail::rotate_cw45(q));
  std::vector<RouteResult::Frame> candidates;
  if (theta_axis >= kPi / 8 - band && theta_axis <= 3 * kPi / 8 + band)
    candidates.push_back(RouteResult::Frame::Axis);
  if (theta_rot >= kPi / 8 - band && theta_rot <= 3 * kPi / 8 + band)
    candidates.push_back(RouteResult::Frame::Rotated);
  if (candidates.empty())
    throw std::logic_error("route: no frame covers the pair angle");

  for (auto frame : candidates) {
    const detail::FrameNet& f =
        frame == RouteResult::Frame::Axis ? net.axis : net.rotated;
    std::vector<int> idx_path;
    if (!detail::monotone_route(f, f.terminal_vertex[p_idx], f.terminal_vertex[q_idx],
                                idx_path))
      continue;
    RouteResult r;
    r.frame = frame;
    double len = 0;
    for (std::size_t i = 0; i < idx_path.size(); ++i) {
      const auto& v = f.g.vertices[idx_path[i]];
      r.path_frame.push_back(v);
      if (i > 0) len += euclid_dist(r.path_frame[i - 1], r.path_frame[i]);
      r.path.push_back(frame == RouteResult::Frame::Axis ? v : detail::rotate_ccw45(v));
    }
    double d = euclid_dist(p, q);
    if (len > (std::sqrt(2.0) + 1e-6) * d)
      throw std::logic_error("route: path exceeds the sqrt(2) length bound");
    Polyline<double> emb{r.path_frame};
    if (!increasing_chords(emb, Tolerance{}).ok)
      throw std::logic_error("route: path is not increasing-chord");
    return r;
  }
  throw std::runtime_error("ROUTE_FAILED: no monotone path found");
}

}  // namespace sapath
