#pragma once
// Hardness-reduction instance generators: cannon/target pieces whose x-axis
// rotations encode set elements and SAT literals, plus the brute-force
// Delaunay machinery used to hunt for non-self-approaching triangulations.

#include <array>
#include <cmath>
#include <cstdint>
#include <istream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "sapath/graph_search.hpp"
#include "sapath/path_check.hpp"

namespace sapath {

/// Shared constants of the reduction pieces: the cannon spans alpha along the
/// x-axis with its elbow raised at angle beta, so the elbow angle is right.
struct GadgetConfig {
  double beta = kPi / 6;
  double alpha = 1.0;
  double gamma_sep = 0;  // 0 = calibrate adaptively
  double eps_rot = 0;    // rotation granularity; derived per instance
};

namespace detail {

// Rotation about the x-axis: (x, y, 0) -> (x, y cos r, y sin r).
inline Point<double> xrot(double x, double y, double r) {
  return Point<double>(x, y * std::cos(r), y * std::sin(r));
}

// Cannon elbow relative to its base point, rotated by r.
inline Point<double> cannon_elbow(const Point<double>& p, double r) {
  const double h = std::sqrt(3.0) / 4;
  return Point<double>(p.x() + 0.75, p.y() + h * std::cos(r), p.z() + h * std::sin(r));
}

// Target geometry relative to base x (pre-rotation, in the xy-plane): the
// elbow sits on the slope-1/sqrt(3) line through the origin, at the point
// where the slope-1 line from the base meets it; the exit point closes a
// right angle at the elbow and lands back on the x-axis.
struct TargetShape {
  double elbow_x, elbow_y, exit_x;
};

inline TargetShape target_shape(double base_x) {
  const double s3 = std::sqrt(3.0);
  double a = base_x * s3 / (s3 - 1);
  return TargetShape{a, a / s3, a * (1 + 1 / s3)};
}

}  // namespace detail

/// Three-vertex cannon at p: base, raised elbow (rotated about the x-axis by
/// the given angle), exit at p + (alpha, 0, 0). The elbow angle is pi/2.
inline Polyline<double> gen_cannon(const Point<double>& p, double rotation) {
  if (p.dim != 3) throw std::invalid_argument("gen_cannon: 3D base point required");
  Polyline<double> c;
  c.v.push_back(p);
  c.v.push_back(detail::cannon_elbow(p, rotation));
  c.v.push_back(Point<double>(p.x() + 1, p.y(), p.z()));
  return c;
}

namespace detail {

// True when every (cannon edge, target-piece vertex) combination with
// distinct rotations clears the half-plane condition even if the target is
// further rotated by +-clearance/2; used to pick gamma.
inline bool gamma_is_sufficient(const std::vector<std::pair<double, double>>& cannon_spans,
                                const std::vector<std::pair<double, double>>& target_bases,
                                double clearance) {
  for (auto [cx, a] : cannon_spans) {
    Point<double> c0(cx, 0.0, 0.0);
    Point<double> c1 = cannon_elbow(c0, a);
    Point<double> c2(cx + 1, 0.0, 0.0);
    for (auto [bx, b] : target_bases) {
      if (a == b) continue;
      TargetShape t = target_shape(bx);
      for (double delta : {-clearance / 2, 0.0, clearance / 2}) {
        Point<double> w = xrot(t.elbow_x, t.elbow_y, b + delta);
        for (auto [u, v] : {std::pair{c0, c1}, std::pair{c1, c2}}) {
          Vec<double> d = v - u;
          double margin = 1e-6 * (1 + std::abs(w.x()));
          if (to_double(dot(w - v, d)) < margin) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace detail

/// Theorem-level set-intersection instance: one cannon per element of A along
/// the x-axis, a long gap, then one target per element of B; rotations encode
/// the (scaled) element values. The resulting 3D polyline is self-approaching
/// if and only if A and B are disjoint.
inline Polyline<double> gen_set_intersection_path(const std::vector<int>& A,
                                                  const std::vector<int>& B,
                                                  GadgetConfig cfg = {}) {
  if (A.empty() || B.empty())
    throw std::invalid_argument("gen_set_intersection_path: empty set");
  for (int x : A)
    if (x < 0) throw std::invalid_argument("gen_set_intersection_path: negative element");
  for (int x : B)
    if (x < 0) throw std::invalid_argument("gen_set_intersection_path: negative element");
  std::set<int> sa(A.begin(), A.end()), sb(B.begin(), B.end());
  if (sa.size() != A.size() || sb.size() != B.size())
    throw std::invalid_argument("gen_set_intersection_path: repeated element in a set");
  int M = std::max(*sa.rbegin(), *sb.rbegin());
  double scale = kPi / (2 * std::max(M, 1));  // elements divided by 2M/pi
  double eps = cfg.eps_rot > 0 ? cfg.eps_rot : scale / 2;

  std::vector<double> rot_a, rot_b;
  for (int x : A) rot_a.push_back(x * scale);
  for (int x : B) rot_b.push_back(x * scale);

  double gamma = cfg.gamma_sep > 0 ? cfg.gamma_sep : 10 * (cfg.alpha * double(A.size()) + 1);
  for (int attempt = 0; attempt < 60; ++attempt, gamma *= 2) {
    std::vector<std::pair<double, double>> cannons, targets;
    for (std::size_t i = 0; i < rot_a.size(); ++i) cannons.push_back({double(i), rot_a[i]});
    double base = double(A.size()) + gamma;
    for (double rb : rot_b) {
      targets.push_back({base, rb});
      base = detail::target_shape(base).exit_x;
    }
    if (!detail::gamma_is_sufficient(cannons, targets, eps)) continue;

    Polyline<double> p;
    p.v.push_back(Point<double>(0.0, 0.0, 0.0));
    for (auto [cx, a] : cannons) {
      p.v.push_back(detail::cannon_elbow(Point<double>(cx, 0.0, 0.0), a));
      p.v.push_back(Point<double>(cx + 1, 0.0, 0.0));
    }
    p.v.push_back(Point<double>(double(A.size()) + gamma, 0.0, 0.0));
    for (auto [bx, rb] : targets) {
      detail::TargetShape t = detail::target_shape(bx);
      p.v.push_back(detail::xrot(t.elbow_x, t.elbow_y, rb));
      p.v.push_back(Point<double>(t.exit_x, 0.0, 0.0));
    }
    p.validate();
    return p;
  }
  throw std::runtime_error("gen_set_intersection_path: gamma calibration failed");
}

struct CnfFormula {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;  // signed 1-based variable indices

  void validate() const {
    if (num_vars <= 0) throw std::invalid_argument("cnf: need at least one variable");
    for (const auto& c : clauses)
      for (int lit : c)
        if (lit == 0 || std::abs(lit) > num_vars)
          throw std::invalid_argument("cnf: literal out of range");
  }

  bool satisfied_by(unsigned assignment) const {
    for (const auto& c : clauses) {
      bool ok = false;
      for (int lit : c) {
        bool val = (assignment >> (std::abs(lit) - 1)) & 1u;
        if (lit < 0) val = !val;
        if (val) ok = true;
      }
      if (!ok) return false;
    }
    return true;
  }

  bool satisfiable() const {
    for (unsigned a = 0; a < (1u << num_vars); ++a)
      if (satisfied_by(a)) return true;
    return clauses.empty();
  }
};

/// DIMACS subset: "p cnf <vars> <clauses>" then clauses of exactly three
/// literals terminated by 0. Comment lines start with 'c'.
inline CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula f;
  std::string line;
  bool header = false;
  std::vector<int> lits;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      int m;
      if (!(ls >> p >> fmt >> f.num_vars >> m) || fmt != "cnf")
        throw std::invalid_argument("dimacs: malformed problem line");
      header = true;
      continue;
    }
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (lits.size() != 3)
          throw std::invalid_argument("dimacs: clauses must have exactly 3 literals");
        f.clauses.push_back({lits[0], lits[1], lits[2]});
        lits.clear();
      } else {
        lits.push_back(lit);
      }
    }
  }
  if (!header) throw std::invalid_argument("dimacs: missing problem line");
  if (!lits.empty()) throw std::invalid_argument("dimacs: unterminated clause");
  f.validate();
  return f;
}

struct SatGadget {
  GraphDrawing<double> drawing;
  int s = 0, t = 0;
};

/// 3SAT reduction drawing: per variable two parallel cannon routes (positive
/// rotation (2k-1)*eps, negative 2k*eps with eps = pi/2n) between consecutive
/// x-axis chain points, a long gap, then per clause up to three parallel
/// target routes whose rotations repeat the literals' rotations. A
/// self-approaching s-t path exists iff the formula is satisfiable.
inline SatGadget gen_sat_graph(const CnfFormula& f, GadgetConfig cfg = {}) {
  f.validate();
  int n = f.num_vars;
  double eps = cfg.eps_rot > 0 ? cfg.eps_rot : kPi / (2 * n);
  auto lit_rot = [&](int lit) {
    int k = std::abs(lit);
    return (lit > 0 ? 2 * k - 1 : 2 * k) * eps;
  };

  double gamma = cfg.gamma_sep > 0 ? cfg.gamma_sep : 10 * (cfg.alpha * n + 1);
  for (int attempt = 0; attempt < 60; ++attempt, gamma *= 2) {
    std::vector<std::pair<double, double>> cannons, targets;
    for (int k = 1; k <= n; ++k) {
      cannons.push_back({double(k - 1), (2 * k - 1) * eps});
      cannons.push_back({double(k - 1), (2 * k) * eps});
    }
    double base = n + gamma;
    for (const auto& c : f.clauses) {
      for (int lit : c) targets.push_back({base, lit_rot(lit)});
      base = detail::target_shape(base).exit_x;
    }
    if (!detail::gamma_is_sufficient(cannons, targets, eps)) continue;

    SatGadget out;
    auto& g = out.drawing;
    auto add_vertex = [&](const Point<double>& p) {
      g.vertices.push_back(p);
      return int(g.vertices.size()) - 1;
    };
    // Chain points p_0 .. p_n, the gap vertex, then one anchor per clause.
    std::vector<int> chain;
    for (int k = 0; k <= n; ++k) chain.push_back(add_vertex(Point<double>(double(k), 0.0, 0.0)));
    int anchor = add_vertex(Point<double>(double(n) + gamma, 0.0, 0.0));
    g.edges.emplace_back(chain[n], anchor);
    for (int k = 1; k <= n; ++k) {
      for (double r : {(2 * k - 1) * eps, (2 * k) * eps}) {
        int apex = add_vertex(detail::cannon_elbow(g.vertices[chain[k - 1]], r));
        g.edges.emplace_back(chain[k - 1], apex);
        g.edges.emplace_back(apex, chain[k]);
      }
    }
    base = n + gamma;
    for (const auto& c : f.clauses) {
      detail::TargetShape t = detail::target_shape(base);
      int next = add_vertex(Point<double>(t.exit_x, 0.0, 0.0));
      std::set<long long> seen_rot;
      for (int lit : c) {
        // Duplicate literals collapse to one route.
        long long key = std::llround(lit_rot(lit) * 1e15);
        if (!seen_rot.insert(key).second) continue;
        int apex = add_vertex(detail::xrot(t.elbow_x, t.elbow_y, lit_rot(lit)));
        g.edges.emplace_back(anchor, apex);
        g.edges.emplace_back(apex, next);
      }
      anchor = next;
      base = t.exit_x;
    }
    out.s = chain[0];
    out.t = anchor;
    g.normalize();
    g.validate();
    return out;
  }
  throw std::runtime_error("gen_sat_graph: gamma calibration failed");
}

namespace detail {

// Sign of the in-circle determinant: > 0 when d lies inside the circle
// through a, b, c (counterclockwise orientation assumed by the caller via
// the orientation factor).
inline double incircle_det(const Point<double>& a, const Point<double>& b,
                           const Point<double>& c, const Point<double>& d) {
  double ax = a.x() - d.x(), ay = a.y() - d.y();
  double bx = b.x() - d.x(), by = b.y() - d.y();
  double cx = c.x() - d.x(), cy = c.y() - d.y();
  double a2 = ax * ax + ay * ay, b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
  return ax * (by * c2 - b2 * cy) - ay * (bx * c2 - b2 * cx) + a2 * (bx * cy - by * cx);
}

}  // namespace detail

/// Brute-force Delaunay triangulation for small general-position inputs:
/// edge (i,j) is kept iff some circumcircle through p_i, p_j is empty of all
/// other points. Throws on collinear/cocircular degeneracies.
inline GraphDrawing<double> delaunay_triangulation(const std::vector<Point<double>>& pts,
                                                   double degeneracy_tol = 1e-12) {
  int n = static_cast<int>(pts.size());
  if (n < 3) throw std::invalid_argument("delaunay_triangulation: need >= 3 points");
  for (const auto& p : pts)
    if (p.dim != 2) throw std::invalid_argument("delaunay_triangulation: 2D points only");
  double span = 0;
  for (const auto& p : pts)
    span = std::max({span, std::abs(p.x()), std::abs(p.y()), 1.0});

  GraphDrawing<double> g;
  g.vertices = pts;
  bool any_triangle = false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool keep = false;
      for (int k = 0; k < n && !keep; ++k) {
        if (k == i || k == j) continue;
        double orient = to_double(cross2(pts[j] - pts[i], pts[k] - pts[i]));
        if (std::abs(orient) <= degeneracy_tol * span * span) continue;  // collinear triple
        bool empty = true;
        for (int l = 0; l < n && empty; ++l) {
          if (l == i || l == j || l == k) continue;
          double det = detail::incircle_det(pts[i], pts[j], pts[k], pts[l]) * orient;
          if (std::abs(det) <= degeneracy_tol * span * span * span * span * span * span)
            throw std::invalid_argument("delaunay_triangulation: cocircular degeneracy");
          if (det > 0) empty = false;
        }
        if (empty) {
          keep = true;
          any_triangle = true;
        }
      }
      if (keep) g.edges.emplace_back(i, j);
    }
  if (!any_triangle)
    throw std::invalid_argument("delaunay_triangulation: all points collinear");
  g.normalize();
  g.validate();
  return g;
}

struct DelaunayCounterexample {
  bool found = false;
  std::vector<Point<double>> points;
  int s = -1, t = -1;
  std::uint64_t trials_used = 0;
};

/// Random search for a 6-point configuration whose Delaunay triangulation is
/// not a self-approaching drawing; reports the first failing ordered pair.
inline DelaunayCounterexample find_delaunay_counterexample(std::uint64_t seed,
                                                          std::uint64_t trials) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0, 1);
  DelaunayCounterexample out;
  for (std::uint64_t t = 0; t < trials; ++t) {
    out.trials_used = t + 1;
    std::vector<Point<double>> pts;
    for (int i = 0; i < 6; ++i) pts.emplace_back(u(rng), u(rng));
    GraphDrawing<double> dt;
    try {
      dt = delaunay_triangulation(pts);
    } catch (const std::invalid_argument&) {
      continue;  // degenerate sample
    }
    auto verdict = is_sa_drawing(dt);
    if (verdict.status == DrawingStatus::No) {
      out.found = true;
      out.points = pts;
      out.s = verdict.failing_pair->first;
      out.t = verdict.failing_pair->second;
      return out;
    }
  }
  return out;
}

}  // namespace sapath
