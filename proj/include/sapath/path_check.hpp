#pragma once
// Self-approaching / increasing-chord path checkers: quadratic oracle,
// the linear-time 2D scan, the 3D checker, and the turn-chain angle audit.

#include <algorithm>
#include <optional>
#include <utility>

#include "sapath/geom.hpp"

namespace sapath {

enum class CheckDirection { None, Forward, Reverse };

/// Result of a path check. On failure, witness (i, j) is 1-based and means
/// vertex v_j violates the closed half-plane of edge (v_{i-1}, v_i),
/// lexicographically smallest such pair.
struct CheckVerdict {
  bool ok = true;
  std::optional<std::pair<int, int>> witness;
  CheckDirection direction = CheckDirection::None;
};

/// O(n^2) oracle: checks every (edge, later vertex) pair against the closed
/// half-plane condition. Works in 2D and 3D.
template <class T>
CheckVerdict sa_bruteforce(const Polyline<T>& p, const Tolerance& tol) {
  p.validate();
  int n = static_cast<int>(p.v.size());
  for (int e = 1; e < n; ++e) {
    auto h = Halfplane<T>::of_edge(p.v[e - 1], p.v[e]);
    for (int j = e + 1; j < n; ++j) {
      if (!in_closed_halfplane(h, p.v[j], tol))
        return CheckVerdict{false, std::make_pair(e + 1, j + 1), CheckDirection::Forward};
    }
  }
  return CheckVerdict{true, std::nullopt, CheckDirection::None};
}

namespace detail {

// Sign of orient(a,b,c) with a relative collinearity band in float mode.
template <class T>
int orient_sign(const Point<T>& a, const Point<T>& b, const Point<T>& c, const Tolerance& tol) {
  Vec<T> ab = b - a, ac = c - a;
  T cr = cross2(ab, ac);
  if constexpr (is_exact_scalar<T>) {
    if (cr > T(0)) return 1;
    if (cr < T(0)) return -1;
    return 0;
  } else {
    double band = tol.tau * norm(ab) * norm(ac);
    double v = to_double(cr);
    if (v > band) return 1;
    if (v < -band) return -1;
    return 0;
  }
}

// Incremental convex hull of the processed suffix, stored as a circular
// doubly linked boundary list over vertex indices (CCW).
template <class T>
class SuffixHull {
 public:
  SuffixHull(const std::vector<Point<T>>& pts, const Tolerance& tol)
      : pts_(pts), tol_(tol), next_(pts.size(), -1), prev_(pts.size(), -1) {}

  void init(int idx) {
    next_[idx] = prev_[idx] = idx;
    size_ = 1;
  }

  bool contains(int idx) const { return next_[idx] != -1; }
  int size() const { return size_; }
  int next(int idx) const { return next_[idx]; }
  int prev(int idx) const { return prev_[idx]; }

  // Insert point w_idx, known to lie outside the hull, with visible hull
  // vertex t_idx. Vertices swallowed by the new tangent chain are unlinked.
  void insert(int w_idx, int t_idx) {
    const Point<T>& w = pts_[w_idx];
    if (size_ == 1) {
      link(t_idx, w_idx);
      link(w_idx, t_idx);
      ++size_;
      return;
    }
    if (size_ == 2) {
      int a = t_idx, b = next_[t_idx];
      int s = orient_sign(pts_[a], pts_[b], w, tol_);
      if (s > 0) {
        // CCW order a, b, w
        link(a, b);
        link(b, w_idx);
        link(w_idx, a);
        ++size_;
      } else if (s < 0) {
        link(a, w_idx);
        link(w_idx, b);
        link(b, a);
        ++size_;
      } else {
        // Collinear: keep the two extreme points along the line.
        keep_extremes_collinear(a, b, w_idx);
      }
      return;
    }
    // Forward tangent: advance while the edge (x, next(x)) is visible from w
    // (collinear counts as visible so the hull stays strictly convex).
    int x = t_idx;
    int guard = size_;
    while (guard-- > 0) {
      int nx = next_[x];
      if (nx == x) break;
      if (orient_sign(pts_[x], pts_[nx], w, tol_) <= 0)
        x = nx;
      else
        break;
    }
    // Backward tangent.
    int y = t_idx;
    guard = size_;
    while (guard-- > 0) {
      int py = prev_[y];
      if (py == y || py == x) {
        if (py == x && orient_sign(pts_[py], pts_[y], w, tol_) <= 0) y = py;
        break;
      }
      if (orient_sign(pts_[py], pts_[y], w, tol_) <= 0)
        y = py;
      else
        break;
    }
    if (x == y) {
      // Everything between collapsed; rebuild as a 2-cycle {x, w}.
      int cur = next_[x];
      while (cur != x) {
        int nx = next_[cur];
        unlink(cur);
        cur = nx;
      }
      next_[x] = prev_[x] = x;
      size_ = 1;
      link(x, w_idx);
      link(w_idx, x);
      ++size_;
      return;
    }
    // Remove vertices strictly between y and x along the CCW arc y -> x.
    int cur = next_[y];
    while (cur != x) {
      int nx = next_[cur];
      unlink(cur);
      --size_;
      cur = nx;
    }
    link(y, w_idx);
    link(w_idx, x);
    ++size_;
  }

 private:
  void link(int a, int b) {
    next_[a] = b;
    prev_[b] = a;
  }
  void unlink(int idx) { next_[idx] = prev_[idx] = -1; }

  void keep_extremes_collinear(int a, int b, int w_idx) {
    // Choose the farthest pair among {a, b, w} and store it as a 2-cycle.
    double dab = euclid_dist(pts_[a], pts_[b]);
    double daw = euclid_dist(pts_[a], pts_[w_idx]);
    double dbw = euclid_dist(pts_[b], pts_[w_idx]);
    int keep1 = a, keep2 = b;
    if (daw >= dab && daw >= dbw) {
      keep1 = a;
      keep2 = w_idx;
      unlink(b);
    } else if (dbw >= dab && dbw >= daw) {
      keep1 = b;
      keep2 = w_idx;
      unlink(a);
    }
    next_[keep1] = prev_[keep1] = keep2;
    next_[keep2] = prev_[keep2] = keep1;
    size_ = 2;
  }

  const std::vector<Point<T>>& pts_;
  Tolerance tol_;
  std::vector<int> next_, prev_;
  int size_ = 0;
};

}  // namespace detail

/// Linear-time 2D checker: scans backwards from v_n, maintains the convex
/// hull of the processed suffix, and for each new edge tests only the two
/// hull edges incident to v_i against slab(v_{i-1} v_i). Stops at the first
/// violation; the reported witness is then recomputed canonically
/// (lexicographically smallest) by the quadratic oracle.
template <class T>
CheckVerdict sa_linear2d(const Polyline<T>& p, const Tolerance& tol) {
  p.validate();
  if (p.dim() != 2) throw std::invalid_argument("sa_linear2d: 2D polylines only");
  int n = static_cast<int>(p.v.size());
  if (n <= 2) return CheckVerdict{true, std::nullopt, CheckDirection::None};

  detail::SuffixHull<T> hull(p.v, tol);
  hull.init(n - 1);
  for (int i = n - 1; i >= 1; --i) {
    bool violated = false;
    int attach = i;
    Slab<T> slab{p.v[i - 1], p.v[i]};
    if (hull.contains(i)) {
      if (hull.size() > 1) {
        int a = hull.next(i), b = hull.prev(i);
        if (segment_intersects_slab(slab, p.v[i], p.v[a], tol) ||
            segment_intersects_slab(slab, p.v[i], p.v[b], tol))
          violated = true;
      }
    } else {
      // Degenerate case (v_i swallowed by tolerance-level collinearity):
      // fall back to testing every hull vertex against the half-plane, and
      // attach the insertion at the hull vertex extreme in direction -d,
      // which is visible from v_{i-1}.
      auto h = Halfplane<T>::of_edge(p.v[i - 1], p.v[i]);
      Vec<T> d = p.v[i] - p.v[i - 1];
      int start = -1;
      for (int k = i + 1; k < n; ++k)
        if (hull.contains(k)) {
          start = k;
          break;
        }
      int cur = start;
      double best_proj = 0;
      bool first = true;
      do {
        if (!in_closed_halfplane(h, p.v[cur], tol)) violated = true;
        double proj = to_double(dot(p.v[cur] - p.v[i - 1], d));
        if (first || proj < best_proj) {
          best_proj = proj;
          attach = cur;
          first = false;
        }
        cur = hull.next(cur);
      } while (cur != start && !violated);
    }
    if (violated) return sa_bruteforce(p, tol);
    if (i == 1) break;  // nothing left to insert
    hull.insert(i - 1, attach);
  }
  return CheckVerdict{true, std::nullopt, CheckDirection::None};
}

/// 3D checker at correctness level: backward scan over suffixes with a
/// bounding-box extreme-point filter; worst case O(n^2). Verdict matches the
/// brute-force half-space condition.
template <class T>
CheckVerdict sa_3d(const Polyline<T>& p, const Tolerance& tol) {
  p.validate();
  if (p.dim() != 3) throw std::invalid_argument("sa_3d: 3D polylines only");
  int n = static_cast<int>(p.v.size());
  if (n <= 2) return CheckVerdict{true, std::nullopt, CheckDirection::None};

  // Suffix bounding box, grown as the scan moves backwards.
  std::array<double, 3> lo, hi;
  for (int k = 0; k < 3; ++k) lo[k] = hi[k] = to_double(p.v[n - 1].c[k]);

  for (int i = n - 1; i >= 1; --i) {
    Vec<T> d = p.v[i] - p.v[i - 1];
    // Lower bound of (w - v_i) . d over the suffix bbox; if nonnegative
    // (up to tolerance) the whole suffix passes without a scan.
    double lb = 0;
    double scale = 1.0;
    for (int k = 0; k < 3; ++k) {
      double dk = to_double(d.c[k]);
      double vk = to_double(p.v[i].c[k]);
      lb += std::min(dk * (lo[k] - vk), dk * (hi[k] - vk));
      scale = std::max({scale, std::abs(lo[k]), std::abs(hi[k]), std::abs(vk)});
    }
    bool fast_ok;
    if constexpr (is_exact_scalar<T>)
      fast_ok = false;  // exact mode always verifies exactly
    else
      fast_ok = lb >= tol.tau * norm(d) * scale;  // clear of the widened boundary
    if (!fast_ok) {
      auto h = Halfplane<T>::of_edge(p.v[i - 1], p.v[i]);
      for (int j = i + 1; j < n; ++j) {
        if (!in_closed_halfplane(h, p.v[j], tol))
          return sa_bruteforce(p, tol);  // canonical witness
      }
    }
    for (int k = 0; k < 3; ++k) {
      double c = to_double(p.v[i - 1].c[k]);
      lo[k] = std::min(lo[k], c);
      hi[k] = std::max(hi[k], c);
    }
  }
  return CheckVerdict{true, std::nullopt, CheckDirection::None};
}

/// Dimension dispatch for the best available self-approaching check.
template <class T>
CheckVerdict sa_check(const Polyline<T>& p, const Tolerance& tol) {
  return p.dim() == 2 ? sa_linear2d(p, tol) : sa_3d(p, tol);
}

/// Increasing chords: self-approaching in both directions. The witness comes
/// from whichever direction fails first and is indexed in that direction's
/// vertex order.
template <class T>
CheckVerdict increasing_chords(const Polyline<T>& p, const Tolerance& tol) {
  CheckVerdict fwd = sa_check(p, tol);
  if (!fwd.ok) {
    fwd.direction = CheckDirection::Forward;
    return fwd;
  }
  CheckVerdict rev = sa_check(p.reversed(), tol);
  if (!rev.ok) {
    rev.direction = CheckDirection::Reverse;
    return rev;
  }
  return CheckVerdict{true, std::nullopt, CheckDirection::None};
}

/// Angle-sum audit for verified increasing-chord 2D paths: every interior
/// angle must be >= pi/2 and every maximal chain of k same-orientation turns
/// must have interior angles summing to >= pi(k-1). Collinear vertices
/// (interior angle exactly pi) belong to no chain. Throws if the input does
/// not pass the increasing-chord check first.
template <class T>
bool turn_chain_angle_check(const Polyline<T>& p, const Tolerance& tol = Tolerance{}) {
  p.validate();
  if (p.dim() != 2) throw std::invalid_argument("turn_chain_angle_check: 2D polylines only");
  if (!increasing_chords(p, tol).ok)
    throw std::invalid_argument("turn_chain_angle_check: input is not increasing-chord");
  int n = static_cast<int>(p.v.size());
  if (n < 3) return true;

  const double pi = 3.14159265358979323846;
  struct Turn {
    int sign;       // +1 left, -1 right
    double angle;   // interior angle
  };
  std::vector<Turn> turns;
  for (int i = 1; i + 1 < n; ++i) {
    Vec<T> in = p.v[i] - p.v[i - 1];
    Vec<T> out = p.v[i + 1] - p.v[i];
    int s = detail::orient_sign(p.v[i - 1], p.v[i], p.v[i + 1], tol);
    double c = to_double(dot(in, out)) / (norm(in) * norm(out));
    c = std::clamp(c, -1.0, 1.0);
    double interior = pi - std::acos(c);
    if (interior < pi / 2 - tol.tau) return false;
    if (s != 0) turns.push_back({s, interior});
  }
  // Maximal chains of consecutive same-orientation turns.
  std::size_t i = 0;
  while (i < turns.size()) {
    std::size_t j = i;
    double sum = 0;
    while (j < turns.size() && turns[j].sign == turns[i].sign) {
      sum += turns[j].angle;
      ++j;
    }
    std::size_t k = j - i;
    double bound = k == 1 ? pi / 2 : pi * double(k - 1);
    if (sum < bound - tol.tau) return false;
    i = j;
  }
  return true;
}

}  // namespace sapath
