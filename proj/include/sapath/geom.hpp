#pragma once
// Core geometric primitives: points, polylines, perpendicular half-planes
// and slabs, with two predicate modes (float-tolerant and exact-rational).

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sapath {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr double kPi = 3.14159265358979323846;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

template <class T>
inline constexpr bool is_exact_scalar = !std::is_floating_point_v<T>;

enum class PredicateMode { FloatTolerant, ExactRational };

/// Tolerance policy for the float-tolerant predicate mode. tau widens the
/// "inside" classification of closed half-planes and narrows open slabs, so
/// borderline inputs err toward acceptance. Exact scalars ignore tau.
struct Tolerance {
  double tau = 1e-9;
  PredicateMode mode = PredicateMode::FloatTolerant;

  static Tolerance exact() { return Tolerance{0.0, PredicateMode::ExactRational}; }
};

template <class T>
struct Point {
  std::array<T, 3> c{T(0), T(0), T(0)};
  int dim = 2;

  Point() = default;
  Point(T x, T y) : c{std::move(x), std::move(y), T(0)}, dim(2) {}
  Point(T x, T y, T z) : c{std::move(x), std::move(y), std::move(z)}, dim(3) {}

  const T& x() const { return c[0]; }
  const T& y() const { return c[1]; }
  const T& z() const { return c[2]; }

  bool operator==(const Point& o) const { return dim == o.dim && c == o.c; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

using Point2 = Point<double>;

template <class T>
struct Vec {
  std::array<T, 3> c{T(0), T(0), T(0)};
  int dim = 2;
};

template <class T>
Vec<T> operator-(const Point<T>& a, const Point<T>& b) {
  if (a.dim != b.dim) throw std::invalid_argument("dimension mismatch");
  Vec<T> v;
  v.dim = a.dim;
  for (int k = 0; k < 3; ++k) v.c[k] = a.c[k] - b.c[k];
  return v;
}

template <class T>
Point<T> operator+(const Point<T>& a, const Vec<T>& v) {
  Point<T> p = a;
  for (int k = 0; k < 3; ++k) p.c[k] = a.c[k] + v.c[k];
  return p;
}

template <class T>
T dot(const Vec<T>& a, const Vec<T>& b) {
  T s = T(0);
  for (int k = 0; k < 3; ++k) s += a.c[k] * b.c[k];
  return s;
}

/// z-component of the cross product (2D orientation numerator).
template <class T>
T cross2(const Vec<T>& a, const Vec<T>& b) {
  return a.c[0] * b.c[1] - a.c[1] * b.c[0];
}

template <class T>
bool is_zero(const Vec<T>& v) {
  for (int k = 0; k < 3; ++k)
    if (v.c[k] != T(0)) return false;
  return true;
}

inline bool finite_coord(double x) { return std::isfinite(x); }
inline bool finite_coord(const Rational&) { return true; }

template <class T>
double norm(const Vec<T>& v) {
  double s = 0;
  for (int k = 0; k < 3; ++k) {
    double d = to_double(v.c[k]);
    s += d * d;
  }
  return std::sqrt(s);
}

/// Euclidean distance D(a, b). Reported as double even in exact mode.
template <class T>
double euclid_dist(const Point<T>& a, const Point<T>& b) {
  if (a.dim != b.dim) throw std::invalid_argument("euclid_dist: dimension mismatch");
  return norm(a - b);
}

/// Ordered point sequence; consecutive duplicates are invalid.
template <class T>
struct Polyline {
  std::vector<Point<T>> v;

  int dim() const { return v.empty() ? 2 : v.front().dim; }
  std::size_t size() const { return v.size(); }

  void validate() const {
    if (v.empty()) throw std::invalid_argument("polyline: empty");
    int d = v.front().dim;
    for (const auto& p : v) {
      if (p.dim != d) throw std::invalid_argument("polyline: mixed dimensions");
      for (int k = 0; k < 3; ++k)
        if (!finite_coord(p.c[k])) throw std::invalid_argument("polyline: non-finite coordinate");
    }
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i] == v[i - 1]) throw std::invalid_argument("polyline: zero-length edge");
  }

  Polyline reversed() const {
    Polyline r;
    r.v.assign(v.rbegin(), v.rend());
    return r;
  }
};

/// The closed half-space l+_{uv}: anchored at v with inward normal v-u,
/// {q : (q - v) . (v - u) >= 0}. Boundary counts as inside.
template <class T>
struct Halfplane {
  Point<T> anchor;  // the point v
  Vec<T> normal;    // direction v - u

  static Halfplane of_edge(const Point<T>& u, const Point<T>& v) {
    return Halfplane{v, v - u};
  }
};

/// The open strip slab(uv) between l_{vu} (through u) and l_{uv} (through v).
template <class T>
struct Slab {
  Point<T> u, v;
};

namespace detail {

template <class T>
double coord_scale(std::initializer_list<const Point<T>*> pts) {
  double s = 1.0;
  for (const Point<T>* p : pts)
    for (int k = 0; k < 3; ++k) s = std::max(s, std::abs(to_double(p->c[k])));
  return s;
}

}  // namespace detail

/// Closed half-plane membership. In float mode the boundary is widened by
/// tau * |normal| * scale; in exact mode the sign test is exact.
template <class T>
bool in_closed_halfplane(const Halfplane<T>& h, const Point<T>& q, const Tolerance& tol) {
  if (h.anchor.dim != q.dim) throw std::invalid_argument("in_closed_halfplane: dimension mismatch");
  if (is_zero(h.normal)) throw std::invalid_argument("in_closed_halfplane: zero normal");
  T d = dot(q - h.anchor, h.normal);
  if constexpr (is_exact_scalar<T>) {
    return d >= T(0);
  } else {
    double scale = detail::coord_scale<T>({&q, &h.anchor});
    return to_double(d) >= -tol.tau * norm(h.normal) * scale;
  }
}

/// True iff the closed segment ab has a point strictly inside the open strip.
/// The open interval is narrowed by tau in float mode.
template <class T>
bool segment_intersects_slab(const Slab<T>& s, const Point<T>& a, const Point<T>& b,
                             const Tolerance& tol) {
  if (s.u == s.v) throw std::invalid_argument("segment_intersects_slab: degenerate slab");
  Vec<T> d = s.v - s.u;
  T pu = dot(s.u - s.u, d);  // 0
  T pv = dot(s.v - s.u, d);
  T pa = dot(a - s.u, d);
  T pb = dot(b - s.u, d);
  // The segment's projection is the interval [min(pa,pb), max(pa,pb)];
  // it meets the open interval (0, pv) iff max > 0 and min < pv.
  T lo = pa < pb ? pa : pb;
  T hi = pa < pb ? pb : pa;
  if constexpr (is_exact_scalar<T>) {
    (void)pu;
    return hi > T(0) && lo < pv;
  } else {
    double scale = detail::coord_scale<T>({&s.u, &s.v, &a, &b});
    double margin = tol.tau * norm(d) * scale;
    return to_double(hi) > margin && to_double(lo) < to_double(pv) - margin;
  }
}

/// Point strictly inside the open slab (same narrowing as the segment test).
template <class T>
bool point_in_open_slab(const Slab<T>& s, const Point<T>& q, const Tolerance& tol) {
  return segment_intersects_slab(s, q, q, tol);
}

/// True iff both coordinate sequences are monotone (non-strict) along the
/// vertex order. 2D only.
template <class T>
bool is_xy_monotone(const Polyline<T>& p) {
  if (p.dim() != 2) throw std::invalid_argument("is_xy_monotone: 2D polylines only");
  for (int axis = 0; axis < 2; ++axis) {
    bool up = true, down = true;
    for (std::size_t i = 1; i < p.v.size(); ++i) {
      if (p.v[i].c[axis] > p.v[i - 1].c[axis]) down = false;
      if (p.v[i].c[axis] < p.v[i - 1].c[axis]) up = false;
    }
    if (!up && !down) return false;
  }
  return true;
}

/// Sampled lower bound on the detour (geometric dilation): max over sampled
/// point pairs of arc length / Euclidean distance. Includes all vertices;
/// monotone non-decreasing in samples_per_edge.
template <class T>
double polyline_detour_estimate(const Polyline<T>& p, int samples_per_edge) {
  if (p.v.size() < 2) throw std::invalid_argument("polyline_detour_estimate: need n >= 2");
  if (samples_per_edge < 1) throw std::invalid_argument("polyline_detour_estimate: need samples >= 1");
  struct Sample {
    double x, y, z, arc;
  };
  std::vector<Sample> samples;
  samples.reserve((p.v.size() - 1) * samples_per_edge + 1);
  double arc = 0;
  auto push = [&](const Point<T>& a, const Point<T>& b, double t, double arc_at) {
    Sample s;
    s.x = to_double(a.c[0]) + t * (to_double(b.c[0]) - to_double(a.c[0]));
    s.y = to_double(a.c[1]) + t * (to_double(b.c[1]) - to_double(a.c[1]));
    s.z = to_double(a.c[2]) + t * (to_double(b.c[2]) - to_double(a.c[2]));
    s.arc = arc_at;
    samples.push_back(s);
  };
  push(p.v[0], p.v[0], 0.0, 0.0);
  for (std::size_t i = 1; i < p.v.size(); ++i) {
    double len = euclid_dist(p.v[i - 1], p.v[i]);
    for (int k = 1; k <= samples_per_edge; ++k) {
      double t = double(k) / samples_per_edge;
      push(p.v[i - 1], p.v[i], t, arc + t * len);
    }
    arc += len;
  }
  double best = p.v.size() >= 2 ? 1.0 : 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      double dx = samples[j].x - samples[i].x;
      double dy = samples[j].y - samples[i].y;
      double dz = samples[j].z - samples[i].z;
      double d = std::sqrt(dx * dx + dy * dy + dz * dz);
      if (d <= 0) continue;
      best = std::max(best, (samples[j].arc - samples[i].arc) / d);
    }
  return best;
}

}  // namespace sapath
