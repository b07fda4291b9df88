#include <doctest.h>

#include <cmath>
#include <random>

#include "sapath/path_check.hpp"

using namespace sapath;

namespace {

Polyline<double> poly2(std::initializer_list<std::pair<double, double>> pts) {
  Polyline<double> p;
  for (auto [x, y] : pts) p.v.emplace_back(x, y);
  return p;
}

// Random walk in the plane; sometimes self-approaching, usually not.
Polyline<double> random_walk2(std::mt19937& rng, int n, double turn_limit) {
  std::uniform_real_distribution<double> u(-1, 1);
  Polyline<double> p;
  double x = 0, y = 0, heading = u(rng) * 3.14159;
  p.v.emplace_back(x, y);
  for (int i = 1; i < n; ++i) {
    heading += u(rng) * turn_limit;
    double step = 0.2 + std::abs(u(rng));
    x += step * std::cos(heading);
    y += step * std::sin(heading);
    p.v.emplace_back(x, y);
  }
  return p;
}

// Integer-lattice walk: exercises exact collinearity and repeated directions.
Polyline<double> lattice_walk2(std::mt19937& rng, int n) {
  Polyline<double> p;
  int x = 0, y = 0;
  p.v.emplace_back(double(x), double(y));
  const int dx[] = {1, 0, -1, 0, 1, 1, -1, -1};
  const int dy[] = {0, 1, 0, -1, 1, -1, 1, -1};
  for (int i = 1; i < n; ++i) {
    int d = int(rng() % 8);
    int steps = 1 + int(rng() % 3);
    x += dx[d] * steps;
    y += dy[d] * steps;
    if (p.v.back() == Point<double>(double(x), double(y))) {
      x += 1;
    }
    p.v.emplace_back(double(x), double(y));
  }
  return p;
}

// Axis-monotone staircase: increasing-chord by construction.
Polyline<double> staircase2(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> u(0.1, 1.0);
  Polyline<double> p;
  double x = 0, y = 0;
  p.v.emplace_back(x, y);
  for (int i = 1; i < n; ++i) {
    if (rng() % 2)
      x += u(rng);
    else
      y += u(rng);
    p.v.emplace_back(x, y);
  }
  return p;
}

Polyline<Rational> to_rational(const Polyline<double>& p) {
  Polyline<Rational> q;
  for (const auto& v : p.v) {
    if (v.dim == 2)
      q.v.emplace_back(Rational(v.x()), Rational(v.y()));
    else
      q.v.emplace_back(Rational(v.x()), Rational(v.y()), Rational(v.z()));
  }
  return q;
}

}  // namespace

TEST_CASE("two-segment symmetric path fails self-approaching with witness (2,3)") {
  auto p = poly2({{0, 0}, {0.65, 1.125}, {2, 0}});
  Tolerance tol;
  auto brute = sa_bruteforce(p, tol);
  CHECK_FALSE(brute.ok);
  REQUIRE(brute.witness.has_value());
  CHECK(brute.witness->first == 2);
  CHECK(brute.witness->second == 3);
  auto lin = sa_linear2d(p, tol);
  CHECK_FALSE(lin.ok);
  CHECK(lin.witness == brute.witness);
  // Not increasing-chord either, in either direction.
  CHECK_FALSE(increasing_chords(p, tol).ok);
}

TEST_CASE("simple accepted paths") {
  Tolerance tol;
  CHECK(sa_linear2d(poly2({{0, 0}, {1, 0}}), tol).ok);
  CHECK(sa_linear2d(poly2({{0, 0}, {1, 0}, {2, 0}}), tol).ok);
  CHECK(sa_linear2d(poly2({{0, 0}, {1, 0}, {1, 1}}), tol).ok);       // right angle
  CHECK(sa_linear2d(poly2({{0, 0}, {1, 0}, {1, 1}, {1.5, 1}}), tol).ok);
  // ...but turning back past the first perpendicular is rejected.
  CHECK_FALSE(sa_linear2d(poly2({{0, 0}, {1, 0}, {1, 1}, {0.5, 1}}), tol).ok);
  // Single vertex is trivially fine.
  CHECK(sa_linear2d(poly2({{3, 4}}), tol).ok);
}

TEST_CASE("right-angle staircase is increasing-chord, slight overshoot is not") {
  Tolerance tol;
  auto stair = poly2({{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}});
  CHECK(increasing_chords(stair, tol).ok);
  // An acute interior angle breaks the forward direction immediately.
  auto acute = poly2({{0, 0}, {1, 0}, {0.2, 0.2}});
  auto v = increasing_chords(acute, tol);
  CHECK_FALSE(v.ok);
  CHECK(v.direction == CheckDirection::Forward);
}

TEST_CASE("direction tagging: path failing only backwards") {
  Tolerance tol;
  // Inward spiral (left turns of 60 degrees, steps shrinking by 0.3):
  // self-approaching forwards, but the reversed path abandons the start.
  const double c60 = 0.5, s60 = std::sqrt(3.0) / 2;
  Polyline<double> p;
  p.v.emplace_back(0.0, 0.0);
  p.v.emplace_back(1.0, 0.0);
  p.v.emplace_back(1.0 + 0.3 * c60, 0.3 * s60);
  p.v.emplace_back(p.v[2].x() - 0.09 * c60, p.v[2].y() + 0.09 * s60);
  REQUIRE(sa_linear2d(p, tol).ok);
  auto v = increasing_chords(p, tol);
  CHECK_FALSE(v.ok);
  CHECK(v.direction == CheckDirection::Reverse);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == std::make_pair(2, 4));
  // Witness indices refer to the reversed order and must name a real
  // violation there.
  auto r = p.reversed();
  auto [i, j] = *v.witness;
  auto h = Halfplane<double>::of_edge(r.v[i - 2], r.v[i - 1]);
  CHECK_FALSE(in_closed_halfplane(h, r.v[j - 1], tol));
}

TEST_CASE("linear checker agrees with quadratic oracle on random walks") {
  std::mt19937 rng(123);
  Tolerance tol;
  int accepted = 0, rejected = 0;
  for (int trial = 0; trial < 400; ++trial) {
    double turn = (trial % 4 == 0) ? 0.35 : 2.5;  // mix gentle and wild walks
    auto p = random_walk2(rng, 3 + int(rng() % 25), turn);
    auto brute = sa_bruteforce(p, tol);
    auto lin = sa_linear2d(p, tol);
    CHECK(brute.ok == lin.ok);
    CHECK(brute.witness == lin.witness);
    (brute.ok ? accepted : rejected)++;
  }
  // The suite must exercise both outcomes to mean anything.
  CHECK(accepted > 20);
  CHECK(rejected > 20);
}

TEST_CASE("linear checker agrees with oracle on degenerate lattice walks") {
  std::mt19937 rng(77);
  Tolerance tol;
  for (int trial = 0; trial < 400; ++trial) {
    auto p = lattice_walk2(rng, 3 + int(rng() % 15));
    auto brute = sa_bruteforce(p, tol);
    auto lin = sa_linear2d(p, tol);
    CHECK(brute.ok == lin.ok);
    CHECK(brute.witness == lin.witness);
    // Exact-rational mode must agree too on these integer inputs.
    auto q = to_rational(p);
    Tolerance ex = Tolerance::exact();
    CHECK(sa_bruteforce(q, ex).ok == sa_linear2d(q, ex).ok);
  }
}

TEST_CASE("self-approaching is closed under taking prefixes") {
  std::mt19937 rng(5);
  Tolerance tol;
  int found = 0;
  for (int trial = 0; trial < 200 && found < 40; ++trial) {
    auto p = random_walk2(rng, 12, 0.3);
    if (!sa_bruteforce(p, tol).ok) continue;
    ++found;
    for (std::size_t k = 2; k < p.v.size(); ++k) {
      Polyline<double> pre;
      pre.v.assign(p.v.begin(), p.v.begin() + k);
      CHECK(sa_linear2d(pre, tol).ok);
    }
  }
  CHECK(found >= 20);
}

TEST_CASE("subdividing an edge preserves the verdict") {
  std::mt19937 rng(9);
  Tolerance tol = Tolerance::exact();
  for (int trial = 0; trial < 100; ++trial) {
    auto pd = lattice_walk2(rng, 4 + int(rng() % 8));
    auto p = to_rational(pd);
    bool before = sa_bruteforce(p, tol).ok;
    // Insert the midpoint of a random edge (exact in rationals).
    std::size_t e = 1 + rng() % (p.v.size() - 1);
    Point<Rational> mid((p.v[e - 1].x() + p.v[e].x()) / 2,
                        (p.v[e - 1].y() + p.v[e].y()) / 2);
    Polyline<Rational> q;
    q.v.assign(p.v.begin(), p.v.begin() + e);
    q.v.push_back(mid);
    q.v.insert(q.v.end(), p.v.begin() + e, p.v.end());
    CHECK(sa_linear2d(q, tol).ok == before);
  }
}

TEST_CASE("xy-monotone paths are increasing-chord in exact arithmetic") {
  std::mt19937 rng(31);
  Tolerance ex = Tolerance::exact();
  for (int trial = 0; trial < 60; ++trial) {
    auto pd = staircase2(rng, 3 + int(rng() % 20));
    REQUIRE(is_xy_monotone(pd));
    auto p = to_rational(pd);
    CHECK(increasing_chords(p, ex).ok);
  }
}

TEST_CASE("3D checker agrees with the oracle") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-1, 1);
  Tolerance tol;
  int accepted = 0, rejected = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Polyline<double> p;
    int n = 3 + int(rng() % 15);
    double x = 0, y = 0, z = 0;
    bool gentle = trial % 3 == 0;
    double dx = 1, dy = 0, dz = 0;
    for (int i = 0; i < n; ++i) {
      p.v.emplace_back(x, y, z);
      if (gentle) {
        dx += 0.15 * u(rng);
        dy += 0.15 * u(rng);
        dz += 0.15 * u(rng);
        x += dx;
        y += dy;
        z += dz;
      } else {
        x += u(rng);
        y += u(rng);
        z += u(rng);
      }
    }
    auto brute = sa_bruteforce(p, tol);
    auto fast = sa_3d(p, tol);
    CHECK(brute.ok == fast.ok);
    CHECK(brute.witness == fast.witness);
    (brute.ok ? accepted : rejected)++;
  }
  CHECK(accepted > 20);
  CHECK(rejected > 20);
}

TEST_CASE("rational wire strings match exact predicates") {
  // 1/3 cannot be represented in double; exact mode must treat it exactly.
  Tolerance ex = Tolerance::exact();
  Polyline<Rational> p;
  p.v.emplace_back(Rational(0), Rational(0));
  p.v.emplace_back(Rational(1), Rational(1, 3));
  p.v.emplace_back(Rational(2), Rational(2, 3));  // exactly collinear
  CHECK(sa_linear2d(p, ex).ok);
}

TEST_CASE("turn chain angle audit") {
  Tolerance tol;
  // Straight segment and right-angle staircase both pass.
  CHECK(turn_chain_angle_check(poly2({{0, 0}, {1, 0}, {2, 0}}), tol));
  CHECK(turn_chain_angle_check(poly2({{0, 0}, {1, 0}, {1, 1}, {2, 1}}), tol));
  // Throws when the input is not increasing-chord.
  CHECK_THROWS(turn_chain_angle_check(poly2({{0, 0}, {0.65, 1.125}, {2, 0}}), tol));
  // Holds on every accepted staircase and gentle walk (consequence of the
  // increasing-chord property, audited numerically).
  std::mt19937 rng(41);
  int found = 0;
  for (int trial = 0; trial < 300 && found < 60; ++trial) {
    auto p = (trial % 2) ? staircase2(rng, 3 + int(rng() % 12))
                         : random_walk2(rng, 3 + int(rng() % 10), 0.4);
    if (!increasing_chords(p, tol).ok) continue;
    ++found;
    CHECK(turn_chain_angle_check(p, tol));
  }
  CHECK(found >= 40);
}
