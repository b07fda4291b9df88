#include <doctest.h>

#include <random>

#include "sapath/graph_search.hpp"
#include "sapath/tree.hpp"
#include "sapath/tree_draw.hpp"

using namespace sapath;

namespace {

TreeShape tree(int n, std::initializer_list<std::pair<int, int>> edges) {
  return TreeShape::from_edges(n, std::vector<std::pair<int, int>>(edges));
}

// The 14-vertex two-claw tree: 0 and 1 adjacent, each with two degree-3
// neighbours carrying two leaves apiece.
TreeShape crab_tree() {
  return tree(14, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5},
                   {2, 6}, {2, 7}, {3, 8}, {3, 9},
                   {4, 10}, {4, 11}, {5, 12}, {5, 13}});
}

// Windmill with sweeps of length k: three chains of k-1 degree-3 vertices
// (each with a pendant leaf) ending in a plain leaf, around a central vertex.
TreeShape windmill_tree(int k) {
  std::vector<std::pair<int, int>> edges;
  int next = 1;
  for (int sweep = 0; sweep < 3; ++sweep) {
    int prev = 0;
    for (int j = 0; j < k - 1; ++j) {
      int shaft = next++;
      int leaf = next++;
      edges.emplace_back(prev, shaft);
      edges.emplace_back(shaft, leaf);
      prev = shaft;
    }
    int end = next++;
    edges.emplace_back(prev, end);
  }
  return TreeShape::from_edges(next, edges);
}

// Decode a Pruefer sequence into a tree on n vertices.
TreeShape prufer_tree(int n, const std::vector<int>& seq) {
  std::vector<int> deg(n, 1);
  for (int v : seq) deg[v]++;
  std::vector<std::pair<int, int>> edges;
  std::vector<char> used(n, 0);
  for (int v : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (deg[leaf] == 1 && !used[leaf]) {
        edges.emplace_back(leaf, v);
        used[leaf] = 1;
        deg[v]--;
        break;
      }
    }
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1 && !used[v]) (a == -1 ? a : b) = v;
  edges.emplace_back(a, b);
  return TreeShape::from_edges(n, edges);
}

TreeShape random_tree(std::mt19937& rng, int n) {
  if (n == 1) return TreeShape::from_edges(1, {});
  if (n == 2) return TreeShape::from_edges(2, {{0, 1}});
  std::vector<int> seq(n - 2);
  for (int& v : seq) v = int(rng() % n);
  return prufer_tree(n, seq);
}

// Definition-level reference for canonical vertices: for each degree-3
// vertex, BFS each of the three components of T minus that vertex.
std::vector<int> canonical_vertices_brute(const TreeShape& t) {
  std::vector<int> result;
  for (int s = 0; s < t.n; ++s) {
    if (t.degree(s) != 3) continue;
    bool all = true;
    for (int c : t.adj[s]) {
      std::vector<char> seen(t.n, 0);
      seen[s] = 1;
      std::vector<int> stack{c};
      seen[c] = 1;
      bool has3 = false;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (t.degree(v) == 3) has3 = true;
        for (int w : t.adj[v])
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
      }
      if (!has3) {
        all = false;
        break;
      }
    }
    if (all) result.push_back(s);
  }
  return result;
}

}  // namespace

TEST_CASE("classification of the basic shapes") {
  // Stars.
  CHECK(classify_tree(tree(4, {{0, 1}, {0, 2}, {0, 3}})).tag == TreeClassTag::WindmillSubgraph);
  auto k14 = classify_tree(tree(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
  CHECK(k14.tag == TreeClassTag::K14Subdivision);
  CHECK(k14.witness == std::vector<int>{0});
  auto k15 = classify_tree(tree(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}));
  CHECK(k15.tag == TreeClassTag::NotDrawable);
  CHECK(k15.reason == NotDrawableReason::DegreeGe5);
  CHECK(k15.witness == std::vector<int>{0});

  // Paths and the single vertex.
  CHECK(classify_tree(tree(1, {})).tag == TreeClassTag::WindmillSubgraph);
  CHECK(classify_tree(tree(3, {{0, 1}, {1, 2}})).tag == TreeClassTag::WindmillSubgraph);

  // Degree 4 plus an extra branch vertex is not a subdivision of K_{1,4}.
  auto spider = classify_tree(tree(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}, {5, 6}, {5, 7}}));
  CHECK(spider.tag == TreeClassTag::NotDrawable);
  CHECK(spider.reason == NotDrawableReason::Degree4NotK14);

  // Subdivided K_{1,4} stays drawable.
  auto sub = classify_tree(tree(7, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {0, 5}, {5, 6}}));
  CHECK(sub.tag == TreeClassTag::K14Subdivision);
}

TEST_CASE("the two-claw tree is the minimal obstruction") {
  auto c = classify_tree(crab_tree());
  CHECK(c.tag == TreeClassTag::NotDrawable);
  CHECK(c.reason == NotDrawableReason::TwoCanonical);
  CHECK(c.witness == std::vector<int>{0, 1});
  CHECK(canonical_vertices(crab_tree()) == std::vector<int>{0, 1});

  // Removing any leaf kills one of the canonical vertices.
  auto t = crab_tree();
  auto reduced = tree(13, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5},
                           {2, 6}, {2, 7}, {3, 8}, {3, 9},
                           {4, 10}, {4, 11}, {5, 12}});
  CHECK(classify_tree(reduced).tag == TreeClassTag::WindmillSubgraph);
}

TEST_CASE("windmills and their subgraphs are drawable") {
  for (int k = 2; k <= 5; ++k) {
    auto w = windmill_tree(k);
    auto c = classify_tree(w);
    CHECK(c.tag == TreeClassTag::WindmillSubgraph);
    // The centre is the only canonical vertex for k >= 2.
    CHECK(canonical_vertices(w) == std::vector<int>{0});
  }
}

TEST_CASE("fast canonical-vertex computation matches the definition") {
  // Exhaustively over all Pruefer sequences for small n.
  for (int n = 4; n <= 7; ++n) {
    int total = 1;
    for (int i = 0; i < n - 2; ++i) total *= n;
    for (int code = 0; code < total; ++code) {
      std::vector<int> seq(n - 2);
      int c = code;
      for (int i = 0; i < n - 2; ++i) {
        seq[i] = c % n;
        c /= n;
      }
      auto t = prufer_tree(n, seq);
      CHECK(canonical_vertices(t) == canonical_vertices_brute(t));
    }
  }
  // Random larger trees.
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    auto t = random_tree(rng, 8 + int(rng() % 193));
    CHECK(canonical_vertices(t) == canonical_vertices_brute(t));
  }
}

TEST_CASE("max-degree-3 classification matches the two-canonical criterion") {
  std::mt19937 rng(7);
  int obstructed = 0, drawable = 0;
  for (int trial = 0; trial < 500; ++trial) {
    // Random growth with vertex degrees capped at 3.
    int n = 10 + int(rng() % 60);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg(n, 0);
    for (int v = 1; v < n; ++v) {
      int p;
      do p = int(rng() % v); while (deg[p] >= 3);
      edges.emplace_back(p, v);
      deg[p]++;
      deg[v]++;
    }
    auto t = TreeShape::from_edges(n, edges);
    REQUIRE(t.max_degree() <= 3);
    auto c = classify_tree(t);
    bool two = canonical_vertices_brute(t).size() >= 2;
    CHECK((c.tag == TreeClassTag::NotDrawable) == two);
    (two ? obstructed : drawable)++;
  }
  CHECK(obstructed > 10);
  CHECK(drawable > 10);
}

TEST_CASE("drawings produced for drawable trees pass the slab verifier") {
  std::vector<TreeShape> cases;
  cases.push_back(tree(1, {}));
  cases.push_back(tree(2, {{0, 1}}));
  cases.push_back(tree(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}));  // path
  cases.push_back(tree(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));           // K_{1,4}
  cases.push_back(tree(9, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {0, 6}, {6, 7}, {7, 8}}));
  for (int k = 2; k <= 5; ++k) cases.push_back(windmill_tree(k));
  for (const auto& t : cases) {
    auto r = draw_tree(t);
    REQUIRE(r.status == DrawStatus::Ok);
    CHECK(int(r.drawing.vertices.size()) == t.n);
    CHECK(verify_tree_drawing(r.drawing).ok);
  }
  CHECK(draw_tree(crab_tree()).status == DrawStatus::NotDrawable);
}

TEST_CASE("random drawable trees up to n=40 are drawn and verified") {
  std::mt19937 rng(1234);
  int drawn = 0;
  for (int trial = 0; trial < 300 && drawn < 60; ++trial) {
    auto t = random_tree(rng, 3 + int(rng() % 38));
    auto cls = classify_tree(t);
    if (cls.tag == TreeClassTag::NotDrawable) continue;
    auto r = draw_tree(t);
    REQUIRE(r.status == DrawStatus::Ok);
    CHECK(verify_tree_drawing(r.drawing).ok);
    ++drawn;
  }
  CHECK(drawn >= 40);
}

TEST_CASE("slab verifier agrees with exhaustive path checks on small drawings") {
  // For trees, the slab condition characterizes self-approaching drawings:
  // cross-check against the per-pair path search on random layouts.
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(0, 1);
  Tolerance tol;
  int good = 0, bad = 0;
  for (int trial = 0; trial < 150; ++trial) {
    auto t = random_tree(rng, 4 + int(rng() % 4));
    GraphDrawing<double> g;
    for (int v = 0; v < t.n; ++v) g.vertices.emplace_back(u(rng), u(rng));
    for (int v = 0; v < t.n; ++v)
      for (int w : t.adj[v])
        if (v < w) g.edges.emplace_back(v, w);
    g.normalize();
    bool slab_ok = verify_tree_drawing(g, tol).ok;
    auto search = is_sa_drawing(g, tol);
    REQUIRE(search.status != DrawingStatus::Unknown);
    CHECK(slab_ok == (search.status == DrawingStatus::Yes));
    (slab_ok ? good : bad)++;
  }
  CHECK(bad > 50);  // random layouts are almost never self-approaching
}

TEST_CASE("constructed drawings of small windmills are self-approaching end to end") {
  Tolerance tol;
  for (const auto& t : {windmill_tree(2), tree(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {4, 6}})}) {
    auto r = draw_tree(t);
    REQUIRE(r.status == DrawStatus::Ok);
    CHECK(is_sa_drawing(r.drawing, tol).status == DrawingStatus::Yes);
  }
}

TEST_CASE("verifier rejects a drawing with an acute reflex") {
  GraphDrawing<double> g;
  g.vertices.emplace_back(0.0, 0.0);
  g.vertices.emplace_back(0.65, 1.125);
  g.vertices.emplace_back(2.0, 0.0);
  g.edges = {{0, 1}, {1, 2}};
  auto r = verify_tree_drawing(g);
  CHECK_FALSE(r.ok);
  REQUIRE(r.witness.has_value());

  // Non-tree edge sets are rejected outright.
  GraphDrawing<double> cyc;
  cyc.vertices = {Point<double>(0, 0), Point<double>(1, 0), Point<double>(0, 1)};
  cyc.edges = {{0, 1}, {1, 2}, {0, 2}};
  CHECK_THROWS(verify_tree_drawing(cyc));
}
