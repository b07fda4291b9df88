#pragma once
// Exhaustive search for self-approaching / increasing-chord st-paths in a
// graph drawing, with half-plane pruning, plus whole-drawing checks.

#include <cassert>
#include <cstdint>
#include <optional>
#include <vector>

#include "sapath/graph.hpp"
#include "sapath/path_check.hpp"

namespace sapath {

enum class SearchMode { SelfApproaching, IncreasingChord };

struct PathResult {
  bool found = false;
  bool budget_exhausted = false;
  std::optional<std::vector<int>> path;  // vertex indices, s first
  std::uint64_t nodes_expanded = 0;
};

constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

namespace detail {

template <class T>
struct PathSearcher {
  const GraphDrawing<T>& g;
  const std::vector<std::vector<int>>& adj;
  SearchMode mode;
  Tolerance tol;
  std::uint64_t budget;
  int target;

  std::vector<int> path;
  std::vector<char> on_path;
  std::uint64_t expanded = 0;
  bool exhausted = false;

  // A candidate extension w must lie in l+ of every edge taken so far; in
  // increasing-chord mode every earlier vertex must additionally lie in l+
  // of the reversed new edge.
  bool admissible(int w) const {
    int k = static_cast<int>(path.size());
    for (int e = 1; e < k; ++e) {
      auto h = Halfplane<T>::of_edge(g.vertices[path[e - 1]], g.vertices[path[e]]);
      if (!in_closed_halfplane(h, g.vertices[w], tol)) return false;
    }
    if (mode == SearchMode::IncreasingChord) {
      auto rev = Halfplane<T>::of_edge(g.vertices[w], g.vertices[path.back()]);
      for (int e = 0; e + 1 < k; ++e)
        if (!in_closed_halfplane(rev, g.vertices[path[e]], tol)) return false;
    }
    return true;
  }

  bool dfs(int v) {
    if (expanded >= budget) {
      exhausted = true;
      return false;
    }
    ++expanded;
    if (v == target) return true;
    for (int w : adj[v]) {
      if (on_path[w]) continue;
      if (!admissible(w)) continue;
      path.push_back(w);
      on_path[w] = 1;
      if (dfs(w)) return true;
      on_path[w] = 0;
      path.pop_back();
    }
    return false;
  }
};

}  // namespace detail

/// DFS over simple paths from s with incremental half-plane pruning.
/// Neighbor expansion is by ascending vertex index, so traces are
/// deterministic. Budget exhaustion is reported distinctly from proven
/// absence. Every returned path is re-verified against the oracle checker.
template <class T>
PathResult find_sa_path(const GraphDrawing<T>& g, int s, int t, SearchMode mode,
                        const Tolerance& tol = Tolerance{},
                        std::uint64_t budget = kDefaultSearchBudget) {
  g.validate();
  int n = static_cast<int>(g.vertices.size());
  if (s < 0 || s >= n || t < 0 || t >= n || s == t)
    throw std::invalid_argument("find_sa_path: bad endpoints");
  auto adj = g.adjacency();
  detail::PathSearcher<T> searcher{g, adj, mode, tol, budget, t, {}, std::vector<char>(n, 0)};
  searcher.path.push_back(s);
  searcher.on_path[s] = 1;
  bool ok = searcher.dfs(s);
  PathResult r;
  r.nodes_expanded = searcher.expanded;
  if (ok) {
    r.found = true;
    r.path = searcher.path;
    // Soundness assertion: the embedded path must pass the oracle.
    Polyline<T> emb = g.embed_path(*r.path);
    if (mode == SearchMode::SelfApproaching)
      assert(sa_bruteforce(emb, tol).ok);
    else
      assert(increasing_chords(emb, tol).ok);
  } else {
    r.budget_exhausted = searcher.exhausted;
  }
  return r;
}

enum class DrawingStatus { Yes, No, Unknown };

struct DrawingVerdict {
  DrawingStatus status = DrawingStatus::Yes;
  std::optional<std::pair<int, int>> failing_pair;
};

/// True iff every ordered vertex pair has a self-approaching path. Budget
/// exhaustion on any pair makes the overall answer Unknown.
template <class T>
DrawingVerdict is_sa_drawing(const GraphDrawing<T>& g, const Tolerance& tol = Tolerance{},
                             std::uint64_t budget = kDefaultSearchBudget) {
  g.validate();
  int n = static_cast<int>(g.vertices.size());
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      PathResult r = find_sa_path(g, s, t, SearchMode::SelfApproaching, tol, budget);
      if (r.budget_exhausted) return {DrawingStatus::Unknown, std::make_pair(s, t)};
      if (!r.found) return {DrawingStatus::No, std::make_pair(s, t)};
    }
  return {DrawingStatus::Yes, std::nullopt};
}

/// True iff every unordered vertex pair has an increasing-chord path.
template <class T>
DrawingVerdict is_ic_drawing(const GraphDrawing<T>& g, const Tolerance& tol = Tolerance{},
                             std::uint64_t budget = kDefaultSearchBudget) {
  g.validate();
  int n = static_cast<int>(g.vertices.size());
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      PathResult r = find_sa_path(g, s, t, SearchMode::IncreasingChord, tol, budget);
      if (r.budget_exhausted) return {DrawingStatus::Unknown, std::make_pair(s, t)};
      if (!r.found) return {DrawingStatus::No, std::make_pair(s, t)};
    }
  return {DrawingStatus::Yes, std::nullopt};
}

}  // namespace sapath
