#pragma once

// Brute-force checkers. These are the ground truth the closure engine and the
// path formulas are tested against, so they stay deliberately simple.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ktrans/closure_result.hpp"
#include "ktrans/digraph.hpp"

namespace ktrans::oracles {

enum class ViolationKind { missing_shortcut, orientation, loop };

inline std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::missing_shortcut:
      return "missing-shortcut";
    case ViolationKind::orientation:
      return "orientation";
    case ViolationKind::loop:
      return "loop";
  }
  return "?";
}

struct ViolationReport {
  ViolationKind kind;
  /// k+1 vertices for walk violations, the offending arc for structural ones.
  std::vector<Vertex> path;

  friend bool operator==(const ViolationReport&, const ViolationReport&) = default;
};

/// Structural check of a raw arc list (loops, antiparallel pairs, repeats).
inline std::optional<ViolationReport> check_oriented(std::size_t n, std::span<const Arc> arcs) {
  auto conflict = find_orientation_violation(n, arcs);
  if (!conflict) return std::nullopt;
  const auto kind =
      conflict->kind == ConflictKind::loop ? ViolationKind::loop : ViolationKind::orientation;
  return ViolationReport{kind, {conflict->arc.tail, conflict->arc.head}};
}

/// Looks for the lexicographically first walk of exactly k arcs whose
/// shortcut (v0, vk) is absent. A closed walk (v0 = vk) would need a loop,
/// which no oriented graph has, so it is reported with kind `loop`.
inline std::optional<ViolationReport> check_k_transitive(const OrientedDigraph& g, std::size_t k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> walk;
  walk.reserve(k + 1);
  // explored[v * (k + 1) + r]: every walk continuing from v with r arcs left
  // has been seen already under the current start vertex.
  std::vector<char> explored(n * (k + 1));
  std::optional<ViolationReport> found;

  std::function<void(Vertex, std::size_t)> extend = [&](Vertex v, std::size_t left) {
    if (found) return;
    char& seen = explored[v * (k + 1) + left];
    if (seen) return;
    seen = 1;
    if (left == 0) {
      const Vertex start = walk.front();
      if (v == start) {
        found = ViolationReport{ViolationKind::loop, walk};
      } else if (!g.has_arc(start, v)) {
        found = ViolationReport{ViolationKind::missing_shortcut, walk};
      }
      return;
    }
    for (Vertex w : g.out_neighbors(v)) {
      walk.push_back(w);
      extend(w, left - 1);
      walk.pop_back();
      if (found) return;
    }
  };

  for (Vertex start = 0; start < n && !found; ++start) {
    std::fill(explored.begin(), explored.end(), 0);
    walk.assign(1, start);
    extend(start, k);
  }
  return found;
}

/// Second route to k-transitivity: boolean k-th power of the adjacency
/// matrix. O(k n^3); intended for small graphs in tests.
inline bool is_k_transitive_by_matrix(const OrientedDigraph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  using Matrix = std::vector<std::vector<char>>;
  Matrix adj(n, std::vector<char>(n, 0));
  for (const Arc& a : g.arcs()) adj[a.tail][a.head] = 1;
  Matrix reach = adj;
  for (std::size_t step = 1; step < k; ++step) {
    Matrix next(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (reach[i][j])
          for (std::size_t t = 0; t < n; ++t)
            if (adj[j][t]) next[i][t] = 1;
    reach = std::move(next);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (reach[i][j] && (i == j || !adj[i][j])) return false;
  return true;
}

inline constexpr std::size_t kMaxExhaustiveVertices = 5;

/// Calls fn on every oriented digraph with vertex set {0..n-1}: each of the
/// n(n-1)/2 vertex pairs is absent, forward, or backward.
inline void for_each_oriented_digraph(std::size_t n,
                                      const std::function<void(const OrientedDigraph&)>& fn) {
  std::vector<Arc> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::vector<int> state(pairs.size(), 0);
  while (true) {
    DigraphBuilder b(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (state[i] == 1) b.try_add_arc(pairs[i].tail, pairs[i].head);
      if (state[i] == 2) b.try_add_arc(pairs[i].head, pairs[i].tail);
    }
    fn(std::move(b).build());
    std::size_t i = 0;
    while (i < state.size() && state[i] == 2) state[i++] = 0;
    if (i == state.size()) return;
    ++state[i];
  }
}

/// Minimal k-transitive oriented supergraph of g, found by trying every
/// orientation of every unused vertex pair (at most 3^10 candidates at n = 5).
/// Throws std::logic_error if the k-transitive supergraphs have no unique
/// inclusion-minimal member.
inline ClosureResult exhaustive_minimal_closure(const OrientedDigraph& g, std::size_t k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  const std::size_t n = g.vertex_count();
  if (n > kMaxExhaustiveVertices) {
    throw std::invalid_argument("exhaustive oracle is limited to " +
                                std::to_string(kMaxExhaustiveVertices) + " vertices, got " +
                                std::to_string(n));
  }
  auto bit = [n](Vertex u, Vertex v) { return std::uint32_t{1} << (u * n + v); };

  std::vector<Arc> free_pairs;
  std::uint32_t base = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (g.has_arc(u, v)) base |= bit(u, v);
      if (u < v && !g.has_arc(u, v) && !g.has_arc(v, u)) free_pairs.push_back({u, v});
    }
  }

  auto to_graph = [&](std::uint32_t mask) {
    DigraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (mask & bit(u, v)) b.try_add_arc(u, v);
    return std::move(b).build();
  };

  std::vector<std::uint32_t> transitive;
  std::vector<int> state(free_pairs.size(), 0);
  while (true) {
    std::uint32_t mask = base;
    for (std::size_t i = 0; i < free_pairs.size(); ++i) {
      if (state[i] == 1) mask |= bit(free_pairs[i].tail, free_pairs[i].head);
      if (state[i] == 2) mask |= bit(free_pairs[i].head, free_pairs[i].tail);
    }
    if (!check_k_transitive(to_graph(mask), k)) transitive.push_back(mask);
    std::size_t i = 0;
    while (i < state.size() && state[i] == 2) state[i++] = 0;
    if (i == state.size()) break;
    ++state[i];
  }

  if (transitive.empty()) return ClosureNotExists{};

  std::uint32_t common = ~std::uint32_t{0};
  for (std::uint32_t mask : transitive) common &= mask;
  if (std::find(transitive.begin(), transitive.end(), common) == transitive.end()) {
    throw std::logic_error("k-transitive supergraphs have no unique minimal element");
  }
  return ClosureExists{to_graph(common), {}};
}

}  // namespace ktrans::oracles
