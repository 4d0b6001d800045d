#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "ktrans/digraph.hpp"

namespace ktrans::testing {

/// Arc list from 1-based pairs, as they are written in the paper's figures.
inline std::vector<Arc> arcs1(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Arc> out;
  for (auto [u, v] : pairs) out.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
  return out;
}

inline std::set<std::pair<int, int>> arc_set1(const OrientedDigraph& g) {
  std::set<std::pair<int, int>> out;
  for (const Arc& a : g.arcs()) out.emplace(a.tail + 1, a.head + 1);
  return out;
}

/// Each vertex pair independently absent / forward / backward with
/// probabilities (1 - density, density/2, density/2).
inline OrientedDigraph random_oriented_digraph(std::size_t n, double density, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  DigraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double x = unit(rng);
      if (x < density / 2) {
        b.try_add_arc(u, v);
      } else if (x < density) {
        b.try_add_arc(v, u);
      }
    }
  }
  return std::move(b).build();
}

/// Re-checks every structural invariant through the public surface.
inline bool satisfies_invariants(const OrientedDigraph& g) {
  const auto arcs = g.arcs();
  if (find_orientation_violation(g.vertex_count(), arcs)) return false;
  std::size_t in_total = 0, out_total = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Vertex w : g.out_neighbors(v)) {
      if (!g.has_arc(v, w) || g.has_arc(w, v)) return false;
    }
    in_total += g.in_neighbors(v).size();
    out_total += g.out_neighbors(v).size();
  }
  return in_total == arcs.size() && out_total == arcs.size() && arcs.size() == g.arc_count();
}

}  // namespace ktrans::testing
