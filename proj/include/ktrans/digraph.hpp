#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

namespace ktrans {

/// 0-based vertex index. Everything user-facing prints `index + 1`.
using Vertex = std::uint32_t;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
  friend constexpr bool operator==(const Arc&, const Arc&) = default;
};

namespace detail {

constexpr std::uint64_t arc_key(Vertex u, Vertex v) noexcept {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

inline void insert_sorted(std::vector<Vertex>& xs, Vertex v) {
  xs.insert(std::upper_bound(xs.begin(), xs.end(), v), v);
}

}  // namespace detail

enum class ConflictKind { loop, reverse_exists, duplicate };

inline std::string_view to_string(ConflictKind kind) {
  switch (kind) {
    case ConflictKind::loop:
      return "loop";
    case ConflictKind::reverse_exists:
      return "reverse-exists";
    case ConflictKind::duplicate:
      return "duplicate";
  }
  return "?";
}

/// Why an arc could not be inserted into an oriented digraph.
struct ArcConflict {
  ConflictKind kind;
  Arc arc;

  friend bool operator==(const ArcConflict&, const ArcConflict&) = default;
};

class OrientedDigraph;

/// Mutable staging area for an OrientedDigraph. Keeps forward and reverse
/// sorted adjacency plus a hash index so membership is O(1) expected.
class DigraphBuilder {
 public:
  explicit DigraphBuilder(std::size_t n = 0) : out_(n), in_(n) {}
  explicit DigraphBuilder(const OrientedDigraph& g);

  std::size_t vertex_count() const noexcept { return out_.size(); }
  std::size_t arc_count() const noexcept { return index_.size(); }

  bool has_arc(Vertex u, Vertex v) const {
    return index_.contains(detail::arc_key(u, v));
  }

  /// Returns the violated invariant, or nullopt after inserting (u, v).
  std::optional<ArcConflict> try_add_arc(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return ArcConflict{ConflictKind::loop, {u, v}};
    if (has_arc(u, v)) return ArcConflict{ConflictKind::duplicate, {u, v}};
    if (has_arc(v, u)) return ArcConflict{ConflictKind::reverse_exists, {u, v}};
    index_.insert(detail::arc_key(u, v));
    detail::insert_sorted(out_[u], v);
    detail::insert_sorted(in_[v], u);
    return std::nullopt;
  }

  std::span<const Vertex> out_neighbors(Vertex v) const { return out_.at(v); }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_.at(v); }

  OrientedDigraph build() const&;
  OrientedDigraph build() &&;

 private:
  void check_vertex(Vertex v) const {
    if (v >= out_.size()) {
      throw std::out_of_range("vertex " + std::to_string(v + 1) + " out of range (n = " +
                              std::to_string(out_.size()) + ")");
    }
  }

  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::unordered_set<std::uint64_t> index_;
};

/// Immutable loop-free oriented digraph: at most one of (u, v), (v, u).
class OrientedDigraph {
 public:
  OrientedDigraph() = default;

  std::size_t vertex_count() const noexcept { return out_.size(); }
  std::size_t arc_count() const noexcept { return index_.size(); }

  bool has_arc(Vertex u, Vertex v) const {
    return index_.contains(detail::arc_key(u, v));
  }
  bool has_arc(Arc a) const { return has_arc(a.tail, a.head); }

  std::span<const Vertex> out_neighbors(Vertex v) const { return out_.at(v); }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_.at(v); }

  /// All arcs in (tail, head) lexicographic order.
  std::vector<Arc> arcs() const {
    std::vector<Arc> result;
    result.reserve(arc_count());
    for (Vertex u = 0; u < out_.size(); ++u) {
      for (Vertex v : out_[u]) result.push_back({u, v});
    }
    return result;
  }

  friend bool operator==(const OrientedDigraph& a, const OrientedDigraph& b) {
    return a.out_ == b.out_;
  }

 private:
  friend class DigraphBuilder;

  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::unordered_set<std::uint64_t> index_;
};

inline DigraphBuilder::DigraphBuilder(const OrientedDigraph& g)
    : out_(g.out_), in_(g.in_), index_(g.index_) {}

inline OrientedDigraph DigraphBuilder::build() const& {
  OrientedDigraph g;
  g.out_ = out_;
  g.in_ = in_;
  g.index_ = index_;
  return g;
}

inline OrientedDigraph DigraphBuilder::build() && {
  OrientedDigraph g;
  g.out_ = std::move(out_);
  g.in_ = std::move(in_);
  g.index_ = std::move(index_);
  return g;
}

/// Builds a graph from an arc list, throwing std::invalid_argument on the
/// first arc that breaks the oriented-digraph invariants.
inline OrientedDigraph make_digraph(std::size_t n, std::span<const Arc> arcs) {
  DigraphBuilder b(n);
  for (const Arc& a : arcs) {
    if (auto c = b.try_add_arc(a.tail, a.head)) {
      throw std::invalid_argument("arc (" + std::to_string(a.tail + 1) + "," +
                                  std::to_string(a.head + 1) + "): " +
                                  std::string(to_string(c->kind)));
    }
  }
  return std::move(b).build();
}

inline OrientedDigraph make_digraph(std::size_t n, std::initializer_list<Arc> arcs) {
  return make_digraph(n, std::span<const Arc>(arcs.begin(), arcs.size()));
}

/// Directed path 1 -> 2 -> ... -> n.
inline OrientedDigraph make_path(std::size_t n) {
  DigraphBuilder b(n);
  for (Vertex i = 0; i + 1 < n; ++i) b.try_add_arc(i, i + 1);
  return std::move(b).build();
}

/// Cyclically oriented cycle on n >= 3 vertices.
inline OrientedDigraph make_cycle(std::size_t n) {
  if (n < 3) {
    throw std::invalid_argument("cycle needs at least 3 vertices, got " + std::to_string(n));
  }
  DigraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) b.try_add_arc(i, static_cast<Vertex>((i + 1) % n));
  return std::move(b).build();
}

/// Returns g + (u, v) or the invariant that insertion would break.
inline std::variant<OrientedDigraph, ArcConflict> add_arc(const OrientedDigraph& g, Vertex u,
                                                           Vertex v) {
  DigraphBuilder b(g);
  if (auto c = b.try_add_arc(u, v)) return *c;
  return std::move(b).build();
}

struct DegreePair {
  std::size_t in = 0;
  std::size_t out = 0;

  friend constexpr auto operator<=>(const DegreePair&, const DegreePair&) = default;
};

struct DegreeProfile {
  std::vector<std::size_t> indeg;
  std::vector<std::size_t> outdeg;
  std::vector<DegreePair> pairs;
  std::vector<std::size_t> total;

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

inline DegreeProfile degree_profile(const OrientedDigraph& g) {
  const std::size_t n = g.vertex_count();
  DegreeProfile p;
  p.indeg.reserve(n);
  p.outdeg.reserve(n);
  p.pairs.reserve(n);
  p.total.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t in = g.in_neighbors(v).size();
    const std::size_t out = g.out_neighbors(v).size();
    p.indeg.push_back(in);
    p.outdeg.push_back(out);
    p.pairs.push_back({in, out});
    p.total.push_back(in + out);
  }
  return p;
}

/// Subgraph induced on `keep`, with vertex keep[i] renamed to i.
inline OrientedDigraph induced_subgraph(const OrientedDigraph& g, std::span<const Vertex> keep) {
  const std::size_t n = g.vertex_count();
  std::vector<std::optional<Vertex>> position(n);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const Vertex v = keep[i];
    if (v >= n) {
      throw std::out_of_range("vertex " + std::to_string(v + 1) + " out of range (n = " +
                              std::to_string(n) + ")");
    }
    if (position[v]) {
      throw std::invalid_argument("vertex " + std::to_string(v + 1) + " listed twice");
    }
    position[v] = static_cast<Vertex>(i);
  }
  DigraphBuilder b(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : g.out_neighbors(keep[i])) {
      if (position[w]) b.try_add_arc(static_cast<Vertex>(i), *position[w]);
    }
  }
  return std::move(b).build();
}

/// First `count` vertices, in order.
inline OrientedDigraph induced_prefix(const OrientedDigraph& g, std::size_t count) {
  std::vector<Vertex> keep(count);
  for (std::size_t i = 0; i < count; ++i) keep[i] = static_cast<Vertex>(i);
  return induced_subgraph(g, keep);
}

/// Validates a raw arc list against the oriented-digraph invariants.
/// Returns the first offending arc, or nullopt when the list is clean.
inline std::optional<ArcConflict> find_orientation_violation(std::size_t n,
                                                             std::span<const Arc> arcs) {
  std::unordered_set<std::uint64_t> seen;
  for (const Arc& a : arcs) {
    if (a.tail >= n || a.head >= n) {
      throw std::out_of_range("arc endpoint out of range");
    }
    if (a.tail == a.head) return ArcConflict{ConflictKind::loop, a};
    if (seen.contains(detail::arc_key(a.tail, a.head))) {
      return ArcConflict{ConflictKind::duplicate, a};
    }
    if (seen.contains(detail::arc_key(a.head, a.tail))) {
      return ArcConflict{ConflictKind::reverse_exists, a};
    }
    seen.insert(detail::arc_key(a.tail, a.head));
  }
  return std::nullopt;
}

}  // namespace ktrans
