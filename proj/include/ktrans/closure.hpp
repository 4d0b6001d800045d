#pragma once

// k-transitive closure by forced-arc saturation.
//
// Every arc of the input is queued. Processing an arc a enumerates each walk
// of exactly k arcs that uses a at position i (i arcs behind a's tail, k-1-i
// ahead of its head) and demands the shortcut (v0, vk). Each demanded arc is
// present in every k-transitive oriented supergraph, so the fixpoint, when
// reached without a conflict, is the unique minimal closure. A demanded loop
// or an arc whose reverse is present proves no closure exists.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "ktrans/closure_result.hpp"
#include "ktrans/digraph.hpp"
#include "ktrans/oracles.hpp"

namespace ktrans {

struct ClosureOptions {
  /// Upper bound on added arcs; defaults to n^2, which a correct run never reaches.
  std::optional<std::size_t> max_added_arcs;
};

class ClosureCapExceeded : public std::runtime_error {
 public:
  explicit ClosureCapExceeded(std::size_t cap)
      : std::runtime_error("closure exceeded the cap of " + std::to_string(cap) +
                           " added arcs"),
        cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

namespace detail {

struct Demand {
  Vertex from;
  Vertex to;
  std::vector<Vertex> walk;
};

/// For every vertex with a walk of exactly `length` arcs into `target`, the
/// lexicographically smallest such walk (ending in `target`), by start vertex.
inline std::vector<std::vector<Vertex>> lex_first_walks_into(const DigraphBuilder& g,
                                                              Vertex target,
                                                              std::size_t length) {
  const std::size_t n = g.vertex_count();
  // reaches[r][v]: v has a walk of exactly r arcs to target.
  std::vector<std::vector<char>> reaches(length + 1, std::vector<char>(n, 0));
  reaches[0][target] = 1;
  for (std::size_t r = 1; r <= length; ++r) {
    for (Vertex v = 0; v < n; ++v) {
      if (!reaches[r - 1][v]) continue;
      for (Vertex u : g.in_neighbors(v)) reaches[r][u] = 1;
    }
  }
  std::vector<std::vector<Vertex>> walks;
  for (Vertex start = 0; start < n; ++start) {
    if (!reaches[length][start]) continue;
    std::vector<Vertex> walk{start};
    Vertex cur = start;
    for (std::size_t r = length; r > 0; --r) {
      for (Vertex w : g.out_neighbors(cur)) {
        if (reaches[r - 1][w]) {
          cur = w;
          break;
        }
      }
      walk.push_back(cur);
    }
    walks.push_back(std::move(walk));
  }
  return walks;
}

/// Walks of exactly `length` arcs out of `source`, one per reachable end
/// vertex: the lexicographically smallest, listed in lexicographic order.
inline std::vector<std::vector<Vertex>> lex_first_walks_from(const DigraphBuilder& g,
                                                              Vertex source,
                                                              std::size_t length) {
  const std::size_t n = g.vertex_count();
  std::vector<char> explored(n * (length + 1), 0);
  std::vector<char> end_seen(n, 0);
  std::vector<std::vector<Vertex>> walks;
  std::vector<Vertex> walk{source};
  // A state (v, arcs left) seen before only leads to ends already recorded
  // through a lexicographically smaller walk.
  auto extend = [&](auto&& self, Vertex v, std::size_t left) -> void {
    char& seen = explored[v * (length + 1) + left];
    if (seen) return;
    seen = 1;
    if (left == 0) {
      if (!end_seen[v]) {
        end_seen[v] = 1;
        walks.push_back(walk);
      }
      return;
    }
    for (Vertex w : g.out_neighbors(v)) {
      walk.push_back(w);
      self(self, w, left - 1);
      walk.pop_back();
    }
  };
  extend(extend, source, length);
  return walks;
}

/// Shortcuts demanded by k-walks through `arc`, in (position, lexicographic)
/// order, keeping the first walk for each endpoint pair within a position.
inline std::vector<Demand> demands_through(const DigraphBuilder& g, Arc arc, std::size_t k) {
  std::vector<Demand> demands;
  for (std::size_t behind = 0; behind < k; ++behind) {
    const auto prefixes = lex_first_walks_into(g, arc.tail, behind);
    if (prefixes.empty()) continue;
    const auto suffixes = lex_first_walks_from(g, arc.head, k - 1 - behind);
    for (const auto& prefix : prefixes) {
      for (const auto& suffix : suffixes) {
        Demand d{prefix.front(), suffix.back(), {}};
        d.walk.reserve(k + 1);
        d.walk.insert(d.walk.end(), prefix.begin(), prefix.end());
        d.walk.insert(d.walk.end(), suffix.begin(), suffix.end());
        demands.push_back(std::move(d));
      }
    }
  }
  return demands;
}

}  // namespace detail

inline ClosureResult k_closure(const OrientedDigraph& g, std::size_t k,
                               const ClosureOptions& options = {}) {
  if (k < 2) throw std::invalid_argument("k must be at least 2, got " + std::to_string(k));
  const std::size_t n = g.vertex_count();
  const std::size_t cap = options.max_added_arcs.value_or(n * n);

  DigraphBuilder current(g);
  std::deque<Arc> worklist;
  for (const Arc& a : g.arcs()) worklist.push_back(a);
  std::vector<DerivationWitness> added;

  while (!worklist.empty()) {
    const Arc arc = worklist.front();
    worklist.pop_front();
    // Walks are taken from the graph as it stands before this arc's demands
    // are applied; arcs added meanwhile are queued and get their own turn.
    for (auto& d : detail::demands_through(current, arc, k)) {
      DerivationWitness witness{{d.from, d.to}, std::move(d.walk)};
      if (d.from == d.to) {
        return ClosureNotExists{std::move(added),
                                FinalConflict{ClosureConflict::loop, std::move(witness)}};
      }
      if (current.has_arc(d.from, d.to)) continue;
      if (current.has_arc(d.to, d.from)) {
        return ClosureNotExists{std::move(added),
                                FinalConflict{ClosureConflict::reverse, std::move(witness)}};
      }
      if (added.size() >= cap) throw ClosureCapExceeded(cap);
      current.try_add_arc(d.from, d.to);
      worklist.push_back({d.from, d.to});
      added.push_back(std::move(witness));
    }
  }
  return ClosureExists{std::move(current).build(), std::move(added)};
}

struct ReplayReport {
  bool ok = true;
  std::string diagnostic;

  explicit operator bool() const noexcept { return ok; }
};

namespace detail {

inline std::string arc_text(Arc a) {
  return "(" + std::to_string(a.tail + 1) + "," + std::to_string(a.head + 1) + ")";
}

/// Empty string when `w` is a k-arc walk over `arcs` from target.tail to target.head.
inline std::string walk_problem(const DigraphBuilder& arcs, const DerivationWitness& w,
                                std::size_t k) {
  if (w.path.size() != k + 1) {
    return "witness for " + arc_text(w.target) + " has " + std::to_string(w.path.size()) +
           " vertices, expected " + std::to_string(k + 1);
  }
  if (w.path.front() != w.target.tail || w.path.back() != w.target.head) {
    return "witness endpoints do not match " + arc_text(w.target);
  }
  for (Vertex v : w.path) {
    if (v >= arcs.vertex_count()) return "witness vertex out of range";
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!arcs.has_arc(w.path[i], w.path[i + 1])) {
      return "witness for " + arc_text(w.target) + " uses " +
             arc_text({w.path[i], w.path[i + 1]}) + ", which is not derived yet";
    }
  }
  return {};
}

}  // namespace detail

/// Independent audit of a closure result for (g, k): replays every derivation
/// in order and checks the claimed outcome.
inline ReplayReport replay_certificate(const OrientedDigraph& g, std::size_t k,
                                       const ClosureResult& result) {
  auto fail = [](std::string why) { return ReplayReport{false, std::move(why)}; };
  DigraphBuilder state(g);

  const auto& steps = std::visit(
      [](const auto& r) -> const std::vector<DerivationWitness>& {
        if constexpr (std::is_same_v<std::decay_t<decltype(r)>, ClosureExists>) {
          return r.added;
        } else {
          return r.certificate;
        }
      },
      result);

  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& w = steps[i];
    const std::string prefix = "step " + std::to_string(i + 1) + ": ";
    if (auto problem = detail::walk_problem(state, w, k); !problem.empty()) {
      return fail(prefix + problem);
    }
    if (auto c = state.try_add_arc(w.target.tail, w.target.head)) {
      return fail(prefix + "cannot add " + detail::arc_text(w.target) + " (" +
                  std::string(to_string(c->kind)) + ")");
    }
  }

  if (const auto* ok = std::get_if<ClosureExists>(&result)) {
    if (!(std::move(state).build() == ok->closure)) {
      return fail("closure differs from input plus derived arcs");
    }
    if (auto v = oracles::check_k_transitive(ok->closure, k)) {
      std::string walk;
      for (Vertex x : v->path) walk += (walk.empty() ? "" : " ") + std::to_string(x + 1);
      return fail("claimed closure is not k-transitive: " + std::string(to_string(v->kind)) +
                  " on walk " + walk);
    }
    return {};
  }

  const auto& none = std::get<ClosureNotExists>(result);
  if (!none.conflict) return fail("no final conflict witness");
  const auto& conflict = *none.conflict;
  if (auto problem = detail::walk_problem(state, conflict.witness, k); !problem.empty()) {
    return fail("final conflict: " + problem);
  }
  const Arc t = conflict.witness.target;
  if (conflict.kind == ClosureConflict::loop && t.tail != t.head) {
    return fail("final conflict claims a loop but " + detail::arc_text(t) + " is not one");
  }
  if (conflict.kind == ClosureConflict::reverse && !state.has_arc(t.head, t.tail)) {
    return fail("final conflict claims " + detail::arc_text({t.head, t.tail}) +
                " is present, but it is not");
  }
  return {};
}

}  // namespace ktrans
