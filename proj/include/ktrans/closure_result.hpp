#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "ktrans/digraph.hpp"

namespace ktrans {

/// A k-arc walk (path.front(), ..., path.back()) that forces `target`.
struct DerivationWitness {
  Arc target;
  std::vector<Vertex> path;

  friend bool operator==(const DerivationWitness&, const DerivationWitness&) = default;
};

enum class ClosureConflict { loop, reverse };

inline std::string_view to_string(ClosureConflict kind) {
  return kind == ClosureConflict::loop ? "loop" : "reverse-conflict";
}

struct FinalConflict {
  ClosureConflict kind;
  DerivationWitness witness;

  friend bool operator==(const FinalConflict&, const FinalConflict&) = default;
};

struct ClosureExists {
  OrientedDigraph closure;
  /// Added arcs in derivation order. Empty for oracle-produced results.
  std::vector<DerivationWitness> added;

  friend bool operator==(const ClosureExists&, const ClosureExists&) = default;
};

struct ClosureNotExists {
  /// Arcs forced before the conflict, in derivation order.
  std::vector<DerivationWitness> certificate;
  /// Absent when the result comes from the exhaustive oracle.
  std::optional<FinalConflict> conflict;

  friend bool operator==(const ClosureNotExists&, const ClosureNotExists&) = default;
};

using ClosureResult = std::variant<ClosureExists, ClosureNotExists>;

inline bool closure_exists(const ClosureResult& r) {
  return std::holds_alternative<ClosureExists>(r);
}

}  // namespace ktrans
