#pragma once

// Closed-form structure of K(k, n), the k-transitive closure of the directed
// path 1 -> 2 -> ... -> n. Every arc of K(k, n) has length 1 + l(k-1), and all
// degree data follows from writing n = 2 + l(k-1) + m with 0 <= m < k-1.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ktrans/digraph.hpp"
#include "ktrans/rational.hpp"

namespace ktrans::path {

struct PathParams {
  std::size_t k = 2;
  std::size_t n = 2;
  std::size_t l = 0;
  std::size_t m = 0;

  friend bool operator==(const PathParams&, const PathParams&) = default;
};

namespace detail {

inline void require_k(std::size_t k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2, got " + std::to_string(k));
}

inline void require_n(std::size_t n, std::size_t min) {
  if (n < min) {
    throw std::invalid_argument("n must be at least " + std::to_string(min) + ", got " +
                                std::to_string(n));
  }
}

}  // namespace detail

/// Unique (l, m) with n = 2 + l(k-1) + m and 0 <= m < k-1. Requires k, n >= 2.
inline PathParams decompose(std::size_t k, std::size_t n) {
  detail::require_k(k);
  detail::require_n(n, 2);
  return {k, n, (n - 2) / (k - 1), (n - 2) % (k - 1)};
}

/// Arcs of K(k, n), 0-based, sorted by (tail, head).
inline std::vector<Arc> path_closure_arcs(std::size_t k, std::size_t n) {
  detail::require_k(k);
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t len = 1; i + len < n; len += k - 1) {
      arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + len)});
    }
  }
  return arcs;
}

inline OrientedDigraph path_closure(std::size_t k, std::size_t n) {
  const auto arcs = path_closure_arcs(k, n);
  return make_digraph(n, arcs);
}

/// Blocks: 0, then 1..l each repeated k-1 times, then l+1 repeated m+1 times.
inline std::vector<std::size_t> indegree_sequence(std::size_t k, std::size_t n) {
  detail::require_k(k);
  detail::require_n(n, 1);
  if (n == 1) return {0};
  const PathParams p = decompose(k, n);
  std::vector<std::size_t> seq;
  seq.reserve(n);
  seq.push_back(0);
  for (std::size_t d = 1; d <= p.l; ++d) seq.insert(seq.end(), k - 1, d);
  seq.insert(seq.end(), p.m + 1, p.l + 1);
  return seq;
}

inline std::vector<std::size_t> outdegree_sequence(std::size_t k, std::size_t n) {
  auto seq = indegree_sequence(k, n);
  std::reverse(seq.begin(), seq.end());
  return seq;
}

/// Degrees of the underlying undirected graph. Regular (l+1) when m = 0,
/// otherwise the block (a, b x m, a x (k-m-2)) with a = l+1, b = l+2,
/// repeated and cut to length n.
inline std::vector<std::size_t> total_degree_sequence(std::size_t k, std::size_t n) {
  detail::require_k(k);
  detail::require_n(n, 1);
  if (n == 1) return {0};
  const PathParams p = decompose(k, n);
  const std::size_t a = p.l + 1;
  if (p.m == 0) return std::vector<std::size_t>(n, a);
  const std::size_t b = p.l + 2;
  std::vector<std::size_t> block;
  block.push_back(a);
  block.insert(block.end(), p.m, b);
  block.insert(block.end(), k - p.m - 2, a);
  std::vector<std::size_t> seq;
  seq.reserve(n + block.size());
  while (seq.size() < n) seq.insert(seq.end(), block.begin(), block.end());
  seq.resize(n);
  return seq;
}

struct DegreeCounts {
  std::size_t low_degree = 0;   // l + 1
  std::size_t low_count = 0;    // l(k-m-1) + 2
  std::size_t high_degree = 0;  // l + 2
  std::size_t high_count = 0;   // m(l+1)

  friend bool operator==(const DegreeCounts&, const DegreeCounts&) = default;
};

inline DegreeCounts degree_counts(std::size_t k, std::size_t n) {
  const PathParams p = decompose(k, n);
  return {p.l + 1, p.l * (k - p.m - 1) + 2, p.l + 2, p.m * (p.l + 1)};
}

/// Number of arcs (equivalently undirected edges) of K(k, n).
inline std::uint64_t edge_count(std::size_t k, std::size_t n) {
  detail::require_k(k);
  detail::require_n(n, 1);
  if (n == 1) return 0;
  const PathParams p = decompose(k, n);
  const std::uint64_t l = p.l, m = p.m;
  const std::uint64_t degree_sum = m * (l + 1) * (l + 2) + (2 + l * (k - m - 1)) * (l + 1);
  return degree_sum / 2;
}

/// |E| / |E(K_n)|, exact.
inline Rational density(std::size_t k, std::size_t n) {
  detail::require_k(k);
  detail::require_n(n, 2);
  const auto nn = static_cast<std::int64_t>(n);
  return Rational(2 * static_cast<std::int64_t>(edge_count(k, n)), nn * (nn - 1));
}

/// Density through the polynomial form in (l, m):
///   (l^2(k-1) + l(k+2m+1) + 2(m+1)) / (l^2(k-1)^2 + l(k-1)(2m+3) + (m+1)(m+2))
inline Rational density_expanded(std::size_t k, std::size_t n) {
  const PathParams p = decompose(k, n);
  const auto K = static_cast<std::int64_t>(k);
  const auto l = static_cast<std::int64_t>(p.l);
  const auto m = static_cast<std::int64_t>(p.m);
  const std::int64_t num = l * l * (K - 1) + l * (K + 2 * m + 1) + 2 * (m + 1);
  const std::int64_t den =
      l * l * (K - 1) * (K - 1) + l * (K - 1) * (2 * m + 3) + (m + 1) * (m + 2);
  return Rational(num, den);
}

/// Limit of density(k, n) as n grows; defined for k >= 3.
inline Rational density_limit(std::size_t k) {
  if (k < 3) throw std::invalid_argument("density limit is stated for k >= 3");
  return Rational(1, static_cast<std::int64_t>(k - 1));
}

inline bool is_regular(std::size_t k, std::size_t n) {
  detail::require_k(k);
  detail::require_n(n, 1);
  return n == 1 || decompose(k, n).m == 0;
}

/// True iff all (indegree, outdegree) pairs of K(k, n) are pairwise distinct.
inline bool is_oriented_irregular(std::size_t k, std::size_t n) {
  const auto in = indegree_sequence(k, n);
  const auto out = outdegree_sequence(k, n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen.emplace(in[i], out[i]).second) return false;
  }
  return true;
}

}  // namespace ktrans::path
