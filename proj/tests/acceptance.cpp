// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ktrans/closure.hpp"
#include "ktrans/digraph.hpp"
#include "ktrans/oracles.hpp"
#include "ktrans/path_formulas.hpp"
#include "ktrans/rational.hpp"
#include "test_support.hpp"

namespace {

using namespace ktrans;
using Seq = std::vector<std::size_t>;

/// Collects the first few failure messages of a criterion.
struct Outcome {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  bool passed() const { return failures.empty(); }
};

std::string kn(std::size_t k, std::size_t n) {
  return "K(" + std::to_string(k) + "," + std::to_string(n) + ")";
}

Outcome figure_one() {
  Outcome o;
  std::set<std::pair<int, int>> expected;
  for (int i = 1; i <= 10; ++i) expected.emplace(i, i + 1);
  for (int i = 1; i <= 6; ++i) expected.emplace(i, i + 5);
  expected.emplace(1, 10);
  expected.emplace(2, 11);

  const auto engine = k_closure(make_path(11), 5);
  o.expect(closure_exists(engine), "engine found no closure for path(11), k=5");
  if (closure_exists(engine)) {
    o.expect(testing::arc_set1(std::get<ClosureExists>(engine).closure) == expected,
             "engine arc set differs from the 18 expected arcs");
  }
  o.expect(testing::arc_set1(path::path_closure(5, 11)) == expected,
           "closed-form arc set differs from the 18 expected arcs");
  o.expect(expected.size() == 18, "expected set size");
  return o;
}

Outcome degree_listings() {
  Outcome o;
  const std::map<std::size_t, Seq> printed{
      {10, Seq(10, 3)},
      {11, {3, 4, 3, 3, 3, 4, 3, 3, 3, 4, 3}},
      {12, {3, 4, 4, 3, 3, 4, 4, 3, 3, 4, 4, 3}},
      {13, {3, 4, 4, 4, 3, 4, 4, 4, 3, 4, 4, 4, 3}},
      {14, Seq(14, 4)},
  };
  for (const auto& [n, seq] : printed) {
    o.expect(path::total_degree_sequence(5, n) == seq, "total degree sequence of " + kn(5, n));
  }
  const std::vector<DegreePair> pairs{{0, 3}, {1, 3}, {1, 3}, {1, 2}, {1, 2}, {2, 2},
                                      {2, 2}, {2, 1}, {2, 1}, {3, 1}, {3, 1}, {3, 0}};
  std::vector<DegreePair> formula;
  const auto in = path::indegree_sequence(5, 12);
  const auto out = path::outdegree_sequence(5, 12);
  for (std::size_t i = 0; i < 12; ++i) formula.push_back({in[i], out[i]});
  o.expect(formula == pairs, "pair sequence of K(5,12) from formulas");
  const auto engine = k_closure(make_path(12), 5);
  o.expect(degree_profile(std::get<ClosureExists>(engine).closure).pairs == pairs,
           "pair sequence of the constructed K(5,12)");
  return o;
}

Outcome regularity() {
  Outcome o;
  for (std::size_t k = 3; k <= 6; ++k) {
    for (std::size_t l = 0; l <= 10; ++l) {
      const std::size_t n = 2 + l * (k - 1);
      const auto r = k_closure(make_path(n), k);
      const auto total = degree_profile(std::get<ClosureExists>(r).closure).total;
      o.expect(total == Seq(n, l + 1), kn(k, n) + " is not " + std::to_string(l + 1) + "-regular");
    }
  }
  return o;
}

Outcome counts() {
  Outcome o;
  for (std::size_t k = 3; k <= 6; ++k) {
    for (std::size_t n = k + 1; n <= 60; ++n) {
      const auto p = path::decompose(k, n);
      const auto r = k_closure(make_path(n), k);
      std::map<std::size_t, std::size_t> histogram;
      for (auto d : degree_profile(std::get<ClosureExists>(r).closure).total) ++histogram[d];
      std::map<std::size_t, std::size_t> expected;
      expected[p.l + 1] = p.l * (k - p.m - 1) + 2;
      if (p.m > 0) expected[p.l + 2] = p.m * (p.l + 1);
      o.expect(histogram == expected, "degree histogram of " + kn(k, n));
      const auto c = path::degree_counts(k, n);
      o.expect(c.low_count == expected[p.l + 1] && c.high_count == p.m * (p.l + 1),
               "degree_counts of " + kn(k, n));
    }
  }
  return o;
}

Outcome density() {
  Outcome o;
  for (std::size_t k = 3; k <= 8; ++k) {
    for (std::size_t n = 2; n <= 200; ++n) {
      const auto nn = static_cast<std::int64_t>(n);
      const auto arcs = static_cast<std::int64_t>(path::path_closure_arcs(k, n).size());
      const Rational counted(2 * arcs, nn * (nn - 1));
      o.expect(path::density_expanded(k, n) == counted, "expanded density of " + kn(k, n));
      o.expect(path::density(k, n) == counted, "density of " + kn(k, n));
    }
  }
  for (std::size_t n = 2; n <= 200; ++n) {
    o.expect(path::density(3, n) > Rational(1, 2), "density of " + kn(3, n) + " not above 1/2");
  }
  for (std::size_t k = 3; k <= 8; ++k) {
    const std::size_t n = 2 + 10'000 * (k - 1);
    const Rational gap = path::density(k, n) - path::density_limit(k);
    o.expect(std::abs(gap.to_double()) < 0.01, "density of " + kn(k, n) + " not within 0.01 of 1/(k-1)");
  }
  return o;
}

bool pairs_distinct(const DegreeProfile& p) {
  std::set<DegreePair> seen(p.pairs.begin(), p.pairs.end());
  return seen.size() == p.pairs.size();
}

Outcome irregularity() {
  Outcome o;
  for (std::size_t n = 3; n <= 30; ++n) {
    const auto r = k_closure(make_path(n), 3);
    const bool distinct = pairs_distinct(degree_profile(std::get<ClosureExists>(r).closure));
    o.expect(distinct == (n % 2 == 1), kn(3, n) + " irregularity does not follow parity of n");
    o.expect(path::is_oriented_irregular(3, n) == (n % 2 == 1), "predicate for " + kn(3, n));
  }
  for (std::size_t k = 4; k <= 6; ++k) {
    for (std::size_t n = k + 2; n <= 30; ++n) {
      const auto r = k_closure(make_path(n), k);
      o.expect(!pairs_distinct(degree_profile(std::get<ClosureExists>(r).closure)),
               kn(k, n) + " is oriented-irregular");
      o.expect(!path::is_oriented_irregular(k, n), "predicate for " + kn(k, n));
    }
  }
  return o;
}

Outcome engine_formula_agreement() {
  Outcome o;
  for (std::size_t k = 2; k <= 6; ++k) {
    for (std::size_t n = 1; n <= 40; ++n) {
      const auto r = k_closure(make_path(n), k);
      o.expect(closure_exists(r) &&
                   std::get<ClosureExists>(r).closure.arcs() == path::path_closure_arcs(k, n),
               "engine and closed form differ on " + kn(k, n));
    }
  }
  return o;
}

Outcome nonexistence() {
  Outcome o;
  for (std::size_t k = 2; k <= 6; ++k) {
    const auto cycle = make_cycle(k + 1);
    const auto r = k_closure(cycle, k);
    o.expect(!closure_exists(r), "engine found a closure of C_" + std::to_string(k + 1));
    const auto replay = replay_certificate(cycle, k, r);
    o.expect(replay.ok, "certificate for C_" + std::to_string(k + 1) + " fails replay: " +
                            replay.diagnostic);
  }
  for (std::size_t k = 2; k <= 3; ++k) {
    o.expect(!closure_exists(oracles::exhaustive_minimal_closure(make_cycle(k + 1), k)),
             "oracle found a closure of C_" + std::to_string(k + 1));
  }
  return o;
}

void compare_with_oracle(Outcome& o, const OrientedDigraph& g, std::size_t k,
                         const std::string& label) {
  const auto engine = k_closure(g, k);
  const auto oracle = oracles::exhaustive_minimal_closure(g, k);
  if (closure_exists(engine) != closure_exists(oracle)) {
    o.expect(false, label + ": existence differs");
    return;
  }
  if (closure_exists(engine)) {
    o.expect(std::get<ClosureExists>(engine).closure == std::get<ClosureExists>(oracle).closure,
             label + ": arc sets differ");
  } else {
    o.expect(true, label);
  }
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t graph_index = 0;
  oracles::for_each_oriented_digraph(4, [&](const OrientedDigraph& g) {
    for (std::size_t k = 2; k <= 3; ++k) {
      compare_with_oracle(o, g, k, "n=4 graph #" + std::to_string(graph_index) + ", k=" +
                                       std::to_string(k));
    }
    ++graph_index;
  });
  o.expect(graph_index == 729, "expected 729 oriented digraphs on 4 vertices, saw " +
                                   std::to_string(graph_index));
  std::mt19937_64 rng(20141922);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = testing::random_oriented_digraph(5, 0.2 + 0.15 * (trial % 5), rng);
    for (std::size_t k = 2; k <= 3; ++k) {
      compare_with_oracle(o, g, k, "random n=5 #" + std::to_string(trial) + ", k=" +
                                       std::to_string(k));
    }
  }
  return o;
}

Outcome induced_subgraph_property() {
  Outcome o;
  for (std::size_t k = 2; k <= 6; ++k) {
    for (std::size_t n = 1; n <= 39; ++n) {
      const auto bigger = k_closure(make_path(n + 1), k);
      const auto smaller = k_closure(make_path(n), k);
      o.expect(induced_prefix(std::get<ClosureExists>(bigger).closure, n) ==
                   std::get<ClosureExists>(smaller).closure,
               "restriction of " + kn(k, n + 1) + " differs from " + kn(k, n));
      o.expect(induced_prefix(path::path_closure(k, n + 1), n) == path::path_closure(k, n),
               "closed-form restriction of " + kn(k, n + 1));
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1  Figure-1 reproduction: K(5,11) has exactly the 18 expected arcs", figure_one},
      {"2  Degree-sequence listings for K(5,10..14) and pairs of K(5,12)", degree_listings},
      {"3  K_u(k,2+l(k-1)) is (l+1)-regular, k=3..6, l=0..10", regularity},
      {"4  Degree histogram counts, k=3..6, n=k+1..60", counts},
      {"5  Exact density formula, density(3,n) > 1/2, large-n limit within 0.01", density},
      {"6  K(3,n) oriented-irregular iff n odd; never for k=4..6", irregularity},
      {"7  Engine equals closed form on paths, k=2..6, n=1..40", engine_formula_agreement},
      {"8  No closure for C_{k+1}, replayable certificate; oracle agrees", nonexistence},
      {"9  Engine equals exhaustive oracle: all 729 n=4 graphs and 200 random n=5", oracle_equivalence},
      {"10 Restriction of K(k,n+1) to first n vertices is K(k,n)", induced_subgraph_property},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (o.passed() ? "[PASS] " : "[FAIL] ") << name << "  (" << o.checks
              << " checks, " << ms << " ms)\n";
    for (std::size_t i = 0; i < o.failures.size() && i < 5; ++i) {
      std::cout << "         " << o.failures[i] << '\n';
    }
    if (!o.passed()) ++failed;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed\n" : "all criteria passed\n");
  return failed ? 1 : 0;
}
