#pragma once

// `ktrans` command-line front end. stdout carries data only; diagnostics go
// to the error stream. Exit codes:
//   0 ok, 1 verification failed, 2 parse/argument error,
//   3 closure does not exist, 4 internal cap exceeded, 5 self-check mismatch.

#include <cmath>
#include <cstddef>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ktrans/closure.hpp"
#include "ktrans/digraph.hpp"
#include "ktrans/io.hpp"
#include "ktrans/oracles.hpp"
#include "ktrans/path_formulas.hpp"
#include "ktrans/rational.hpp"

namespace ktrans::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsageError = 2,
  kNoClosure = 3,
  kCapExceeded = 4,
  kCheckMismatch = 5,
};

inline constexpr std::size_t kMaxK = 16;

namespace detail {

inline std::string approx(double x) {
  std::ostringstream os;
  os << '~' << std::setprecision(10) << x;
  return os.str();
}

inline std::string approx(const Rational& r) { return approx(r.to_double()); }

template <typename Seq>
std::string tuple_text(const Seq& seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(seq[i]);
  }
  return out + ")";
}

inline std::string pairs_text(const std::vector<DegreePair>& pairs) {
  std::string out = "(";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += ',';
    out += "(" + std::to_string(pairs[i].in) + "," + std::to_string(pairs[i].out) + ")";
  }
  return out + ")";
}

inline std::string walk_line(const DerivationWitness& w) {
  return std::to_string(w.target.tail + 1) + " " + std::to_string(w.target.head + 1) + " via " +
         io::format_walk(w.path);
}

inline nlohmann::json witness_json(const DerivationWitness& w) {
  nlohmann::json walk = nlohmann::json::array();
  for (Vertex v : w.path) walk.push_back(v + 1);
  return {{"arc", {w.target.tail + 1, w.target.head + 1}}, {"walk", std::move(walk)}};
}

inline void write_arc_table(std::ostream& out, const OrientedDigraph& g) {
  out << std::setw(6) << "tail" << std::setw(6) << "head" << std::setw(8) << "length" << '\n';
  for (const Arc& a : g.arcs()) {
    const auto len = a.head > a.tail ? a.head - a.tail : a.tail - a.head;
    out << std::setw(6) << a.tail + 1 << std::setw(6) << a.head + 1 << std::setw(8) << len
        << '\n';
  }
}

struct PathSummary {
  std::string title;
  std::vector<std::string> lines;
  nlohmann::json meta;
};

inline PathSummary summarize_path(std::size_t k, std::size_t n) {
  PathSummary s;
  s.title = "K(" + std::to_string(k) + "," + std::to_string(n) + ")";
  const auto edges = path::edge_count(k, n);
  s.meta = {{"k", k}, {"arc_count", edges}};
  if (n >= 2) {
    const auto p = path::decompose(k, n);
    const Rational d = path::density(k, n);
    s.lines.push_back(s.title + ": n = 2 + " + std::to_string(p.l) + "(" + std::to_string(k) +
                      "-1) + " + std::to_string(p.m) + ", l = " + std::to_string(p.l) +
                      ", m = " + std::to_string(p.m));
    s.lines.push_back("arcs: " + std::to_string(edges));
    s.lines.push_back("density: " + d.str() + " (" + approx(d) + ")");
    s.meta["l"] = p.l;
    s.meta["m"] = p.m;
    s.meta["density"] = d.str();
    s.meta["density_approx"] = d.to_double();
  } else {
    s.lines.push_back(s.title + ": single vertex, no decomposition");
    s.lines.push_back("arcs: " + std::to_string(edges));
    s.meta["l"] = nullptr;
    s.meta["m"] = nullptr;
    s.meta["density"] = nullptr;
  }
  return s;
}

inline void emit_graph(std::ostream& out, const OrientedDigraph& g, const OrientedDigraph& base,
                       const std::string& format, const std::string& dot_name,
                       const std::vector<std::string>& notes, nlohmann::json meta) {
  if (format == "edgelist") {
    io::write_edgelist(out, g, notes);
  } else if (format == "json") {
    nlohmann::json doc = io::to_json(g);
    for (auto& [key, value] : meta.items()) doc[key] = value;
    out << doc.dump(2) << '\n';
  } else if (format == "dot") {
    for (const auto& note : notes) out << "// " << note << '\n';
    io::write_dot(out, g, base, dot_name);
  } else {
    for (const auto& note : notes) out << note << '\n';
    write_arc_table(out, g);
  }
}

struct Options {
  std::size_t k = 0;
  std::size_t n = 0;
  std::string input;
  std::string format = "table";
  bool check = false;
  bool witnesses = false;
  std::size_t max_added = 0;
};

inline int cmd_path_closure(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.n < 1) {
    err << "error: n must be at least 1\n";
    return kUsageError;
  }
  const auto g = path::path_closure(opt.k, opt.n);
  if (opt.check) {
    const auto engine = k_closure(make_path(opt.n), opt.k);
    const auto* ok = std::get_if<ClosureExists>(&engine);
    if (!ok || !(ok->closure == g)) {
      err << "check failed: closure engine disagrees with the closed form\n";
      return kCheckMismatch;
    }
  }
  const auto s = summarize_path(opt.k, opt.n);
  emit_graph(out, g, make_path(opt.n), opt.format,
             "K_" + std::to_string(opt.k) + "_" + std::to_string(opt.n), s.lines, s.meta);
  return kOk;
}

inline int cmd_closure(const Options& opt, std::ostream& out, std::ostream& err) {
  OrientedDigraph g;
  try {
    g = io::load_graph(opt.input);
  } catch (const io::ParseError& e) {
    err << opt.input << ": " << e.what() << '\n';
    return kUsageError;
  }

  ClosureOptions copts;
  if (opt.max_added > 0) copts.max_added_arcs = opt.max_added;
  ClosureResult result;
  try {
    result = k_closure(g, opt.k, copts);
  } catch (const ClosureCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  }

  if (const auto* none = std::get_if<ClosureNotExists>(&result)) {
    err << "no " << opt.k << "-transitive closure exists\n";
    if (opt.format == "json") {
      nlohmann::json cert = nlohmann::json::array();
      for (const auto& w : none->certificate) cert.push_back(witness_json(w));
      nlohmann::json doc = {{"exists", false}, {"k", opt.k}, {"certificate", std::move(cert)}};
      doc["conflict"] = witness_json(none->conflict->witness);
      doc["conflict"]["kind"] = to_string(none->conflict->kind);
      out << doc.dump(2) << '\n';
    } else {
      out << "# no " << opt.k << "-transitive closure; forced arcs in order, then the conflict\n";
      for (const auto& w : none->certificate) out << "force " << walk_line(w) << '\n';
      out << "conflict " << to_string(none->conflict->kind) << ' '
          << walk_line(none->conflict->witness) << '\n';
    }
    return kNoClosure;
  }

  const auto& ok = std::get<ClosureExists>(result);
  std::vector<std::string> notes{std::to_string(opt.k) + "-transitive closure",
                                 "added arcs: " + std::to_string(ok.added.size())};
  nlohmann::json meta = {{"k", opt.k}, {"exists", true}, {"added_count", ok.added.size()}};
  if (opt.witnesses) {
    nlohmann::json added = nlohmann::json::array();
    for (const auto& w : ok.added) {
      notes.push_back("derived " + walk_line(w));
      added.push_back(witness_json(w));
    }
    meta["added"] = std::move(added);
  }
  emit_graph(out, ok.closure, g, opt.format, "closure", notes, meta);
  return kOk;
}

inline int cmd_degrees(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.n < 1) {
    err << "error: n must be at least 1\n";
    return kUsageError;
  }
  const std::size_t k = opt.k, n = opt.n;
  const auto in = path::indegree_sequence(k, n);
  const auto outd = path::outdegree_sequence(k, n);
  const auto total = path::total_degree_sequence(k, n);
  std::vector<DegreePair> pairs;
  for (std::size_t i = 0; i < n; ++i) pairs.push_back({in[i], outd[i]});
  const bool regular = path::is_regular(k, n);
  const bool irregular = path::is_oriented_irregular(k, n);

  if (opt.check) {
    const auto profile = degree_profile(path::path_closure(k, n));
    const auto engine = k_closure(make_path(n), k);
    const auto* ok = std::get_if<ClosureExists>(&engine);
    bool match = ok && degree_profile(ok->closure) == profile && profile.indeg == in &&
                 profile.outdeg == outd && profile.total == total;
    if (match && n >= 2) {
      const auto counts = path::degree_counts(k, n);
      std::map<std::size_t, std::size_t> histogram;
      for (auto d : profile.total) ++histogram[d];
      match = histogram[counts.low_degree] == counts.low_count &&
              (counts.high_count == 0 || histogram[counts.high_degree] == counts.high_count);
    }
    if (!match) {
      err << "check failed: formulas disagree with the constructed closure\n";
      return kCheckMismatch;
    }
  }

  std::string regularity;
  if (regular) {
    regularity = "regular, degree " + std::to_string(total.front());
  } else {
    const auto c = path::degree_counts(k, n);
    regularity = "not regular, " + std::to_string(c.low_count) + " of degree " +
                 std::to_string(c.low_degree) + " and " + std::to_string(c.high_count) +
                 " of degree " + std::to_string(c.high_degree);
  }

  if (opt.format == "json") {
    nlohmann::json pj = nlohmann::json::array();
    for (const auto& p : pairs) pj.push_back({p.in, p.out});
    nlohmann::json doc = {{"k", k},         {"n", n},          {"indegree", in},
                          {"outdegree", outd}, {"pairs", pj},     {"total", total},
                          {"regular", regular}, {"oriented_irregular", irregular}};
    if (n >= 2) {
      const auto p = path::decompose(k, n);
      doc["l"] = p.l;
      doc["m"] = p.m;
    }
    out << doc.dump(2) << '\n';
    return kOk;
  }

  out << "K(" << k << "," << n << ")";
  if (n >= 2) {
    const auto p = path::decompose(k, n);
    out << ": l = " << p.l << ", m = " << p.m;
  }
  out << '\n';
  out << "indegree:  " << tuple_text(in) << '\n';
  out << "outdegree: " << tuple_text(outd) << '\n';
  out << "pairs:     " << pairs_text(pairs) << '\n';
  out << "total:     " << tuple_text(total) << '\n';
  out << regularity << '\n';
  out << "oriented-irregular: " << (irregular ? "yes" : "no") << '\n';
  return kOk;
}

inline int cmd_density(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.n < 2) {
    err << "error: n-max must be at least 2\n";
    return kUsageError;
  }
  const Rational limit = opt.k == 2 ? Rational(1) : path::density_limit(opt.k);
  nlohmann::json rows = nlohmann::json::array();
  if (opt.format != "json") {
    out << "# limit " << limit << "; decimals prefixed '~' are approximations\n";
    out << std::left << std::setw(8) << "n" << std::setw(20) << "density" << std::setw(16)
        << "approx" << std::setw(20) << "distance" << "approx" << '\n';
  }
  for (std::size_t n = 2; n <= opt.n; ++n) {
    const Rational d = path::density(opt.k, n);
    const Rational gap = d > limit ? d - limit : limit - d;
    if (opt.format == "json") {
      rows.push_back({{"n", n},
                      {"density", d.str()},
                      {"approx", d.to_double()},
                      {"distance", gap.str()},
                      {"distance_approx", gap.to_double()}});
    } else {
      out << std::left << std::setw(8) << n << std::setw(20) << d.str() << std::setw(16)
          << approx(d) << std::setw(20) << gap.str() << approx(gap) << '\n';
    }
  }
  if (opt.format == "json") {
    out << nlohmann::json{{"k", opt.k}, {"limit", limit.str()}, {"rows", rows}}.dump(2) << '\n';
  }
  return kOk;
}

inline int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  OrientedDigraph g;
  try {
    g = io::load_graph(opt.input);
  } catch (const io::ParseError& e) {
    err << opt.input << ": " << e.what() << '\n';
    return kUsageError;
  }
  if (auto v = oracles::check_k_transitive(g, opt.k)) {
    out << "violation " << oracles::to_string(v->kind) << ": " << io::format_walk(v->path)
        << '\n';
    return kVerifyFailed;
  }
  out << "ok\n";
  return kOk;
}

}  // namespace detail

/// Runs the CLI on `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-transitive closures of oriented digraphs", "ktrans"};
  app.require_subcommand(1);
  detail::Options opt;

  const std::vector<std::string> graph_formats{"edgelist", "json", "dot", "table"};
  const std::vector<std::string> table_formats{"table", "json"};
  auto add_k = [&](CLI::App* sub) {
    sub->add_option("-k", opt.k, "shortcut length k")
        ->required()
        ->check(CLI::Range(std::size_t{2}, kMaxK));
  };
  auto add_format = [&](CLI::App* sub, const std::vector<std::string>& allowed) {
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember(allowed))
        ->capture_default_str();
  };

  auto* path_closure = app.add_subcommand("path-closure", "closed form of K(k,n)");
  add_k(path_closure);
  path_closure->add_option("-n", opt.n, "path vertices")->required();
  add_format(path_closure, graph_formats);
  path_closure->add_flag("--check", opt.check, "cross-check against the closure engine");

  auto* closure = app.add_subcommand("closure", "k-transitive closure of an input graph");
  add_k(closure);
  closure->add_option("-i,--input", opt.input, "edge list or JSON graph")->required();
  add_format(closure, graph_formats);
  closure->add_flag("--witnesses", opt.witnesses, "list the derivation of every added arc");
  closure->add_option("--max-added", opt.max_added, "cap on added arcs (default n^2)");

  auto* degrees = app.add_subcommand("degrees", "degree sequences of K(k,n)");
  add_k(degrees);
  degrees->add_option("-n", opt.n, "path vertices")->required();
  add_format(degrees, table_formats);
  degrees->add_flag("--check", opt.check, "recompute from the constructed graph");

  auto* density = app.add_subcommand("density", "exact density of K(k,n) for n = 2..n-max");
  add_k(density);
  density->add_option("-n,--n-max", opt.n, "largest n")->required();
  add_format(density, table_formats);

  auto* verify = app.add_subcommand("verify", "check k-transitivity of an input graph");
  add_k(verify);
  verify->add_option("-i,--input", opt.input, "edge list or JSON graph")->required();

  std::vector<const char*> argv{"ktrans"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (path_closure->parsed()) return detail::cmd_path_closure(opt, out, err);
    if (closure->parsed()) return detail::cmd_closure(opt, out, err);
    if (degrees->parsed()) return detail::cmd_degrees(opt, out, err);
    if (density->parsed()) return detail::cmd_density(opt, out, err);
    if (verify->parsed()) return detail::cmd_verify(opt, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace ktrans::cli
