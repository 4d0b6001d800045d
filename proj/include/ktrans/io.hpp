#pragma once

// Text formats. All ids are 1-based on the wire.
//
//   edge list:  optional first line "n <count>", then one "u v" per line;
//               '#' starts a comment, blank lines are ignored. Without the
//               header, n is the largest vertex mentioned.
//   JSON:       {"n": <int>, "arcs": [[u, v], ...]}

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ktrans/digraph.hpp"

namespace ktrans::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}
  /// 1-based line of the offending input, or 0 when no line applies.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

struct NumberedArc {
  Arc arc;
  std::size_t line;
};

inline std::string arc_text(Arc a) {
  return "(" + std::to_string(a.tail + 1) + "," + std::to_string(a.head + 1) + ")";
}

/// `position` is a line number for edge lists and an entry index for JSON.
inline OrientedDigraph assemble(std::size_t n, const std::vector<NumberedArc>& arcs, bool json) {
  const std::string_view line_word = json ? "entry" : "line";
  auto error = [json](std::size_t position, const std::string& msg) {
    return json ? ParseError(0, "arcs entry " + std::to_string(position) + ": " + msg)
                : ParseError(position, msg);
  };
  DigraphBuilder b(n);
  std::map<std::pair<Vertex, Vertex>, std::size_t> first_seen;
  for (const auto& [arc, line] : arcs) {
    if (arc.tail >= n || arc.head >= n) {
      throw error(line, "arc " + arc_text(arc) + " exceeds n = " + std::to_string(n));
    }
    if (auto c = b.try_add_arc(arc.tail, arc.head)) {
      std::string msg = "arc " + arc_text(arc) + " rejected: ";
      switch (c->kind) {
        case ConflictKind::loop:
          msg += "loop";
          break;
        case ConflictKind::duplicate:
          msg += "duplicate of " + std::string(line_word) + " " +
                 std::to_string(first_seen[{arc.tail, arc.head}]);
          break;
        case ConflictKind::reverse_exists:
          msg += "reverse of " + std::string(line_word) + " " +
                 std::to_string(first_seen[{arc.head, arc.tail}]);
          break;
      }
      throw error(line, msg);
    }
    first_seen[{arc.tail, arc.head}] = line;
  }
  return std::move(b).build();
}

inline Vertex parse_vertex(const std::string& token, std::size_t line) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a vertex number, got '" + token + "'");
  }
  if (used != token.size()) throw ParseError(line, "expected a vertex number, got '" + token + "'");
  if (value < 1 || value > 0xFFFFFFFFLL) {
    throw ParseError(line, "vertex ids are 1-based positive integers, got " + token);
  }
  return static_cast<Vertex>(value - 1);
}

}  // namespace detail

inline OrientedDigraph parse_edgelist(std::istream& in) {
  std::vector<detail::NumberedArc> arcs;
  std::optional<std::size_t> declared_n;
  std::size_t max_vertex = 0;
  bool seen_content = false;
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;

    if (tokens[0] == "n") {
      if (seen_content) throw ParseError(line, "header 'n <count>' must come first");
      if (tokens.size() != 2) throw ParseError(line, "header must be 'n <count>'");
      try {
        std::size_t used = 0;
        const long long value = std::stoll(tokens[1], &used);
        if (used != tokens[1].size() || value < 0) throw std::invalid_argument("n");
        declared_n = static_cast<std::size_t>(value);
      } catch (const std::exception&) {
        throw ParseError(line, "bad vertex count '" + tokens[1] + "'");
      }
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (tokens.size() != 2) throw ParseError(line, "expected 'u v', got " + std::to_string(tokens.size()) + " fields");
    const Arc a{detail::parse_vertex(tokens[0], line), detail::parse_vertex(tokens[1], line)};
    max_vertex = std::max<std::size_t>({max_vertex, a.tail + 1, a.head + 1});
    arcs.push_back({a, line});
  }
  return detail::assemble(declared_n.value_or(max_vertex), arcs, false);
}

inline OrientedDigraph parse_edgelist(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edgelist(in);
}

/// Semantic errors name the arc by its 1-based position in "arcs".
inline OrientedDigraph parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError(0, "expected a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long long>() < 0) {
    throw ParseError(0, "field \"n\" must be a non-negative integer");
  }
  if (!doc.contains("arcs") || !doc["arcs"].is_array()) {
    throw ParseError(0, "field \"arcs\" must be an array");
  }
  const auto n = doc["n"].get<std::size_t>();
  std::vector<detail::NumberedArc> arcs;
  std::size_t index = 0;
  for (const auto& item : doc["arcs"]) {
    ++index;
    const std::string where = "arcs entry " + std::to_string(index) + ": ";
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer()) {
      throw ParseError(0, where + "expected [u, v]");
    }
    const auto u = item[0].get<long long>();
    const auto v = item[1].get<long long>();
    if (u < 1 || v < 1 || u > 0xFFFFFFFFLL || v > 0xFFFFFFFFLL) {
      throw ParseError(0, where + "vertex ids are 1-based positive integers");
    }
    arcs.push_back({{static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)}, index});
  }
  return detail::assemble(n, arcs, true);
}

/// Picks JSON when the first non-blank character is '{', edge list otherwise.
inline OrientedDigraph parse_graph(std::string_view text) {
  const auto first = std::find_if(text.begin(), text.end(),
                                  [](unsigned char c) { return !std::isspace(c); });
  if (first != text.end() && *first == '{') return parse_json(text);
  return parse_edgelist(text);
}

inline OrientedDigraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_graph(text.str());
}

/// Writes "n <count>" only when isolated trailing vertices would otherwise be
/// lost on re-parse. `comments` become leading '#' lines.
inline void write_edgelist(std::ostream& os, const OrientedDigraph& g,
                           const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) os << "# " << c << '\n';
  const auto arcs = g.arcs();
  std::size_t max_vertex = 0;
  for (const Arc& a : arcs) max_vertex = std::max<std::size_t>({max_vertex, a.tail + 1, a.head + 1});
  if (max_vertex != g.vertex_count()) os << "n " << g.vertex_count() << '\n';
  for (const Arc& a : arcs) os << a.tail + 1 << ' ' << a.head + 1 << '\n';
}

inline nlohmann::json to_json(const OrientedDigraph& g) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const Arc& a : g.arcs()) arcs.push_back({a.tail + 1, a.head + 1});
  return {{"n", g.vertex_count()}, {"arcs", std::move(arcs)}};
}

/// Arcs in `base` are drawn plain; every other arc is colored by its length
/// |head - tail|, one palette entry per distinct length in ascending order.
inline void write_dot(std::ostream& os, const OrientedDigraph& g, const OrientedDigraph& base,
                      const std::string& name = "G") {
  static constexpr std::string_view palette[] = {"red",    "blue",   "darkgreen", "orange",
                                                 "purple", "brown",  "magenta",   "cyan4",
                                                 "gold3",  "gray40"};
  const auto arcs = g.arcs();
  auto length = [](Arc a) { return a.head > a.tail ? a.head - a.tail : a.tail - a.head; };
  std::map<Vertex, std::size_t> color_of;
  for (const Arc& a : arcs) {
    if (!base.has_arc(a)) color_of.emplace(length(a), 0);
  }
  std::size_t next = 0;
  for (auto& [len, idx] : color_of) idx = next++;

  os << "digraph " << name << " {\n";
  os << "  rankdir=LR;\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) os << "  " << v + 1 << ";\n";
  for (const Arc& a : arcs) {
    os << "  " << a.tail + 1 << " -> " << a.head + 1;
    if (!base.has_arc(a)) {
      const auto idx = color_of.at(length(a));
      os << " [color=" << palette[idx % std::size(palette)] << ", label=" << length(a) << "]";
    }
    os << ";\n";
  }
  os << "}\n";
}

inline std::string format_walk(const std::vector<Vertex>& walk) {
  std::string out;
  for (Vertex v : walk) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v + 1);
  }
  return out;
}

}  // namespace ktrans::io
