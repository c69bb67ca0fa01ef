#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"

namespace evencycle {

/// Parse error for external files; carries the offending line number.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LoadedGraph {
  Graph graph;
  std::vector<std::string> labels;  // dense id -> original token
  int duplicate_edges = 0;          // parallel edges dropped with a warning
};

/// Edge-list text: one "u v" pair per line, whitespace separated, '#'
/// comments and blank lines ignored. Labels are arbitrary tokens mapped to
/// dense 0-based ids in first-seen order. Self-loops are rejected; parallel
/// edges are deduplicated and counted.
inline LoadedGraph load_edge_list(std::istream& in) {
  std::map<std::string, int> ids;
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  int duplicates = 0;

  auto id_of = [&](const std::string& tok) {
    auto it = ids.find(tok);
    if (it != ids.end()) return it->second;
    int id = int(labels.size());
    ids.emplace(tok, id);
    labels.push_back(tok);
    return id;
  };

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string u, v, extra;
    if (!(ls >> u)) continue;  // blank
    if (!(ls >> v) || (ls >> extra))
      throw parse_error("line " + std::to_string(line_no) +
                        ": expected exactly two tokens");
    int a = id_of(u), b = id_of(v);
    if (a == b)
      throw parse_error("line " + std::to_string(line_no) + ": self-loop");
    auto key = std::minmax(a, b);
    if (!seen.insert({key.first, key.second}).second) {
      ++duplicates;
      continue;
    }
    edges.emplace_back(a, b);
  }
  LoadedGraph out;
  out.labels = std::move(labels);
  out.graph = Graph(int(out.labels.size()), edges);
  out.duplicate_edges = duplicates;
  return out;
}

inline LoadedGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  return load_edge_list(in);
}

/// Writes edges as "u v" lines with u < v, sorted, using dense ids.
inline void save_edge_list(std::ostream& out, const Graph& g,
                           const std::string& header = "") {
  if (!header.empty()) out << "# " << header << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

}  // namespace evencycle
