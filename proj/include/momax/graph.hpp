#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "momax/common.hpp"

namespace momax {

// Simple graph on dense node indices. Undirected edges are stored with
// u < v; duplicate edges are collapsed and self-loops dropped on
// construction. Forward and reverse adjacency are built eagerly.
struct Graph {
  int n = 0;
  bool directed = false;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> out_adj;
  std::vector<std::vector<int>> in_adj;  // == out_adj for undirected graphs

  static Graph undirected(int n, std::vector<std::pair<int, int>> edges);
  static Graph directed_graph(int n, std::vector<std::pair<int, int>> edges);

  int edge_count() const { return static_cast<int>(edges.size()); }
  // in + out for directed graphs, incident count for undirected ones.
  int degree(int v) const;
};

struct LoadedGraph {
  Graph graph;
  std::vector<std::string> node_of_index;  // dense index -> original id
  std::unordered_map<std::string, int> index_of_node;
};

// Edge list: one "u v" pair per line, whitespace separated, '#' comments
// ignored. Node ids are remapped to dense indices in first-appearance order.
LoadedGraph load_edge_list(const std::string& path, bool directed);
// Same remapping against an existing node index (ids must be known).
Graph load_edge_list_with(const std::string& path, bool directed,
                          const std::unordered_map<std::string, int>& index,
                          int n);

// Color file: "node_id color_label" per line; labels mapped to color
// indices in first-appearance order. Every node must be assigned a color.
struct LoadedColors {
  std::vector<int> color_of;               // node index -> color
  std::vector<std::string> label_of_color;
};
LoadedColors load_color_file(const std::string& path, const LoadedGraph& g);

// Probability file: "u v p" per line; probabilities apply to the directed
// arc (u, v) (both arcs of an undirected edge may be listed separately).
std::unordered_map<std::uint64_t, double> load_probability_file(
    const std::string& path, const LoadedGraph& g);

void write_edge_list(const Graph& g, const std::string& path);
void write_node_mapping(const LoadedGraph& g, const std::string& path);

// Breadth-first distances from `source` following in_adj (i.e. distance
// FROM every node TO `source` along the graph's arcs). -1 marks
// unreachable nodes.
std::vector<int> reverse_bfs(const Graph& g, int source);

}  // namespace momax
