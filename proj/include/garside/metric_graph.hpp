#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace garside {

// Finite undirected simple graph with text-keyed vertices and a provenance
// record describing how it was truncated.
class MetricGraph {
 public:
  // Returns the index of an existing vertex with this key, or appends one.
  int add_vertex(const std::string& key);
  int find(const std::string& key) const;
  // Loops and duplicates are ignored. Returns true if a new edge was added.
  bool add_edge(int a, int b);
  bool has_edge(int a, int b) const;

  std::size_t vertex_count() const { return keys_.size(); }
  std::size_t edge_count() const { return edge_set_.size(); }
  const std::vector<std::string>& keys() const { return keys_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  // Sorted (i < j) pairs.
  std::vector<std::pair<int, int>> edges() const;

  std::map<std::string, std::string>& provenance() { return provenance_; }
  const std::map<std::string, std::string>& provenance() const { return provenance_; }

  // Hop distances from source; -1 for unreachable vertices.
  std::vector<int> bfs(int source) const;
  // Component id per vertex, numbered in order of first vertex.
  std::vector<int> components() const;
  bool connected() const;

  // Induced subgraph on the given vertices (kept in the given order).
  MetricGraph induced(const std::vector<int>& vertices) const;

  std::string to_json() const;
  std::string to_dot() const;
  static MetricGraph from_json(const std::string& text);

  friend bool operator==(const MetricGraph& a, const MetricGraph& b);

 private:
  static std::uint64_t edge_key(int a, int b);

  std::vector<std::string> keys_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> adj_;
  std::unordered_set<std::uint64_t> edge_set_;
  std::map<std::string, std::string> provenance_;
};

// All-pairs hop distances (-1 unreachable); intended for graphs of a few
// thousand vertices.
std::vector<std::vector<int>> all_pairs_distances(const MetricGraph& g);

}  // namespace garside
