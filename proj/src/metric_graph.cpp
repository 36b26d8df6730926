#include "garside/metric_graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include <json.hpp>

#include "garside/error.hpp"

namespace garside {

std::uint64_t MetricGraph::edge_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

int MetricGraph::add_vertex(const std::string& key) {
  const auto [it, inserted] = index_.emplace(key, static_cast<int>(keys_.size()));
  if (inserted) {
    keys_.push_back(key);
    adj_.emplace_back();
  }
  return it->second;
}

int MetricGraph::find(const std::string& key) const {
  const auto it = index_.find(key);
  return it == index_.end() ? -1 : it->second;
}

bool MetricGraph::add_edge(int a, int b) {
  if (a == b) return false;
  if (a < 0 || b < 0 || a >= static_cast<int>(keys_.size()) || b >= static_cast<int>(keys_.size()))
    throw Error(ErrorCode::IndexOutOfRange, "edge endpoint out of range");
  if (!edge_set_.insert(edge_key(a, b)).second) return false;
  adj_[a].push_back(b);
  adj_[b].push_back(a);
  return true;
}

bool MetricGraph::has_edge(int a, int b) const { return edge_set_.count(edge_key(a, b)) != 0; }

std::vector<std::pair<int, int>> MetricGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_set_.size());
  for (std::size_t a = 0; a < adj_.size(); ++a)
    for (int b : adj_[a])
      if (static_cast<int>(a) < b) out.emplace_back(static_cast<int>(a), b);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> MetricGraph::bfs(int source) const {
  std::vector<int> dist(keys_.size(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : adj_[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

std::vector<int> MetricGraph::components() const {
  std::vector<int> comp(keys_.size(), -1);
  int next = 0;
  for (std::size_t v = 0; v < keys_.size(); ++v) {
    if (comp[v] >= 0) continue;
    const std::vector<int> dist = bfs(static_cast<int>(v));
    for (std::size_t w = 0; w < keys_.size(); ++w)
      if (dist[w] >= 0) comp[w] = next;
    ++next;
  }
  return comp;
}

bool MetricGraph::connected() const {
  if (keys_.empty()) return true;
  const std::vector<int> dist = bfs(0);
  return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

MetricGraph MetricGraph::induced(const std::vector<int>& vertices) const {
  MetricGraph out;
  out.provenance_ = provenance_;
  std::vector<int> map(keys_.size(), -1);
  for (int v : vertices) map[v] = out.add_vertex(keys_[v]);
  for (int v : vertices)
    for (int w : adj_[v])
      if (map[w] >= 0) out.add_edge(map[v], map[w]);
  return out;
}

std::string MetricGraph::to_json() const {
  nlohmann::ordered_json j;
  j["vertices"] = keys_;
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : this->edges()) edges.push_back({a, b});
  j["edges"] = edges;
  j["provenance"] = provenance_;
  return j.dump(2) + "\n";
}

std::string MetricGraph::to_dot() const {
  std::ostringstream out;
  out << "// provenance:";
  for (const auto& [k, v] : provenance_) out << " " << k << "=" << v;
  out << "\ngraph G {\n";
  for (const auto& [k, v] : provenance_) out << "  " << nlohmann::json(k).dump() << "=" << nlohmann::json(v).dump() << ";\n";
  for (std::size_t i = 0; i < keys_.size(); ++i)
    out << "  v" << i << " [label=" << nlohmann::json(keys_[i]).dump() << "];\n";
  for (const auto& [a, b] : edges()) out << "  v" << a << " -- v" << b << ";\n";
  out << "}\n";
  return out.str();
}

MetricGraph MetricGraph::from_json(const std::string& text) {
  MetricGraph g;
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    for (const auto& key : j.at("vertices")) g.add_vertex(key.get<std::string>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    if (j.contains("provenance"))
      for (const auto& [k, v] : j.at("provenance").items()) g.provenance_[k] = v.get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("graph JSON: ") + e.what());
  }
  return g;
}

bool operator==(const MetricGraph& a, const MetricGraph& b) {
  return a.keys_ == b.keys_ && a.edges() == b.edges() && a.provenance_ == b.provenance_;
}

std::vector<std::vector<int>> all_pairs_distances(const MetricGraph& g) {
  std::vector<std::vector<int>> out;
  out.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out.push_back(g.bfs(static_cast<int>(v)));
  return out;
}

}  // namespace garside
