#include "toricgraph/graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <queue>
#include <sstream>

#include "toricgraph/errors.hpp"

namespace toricgraph {

int Graph::add_vertex(const std::string& name) {
  if (name.empty()) throw ValidationError("empty vertex name");
  if (vertex_index(name) >= 0) throw ValidationError("duplicate vertex: " + name);
  vertices_.push_back(name);
  incidence_.emplace_back();
  return static_cast<int>(vertices_.size()) - 1;
}

void Graph::add_edge(const std::string& name, const std::string& a, const std::string& b) {
  if (name.empty()) throw ValidationError("empty edge name");
  if (edge_index(name) >= 0) throw ValidationError("duplicate edge name: " + name);
  const int u = vertex_index(a);
  const int v = vertex_index(b);
  if (u < 0) throw ValidationError("unknown vertex: " + a);
  if (v < 0) throw ValidationError("unknown vertex: " + b);
  if (u == v) throw ValidationError("loop edges are not allowed: " + name);
  for (const auto& e : edges_)
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u))
      throw ValidationError("parallel edge: " + name);
  const int idx = static_cast<int>(edges_.size());
  edges_.push_back(Edge{name, u, v});
  incidence_[static_cast<size_t>(u)].push_back(idx);
  incidence_[static_cast<size_t>(v)].push_back(idx);
}

int Graph::vertex_index(const std::string& name) const {
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == name) return static_cast<int>(i);
  return -1;
}

int Graph::edge_index(const std::string& name) const {
  for (size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].name == name) return static_cast<int>(i);
  return -1;
}

const std::vector<int>& Graph::incident_edges(int vertex) const {
  return incidence_[static_cast<size_t>(vertex)];
}

int Graph::other_endpoint(int edge, int vertex) const {
  const Edge& e = edges_[static_cast<size_t>(edge)];
  if (e.u == vertex) return e.v;
  if (e.v == vertex) return e.u;
  throw ValidationError("other_endpoint: vertex not on edge");
}

bool Graph::is_connected() const {
  if (vertices_.empty()) return true;
  std::vector<char> seen(vertices_.size(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  size_t count = 1;
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int ei : incidence_[static_cast<size_t>(x)]) {
      const int y = other_endpoint(ei, x);
      if (!seen[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = 1;
        ++count;
        q.push(y);
      }
    }
  }
  return count == vertices_.size();
}

std::pair<int, int> bipartite_components(const Graph& g) {
  const size_t n = g.num_vertices();
  std::vector<int> color(n, -1);
  int components = 0, bipartite = 0;
  for (size_t s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    ++components;
    bool two_colorable = true;
    std::queue<int> q;
    q.push(static_cast<int>(s));
    color[s] = 0;
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int ei : g.incident_edges(x)) {
        const int y = g.other_endpoint(ei, x);
        if (color[static_cast<size_t>(y)] == -1) {
          color[static_cast<size_t>(y)] = 1 - color[static_cast<size_t>(x)];
          q.push(y);
        } else if (color[static_cast<size_t>(y)] == color[static_cast<size_t>(x)]) {
          two_colorable = false;
        }
      }
    }
    if (two_colorable) ++bipartite;
  }
  return {components, bipartite};
}

bool is_bipartite(const Graph& g) {
  auto [total, bip] = bipartite_components(g);
  return total == bip;
}

Graph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("graph JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw ValidationError("graph JSON needs 'vertices' and 'edges'");
  Graph g;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw ValidationError("vertex names must be strings");
    g.add_vertex(v.get<std::string>());
  }
  for (const auto& e : j["edges"]) {
    if (!e.is_object() || !e.contains("name") || !e.contains("ends") ||
        !e["ends"].is_array() || e["ends"].size() != 2)
      throw ValidationError("each edge needs a 'name' and two 'ends'");
    g.add_edge(e["name"].get<std::string>(), e["ends"][0].get<std::string>(),
               e["ends"][1].get<std::string>());
  }
  return g;
}

std::string graph_to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = g.vertices();
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) {
    nlohmann::ordered_json je;
    je["name"] = e.name;
    je["ends"] = {g.vertices()[static_cast<size_t>(e.u)],
                  g.vertices()[static_cast<size_t>(e.v)]};
    j["edges"].push_back(je);
  }
  return j.dump(2) + "\n";
}

std::string Graph::canonical_json() const { return graph_to_json(*this); }

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (const auto& v : g.vertices()) out << "  \"" << v << "\";\n";
  for (const auto& e : g.edges())
    out << "  \"" << g.vertices()[static_cast<size_t>(e.u)] << "\" -- \""
        << g.vertices()[static_cast<size_t>(e.v)] << "\" [label=\"" << e.name
        << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace toricgraph
