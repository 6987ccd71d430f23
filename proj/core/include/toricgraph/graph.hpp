#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toricgraph/polynomial.hpp"

namespace toricgraph {

// Finite simple graph with named vertices and named edges.  Declaration
// order of the edges fixes the default variable order of its edge ring.
class Graph {
 public:
  struct Edge {
    std::string name;
    int u;  // endpoint indices into vertices(), u < v not required
    int v;
  };

  Graph() = default;

  int add_vertex(const std::string& name);            // rejects duplicates
  void add_edge(const std::string& name, const std::string& a, const std::string& b);

  size_t num_vertices() const { return vertices_.size(); }
  size_t num_edges() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[static_cast<size_t>(i)]; }

  int vertex_index(const std::string& name) const;    // -1 when absent
  int edge_index(const std::string& name) const;      // -1 when absent

  // Edge indices incident to a vertex, in declaration order.
  const std::vector<int>& incident_edges(int vertex) const;
  int other_endpoint(int edge, int vertex) const;

  bool is_connected() const;

  std::string canonical_json() const;  // stable serialization, used for hashing

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incidence_;
};

// (number of connected components, how many of them are bipartite);
// isolated vertices count as bipartite components.
std::pair<int, int> bipartite_components(const Graph& g);

bool is_bipartite(const Graph& g);

Graph graph_from_json(const std::string& text);
std::string graph_to_json(const Graph& g);
std::string graph_to_dot(const Graph& g);

}  // namespace toricgraph
