#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "asdim/rational.hpp"

namespace asdim {

using Vertex = int;
using EdgePair = std::pair<Vertex, Vertex>;  // normalized u < v

/// Finite symmetric irreflexive graph on dense vertex ids 0..n-1.
/// Immutable after build; components, degrees and per-component edge counts
/// are cached at construction so later stages are pure functions of a frozen
/// graph.
class Graph {
 public:
  /// Normalizes, deduplicates and validates the edge list. Throws
  /// Error(InvalidVertex) for out-of-range ids and Error(InvalidEdge) for
  /// self-loops.
  static Graph build(int vertex_count, std::vector<EdgePair> edge_list);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<EdgePair>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex x) const;
  int degree(Vertex x) const;
  int max_degree() const { return max_degree_; }

  bool has_edge(Vertex u, Vertex v) const;
  /// Index of the normalized edge {u, v} in edges(), if present.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

  int component_count() const { return static_cast<int>(comp_sizes_.size()); }
  int component_of(Vertex x) const;
  int component_size(int comp) const { return comp_sizes_[comp]; }
  long long component_edge_count(int comp) const { return comp_edges_[comp]; }
  /// Vertices of a component in ascending id order.
  const std::vector<Vertex>& component_vertices(int comp) const;
  bool component_acyclic(int comp) const;
  bool acyclic() const;

  void check_vertex(Vertex x) const;

 private:
  Graph() = default;

  int n_ = 0;
  std::vector<EdgePair> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<int> comp_;
  std::vector<int> comp_sizes_;
  std::vector<long long> comp_edges_;
  std::vector<std::vector<Vertex>> comp_vertices_;
  int max_degree_ = 0;
};

/// Path-distance oracle over a graph. Distances are integers; vertices in
/// distinct components are at infinite distance (reported as nullopt / -1).
class Metric {
 public:
  explicit Metric(const Graph& g) : g_(&g) {}

  const Graph& graph() const { return *g_; }

  std::optional<long long> distance(Vertex x, Vertex y) const;
  /// BFS distances from x; -1 outside the component of x.
  std::vector<int> distances_from(Vertex x) const;
  /// Closed ball {y : d(x,y) <= r}, ascending ids. Requires r >= 0.
  std::vector<Vertex> ball(Vertex x, const Rational& r) const;

 private:
  const Graph* g_;
};

struct DistanceBall {
  std::vector<int> distances;  // -1 outside the component of x
  std::vector<Vertex> ball;    // ascending
};

DistanceBall distance_and_ball(const Graph& g, Vertex x, const Rational& r);

/// Sides of an edge of an acyclic component: side_x = {z : d(z,x) < d(z,y)}.
/// Throws NotAnEdge if {x,y} is not an edge and NotAcyclic if the component
/// of x contains a cycle.
std::pair<std::vector<Vertex>, std::vector<Vertex>> split_at_edge(const Graph& g,
                                                                  Vertex x,
                                                                  Vertex y);

struct ComponentsAndLeaves {
  std::vector<int> component;    // id per vertex
  std::vector<Vertex> leaves;    // degree exactly 1, ascending
  std::vector<int> sizes;        // per component
};

ComponentsAndLeaves components_and_leaves(const Graph& g);

}  // namespace asdim
