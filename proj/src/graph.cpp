#include "asdim/graph.hpp"

#include <algorithm>
#include <string>

#include "asdim/errors.hpp"

namespace asdim {

Graph Graph::build(int vertex_count, std::vector<EdgePair> edge_list) {
  if (vertex_count < 0) fail(ErrorCode::InvalidArgument, "negative vertex count");
  Graph g;
  g.n_ = vertex_count;
  for (auto& [u, v] : edge_list) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      fail(ErrorCode::InvalidVertex,
           "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u == v) {
      fail(ErrorCode::InvalidEdge, "self-loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edge_list.begin(), edge_list.end());
  edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
  g.edges_ = std::move(edge_list);

  g.adj_.assign(vertex_count, {});
  for (const auto& [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    g.max_degree_ = std::max(g.max_degree_, static_cast<int>(nbrs.size()));
  }

  // Components by BFS in ascending start-vertex order.
  g.comp_.assign(vertex_count, -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < vertex_count; ++s) {
    if (g.comp_[s] != -1) continue;
    int c = static_cast<int>(g.comp_sizes_.size());
    g.comp_sizes_.push_back(0);
    g.comp_vertices_.emplace_back();
    queue.clear();
    queue.push_back(s);
    g.comp_[s] = c;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      for (Vertex y : g.adj_[x]) {
        if (g.comp_[y] == -1) {
          g.comp_[y] = c;
          queue.push_back(y);
        }
      }
    }
    g.comp_sizes_[c] = static_cast<int>(queue.size());
    auto& members = g.comp_vertices_[c];
    members = queue;
    std::sort(members.begin(), members.end());
  }
  g.comp_edges_.assign(g.comp_sizes_.size(), 0);
  for (const auto& [u, v] : g.edges_) g.comp_edges_[g.comp_[u]]++;
  return g;
}

void Graph::check_vertex(Vertex x) const {
  if (x < 0 || x >= n_) {
    fail(ErrorCode::InvalidVertex, "vertex " + std::to_string(x) + " out of range");
  }
}

const std::vector<Vertex>& Graph::neighbors(Vertex x) const {
  check_vertex(x);
  return adj_[x];
}

int Graph::degree(Vertex x) const {
  check_vertex(x);
  return static_cast<int>(adj_[x].size());
}

bool Graph::has_edge(Vertex u, Vertex v) const { return edge_index(u, v).has_value(); }

std::optional<std::size_t> Graph::edge_index(Vertex u, Vertex v) const {
  if (u == v) return std::nullopt;
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), EdgePair{u, v});
  if (it == edges_.end() || *it != EdgePair{u, v}) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

int Graph::component_of(Vertex x) const {
  check_vertex(x);
  return comp_[x];
}

const std::vector<Vertex>& Graph::component_vertices(int comp) const {
  return comp_vertices_[comp];
}

bool Graph::component_acyclic(int comp) const {
  return comp_edges_[comp] == comp_sizes_[comp] - 1;
}

bool Graph::acyclic() const {
  for (int c = 0; c < component_count(); ++c) {
    if (!component_acyclic(c)) return false;
  }
  return true;
}

namespace {

// BFS from x, optionally truncated at `depth_limit` (-1 = unbounded) and
// optionally skipping one forbidden edge.
std::vector<int> bfs(const Graph& g, Vertex x, long long depth_limit,
                     std::optional<EdgePair> skip = std::nullopt) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<Vertex> queue;
  dist[x] = 0;
  queue.push_back(x);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex a = queue[head];
    if (depth_limit >= 0 && dist[a] >= depth_limit) continue;
    for (Vertex b : g.neighbors(a)) {
      if (skip) {
        Vertex u = std::min(a, b), v = std::max(a, b);
        if (EdgePair{u, v} == *skip) continue;
      }
      if (dist[b] == -1) {
        dist[b] = dist[a] + 1;
        queue.push_back(b);
      }
    }
  }
  return dist;
}

}  // namespace

std::optional<long long> Metric::distance(Vertex x, Vertex y) const {
  g_->check_vertex(x);
  g_->check_vertex(y);
  if (g_->component_of(x) != g_->component_of(y)) return std::nullopt;
  if (x == y) return 0;
  std::vector<int> dist(g_->vertex_count(), -1);
  std::vector<Vertex> queue;
  dist[x] = 0;
  queue.push_back(x);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex a = queue[head];
    for (Vertex b : g_->neighbors(a)) {
      if (dist[b] != -1) continue;
      dist[b] = dist[a] + 1;
      if (b == y) return dist[b];
      queue.push_back(b);
    }
  }
  fail(ErrorCode::Internal, "distance: target not reached inside component");
}

std::vector<int> Metric::distances_from(Vertex x) const {
  g_->check_vertex(x);
  return bfs(*g_, x, -1);
}

std::vector<Vertex> Metric::ball(Vertex x, const Rational& r) const {
  g_->check_vertex(x);
  if (r.is_negative()) fail(ErrorCode::InvalidArgument, "negative radius");
  auto dist = bfs(*g_, x, r.floor());
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g_->vertex_count(); ++v) {
    if (dist[v] >= 0) out.push_back(v);
  }
  return out;
}

DistanceBall distance_and_ball(const Graph& g, Vertex x, const Rational& r) {
  g.check_vertex(x);
  if (r.is_negative()) fail(ErrorCode::InvalidArgument, "negative radius");
  DistanceBall out;
  out.distances = bfs(g, x, -1);
  long long limit = r.floor();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (out.distances[v] >= 0 && out.distances[v] <= limit) out.ball.push_back(v);
  }
  return out;
}

std::pair<std::vector<Vertex>, std::vector<Vertex>> split_at_edge(const Graph& g,
                                                                  Vertex x,
                                                                  Vertex y) {
  if (!g.has_edge(x, y)) {
    fail(ErrorCode::NotAnEdge,
         "(" + std::to_string(x) + "," + std::to_string(y) + ") is not an edge");
  }
  int comp = g.component_of(x);
  if (!g.component_acyclic(comp)) {
    fail(ErrorCode::NotAcyclic,
         "component of vertex " + std::to_string(x) + " contains a cycle");
  }
  EdgePair cut{std::min(x, y), std::max(x, y)};
  auto dist_x = bfs(g, x, -1, cut);
  auto dist_y = bfs(g, y, -1, cut);
  std::vector<Vertex> side_x, side_y;
  for (Vertex v : g.component_vertices(comp)) {
    if (dist_x[v] >= 0) side_x.push_back(v);
    if (dist_y[v] >= 0) side_y.push_back(v);
  }
  if (side_x.size() + side_y.size() != g.component_vertices(comp).size()) {
    fail(ErrorCode::NotAcyclic, "edge sides do not partition the component");
  }
  return {std::move(side_x), std::move(side_y)};
}

ComponentsAndLeaves components_and_leaves(const Graph& g) {
  ComponentsAndLeaves out;
  out.component.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out.component[v] = g.component_of(v);
    if (g.degree(v) == 1) out.leaves.push_back(v);
  }
  out.sizes.resize(g.component_count());
  for (int c = 0; c < g.component_count(); ++c) out.sizes[c] = g.component_size(c);
  return out;
}

}  // namespace asdim
