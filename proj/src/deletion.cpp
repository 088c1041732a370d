#include "asdim/deletion.hpp"

#include <algorithm>
#include <limits>

#include "asdim/errors.hpp"

namespace asdim {

DeletionSet choose_edges(const Graph& g, const Rational& r) {
  if (!(r > Rational(0))) fail(ErrorCode::InvalidArgument, "radius must be positive");
  if (g.max_degree() > 2) {
    fail(ErrorCode::DegreeBound, "max degree " + std::to_string(g.max_degree()) + " > 2");
  }
  for (int c = 0; c < g.component_count(); ++c) {
    if (!g.component_acyclic(c)) {
      fail(ErrorCode::NotAcyclic, "component " + std::to_string(c) + " contains a cycle");
    }
  }
  const int n = g.vertex_count();
  const Rational size_bound = Rational(4) * r + Rational(6);

  // Y = union of the components larger than 4r+6 (component sizes decide
  // membership, so Y-ness is a per-component flag).
  std::vector<char> big(g.component_count(), 0);
  for (int c = 0; c < g.component_count(); ++c) {
    big[c] = Rational(g.component_size(c)) > size_bound;
  }

  // Two edges conflict when some pair of their endpoints is within distance
  // <= r, i.e. <= floor(r) for the integer path metric.
  const long long conflict_reach = r.floor();
  std::vector<char> chosen_endpoint(n, 0);
  std::vector<int> dist(n, -1);
  std::vector<Vertex> queue;
  auto near_chosen = [&](Vertex start) {
    bool hit = false;
    queue.clear();
    queue.push_back(start);
    dist[start] = 0;
    for (std::size_t head = 0; head < queue.size() && !hit; ++head) {
      Vertex a = queue[head];
      if (chosen_endpoint[a]) hit = true;
      if (dist[a] >= conflict_reach) continue;
      for (Vertex b : g.neighbors(a)) {
        if (dist[b] == -1) {
          dist[b] = dist[a] + 1;
          queue.push_back(b);
        }
      }
    }
    for (Vertex v : queue) dist[v] = -1;
    return hit;
  };

  std::vector<EdgePair> q0;
  for (const auto& [u, v] : g.edges()) {
    if (!big[g.component_of(u)]) continue;
    if (near_chosen(u) || near_chosen(v)) continue;
    q0.emplace_back(u, v);
    chosen_endpoint[u] = 1;
    chosen_endpoint[v] = 1;
  }

  // Distance to the nearest leaf of g, by multi-source BFS.
  std::vector<long long> leaf_dist(n, std::numeric_limits<long long>::max());
  queue.clear();
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 1) {
      leaf_dist[v] = 0;
      queue.push_back(v);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex a = queue[head];
    for (Vertex b : g.neighbors(a)) {
      if (leaf_dist[b] > leaf_dist[a] + 1) {
        leaf_dist[b] = leaf_dist[a] + 1;
        queue.push_back(b);
      }
    }
  }

  // Keep the edges whose endpoints are both at distance >= r from leaves
  // (integer distance, so >= ceil(r)).
  const long long leaf_need = r.ceil();
  DeletionSet out;
  out.r = r;
  out.q0 = q0;
  for (const auto& [u, v] : q0) {
    if (leaf_dist[u] >= leaf_need && leaf_dist[v] >= leaf_need) {
      out.q.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace asdim
