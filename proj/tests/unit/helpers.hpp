#pragma once

// Oracles and corpus builders shared by the unit suites. The oracles are
// deliberately naive (dense maps, per-pair BFS, literal summation) so they
// cannot share a failure mode with the library's fast paths.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "asdim/generators.hpp"
#include "asdim/graph.hpp"
#include "asdim/mass.hpp"
#include "asdim/parallel.hpp"
#include "asdim/partition.hpp"
#include "asdim/transfer.hpp"

namespace testutil {

using namespace asdim;

inline std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  Metric m(g);
  std::vector<std::vector<int>> out;
  out.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.push_back(m.distances_from(v));
  return out;
}

inline Rational l1_by_map(const MassRow& a, const MassRow& b) {
  std::map<Vertex, Rational> diff;
  for (const auto& [v, mass] : a) diff[v] += mass;
  for (const auto& [v, mass] : b) diff[v] -= mass;
  Rational total;
  for (const auto& [v, d] : diff) total += d.abs();
  return total;
}

// Literal subtree-mass evaluation through split_at_edge.
inline Rational theta_by_split(const Graph& g, const MassAssignment& lambda, Vertex x,
                               Vertex y) {
  auto [side_x, side_y] = split_at_edge(g, x, y);
  Rational total;
  for (const auto& [z, mass] : lambda.row(x)) {
    if (std::binary_search(side_x.begin(), side_x.end(), z)) total += mass;
  }
  return total;
}

inline Graph disjoint_union(const std::vector<Graph>& parts) {
  int n = 0;
  std::vector<EdgePair> edges;
  for (const auto& part : parts) {
    for (const auto& [u, v] : part.edges()) edges.emplace_back(u + n, v + n);
    n += part.vertex_count();
  }
  return Graph::build(n, std::move(edges));
}

inline Graph random_forest(Rng& rng, int total, int max_degree) {
  std::vector<Graph> parts;
  int left = total;
  while (left > 0) {
    int size = 1 + static_cast<int>(rng.below(left));
    parts.push_back(make_random_tree(size, max_degree, rng.next()));
    left -= size;
  }
  return disjoint_union(parts);
}

// Random partition of 0..n-1 into classes of at most max_class vertices.
inline EquivPartition random_coarse(Rng& rng, int n, int max_class) {
  std::vector<int> ids(n);
  int block = 0;
  int v = 0;
  while (v < n) {
    int size = 1 + static_cast<int>(rng.below(max_class));
    for (int i = 0; i < size && v < n; ++i) ids[v++] = block;
    block++;
  }
  // Shuffle vertices across blocks so classes are not contiguous id ranges.
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng.below(i + 1));
    std::swap(ids[i], ids[j]);
  }
  return EquivPartition::from_block_ids(n, ids);
}

inline EquivPartition random_refinement(Rng& rng, const EquivPartition& coarse) {
  std::vector<int> ids(coarse.vertex_count());
  int next = 0;
  for (const auto& members : coarse.blocks()) {
    // Split the class into 1..3 random parts.
    int parts = 1 + static_cast<int>(rng.below(3));
    std::vector<int> local(parts);
    for (int i = 0; i < parts; ++i) local[i] = next++;
    for (Vertex v : members) ids[v] = local[rng.below(parts)];
  }
  return EquivPartition::from_block_ids(coarse.vertex_count(), ids);
}

inline ClassEnumeration random_enumeration(Rng& rng, const EquivPartition& coarse) {
  ClassEnumeration out(coarse.vertex_count());
  for (Vertex v = 0; v < coarse.vertex_count(); ++v) {
    auto order = coarse.block(coarse.block_of(v));
    for (int i = static_cast<int>(order.size()) - 1; i > 0; --i) {
      int j = static_cast<int>(rng.below(i + 1));
      std::swap(order[i], order[j]);
    }
    out[v] = std::move(order);
  }
  return out;
}

// Random exact-rational mass rows supported inside the given classes.
inline MassAssignment random_mass_on_partition(Rng& rng, const EquivPartition& classes) {
  std::vector<MassRow> rows(classes.vertex_count());
  for (Vertex x = 0; x < classes.vertex_count(); ++x) {
    const auto& members = classes.block(classes.block_of(x));
    std::vector<long long> weights(members.size());
    long long total = 0;
    for (auto& w : weights) {
      w = rng.below(10);
      total += w;
    }
    if (total == 0) {
      weights[rng.below(weights.size())] = 1;
      total = 1;
    }
    MassRow row;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (weights[i] > 0) row.emplace_back(members[i], Rational(weights[i], total));
    }
    rows[x] = std::move(row);
  }
  return explicit_lambda(std::move(rows));
}

// Orientation of every edge toward a random root per component; the returned
// map f is a valid functional-graph witness for g.
inline std::vector<Vertex> random_parent_orientation(Rng& rng, const Graph& g) {
  std::vector<Vertex> f(g.vertex_count());
  Metric m(g);
  for (int c = 0; c < g.component_count(); ++c) {
    const auto& members = g.component_vertices(c);
    Vertex root = members[rng.below(members.size())];
    f[root] = root;
    auto dist = m.distances_from(root);
    for (Vertex v : members) {
      if (v == root) continue;
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] == dist[v] - 1) {
          f[v] = w;
          break;
        }
      }
    }
  }
  return f;
}

// Smallest n in the doubling sequence whose uniform-ball masses keep the
// defect below `bound` for pairs within distance < radius. Terminates: once
// the balls cover whole components the defect is exactly 0.
inline long long tune_uniform_ball(const Graph& g, const Rational& radius,
                                   const Rational& bound) {
  Metric m(g);
  for (long long n = 1; n <= 4 * g.vertex_count() + 4; n *= 2) {
    MassAssignment lambda = uniform_ball_lambda(g, n);
    if (!defect_at_least(m, lambda, radius, bound)) return n;
  }
  throw std::logic_error("tune_uniform_ball failed to converge");
}

}  // namespace testutil
