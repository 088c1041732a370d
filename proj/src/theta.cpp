#include "asdim/theta.hpp"

#include <algorithm>
#include <string>

#include "asdim/errors.hpp"
#include "asdim/parallel.hpp"

namespace asdim {

ThetaTable::ThetaTable(std::vector<EdgePair> edges, std::vector<Rational> t0_fwd,
                       std::vector<Rational> t0_rev)
    : edges_(std::move(edges)), t0_fwd_(std::move(t0_fwd)), t0_rev_(std::move(t0_rev)) {
  if (t0_fwd_.size() != edges_.size() || t0_rev_.size() != edges_.size()) {
    fail(ErrorCode::InvalidArgument, "theta table length mismatch");
  }
  if (!std::is_sorted(edges_.begin(), edges_.end())) {
    fail(ErrorCode::InvalidArgument, "theta edges must be sorted");
  }
}

Rational ThetaTable::theta0(Vertex x, Vertex y) const {
  EdgePair key{std::min(x, y), std::max(x, y)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) {
    fail(ErrorCode::NotAnEdge,
         "(" + std::to_string(x) + "," + std::to_string(y) + ") is not an edge");
  }
  std::size_t idx = static_cast<std::size_t>(it - edges_.begin());
  return x < y ? t0_fwd_[idx] : t0_rev_[idx];
}

namespace {

void require_acyclic(const Graph& g) {
  for (int c = 0; c < g.component_count(); ++c) {
    if (!g.component_acyclic(c)) {
      fail(ErrorCode::NotAcyclic,
           "component " + std::to_string(c) + " contains a cycle");
    }
  }
}

struct RootedForest {
  std::vector<int> parent;  // -1 at roots
  std::vector<int> tin;     // entry time; subtree(v) = [tin[v], tout[v])
  std::vector<int> tout;
};

// Iterative DFS visiting neighbors in ascending id order, so for any vertex
// the subtree intervals of its children appear in ascending id order too.
RootedForest root_forest(const Graph& g, const std::vector<Vertex>& roots) {
  const int n = g.vertex_count();
  RootedForest f;
  f.parent.assign(n, -1);
  f.tin.assign(n, -1);
  f.tout.assign(n, -1);
  int timer = 0;
  std::vector<std::pair<Vertex, std::size_t>> stack;  // (vertex, next neighbor slot)
  for (Vertex root : roots) {
    stack.clear();
    f.tin[root] = timer++;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [v, slot] = stack.back();
      const auto& nbrs = g.neighbors(v);
      if (slot == nbrs.size()) {
        f.tout[v] = timer;
        stack.pop_back();
        continue;
      }
      Vertex next = nbrs[slot++];
      if (f.tin[next] != -1) continue;
      f.parent[next] = v;
      f.tin[next] = timer++;
      stack.emplace_back(next, 0);
    }
  }
  return f;
}

std::vector<Vertex> default_roots(const Graph& g) {
  std::vector<Vertex> roots(g.component_count());
  for (int c = 0; c < g.component_count(); ++c) {
    roots[c] = g.component_vertices(c).front();
  }
  return roots;
}

}  // namespace

ThetaTable theta_dfs(const Graph& g, const MassAssignment& lambda) {
  return theta_dfs_rooted(g, lambda, default_roots(g));
}

ThetaTable theta_dfs_rooted(const Graph& g, const MassAssignment& lambda,
                            const std::vector<Vertex>& roots) {
  require_acyclic(g);
  if (lambda.vertex_count() != g.vertex_count()) {
    fail(ErrorCode::InvalidMass, "mass assignment does not cover the vertex set");
  }
  if (static_cast<int>(roots.size()) != g.component_count()) {
    fail(ErrorCode::InvalidArgument, "one root per component required");
  }
  for (int c = 0; c < g.component_count(); ++c) {
    g.check_vertex(roots[c]);
    if (g.component_of(roots[c]) != c) {
      fail(ErrorCode::InvalidArgument, "root not in its component");
    }
  }
  const RootedForest forest = root_forest(g, roots);
  const std::size_t m = g.edge_count();
  std::vector<Rational> fwd(m), rev(m);

  // Each vertex only writes the theta0 slots of its own outgoing directions,
  // so the sweep parallelizes over vertices without synchronization.
  parallel_chunks(g.vertex_count(), [&](long long lo, long long hi, int) {
    std::vector<int> child_tin;
    std::vector<int> child_slot;
    std::vector<Rational> branch_mass;
    std::vector<long long> branch_count;
    for (long long xi = lo; xi < hi; ++xi) {
      Vertex x = static_cast<Vertex>(xi);
      const auto& nbrs = g.neighbors(x);
      if (nbrs.empty()) continue;
      const int comp = g.component_of(x);
      int parent_slot = -1;
      child_tin.clear();
      child_slot.clear();
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        if (nbrs[i] == forest.parent[x]) {
          parent_slot = static_cast<int>(i);
        } else {
          child_tin.push_back(forest.tin[nbrs[i]]);
          child_slot.push_back(static_cast<int>(i));
        }
      }
      const MassRow row = lambda.row(x);
      // Uniform rows (every uniform-ball row is one) accumulate as integer
      // counts; mixed rows fall back to exact rational accumulation.
      bool uniform = !row.empty();
      for (const auto& [z, mass] : row) {
        if (mass != row.front().second) {
          uniform = false;
          break;
        }
      }
      branch_mass.assign(nbrs.size(), Rational(0));
      branch_count.assign(nbrs.size(), 0);
      Rational total;
      long long count = 0;
      for (const auto& [z, mass] : row) {
        if (g.component_of(z) != comp) {
          fail(ErrorCode::InvalidMass,
               "mass of vertex " + std::to_string(x) + " leaves its component");
        }
        if (uniform) {
          ++count;
        } else {
          total += mass;
        }
        if (z == x) continue;
        int slot;
        if (forest.tin[z] < forest.tin[x] || forest.tin[z] >= forest.tout[x]) {
          slot = parent_slot;  // z lies outside the subtree of x
        } else {
          auto it = std::upper_bound(child_tin.begin(), child_tin.end(), forest.tin[z]);
          slot = child_slot[static_cast<std::size_t>(it - child_tin.begin()) - 1];
        }
        if (uniform) {
          branch_count[slot]++;
        } else {
          branch_mass[slot] += mass;
        }
      }
      if (uniform) {
        total = Rational(count) * row.front().second;
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
          branch_mass[i] = Rational(branch_count[i]) * row.front().second;
        }
      }
      if (total != Rational(1)) {
        fail(ErrorCode::InvalidMass,
             "mass of vertex " + std::to_string(x) + " sums to " + total.str());
      }
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        Vertex y = nbrs[i];
        std::size_t e = *g.edge_index(x, y);
        Rational theta = Rational(1) - branch_mass[i];
        if (x < y) {
          fwd[e] = theta;
        } else {
          rev[e] = theta;
        }
      }
    }
  });
  return ThetaTable(g.edges(), std::move(fwd), std::move(rev));
}

ComponentOrder id_component_order(const Graph& g) {
  ComponentOrder order(g.component_count());
  for (int c = 0; c < g.component_count(); ++c) order[c] = g.component_vertices(c);
  return order;
}

ThetaTable theta_iterative_oracle(const Graph& g, const MassAssignment& lambda,
                                  const ComponentOrder& enumeration) {
  require_acyclic(g);
  if (lambda.vertex_count() != g.vertex_count()) {
    fail(ErrorCode::InvalidMass, "mass assignment does not cover the vertex set");
  }
  if (static_cast<int>(enumeration.size()) != g.component_count()) {
    fail(ErrorCode::InvalidArgument, "one enumeration per component required");
  }
  std::vector<char> seen(g.vertex_count(), 0);
  for (int c = 0; c < g.component_count(); ++c) {
    for (Vertex v : enumeration[c]) {
      g.check_vertex(v);
      if (g.component_of(v) != c) {
        fail(ErrorCode::InvalidArgument, "enumeration entry outside its component");
      }
      seen[v] = 1;
    }
    for (Vertex v : g.component_vertices(c)) {
      if (!seen[v]) {
        fail(ErrorCode::InvalidArgument,
             "enumeration misses vertex " + std::to_string(v));
      }
    }
    for (Vertex v : enumeration[c]) seen[v] = 0;
  }

  const std::size_t m = g.edge_count();
  std::vector<Rational> fwd(m), rev(m);
  Metric metric(g);
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (g.neighbors(x).empty()) continue;
    const auto dist_x = metric.distances_from(x);
    const MassRow row = lambda.row(x);
    auto mass_of = [&row](Vertex z) {
      auto it = std::lower_bound(
          row.begin(), row.end(), z,
          [](const auto& entry, Vertex v) { return entry.first < v; });
      return it != row.end() && it->first == z ? it->second : Rational(0);
    };
    const auto& order = enumeration[g.component_of(x)];
    for (Vertex y : g.neighbors(x)) {
      const auto dist_y = metric.distances_from(y);
      Rational w;
      for (Vertex z : order) {
        if (seen[z]) continue;
        seen[z] = 1;
        if (dist_x[z] < dist_y[z]) w += mass_of(z);
      }
      for (Vertex z : order) seen[z] = 0;
      std::size_t e = *g.edge_index(x, y);
      if (x < y) {
        fwd[e] = w;
      } else {
        rev[e] = w;
      }
    }
  }
  return ThetaTable(g.edges(), std::move(fwd), std::move(rev));
}

}  // namespace asdim
