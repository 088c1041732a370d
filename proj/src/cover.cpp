#include "asdim/cover.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "asdim/errors.hpp"
#include "asdim/parallel.hpp"

namespace asdim {

namespace {

std::string edge_str(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

// Distinct block ids inside B(x, floor(r)).
int classes_met(const Graph& g, const EquivPartition& partition, Vertex x,
                long long reach, std::vector<int>& dist, std::vector<Vertex>& queue,
                std::vector<int>& ids) {
  queue.clear();
  ids.clear();
  queue.push_back(x);
  dist[x] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex a = queue[head];
    ids.push_back(partition.block_of(a));
    if (dist[a] >= reach) continue;
    for (Vertex b : g.neighbors(a)) {
      if (dist[b] == -1) {
        dist[b] = dist[a] + 1;
        queue.push_back(b);
      }
    }
  }
  for (Vertex v : queue) dist[v] = -1;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return static_cast<int>(ids.size());
}

}  // namespace

int measure_max_classes(const Graph& g, const EquivPartition& partition,
                        const Rational& r, const VerifyOptions& opts) {
  if (g.vertex_count() == 0) return 0;
  if (partition.vertex_count() != g.vertex_count()) {
    fail(ErrorCode::IncompletePartition, "partition does not cover the vertex set");
  }
  if (r.is_negative()) fail(ErrorCode::InvalidArgument, "negative radius");
  const long long reach = r.floor();

  std::vector<Vertex> sample;
  if (!opts.exhaustive) {
    Rng rng(opts.seed);
    sample.reserve(opts.samples);
    for (long long i = 0; i < opts.samples; ++i) {
      sample.push_back(static_cast<Vertex>(rng.below(g.vertex_count())));
    }
  }
  const long long count = opts.exhaustive ? g.vertex_count()
                                          : static_cast<long long>(sample.size());
  std::vector<int> chunk_max(worker_count(), 0);
  parallel_chunks(count, [&](long long lo, long long hi, int chunk) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<Vertex> queue;
    std::vector<int> ids;
    int best = 0;
    for (long long i = lo; i < hi; ++i) {
      Vertex x = opts.exhaustive ? static_cast<Vertex>(i) : sample[i];
      best = std::max(best, classes_met(g, partition, x, reach, dist, queue, ids));
    }
    chunk_max[chunk] = best;
  });
  return *std::max_element(chunk_max.begin(), chunk_max.end());
}

CombinedOrientation complete_orientation(const Graph& g, const OrientedPartition& p,
                                         const DeletionSet& d) {
  const int n = g.vertex_count();

  // The partition must cover exactly the edges of g.
  {
    std::vector<EdgePair> merged;
    merged.reserve(p.r0().size() + p.r1().size());
    std::merge(p.r0().begin(), p.r0().end(), p.r1().begin(), p.r1().end(),
               std::back_inserter(merged));
    if (merged != g.edges()) {
      fail(ErrorCode::ConditionsFailed, "R0 and R1 do not partition the edge set");
    }
  }
  auto outdeg = p.out_degrees(n);
  for (Vertex v = 0; v < n; ++v) {
    if (outdeg[v] > 1) {
      fail(ErrorCode::ConditionsFailed,
           "vertex " + std::to_string(v) + " has arrow out-degree " +
               std::to_string(outdeg[v]));
    }
  }
  for (const auto& [u, v] : d.q) {
    if (!std::binary_search(p.r1().begin(), p.r1().end(), EdgePair{u, v})) {
      fail(ErrorCode::InvalidArgument, "deleted edge " + edge_str(u, v) + " not in R1");
    }
  }

  // G2 = (X, R1 \ Q).
  std::vector<EdgePair> g2_edges;
  g2_edges.reserve(p.r1().size());
  std::set_difference(p.r1().begin(), p.r1().end(), d.q.begin(), d.q.end(),
                      std::back_inserter(g2_edges));
  Graph g2 = Graph::build(n, std::move(g2_edges));

  CombinedOrientation out;
  out.arrows = p.arrows();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> queue;
  for (int c = 0; c < g2.component_count(); ++c) {
    const auto& members = g2.component_vertices(c);
    if (members.size() <= 1) continue;
    Vertex anchor = -1;
    for (Vertex v : members) {
      if (outdeg[v] == 1) {
        if (anchor != -1) {
          fail(ErrorCode::AnchorConflict,
               "vertices " + std::to_string(anchor) + " and " + std::to_string(v) +
                   " both emit arrows inside one deletion component");
        }
        anchor = v;
      }
    }
    if (anchor == -1) anchor = members.front();  // minimum id selector
    out.anchors.push_back(anchor);
    // Orient every G2 edge toward the anchor.
    queue.clear();
    queue.push_back(anchor);
    seen[anchor] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex a = queue[head];
      for (Vertex b : g2.neighbors(a)) {
        if (!seen[b]) {
          seen[b] = 1;
          queue.push_back(b);
          out.arrows.emplace_back(b, a);
        }
      }
    }
  }
  std::sort(out.arrows.begin(), out.arrows.end());

  out.f.resize(n);
  std::vector<char> has_arrow(n, 0);
  for (Vertex v = 0; v < n; ++v) out.f[v] = v;
  for (const auto& [x, y] : out.arrows) {
    if (has_arrow[x]) {
      fail(ErrorCode::AnchorConflict,
           "vertex " + std::to_string(x) + " emits two combined arrows");
    }
    has_arrow[x] = 1;
    out.f[x] = y;
  }
  std::sort(out.anchors.begin(), out.anchors.end());
  return out;
}

CoverWitness functional_cover(const Graph& g, const std::vector<Vertex>& f,
                              const Rational& r, const VerifyOptions& opts) {
  const int n = g.vertex_count();
  if (!(r > Rational(0))) fail(ErrorCode::InvalidArgument, "radius must be positive");
  if (static_cast<int>(f.size()) != n) {
    fail(ErrorCode::NotFunctionalGraph, "f does not cover the vertex set");
  }
  // R_f must equal the edge set exactly.
  std::vector<char> covered(g.edge_count(), 0);
  for (Vertex x = 0; x < n; ++x) {
    Vertex y = f[x];
    if (y == x) continue;
    auto idx = g.edge_index(x, y);
    if (!idx) {
      fail(ErrorCode::NotFunctionalGraph,
           "f moves " + std::to_string(x) + " to non-neighbor " + std::to_string(y));
    }
    covered[*idx] = 1;
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!covered[e]) {
      fail(ErrorCode::NotFunctionalGraph,
           "edge " + edge_str(g.edges()[e].first, g.edges()[e].second) +
               " is not traced by f");
    }
  }
  for (int c = 0; c < g.component_count(); ++c) {
    if (!g.component_acyclic(c)) {
      fail(ErrorCode::NotAcyclic, "component " + std::to_string(c) + " contains a cycle");
    }
  }

  // Depth slabs of width 2 floor(r) toward the f-fixed root, keyed by the
  // ancestor floor(r) levels above the slab floor. An r-ball spans 2 floor(r)+1
  // consecutive depths, so it meets at most two slabs, and any two same-slab
  // vertices of one ball branch apart no higher than the key ancestor -- at
  // most one class per slab per ball. On degree-<=2 graphs the classes are
  // exactly the connected annulus pieces (intervals of 2 floor(r)); with
  // branching they are slabs hanging below one key vertex.
  const long long rf = r.floor();
  const long long width = rf >= 1 ? 2 * rf : 1;
  std::vector<int> block_ids(n, -1);
  int next_block = 0;
  std::vector<std::pair<Vertex, std::size_t>> stack;
  std::vector<Vertex> path;  // root-to-current ancestors
  std::vector<int> depth(n, -1);
  for (int c = 0; c < g.component_count(); ++c) {
    Vertex root = -1;
    for (Vertex v : g.component_vertices(c)) {
      if (f[v] == v) {
        if (root != -1) {
          fail(ErrorCode::Internal, "component with two fixed points of f");
        }
        root = v;
      }
    }
    if (root == -1) {
      fail(ErrorCode::Internal,
           "component of vertex " + std::to_string(g.component_vertices(c).front()) +
               " has no fixed point of f");
    }
    // DFS carrying the ancestor path; gates are read off the path directly.
    // Blocks are identified by the (slab, gate) pair, stored as a small list
    // of slabs per gate vertex.
    stack.clear();
    path.clear();
    depth[root] = 0;
    stack.emplace_back(root, 0);
    path.push_back(root);
    std::vector<std::vector<std::pair<long long, int>>> gate_blocks;
    auto assign_block = [&](Vertex v) {
      long long slab = depth[v] / width;
      long long gate_depth = std::max<long long>(0, slab * width - rf);
      Vertex gate = path[static_cast<std::size_t>(gate_depth)];
      if (static_cast<std::size_t>(gate) >= gate_blocks.size()) {
        gate_blocks.resize(gate + 1);
      }
      for (const auto& [s, id] : gate_blocks[gate]) {
        if (s == slab) {
          block_ids[v] = id;
          return;
        }
      }
      gate_blocks[gate].emplace_back(slab, next_block);
      block_ids[v] = next_block++;
    };
    assign_block(root);
    while (!stack.empty()) {
      auto& [v, slot] = stack.back();
      const auto& nbrs = g.neighbors(v);
      if (slot == nbrs.size()) {
        stack.pop_back();
        path.pop_back();
        continue;
      }
      Vertex next = nbrs[slot++];
      if (depth[next] != -1) continue;
      depth[next] = depth[v] + 1;
      stack.emplace_back(next, 0);
      path.push_back(next);
      assign_block(next);
    }
  }

  CoverWitness w;
  w.r = r;
  w.partition = EquivPartition::from_block_ids(n, block_ids);
  // Tight guarantees of the slab construction: band 0 reaches the root from
  // every branch (2(width-1)); deeper bands span width-1+floor(r) below the
  // key, doubled across branches when the graph branches at all.
  if (rf < 1) {
    w.diameter_bound = Rational(0);
  } else if (g.max_degree() <= 2) {
    w.diameter_bound = Rational(4 * rf - 2);
  } else {
    w.diameter_bound = Rational(6 * rf - 2);
  }
  w.max_classes_met = measure_max_classes(g, w.partition, r, opts);
  return w;
}

CoverCheck verify_cover(const Graph& g, const CoverWitness& w,
                        const VerifyOptions& opts) {
  CoverCheck check;
  if (w.partition.vertex_count() != g.vertex_count()) {
    fail(ErrorCode::IncompletePartition, "partition does not cover the vertex set");
  }
  if (!w.partition.within_components(g)) {
    check.pass = false;
    check.violations.push_back("some block straddles two components");
    return check;
  }

  // Class diameters, by truncated BFS from every member: a same-block vertex
  // beyond floor(diameter_bound) is a violation.
  const long long diam_limit = w.diameter_bound.floor();
  const auto& blocks = w.partition.blocks();
  std::vector<long long> chunk_diam(worker_count(), 0);
  std::vector<std::string> chunk_violation(worker_count());
  parallel_chunks(static_cast<long long>(blocks.size()), [&](long long lo, long long hi,
                                                             int chunk) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<Vertex> queue;
    long long worst = 0;
    for (long long b = lo; b < hi && chunk_violation[chunk].empty(); ++b) {
      const auto& members = blocks[b];
      for (Vertex x : members) {
        queue.clear();
        queue.push_back(x);
        dist[x] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
          Vertex a = queue[head];
          if (dist[a] >= diam_limit) continue;
          for (Vertex y : g.neighbors(a)) {
            if (dist[y] == -1) {
              dist[y] = dist[a] + 1;
              queue.push_back(y);
            }
          }
        }
        for (Vertex v : members) {
          if (dist[v] == -1) {
            chunk_violation[chunk] = "block of vertex " + std::to_string(x) +
                                     " has diameter > " + w.diameter_bound.str() +
                                     " (vertex " + std::to_string(v) +
                                     " unreachable within the bound)";
            break;
          }
          worst = std::max(worst, static_cast<long long>(dist[v]));
        }
        for (Vertex v : queue) dist[v] = -1;
        if (!chunk_violation[chunk].empty()) break;
      }
    }
    chunk_diam[chunk] = worst;
  });
  for (int i = 0; i < worker_count(); ++i) {
    check.max_diameter = std::max(check.max_diameter, chunk_diam[i]);
    if (!chunk_violation[i].empty()) {
      check.pass = false;
      check.violations.push_back(chunk_violation[i]);
    }
  }

  // Ball-class counts against the witness claim.
  check.max_classes_met = measure_max_classes(g, w.partition, w.r, opts);
  if (check.max_classes_met > w.max_classes_met) {
    check.pass = false;
    // Locate one offending vertex for the report.
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<Vertex> queue;
    std::vector<int> ids;
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
      if (classes_met(g, w.partition, x, w.r.floor(), dist, queue, ids) >
          w.max_classes_met) {
        check.violations.push_back(
            "ball of vertex " + std::to_string(x) + " meets " +
            std::to_string(check.max_classes_met) + " classes > claimed " +
            std::to_string(w.max_classes_met));
        break;
      }
    }
  }
  return check;
}

}  // namespace asdim
