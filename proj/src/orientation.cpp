#include "asdim/orientation.hpp"

#include <algorithm>

#include "asdim/errors.hpp"

namespace asdim {

namespace {

void normalize_edges(std::vector<EdgePair>& edges) {
  for (auto& [u, v] : edges) {
    if (u == v) fail(ErrorCode::InvalidEdge, "self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

std::string edge_str(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

OrientedPartition OrientedPartition::from_parts(
    std::vector<EdgePair> r0, std::vector<EdgePair> r1,
    std::vector<std::pair<Vertex, Vertex>> arrows) {
  normalize_edges(r0);
  normalize_edges(r1);
  // Disjointness of the two sides.
  std::vector<EdgePair> overlap;
  std::set_intersection(r0.begin(), r0.end(), r1.begin(), r1.end(),
                        std::back_inserter(overlap));
  if (!overlap.empty()) {
    fail(ErrorCode::InvalidArgument,
         "edge " + edge_str(overlap.front().first, overlap.front().second) +
             " appears in both R0 and R1");
  }
  std::sort(arrows.begin(), arrows.end());
  if (std::adjacent_find(arrows.begin(), arrows.end()) != arrows.end()) {
    fail(ErrorCode::InvalidArgument, "duplicate arrow");
  }
  // Exactly one arrow per R0 edge, none elsewhere, antisymmetric.
  std::vector<char> covered(r0.size(), 0);
  for (const auto& [x, y] : arrows) {
    EdgePair key{std::min(x, y), std::max(x, y)};
    auto it = std::lower_bound(r0.begin(), r0.end(), key);
    if (it == r0.end() || *it != key) {
      fail(ErrorCode::InvalidArgument, "arrow " + edge_str(x, y) + " outside R0");
    }
    std::size_t idx = static_cast<std::size_t>(it - r0.begin());
    if (covered[idx]) {
      fail(ErrorCode::InvalidArgument,
           "edge " + edge_str(key.first, key.second) + " carries two arrows");
    }
    covered[idx] = 1;
  }
  for (std::size_t i = 0; i < r0.size(); ++i) {
    if (!covered[i]) {
      fail(ErrorCode::InvalidArgument,
           "R0 edge " + edge_str(r0[i].first, r0[i].second) + " has no arrow");
    }
  }
  OrientedPartition p;
  p.r0_ = std::move(r0);
  p.r1_ = std::move(r1);
  p.arrows_ = std::move(arrows);
  return p;
}

std::vector<int> OrientedPartition::out_degrees(int vertex_count) const {
  std::vector<int> out(vertex_count, 0);
  for (const auto& [x, y] : arrows_) {
    if (x >= 0 && x < vertex_count) out[x]++;
  }
  return out;
}

OrientedPartition partition_and_orient(const Graph& g, const ThetaTable& theta) {
  if (theta.edges() != g.edges()) {
    fail(ErrorCode::InvalidArgument, "theta table does not match the graph");
  }
  auto outside = [](const Rational& t) { return t < kThetaLow || t > kThetaHigh; };
  std::vector<EdgePair> r0, r1;
  std::vector<std::pair<Vertex, Vertex>> arrows;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& [u, v] = g.edges()[e];
    const Rational& a = theta.forward(e);  // theta0(u,v)
    const Rational& b = theta.reverse(e);  // theta0(v,u) == theta1(u,v)
    if (outside(a) && outside(b)) {
      bool arrow_uv = a < kThetaLow && b > kThetaHigh;
      bool arrow_vu = b < kThetaLow && a > kThetaHigh;
      if (arrow_uv == arrow_vu) {
        fail(ErrorCode::DichotomyViolation,
             "edge " + edge_str(u, v) + " has theta0=" + a.str() +
                 ", theta1=" + b.str() + " fitting neither orientation case");
      }
      r0.emplace_back(u, v);
      arrows.emplace_back(arrow_uv ? std::pair{u, v} : std::pair{v, u});
    } else {
      r1.emplace_back(u, v);
    }
  }
  return OrientedPartition::from_parts(std::move(r0), std::move(r1), std::move(arrows));
}

ConditionsReport check_conditions(const Graph& g, const OrientedPartition& p,
                                  const Rational& r) {
  ConditionsReport rep;
  const int n = g.vertex_count();

  // C.1: R0 and R1 together are exactly the edges of g.
  {
    std::vector<EdgePair> merged;
    merged.reserve(p.r0().size() + p.r1().size());
    std::merge(p.r0().begin(), p.r0().end(), p.r1().begin(), p.r1().end(),
               std::back_inserter(merged));
    if (merged != g.edges()) {
      rep.c1.pass = false;
      rep.c1.detail = "R0 and R1 do not partition the edge set";
    }
  }

  // C.2: arrow out-degree at most 1.
  auto outdeg = p.out_degrees(n);
  for (Vertex v = 0; v < n && rep.c2.pass; ++v) {
    if (outdeg[v] > 1) {
      rep.c2.pass = false;
      rep.c2.detail = "vertex " + std::to_string(v) + " has arrow out-degree " +
                      std::to_string(outdeg[v]);
    }
  }

  // Degree inside (X, R1).
  std::vector<int> deg1(n, 0);
  for (const auto& [u, v] : p.r1()) {
    deg1[u]++;
    deg1[v]++;
  }

  // C.3: deg_G1 + arrow out-degree <= 2.
  for (Vertex v = 0; v < n && rep.c3.pass; ++v) {
    if (deg1[v] + outdeg[v] > 2) {
      rep.c3.pass = false;
      rep.c3.detail = "vertex " + std::to_string(v) + " has deg_G1=" +
                      std::to_string(deg1[v]) + " and out-degree " +
                      std::to_string(outdeg[v]);
    }
  }

  // C.4/C.5 need the components of G1.
  Graph g1 = Graph::build(n, p.r1());
  for (int c = 0; c < g1.component_count() && rep.c4.pass; ++c) {
    if (!g1.component_acyclic(c)) {
      rep.c4.pass = false;
      rep.c4.detail = "G1 component of vertex " +
                      std::to_string(g1.component_vertices(c).front()) +
                      " contains a cycle";
    }
  }

  // C.5: a nontrivial G1 component whose leaves all emit an arrow must be
  // larger than r.
  for (int c = 0; c < g1.component_count() && rep.c5.pass; ++c) {
    const auto& members = g1.component_vertices(c);
    if (members.size() <= 1) continue;
    bool all_leaves_oriented = true;
    for (Vertex v : members) {
      if (g1.degree(v) == 1 && outdeg[v] != 1) {
        all_leaves_oriented = false;
        break;
      }
    }
    if (all_leaves_oriented && !(Rational(static_cast<long long>(members.size())) > r)) {
      rep.c5.pass = false;
      rep.c5.detail = "G1 component of vertex " + std::to_string(members.front()) +
                      " has size " + std::to_string(members.size()) +
                      " <= " + r.str() + " with every leaf oriented";
    }
  }
  return rep;
}

}  // namespace asdim
