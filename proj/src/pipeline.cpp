#include "asdim/pipeline.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "asdim/errors.hpp"

namespace asdim {

namespace {

// min{a+b : f^a(x) = f^b(y)} capped at `budget`; -1 when the truncated orbits
// do not meet. On the acyclic functional graph this equals the path distance
// whenever that distance is within the budget.
long long orbit_meet_distance(const std::vector<Vertex>& f, Vertex x, Vertex y,
                              long long budget) {
  std::vector<Vertex> orbit_x;
  Vertex a = x;
  for (long long i = 0; i <= budget; ++i) {
    orbit_x.push_back(a);
    if (f[a] == a) break;
    a = f[a];
  }
  Vertex b = y;
  for (long long j = 0; j <= budget; ++j) {
    for (std::size_t i = 0; i < orbit_x.size(); ++i) {
      if (orbit_x[i] == b) {
        long long total = static_cast<long long>(i) + j;
        return total <= budget ? total : -1;
      }
    }
    if (f[b] == b) break;
    b = f[b];
  }
  return -1;
}

// Re-verifies that endpoints of distinct deleted edges are more than `sep`
// apart in g. Separation is automatic below 1. Two sweeps: a truncated BFS
// around every endpoint (sound for arbitrary pairs), and the orbit-meet
// identity on the completed orientation for pairs inside one component of
// (X, R \ Q).
SeparationCheck verify_q_separation(const Graph& g, const Graph& g_res,
                                    const std::vector<Vertex>& f,
                                    const std::vector<EdgePair>& q,
                                    const Rational& sep) {
  SeparationCheck out;
  if (sep < Rational(1)) return out;  // automatic
  const long long reach = sep.floor();

  std::vector<int> endpoint_edge(g.vertex_count(), -1);
  for (std::size_t i = 0; i < q.size(); ++i) {
    endpoint_edge[q[i].first] = static_cast<int>(i);
    endpoint_edge[q[i].second] = static_cast<int>(i);
  }
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<Vertex> queue;
  for (std::size_t i = 0; i < q.size() && out.pass; ++i) {
    for (Vertex start : {q[i].first, q[i].second}) {
      queue.clear();
      queue.push_back(start);
      dist[start] = 0;
      for (std::size_t head = 0; head < queue.size() && out.pass; ++head) {
        Vertex a = queue[head];
        int other = endpoint_edge[a];
        if (other != -1 && other != static_cast<int>(i)) {
          out.pass = false;
          out.detail = "deleted edges " + std::to_string(i) + " and " +
                       std::to_string(other) + " have endpoints at distance " +
                       std::to_string(dist[a]) + " <= " + sep.str();
        }
        if (dist[a] >= reach) continue;
        for (Vertex b : g.neighbors(a)) {
          if (dist[b] == -1) {
            dist[b] = dist[a] + 1;
            queue.push_back(b);
          }
        }
      }
      for (Vertex v : queue) dist[v] = -1;
      if (!out.pass) break;
    }
  }
  if (!out.pass) return out;

  // Orbit-meet replay for pairs inside one residual component.
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      for (Vertex x : {q[i].first, q[i].second}) {
        for (Vertex y : {q[j].first, q[j].second}) {
          if (g_res.component_of(x) != g_res.component_of(y)) continue;
          long long d = orbit_meet_distance(f, x, y, reach);
          if (d != -1) {
            out.pass = false;
            out.detail = "orbit meet of " + std::to_string(x) + " and " +
                         std::to_string(y) + " at distance " + std::to_string(d) +
                         " <= " + sep.str();
            return out;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

PipelineArtifacts run_pipeline(const Graph& g, const MassAssignment& lambda,
                               const Rational& r, const PipelineOptions& opts) {
  if (!(r > Rational(0))) fail(ErrorCode::InvalidArgument, "radius must be positive");
  for (int c = 0; c < g.component_count(); ++c) {
    if (!g.component_acyclic(c)) {
      fail(ErrorCode::NotAcyclic, "component " + std::to_string(c) + " contains a cycle");
    }
  }
  const Rational doubled = Rational(2) * r;
  const Rational conditions_value = Rational(4) * doubled + Rational(6);
  const Rational gate_radius = conditions_value + Rational(2);

  Metric metric(g);
  if (auto bad = defect_at_least(metric, lambda, gate_radius, kMaxDefect)) {
    fail(ErrorCode::InsufficientInvariance,
         "defect " + bad->value.str() + " >= " + kMaxDefect.str() + " at pair (" +
             std::to_string(bad->x) + "," + std::to_string(bad->y) +
             ") within distance < " + gate_radius.str());
  }

  ThetaTable theta = theta_dfs(g, lambda);
  OrientedPartition partition = partition_and_orient(g, theta);
  ConditionsReport conditions = check_conditions(g, partition, conditions_value);
  if (!conditions.all_pass()) {
    std::string detail;
    for (const auto* item :
         {&conditions.c1, &conditions.c2, &conditions.c3, &conditions.c4,
          &conditions.c5}) {
      if (!item->pass) detail += (detail.empty() ? "" : "; ") + item->detail;
    }
    fail(ErrorCode::ConditionsFailed, detail);
  }

  Graph g1 = Graph::build(g.vertex_count(), partition.r1());
  DeletionSet deletion = choose_edges(g1, doubled);
  CombinedOrientation orientation = complete_orientation(g, partition, deletion);

  // Residual graph (X, R \ Q) carries the functional cover at radius 2r.
  std::vector<EdgePair> residual_edges;
  residual_edges.reserve(g.edge_count());
  std::set_difference(g.edges().begin(), g.edges().end(), deletion.q.begin(),
                      deletion.q.end(), std::back_inserter(residual_edges));
  Graph g_res = Graph::build(g.vertex_count(), std::move(residual_edges));
  CoverWitness functional = functional_cover(g_res, orientation.f, doubled, opts.verify);

  PipelineArtifacts art{
      .r = r,
      .defect_gate_radius = gate_radius,
      .conditions_value = conditions_value,
      .theta = std::move(theta),
      .partition = std::move(partition),
      .conditions = conditions,
      .deletion = std::move(deletion),
      .orientation = std::move(orientation),
      .functional_witness = functional,
      .witness = CoverWitness{r, functional.partition, 0, functional.diameter_bound},
      .witness_check = {},
      .q_separation = {},
  };

  // The same classes certify the 4-class bound for r-balls of g.
  art.witness.max_classes_met =
      measure_max_classes(g, art.witness.partition, r, opts.verify);
  art.witness_check = verify_cover(g, art.witness, opts.verify);
  art.q_separation =
      verify_q_separation(g, g_res, art.orientation.f, art.deletion.q, doubled);

  Graph g2 = Graph::build(g.vertex_count(), [&] {
    std::vector<EdgePair> e;
    std::set_difference(art.partition.r1().begin(), art.partition.r1().end(),
                        art.deletion.q.begin(), art.deletion.q.end(),
                        std::back_inserter(e));
    return e;
  }());
  for (int c = 0; c < g2.component_count(); ++c) {
    art.residual_component_max =
        std::max(art.residual_component_max, static_cast<long long>(g2.component_size(c)));
  }

  art.pass = art.witness_check.pass && art.q_separation.pass &&
             art.witness.max_classes_met <= 4 && art.functional_witness.max_classes_met <= 2 &&
             Rational(art.residual_component_max) <= conditions_value;
  return art;
}

CoverWitness asdim_cover(const Graph& g, const MassAssignment& lambda,
                         const Rational& r, const PipelineOptions& opts) {
  PipelineArtifacts art = run_pipeline(g, lambda, r, opts);
  if (!art.pass) {
    std::string detail = art.q_separation.pass ? "" : art.q_separation.detail;
    for (const auto& v : art.witness_check.violations) {
      detail += (detail.empty() ? "" : "; ") + v;
    }
    if (art.witness.max_classes_met > 4) {
      detail += (detail.empty() ? "" : "; ") + std::string("max classes met ") +
                std::to_string(art.witness.max_classes_met) + " > 4";
    }
    fail(ErrorCode::Internal, "certificate verification failed: " + detail);
  }
  return art.witness;
}

}  // namespace asdim
