#include "asdim/mass.hpp"

#include <algorithm>
#include <atomic>
#include <string>

#include "asdim/errors.hpp"
#include "asdim/parallel.hpp"

namespace asdim {

Rational row_sum(const MassRow& row) {
  Rational total;
  for (const auto& [v, mass] : row) total += mass;
  return total;
}

Rational row_l1_distance(const MassRow& a, const MassRow& b) {
  Rational total;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      total += a[i].second.abs();
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      total += b[j].second.abs();
      ++j;
    } else {
      total += (a[i].second - b[j].second).abs();
      ++i;
      ++j;
    }
  }
  return total;
}

Rational MassAssignment::value(Vertex x, Vertex y) const {
  MassRow r = row(x);
  auto it = std::lower_bound(r.begin(), r.end(), y,
                             [](const auto& entry, Vertex v) { return entry.first < v; });
  if (it == r.end() || it->first != y) return Rational(0);
  return it->second;
}

namespace {

// Reusable truncated-BFS scratch; reset cost is proportional to the number of
// vertices touched, not to the graph size.
struct BfsScratch {
  std::vector<int> dist;
  std::vector<Vertex> queue;

  void ensure(int n) {
    if (static_cast<int>(dist.size()) < n) dist.assign(n, -1);
  }

  // Returns visited vertices (BFS order); dist[] holds their distances.
  const std::vector<Vertex>& run(const Graph& g, Vertex x, long long depth_limit) {
    ensure(g.vertex_count());
    queue.clear();
    queue.push_back(x);
    dist[x] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex a = queue[head];
      if (depth_limit >= 0 && dist[a] >= depth_limit) continue;
      for (Vertex b : g.neighbors(a)) {
        if (dist[b] == -1) {
          dist[b] = dist[a] + 1;
          queue.push_back(b);
        }
      }
    }
    return queue;
  }

  void reset() {
    for (Vertex v : queue) dist[v] = -1;
  }
};

thread_local BfsScratch t_scratch;

class UniformBallSource : public MassSource {
 public:
  UniformBallSource(const Graph& g, long long n)
      : graph_(std::make_shared<Graph>(g)), radius_(n) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "ball radius must be positive");
    const int vc = graph_->vertex_count();
    ball_size_ = std::vector<std::atomic<int>>(vc);
    ball_cache_ = std::vector<std::atomic<const std::vector<Vertex>*>>(vc);
    // Eccentricities of acyclic components via a diametral pair (exact on
    // trees); they turn ball-size queries for covered components into O(1).
    ecc_.assign(vc, -1);
    comp_covered_.assign(graph_->component_count(), 0);
    Metric metric(*graph_);
    for (int c = 0; c < graph_->component_count(); ++c) {
      if (!graph_->component_acyclic(c)) continue;
      const auto& members = graph_->component_vertices(c);
      auto d0 = metric.distances_from(members.front());
      Vertex a = members.front();
      for (Vertex v : members) {
        if (d0[v] > d0[a]) a = v;
      }
      auto da = metric.distances_from(a);
      Vertex b = a;
      for (Vertex v : members) {
        if (da[v] > da[b]) b = v;
      }
      auto db = metric.distances_from(b);
      int diameter = 0;
      for (Vertex v : members) {
        ecc_[v] = std::max(da[v], db[v]);
        diameter = std::max(diameter, ecc_[v]);
      }
      comp_covered_[c] = diameter <= radius_;
    }
  }

  int vertex_count() const override { return graph_->vertex_count(); }

  // Lazily cached; 0 means unknown. Duplicated computation between threads is
  // benign, every writer stores the same value.
  int ball_size(Vertex x) const {
    int cached = ball_size_[x].load(std::memory_order_relaxed);
    if (cached != 0) return cached;
    int size;
    if (ecc_[x] >= 0 && ecc_[x] <= radius_) {
      size = graph_->component_size(graph_->component_of(x));
    } else {
      const auto& visited = t_scratch.run(*graph_, x, radius_);
      size = static_cast<int>(visited.size());
      t_scratch.reset();
    }
    ball_size_[x].store(size, std::memory_order_relaxed);
    return size;
  }

  bool constant_around(Vertex x) const override {
    // Every ball of the component is the full component, so all rows agree.
    graph_->check_vertex(x);
    return comp_covered_[graph_->component_of(x)];
  }

  MassRow row(Vertex x) const override {
    graph_->check_vertex(x);
    Rational mass(1, ball_size(x));
    std::vector<Vertex> scratch;
    const std::vector<Vertex>& ball = sorted_ball(x, scratch);
    MassRow out;
    out.reserve(ball.size());
    for (Vertex v : ball) out.emplace_back(v, mass);
    return out;
  }

  Rational l1_distance(Vertex x, Vertex y) const override {
    graph_->check_vertex(x);
    graph_->check_vertex(y);
    long long a = ball_size(x);
    long long b = ball_size(y);
    int comp = graph_->component_of(x);
    if (comp == graph_->component_of(y) && a == graph_->component_size(comp) &&
        b == a) {
      return Rational(0);  // both balls are the whole component
    }
    std::vector<Vertex> scratch_x, scratch_y;
    const std::vector<Vertex>& ball_x = sorted_ball(x, scratch_x);
    const std::vector<Vertex>& ball_y = sorted_ball(y, scratch_y);
    long long common = 0;
    std::size_t i = 0, j = 0;
    while (i < ball_x.size() && j < ball_y.size()) {
      if (ball_x[i] < ball_y[j]) {
        ++i;
      } else if (ball_y[j] < ball_x[i]) {
        ++j;
      } else {
        ++common;
        ++i;
        ++j;
      }
    }
    long long only_x = a - common;
    long long only_y = b - common;
    // |1/a - 1/b| = |b - a| / ab
    Rational out(only_x, a);
    out += Rational(only_y, b);
    out += Rational(common * (a > b ? a - b : b - a), a * b);
    return out;
  }

  std::string describe() const override {
    return "uniform-ball(n=" + std::to_string(radius_) + ")";
  }

  ~UniformBallSource() override {
    for (auto& slot : ball_cache_) delete slot.load(std::memory_order_relaxed);
  }

 private:
  // Sorted vertex list of B(x, radius). Full-component balls alias the
  // graph's member list; partial balls are computed once and cached until a
  // global budget runs out, after which they land in the caller's scratch.
  const std::vector<Vertex>& sorted_ball(Vertex x, std::vector<Vertex>& scratch) const {
    int size = ball_size(x);
    int comp = graph_->component_of(x);
    if (size == graph_->component_size(comp)) return graph_->component_vertices(comp);
    if (const auto* hit = ball_cache_[x].load(std::memory_order_acquire)) return *hit;
    scratch = t_scratch.run(*graph_, x, radius_);
    t_scratch.reset();
    std::sort(scratch.begin(), scratch.end());
    long long cost = static_cast<long long>(scratch.size());
    if (cache_budget_.fetch_sub(cost, std::memory_order_relaxed) >= cost) {
      auto* fresh = new std::vector<Vertex>(scratch);
      const std::vector<Vertex>* expected = nullptr;
      if (ball_cache_[x].compare_exchange_strong(expected, fresh,
                                                 std::memory_order_release,
                                                 std::memory_order_acquire)) {
        return *fresh;
      }
      delete fresh;
      return *expected;
    }
    cache_budget_.fetch_add(cost, std::memory_order_relaxed);
    return scratch;
  }

  std::shared_ptr<Graph> graph_;
  long long radius_;
  mutable std::vector<std::atomic<int>> ball_size_;
  mutable std::vector<std::atomic<const std::vector<Vertex>*>> ball_cache_;
  mutable std::atomic<long long> cache_budget_{16'000'000};
  std::vector<int> ecc_;
  std::vector<char> comp_covered_;
};

class ExplicitSource : public MassSource {
 public:
  explicit ExplicitSource(std::vector<MassRow> rows) : rows_(std::move(rows)) {
    for (std::size_t x = 0; x < rows_.size(); ++x) {
      Vertex prev = -1;
      for (const auto& [v, mass] : rows_[x]) {
        if (v <= prev) fail(ErrorCode::InvalidMass, "row not sorted/unique");
        prev = v;
        if (mass.is_negative()) {
          fail(ErrorCode::InvalidMass,
               "negative mass at (" + std::to_string(x) + "," + std::to_string(v) + ")");
        }
      }
      if (row_sum(rows_[x]) != Rational(1)) {
        fail(ErrorCode::InvalidMass,
             "row of vertex " + std::to_string(x) + " does not sum to 1");
      }
    }
  }

  int vertex_count() const override { return static_cast<int>(rows_.size()); }
  MassRow row(Vertex x) const override {
    if (x < 0 || x >= vertex_count()) {
      fail(ErrorCode::InvalidVertex, "vertex " + std::to_string(x) + " out of range");
    }
    return rows_[x];
  }
  std::string describe() const override { return "explicit"; }

 private:
  std::vector<MassRow> rows_;
};

}  // namespace

MassAssignment uniform_ball_lambda(const Graph& g, long long n) {
  return MassAssignment(std::make_shared<UniformBallSource>(g, n));
}

MassAssignment explicit_lambda(std::vector<MassRow> rows) {
  return MassAssignment(std::make_shared<ExplicitSource>(std::move(rows)));
}

namespace {

void check_lambda_size(const Metric& m, const MassAssignment& lambda) {
  if (lambda.vertex_count() != m.graph().vertex_count()) {
    fail(ErrorCode::InvalidMass, "mass assignment does not cover the vertex set");
  }
}

}  // namespace

Rational invariance_defect(const Metric& m, const MassAssignment& lambda,
                           const Rational& r) {
  check_lambda_size(m, lambda);
  if (!(r > Rational(0))) fail(ErrorCode::InvalidArgument, "radius must be positive");
  const Graph& g = m.graph();
  // Integer distances: d < r iff d <= ceil(r) - 1.
  long long limit = r.ceil() - 1;
  if (limit < 1) return Rational(0);
  int workers = worker_count();
  std::vector<Rational> chunk_max(std::max(workers, 1));
  parallel_chunks(g.vertex_count(), [&](long long lo, long long hi, int chunk) {
    Rational best;
    std::vector<Vertex> partners;
    for (long long xi = lo; xi < hi; ++xi) {
      Vertex x = static_cast<Vertex>(xi);
      if (lambda.constant_around(x)) continue;  // all defects in here are 0
      // Copy out of the scratch: l1_distance may reuse it underneath.
      partners = t_scratch.run(g, x, limit);
      t_scratch.reset();
      for (Vertex y : partners) {
        if (y <= x) continue;  // unordered pairs once
        Rational d = lambda.l1_distance(x, y);
        if (d > best) best = d;
      }
    }
    chunk_max[chunk] = best;
  });
  Rational best;
  for (const auto& v : chunk_max) {
    if (v > best) best = v;
  }
  return best;
}

std::optional<DefectWitness> defect_at_least(const Metric& m,
                                             const MassAssignment& lambda,
                                             const Rational& r,
                                             const Rational& bound) {
  check_lambda_size(m, lambda);
  if (!(r > Rational(0))) fail(ErrorCode::InvalidArgument, "radius must be positive");
  const Graph& g = m.graph();
  long long limit = r.ceil() - 1;
  if (limit < 1) return std::nullopt;
  std::vector<Vertex> partners;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (lambda.constant_around(x)) continue;
    partners = t_scratch.run(g, x, limit);
    t_scratch.reset();
    for (Vertex y : partners) {
      if (y <= x) continue;
      Rational d = lambda.l1_distance(x, y);
      if (d >= bound) return DefectWitness{x, y, d};
    }
  }
  return std::nullopt;
}

std::vector<std::pair<long long, Rational>> invariance_profile(
    const Metric& m, const MassAssignment& lambda,
    const std::vector<long long>& radii) {
  std::vector<std::pair<long long, Rational>> out;
  out.reserve(radii.size());
  for (long long r : radii) {
    Rational eps = r <= 0 ? Rational(0) : invariance_defect(m, lambda, Rational(r));
    out.emplace_back(r, eps);
  }
  return out;
}

}  // namespace asdim
