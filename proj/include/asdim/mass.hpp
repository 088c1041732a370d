#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asdim/graph.hpp"
#include "asdim/rational.hpp"

namespace asdim {

/// One vertex's mass distribution: (vertex, mass) pairs sorted by vertex,
/// masses positive, summing to exactly 1.
using MassRow = std::vector<std::pair<Vertex, Rational>>;

Rational row_sum(const MassRow& row);
/// ell^1 distance of two sorted rows, by merge.
Rational row_l1_distance(const MassRow& a, const MassRow& b);

/// Backend for a family of per-vertex mass distributions. Rows may be
/// materialized lazily; implementations may override l1_distance with a
/// cheaper exact path.
class MassSource {
 public:
  virtual ~MassSource() = default;
  virtual int vertex_count() const = 0;
  virtual MassRow row(Vertex x) const = 0;
  virtual Rational l1_distance(Vertex x, Vertex y) const {
    return row_l1_distance(row(x), row(y));
  }
  /// True when every row inside the graph component of the given vertex is
  /// provably the same vector (their pairwise defects are exactly 0). Lets
  /// defect scans skip the component without enumerating pairs.
  virtual bool constant_around(Vertex) const { return false; }
  virtual std::string describe() const = 0;
};

/// Per-vertex probability masses on the vertex set: lambda_x is a nonnegative
/// rational vector summing to 1, supported inside the component of x.
class MassAssignment {
 public:
  explicit MassAssignment(std::shared_ptr<const MassSource> source)
      : source_(std::move(source)) {}

  int vertex_count() const { return source_->vertex_count(); }
  MassRow row(Vertex x) const { return source_->row(x); }
  Rational value(Vertex x, Vertex y) const;
  Rational l1_distance(Vertex x, Vertex y) const { return source_->l1_distance(x, y); }
  bool constant_around(Vertex x) const { return source_->constant_around(x); }
  std::string describe() const { return source_->describe(); }

 private:
  std::shared_ptr<const MassSource> source_;
};

/// lambda_x = uniform distribution on the closed ball B(x, n). Evaluated
/// lazily from a private copy of the graph; requires n >= 1.
MassAssignment uniform_ball_lambda(const Graph& g, long long n);

/// Wraps explicit rows; validates nonnegativity and exact normalization
/// (Error(InvalidMass) otherwise). Support/component consistency is checked
/// by the operations that also hold the graph.
MassAssignment explicit_lambda(std::vector<MassRow> rows);

/// Max of ||lambda_x - lambda_y||_1 over intra-component pairs with
/// 0 < d(x,y) < r; 0 if there is no such pair.
Rational invariance_defect(const Metric& m, const MassAssignment& lambda,
                           const Rational& r);

struct DefectWitness {
  Vertex x;
  Vertex y;
  Rational value;
};

/// First pair (in ascending x, then BFS order) within distance < r whose
/// defect reaches `bound`; nullopt when every pair stays below it.
std::optional<DefectWitness> defect_at_least(const Metric& m,
                                             const MassAssignment& lambda,
                                             const Rational& r,
                                             const Rational& bound);

/// Defect profile over a list of integer radii.
std::vector<std::pair<long long, Rational>> invariance_profile(
    const Metric& m, const MassAssignment& lambda, const std::vector<long long>& radii);

}  // namespace asdim
