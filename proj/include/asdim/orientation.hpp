#pragma once

#include <string>
#include <vector>

#include "asdim/graph.hpp"
#include "asdim/rational.hpp"
#include "asdim/theta.hpp"

namespace asdim {

/// Threshold constants of the orientation dichotomy. An edge is orientable
/// when both of its subtree masses avoid the closed interval
/// [kThetaLow, kThetaHigh]; the dichotomy is guaranteed whenever the
/// invariance defect stays below kMaxDefect at the radii consumed by the
/// pipeline. Tests re-verify the three inequalities these constants must
/// satisfy.
inline const Rational kThetaLow{5, 12};
inline const Rational kThetaHigh{7, 12};
inline const Rational kMaxDefect{1, 12};

/// Edge partition R0 | R1 plus a partial orientation of R0: every R0 edge
/// carries exactly one arrow, arrows are antisymmetric.
class OrientedPartition {
 public:
  /// Normalizes and validates structure; arrow out-degrees are *not* bounded
  /// here (condition C.2 is a verified property, not a structural one).
  static OrientedPartition from_parts(std::vector<EdgePair> r0, std::vector<EdgePair> r1,
                                      std::vector<std::pair<Vertex, Vertex>> arrows);

  const std::vector<EdgePair>& r0() const { return r0_; }
  const std::vector<EdgePair>& r1() const { return r1_; }
  const std::vector<std::pair<Vertex, Vertex>>& arrows() const { return arrows_; }

  /// Arrow out-degree per vertex (vector sized to max endpoint + 1 or n).
  std::vector<int> out_degrees(int vertex_count) const;

 private:
  std::vector<EdgePair> r0_;
  std::vector<EdgePair> r1_;
  std::vector<std::pair<Vertex, Vertex>> arrows_;
};

/// Applies the threshold dichotomy to every edge: an edge joins R0 iff both
/// theta values avoid [kThetaLow, kThetaHigh]; its arrow points from the
/// light side to the heavy side. An R0 edge fitting neither dichotomy case
/// throws Error(DichotomyViolation) naming the edge and both values.
OrientedPartition partition_and_orient(const Graph& g, const ThetaTable& theta);

struct ConditionItem {
  bool pass = true;
  std::string detail;
};

/// Pass/fail per condition of the orientation criterion, with a
/// counterexample in `detail` on failure.
struct ConditionsReport {
  ConditionItem c1;  // R0 and R1 partition the edge set
  ConditionItem c2;  // arrow out-degree <= 1
  ConditionItem c3;  // deg_G1(x) + out-degree(x) <= 2
  ConditionItem c4;  // G1 acyclic
  ConditionItem c5;  // fully arrow-capped G1 components have size > r
  bool all_pass() const {
    return c1.pass && c2.pass && c3.pass && c4.pass && c5.pass;
  }
};

ConditionsReport check_conditions(const Graph& g, const OrientedPartition& p,
                                  const Rational& r);

}  // namespace asdim
