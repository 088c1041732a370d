#pragma once

#include <vector>

#include "asdim/graph.hpp"
#include "asdim/mass.hpp"
#include "asdim/rational.hpp"

namespace asdim {

/// Subtree masses per directed edge of an acyclic graph:
///   theta0(x,y) = lambda_x(side of x when the edge {x,y} is cut)
///   theta1(x,y) = lambda_y(side of y)  ==  theta0(y,x).
class ThetaTable {
 public:
  ThetaTable(std::vector<EdgePair> edges, std::vector<Rational> t0_fwd,
             std::vector<Rational> t0_rev);

  const std::vector<EdgePair>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  Rational theta0(Vertex x, Vertex y) const;
  Rational theta1(Vertex x, Vertex y) const { return theta0(y, x); }

  /// theta0 along the normalized edge (u,v) and against it.
  const Rational& forward(std::size_t edge_index) const { return t0_fwd_[edge_index]; }
  const Rational& reverse(std::size_t edge_index) const { return t0_rev_[edge_index]; }

  friend bool operator==(const ThetaTable& a, const ThetaTable& b) = default;

 private:
  std::vector<EdgePair> edges_;  // normalized, lexicographically sorted
  std::vector<Rational> t0_fwd_;
  std::vector<Rational> t0_rev_;
};

/// Computes the full table with one rooted traversal per component; each
/// component is rooted at its minimum vertex id (the table itself is
/// root-independent). Throws NotAcyclic on cyclic components and InvalidMass
/// when a row is unnormalized or leaves its component.
ThetaTable theta_dfs(const Graph& g, const MassAssignment& lambda);

/// Same, with explicit roots (one per component). Exposed so tests can verify
/// root independence directly.
ThetaTable theta_dfs_rooted(const Graph& g, const MassAssignment& lambda,
                            const std::vector<Vertex>& roots);

/// Vertex order per component id; every member must appear at least once.
using ComponentOrder = std::vector<std::vector<Vertex>>;

ComponentOrder id_component_order(const Graph& g);

/// Reference evaluation: runs the mass-accumulation recursion
///   w_{k+1}(x,y) = w_k(x,y) + lambda_x(z_{k+1})   if z_{k+1} is new and
///                                                  d(x, z_{k+1}) < d(y, z_{k+1})
/// to its fixed point over the supplied enumeration. Independent of the
/// traversal used by theta_dfs; the two must agree exactly.
ThetaTable theta_iterative_oracle(const Graph& g, const MassAssignment& lambda,
                                  const ComponentOrder& enumeration);

}  // namespace asdim
