#pragma once

#include <vector>

#include "asdim/graph.hpp"
#include "asdim/rational.hpp"

namespace asdim {

/// Well-separated edges chosen for deletion on a degree-<=2 acyclic graph.
/// q0 is the greedy maximal independent set in the edge conflict relation,
/// q the subset surviving the leaf-distance pruning.
struct DeletionSet {
  Rational r;
  std::vector<EdgePair> q;
  std::vector<EdgePair> q0;
};

/// Selects edges of components larger than 4r+6 such that
///   (1) endpoints of distinct chosen edges are more than r apart,
///   (2) endpoints of chosen edges are at distance >= r from every leaf,
///   (3) removing the chosen edges leaves components of <= 4r+6 vertices.
/// Greedy in ascending edge order, so the output is deterministic.
/// Throws DegreeBound when max degree exceeds 2, NotAcyclic on cycles.
DeletionSet choose_edges(const Graph& g, const Rational& r);

}  // namespace asdim
