#pragma once

#include <vector>

#include "asdim/graph.hpp"

namespace asdim {

/// Partition of a dense vertex set 0..n-1 into blocks, kept in canonical form:
/// blocks are sorted internally and ordered by their minimum member, block ids
/// follow that order. Stands in for a uniformly bounded equivalence relation.
class EquivPartition {
 public:
  static EquivPartition from_block_ids(int vertex_count, const std::vector<int>& ids);
  /// Validates that the blocks cover 0..n-1 exactly once; throws
  /// Error(IncompletePartition) otherwise.
  static EquivPartition from_blocks(int vertex_count,
                                    const std::vector<std::vector<Vertex>>& blocks);
  static EquivPartition components_of(const Graph& g);
  static EquivPartition singletons(int vertex_count);

  int vertex_count() const { return static_cast<int>(block_of_.size()); }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int block_of(Vertex v) const;
  const std::vector<std::vector<Vertex>>& blocks() const { return blocks_; }
  const std::vector<Vertex>& block(int id) const { return blocks_[id]; }

  bool same_block(Vertex a, Vertex b) const { return block_of(a) == block_of(b); }

  /// True when every block of *this lies inside one block of `coarser`.
  bool refines(const EquivPartition& coarser) const;

  /// True when every block lies inside a single component of g.
  bool within_components(const Graph& g) const;

  /// Max over blocks of the exact pairwise graph distance; requires blocks to
  /// lie within components.
  long long max_diameter(const Graph& g) const;

 private:
  std::vector<int> block_of_;
  std::vector<std::vector<Vertex>> blocks_;
};

}  // namespace asdim
