#pragma once

#include <string>
#include <vector>

#include "asdim/cover.hpp"
#include "asdim/graph.hpp"
#include "asdim/partition.hpp"

namespace asdim {

struct NestedLevelCheck {
  bool metric_ok = true;
  std::string detail;
  long long pairs_checked = 0;
};

/// Certificate for an increasing family of graphs on one vertex set: the
/// component partitions form a refinement chain exhausting the top level,
/// and distances can only shrink level to level.
struct NestedReport {
  std::vector<NestedLevelCheck> levels;        // one per consecutive pair
  std::vector<EquivPartition> partitions;      // components per level
  bool refinement_ok = true;
  bool pass = true;
};

/// Verifies edge-set nesting (Error(NotNested) on violation), the metric
/// inequality d_{n+1} <= d_n on exhaustive or sampled pairs, and the
/// refinement chain of component partitions.
NestedReport nested_union_check(const std::vector<Graph>& graphs,
                                const VerifyOptions& opts = {});

}  // namespace asdim
