#include "asdim/partition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "asdim/errors.hpp"

namespace asdim {

EquivPartition EquivPartition::from_block_ids(int vertex_count,
                                              const std::vector<int>& ids) {
  if (static_cast<int>(ids.size()) != vertex_count) {
    fail(ErrorCode::IncompletePartition, "block id vector has wrong length");
  }
  EquivPartition p;
  p.block_of_.assign(vertex_count, -1);
  // Renumber blocks by order of first appearance (== order of minimum member).
  std::vector<int> renumber;
  std::vector<int> seen_at;
  for (Vertex v = 0; v < vertex_count; ++v) {
    int raw = ids[v];
    if (raw < 0) fail(ErrorCode::IncompletePartition, "negative block id");
    if (raw >= static_cast<int>(seen_at.size())) seen_at.resize(raw + 1, -1);
    if (seen_at[raw] == -1) {
      seen_at[raw] = static_cast<int>(p.blocks_.size());
      p.blocks_.emplace_back();
    }
    int id = seen_at[raw];
    p.block_of_[v] = id;
    p.blocks_[id].push_back(v);
  }
  return p;
}

EquivPartition EquivPartition::from_blocks(
    int vertex_count, const std::vector<std::vector<Vertex>>& blocks) {
  std::vector<int> ids(vertex_count, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Vertex v : blocks[b]) {
      if (v < 0 || v >= vertex_count) {
        fail(ErrorCode::IncompletePartition,
             "block member " + std::to_string(v) + " out of range");
      }
      if (ids[v] != -1) {
        fail(ErrorCode::IncompletePartition,
             "vertex " + std::to_string(v) + " appears in two blocks");
      }
      ids[v] = static_cast<int>(b);
    }
  }
  for (Vertex v = 0; v < vertex_count; ++v) {
    if (ids[v] == -1) {
      fail(ErrorCode::IncompletePartition,
           "vertex " + std::to_string(v) + " missing from partition");
    }
  }
  return from_block_ids(vertex_count, ids);
}

EquivPartition EquivPartition::components_of(const Graph& g) {
  std::vector<int> ids(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) ids[v] = g.component_of(v);
  return from_block_ids(g.vertex_count(), ids);
}

EquivPartition EquivPartition::singletons(int vertex_count) {
  std::vector<int> ids(vertex_count);
  std::iota(ids.begin(), ids.end(), 0);
  return from_block_ids(vertex_count, ids);
}

int EquivPartition::block_of(Vertex v) const {
  if (v < 0 || v >= vertex_count()) {
    fail(ErrorCode::InvalidVertex, "vertex " + std::to_string(v) + " out of range");
  }
  return block_of_[v];
}

bool EquivPartition::refines(const EquivPartition& coarser) const {
  if (coarser.vertex_count() != vertex_count()) return false;
  for (const auto& members : blocks_) {
    int target = coarser.block_of(members.front());
    for (Vertex v : members) {
      if (coarser.block_of(v) != target) return false;
    }
  }
  return true;
}

bool EquivPartition::within_components(const Graph& g) const {
  if (g.vertex_count() != vertex_count()) return false;
  for (const auto& members : blocks_) {
    int comp = g.component_of(members.front());
    for (Vertex v : members) {
      if (g.component_of(v) != comp) return false;
    }
  }
  return true;
}

long long EquivPartition::max_diameter(const Graph& g) const {
  Metric metric(g);
  long long best = 0;
  for (const auto& members : blocks_) {
    for (Vertex v : members) {
      auto dist = metric.distances_from(v);
      for (Vertex w : members) {
        if (dist[w] < 0) {
          fail(ErrorCode::InvalidArgument, "block straddles components");
        }
        best = std::max(best, static_cast<long long>(dist[w]));
      }
    }
  }
  return best;
}

}  // namespace asdim
