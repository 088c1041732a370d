#include "asdim/nested.hpp"

#include <algorithm>
#include <string>

#include "asdim/errors.hpp"
#include "asdim/parallel.hpp"

namespace asdim {

NestedReport nested_union_check(const std::vector<Graph>& graphs,
                                const VerifyOptions& opts) {
  if (graphs.empty()) fail(ErrorCode::InvalidArgument, "empty graph family");
  const int n = graphs.front().vertex_count();
  for (const auto& g : graphs) {
    if (g.vertex_count() != n) {
      fail(ErrorCode::NotNested, "graphs live on different vertex sets");
    }
  }
  for (std::size_t i = 0; i + 1 < graphs.size(); ++i) {
    if (!std::includes(graphs[i + 1].edges().begin(), graphs[i + 1].edges().end(),
                       graphs[i].edges().begin(), graphs[i].edges().end())) {
      fail(ErrorCode::NotNested,
           "level " + std::to_string(i) + " has edges missing from level " +
               std::to_string(i + 1));
    }
  }

  NestedReport report;
  for (const auto& g : graphs) {
    report.partitions.push_back(EquivPartition::components_of(g));
  }
  for (std::size_t i = 0; i + 1 < report.partitions.size(); ++i) {
    if (!report.partitions[i].refines(report.partitions[i + 1])) {
      report.refinement_ok = false;
      report.pass = false;
    }
  }

  // Metric inequality level by level. Exhaustive over all pairs when small
  // enough, otherwise seeded sampling.
  for (std::size_t i = 0; i + 1 < graphs.size(); ++i) {
    NestedLevelCheck level;
    Metric coarse(graphs[i]);
    Metric fine(graphs[i + 1]);
    auto check_pair = [&](Vertex x, Vertex y) {
      auto d0 = coarse.distance(x, y);
      if (!d0) return true;  // infinite above, no constraint
      auto d1 = fine.distance(x, y);
      if (!d1 || *d1 > *d0) {
        level.metric_ok = false;
        level.detail = "pair (" + std::to_string(x) + "," + std::to_string(y) +
                       ") has d_n=" + std::to_string(*d0) + " but d_{n+1}=" +
                       (d1 ? std::to_string(*d1) : std::string("inf"));
        return false;
      }
      return true;
    };
    bool exhaustive =
        opts.exhaustive && static_cast<long long>(n) * (n - 1) / 2 <= 2'000'000;
    if (exhaustive) {
      for (Vertex x = 0; x < n && level.metric_ok; ++x) {
        auto dist0 = coarse.distances_from(x);
        auto dist1 = fine.distances_from(x);
        for (Vertex y = x + 1; y < n; ++y) {
          level.pairs_checked++;
          if (dist0[y] < 0) continue;
          if (dist1[y] < 0 || dist1[y] > dist0[y]) {
            level.metric_ok = false;
            level.detail = "pair (" + std::to_string(x) + "," + std::to_string(y) +
                           ") has d_n=" + std::to_string(dist0[y]) + " but d_{n+1}=" +
                           (dist1[y] < 0 ? std::string("inf") : std::to_string(dist1[y]));
            break;
          }
        }
      }
    } else {
      Rng rng(opts.seed + i);
      for (long long k = 0; k < opts.samples && level.metric_ok; ++k) {
        Vertex x = static_cast<Vertex>(rng.below(n));
        Vertex y = static_cast<Vertex>(rng.below(n));
        if (x == y) continue;
        level.pairs_checked++;
        check_pair(x, y);
      }
    }
    report.pass = report.pass && level.metric_ok;
    report.levels.push_back(std::move(level));
  }
  return report;
}

}  // namespace asdim
