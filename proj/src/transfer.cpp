#include "asdim/transfer.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "asdim/errors.hpp"

namespace asdim {

ClassEnumeration id_order_enumeration(const EquivPartition& coarse) {
  ClassEnumeration out(coarse.vertex_count());
  for (Vertex v = 0; v < coarse.vertex_count(); ++v) {
    out[v] = coarse.block(coarse.block_of(v));  // already ascending
  }
  return out;
}

MassAssignment transfer_lambda(const MassAssignment& lambda,
                               const EquivPartition& coarse,
                               const EquivPartition& fine) {
  return transfer_lambda(lambda, coarse, fine, id_order_enumeration(coarse));
}

MassAssignment transfer_lambda(const MassAssignment& lambda,
                               const EquivPartition& coarse,
                               const EquivPartition& fine,
                               const ClassEnumeration& enumeration) {
  const int n = coarse.vertex_count();
  if (fine.vertex_count() != n || lambda.vertex_count() != n) {
    fail(ErrorCode::InvalidArgument, "partitions and masses must share one vertex set");
  }
  if (!fine.refines(coarse)) {
    fail(ErrorCode::NotASubrelation, "fine partition straddles a coarse class");
  }
  if (static_cast<int>(enumeration.size()) != n) {
    fail(ErrorCode::InvalidArgument, "enumeration must cover every vertex");
  }
  // Every enumeration row must stay inside, and cover, the coarse class.
  std::vector<char> mark(n, 0);
  for (Vertex z = 0; z < n; ++z) {
    const auto& klass = coarse.block(coarse.block_of(z));
    for (Vertex w : enumeration[z]) {
      if (w < 0 || w >= n || coarse.block_of(w) != coarse.block_of(z)) {
        fail(ErrorCode::InvalidArgument,
             "enumeration of vertex " + std::to_string(z) + " leaves its class");
      }
      mark[w] = 1;
    }
    for (Vertex w : klass) {
      if (!mark[w]) {
        fail(ErrorCode::InvalidArgument,
             "enumeration of vertex " + std::to_string(z) + " misses vertex " +
                 std::to_string(w));
      }
    }
    for (Vertex w : enumeration[z]) mark[w] = 0;
  }

  std::vector<MassRow> rows(n);
  std::map<Vertex, Rational> acc;
  for (Vertex x = 0; x < n; ++x) {
    acc.clear();
    int coarse_class = coarse.block_of(x);
    int fine_class = fine.block_of(x);
    for (const auto& [z, mass] : lambda.row(x)) {
      if (coarse.block_of(z) != coarse_class) {
        fail(ErrorCode::InvalidMass,
             "mass of vertex " + std::to_string(x) + " escapes its coarse class");
      }
      // P(x,z): first entry of z's enumeration that is fine-equivalent to x.
      Vertex image = -1;
      for (Vertex w : enumeration[z]) {
        if (fine.block_of(w) == fine_class) {
          image = w;
          break;
        }
      }
      if (image < 0) fail(ErrorCode::Internal, "enumeration misses the fine class");
      acc[image] += mass;
    }
    MassRow row;
    row.reserve(acc.size());
    for (const auto& [v, mass] : acc) {
      if (!mass.is_zero()) row.emplace_back(v, mass);
    }
    rows[x] = std::move(row);
  }
  return explicit_lambda(std::move(rows));
}

}  // namespace asdim
