#include "asdim/generators.hpp"

#include "asdim/errors.hpp"
#include "asdim/parallel.hpp"

namespace asdim {

Graph make_path(int n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "negative size");
  std::vector<EdgePair> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::build(n, std::move(edges));
}

Graph make_star(int leaves) {
  if (leaves < 0) fail(ErrorCode::InvalidArgument, "negative size");
  std::vector<EdgePair> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::build(leaves + 1, std::move(edges));
}

Graph make_caterpillar(int spine, int legs) {
  if (spine < 1 || legs < 0) fail(ErrorCode::InvalidArgument, "bad caterpillar shape");
  std::vector<EdgePair> edges;
  for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
  int next = spine;
  for (int i = 0; i < spine; ++i) {
    for (int l = 0; l < legs; ++l) edges.emplace_back(i, next++);
  }
  return Graph::build(next, std::move(edges));
}

Graph make_random_tree(int n, int max_degree, unsigned long long seed) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "tree needs at least one vertex");
  if (max_degree < 2 && n > max_degree + 1) {
    fail(ErrorCode::InvalidArgument, "degree cap too small for the size");
  }
  Rng rng(seed);
  std::vector<EdgePair> edges;
  std::vector<int> degree(n, 0);
  std::vector<Vertex> open;  // vertices with spare degree
  open.push_back(0);
  for (Vertex v = 1; v < n; ++v) {
    std::size_t pick = static_cast<std::size_t>(rng.below(open.size()));
    Vertex parent = open[pick];
    edges.emplace_back(parent, v);
    if (++degree[parent] >= max_degree) {
      open[pick] = open.back();
      open.pop_back();
    }
    degree[v] = 1;
    if (degree[v] < max_degree) open.push_back(v);
  }
  return Graph::build(n, std::move(edges));
}

}  // namespace asdim
