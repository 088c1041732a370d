#pragma once

#include "asdim/graph.hpp"

namespace asdim {

Graph make_path(int n);
Graph make_star(int leaves);
/// Spine path with `legs` pendant leaves attached to every spine vertex.
Graph make_caterpillar(int spine, int legs);
/// Random tree by seeded uniform attachment among vertices with spare degree.
Graph make_random_tree(int n, int max_degree, unsigned long long seed);

}  // namespace asdim
