#include <doctest.h>

#include <algorithm>

#include "asdim/errors.hpp"
#include "asdim/generators.hpp"
#include "asdim/graph.hpp"
#include "helpers.hpp"

using namespace asdim;
using namespace testutil;

TEST_CASE("build normalizes and validates") {
  Graph g = Graph::build(3, {{1, 0}, {1, 2}, {0, 1}});
  CHECK(g.edge_count() == 2);
  CHECK(g.edges() == std::vector<EdgePair>{{0, 1}, {1, 2}});
  CHECK(g.max_degree() == 2);
  CHECK(g.degree(1) == 2);

  Graph singleton = Graph::build(1, {});
  CHECK(singleton.edge_count() == 0);
  CHECK(singleton.component_count() == 1);

  CHECK_THROWS_AS(Graph::build(2, {{0, 0}}), Error);
  CHECK_THROWS_AS(Graph::build(2, {{0, 2}}), Error);
  try {
    Graph::build(2, {{0, 0}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidEdge);
  }
  try {
    Graph::build(2, {{0, 5}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidVertex);
  }
}

TEST_CASE("distance_and_ball on paths and stars") {
  Graph path = make_path(3);
  auto [dist, ball] = distance_and_ball(path, 0, Rational(1));
  CHECK(dist == std::vector<int>{0, 1, 2});
  CHECK(ball == std::vector<Vertex>{0, 1});

  auto zero = distance_and_ball(path, 0, Rational(0));
  CHECK(zero.ball == std::vector<Vertex>{0});

  // Star with 3 leaves, centered ball from a leaf reaches everything at r=2.
  Graph star = make_star(3);
  auto from_leaf = distance_and_ball(star, 1, Rational(2));
  CHECK(from_leaf.ball.size() == 4);

  CHECK_THROWS_AS(distance_and_ball(path, 7, Rational(1)), Error);
  CHECK_THROWS_AS(distance_and_ball(path, 0, Rational(-1)), Error);

  // Fractional radii compare exactly against integer distances.
  auto frac = distance_and_ball(path, 0, Rational(3, 2));
  CHECK(frac.ball == std::vector<Vertex>{0, 1});
}

TEST_CASE("split_at_edge on a path") {
  Graph path = make_path(3);
  auto [a, b] = split_at_edge(path, 0, 1);
  CHECK(a == std::vector<Vertex>{0});
  CHECK(b == std::vector<Vertex>{1, 2});
  auto [c, d] = split_at_edge(path, 1, 2);
  CHECK(c == std::vector<Vertex>{0, 1});
  CHECK(d == std::vector<Vertex>{2});
  // Orientation of the query matters for which side comes first.
  auto [e, f] = split_at_edge(path, 1, 0);
  CHECK(e == std::vector<Vertex>{1, 2});
  CHECK(f == std::vector<Vertex>{0});
}

TEST_CASE("split_at_edge rejects cycles and non-edges") {
  Graph triangle = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK_THROWS_AS(split_at_edge(triangle, 0, 1), Error);
  Graph path = make_path(3);
  CHECK_THROWS_AS(split_at_edge(path, 0, 2), Error);
  try {
    split_at_edge(path, 0, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAnEdge);
  }
}

TEST_CASE("components_and_leaves") {
  Graph path = make_path(3);
  auto r1 = components_and_leaves(path);
  CHECK(r1.sizes == std::vector<int>{3});
  CHECK(r1.leaves == std::vector<Vertex>{0, 2});

  Graph two_edges = Graph::build(4, {{0, 1}, {2, 3}});
  auto r2 = components_and_leaves(two_edges);
  CHECK(r2.sizes == std::vector<int>{2, 2});
  CHECK(r2.leaves.size() == 4);

  Graph lonely = Graph::build(1, {});
  auto r3 = components_and_leaves(lonely);
  CHECK(r3.sizes == std::vector<int>{1});
  CHECK(r3.leaves.empty());  // degree 0 is not degree 1
}

TEST_CASE("split sides partition acyclic components on random forests") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_forest(rng, 60, 4);
    for (const auto& [u, v] : g.edges()) {
      auto [a, b] = split_at_edge(g, u, v);
      CHECK(!a.empty());
      CHECK(!b.empty());
      CHECK(a.size() + b.size() ==
            static_cast<std::size_t>(g.component_size(g.component_of(u))));
      std::vector<Vertex> overlap;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(overlap));
      CHECK(overlap.empty());
    }
  }
}

TEST_CASE("triangle inequality on all triples of a 200-vertex forest") {
  Rng rng(3);
  Graph g = random_forest(rng, 200, 5);
  auto dist = distance_matrix(g);
  const int n = g.vertex_count();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (dist[x][y] < 0) continue;
      for (int z = 0; z < n; ++z) {
        if (dist[y][z] < 0) continue;
        REQUIRE(dist[x][z] >= 0);
        REQUIRE(dist[x][z] <= dist[x][y] + dist[y][z]);
      }
    }
  }
}

TEST_CASE("ball growth stays under the degree bound") {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    int max_deg = 3 + static_cast<int>(rng.below(3));
    Graph g = make_random_tree(150, max_deg, rng.next());
    Metric m(g);
    long long d = g.max_degree();
    for (long long r = 0; r <= 5; ++r) {
      // 1 + D ((D-1)^r - 1)/(D-2) for D >= 3; 2r+1 for D <= 2.
      long long bound;
      if (d >= 3) {
        long long pw = 1;
        for (int i = 0; i < r; ++i) pw *= d - 1;
        bound = 1 + d * (pw - 1) / (d - 2);
      } else {
        bound = 2 * r + 1;
      }
      for (Vertex x = 0; x < g.vertex_count(); x += 17) {
        CHECK(static_cast<long long>(m.ball(x, Rational(r)).size()) <= bound);
      }
    }
  }
}

TEST_CASE("leaves equal brute force over adjacency") {
  Rng rng(5);
  Graph g = random_forest(rng, 120, 4);
  auto result = components_and_leaves(g);
  std::vector<Vertex> brute;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.neighbors(v).size() == 1) brute.push_back(v);
  }
  CHECK(result.leaves == brute);
}

TEST_CASE("metric distance handles separate components") {
  Graph g = Graph::build(4, {{0, 1}, {2, 3}});
  Metric m(g);
  CHECK(m.distance(0, 1) == 1);
  CHECK(!m.distance(0, 3).has_value());
  CHECK(m.distance(2, 2) == 0);
}
