#include <doctest.h>

#include <numeric>

#include "asdim/action.hpp"
#include "asdim/errors.hpp"
#include "helpers.hpp"

using namespace asdim;
using namespace testutil;

namespace {

FiniteAction cyclic_rotation(int n, std::vector<int> shifts) {
  std::vector<std::vector<int>> gens;
  for (int s : shifts) {
    std::vector<int> perm(n);
    for (int x = 0; x < n; ++x) perm[x] = (x + s) % n;
    gens.push_back(std::move(perm));
  }
  return FiniteAction::create(n, std::move(gens));
}

std::vector<GroupWord> power_words(int gen, int count) {
  std::vector<GroupWord> words;
  for (int k = 0; k < count; ++k) words.push_back(GroupWord(k, gen));
  return words;
}

}  // namespace

TEST_CASE("generator validation") {
  CHECK_THROWS_AS(FiniteAction::create(3, {{0, 0, 1}}), Error);  // not a bijection
  CHECK_THROWS_AS(FiniteAction::create(3, {{0, 1}}), Error);     // wrong length
  auto a = cyclic_rotation(5, {1});
  CHECK(a.apply_generator(0, 4) == 0);
  CHECK(a.apply_inverse(0, 0) == 4);
  CHECK_THROWS_AS(a.apply_generator(2, 0), Error);
}

TEST_CASE("words apply rightmost first and honor inverses") {
  auto a = cyclic_rotation(10, {1, 3});
  CHECK(a.apply_word({0, 0, 0}, 0) == 3);
  CHECK(a.apply_word({1}, 0) == 3);
  CHECK(a.apply_word({-1}, 0) == 9);  // inverse of generator 0 (shift 1)
  CHECK(a.apply_word({-2}, 0) == 7);  // inverse of generator 1 (shift 3)
  CHECK(a.apply_word({0, -1}, 5) == 5);
  CHECK(a.apply_word({}, 6) == 6);
}

TEST_CASE("schreier graph of the 8-cycle rotation") {
  auto a = cyclic_rotation(8, {1});
  Graph g = schreier_graph(a, {0});
  CHECK(g.vertex_count() == 8);
  CHECK(g.edge_count() == 8);
  for (Vertex v = 0; v < 8; ++v) CHECK(g.degree(v) == 2);
  CHECK(g.component_count() == 1);
}

TEST_CASE("identity generator yields the edgeless graph") {
  std::vector<int> id(6);
  std::iota(id.begin(), id.end(), 0);
  auto a = FiniteAction::create(6, {id});
  Graph g = schreier_graph(a, {0});
  CHECK(g.edge_count() == 0);
}

TEST_CASE("Z/6 with shifts 2 and 3: edges by enumeration") {
  auto a = cyclic_rotation(6, {2, 3});
  Graph g = schreier_graph(a, {0, 1});
  // {x, x+2} and {x, x+3}; the shift-3 edges pair up, so 6 + 3 edges total.
  CHECK(g.edge_count() == 9);
  for (Vertex x = 0; x < 6; ++x) {
    CHECK(g.has_edge(x, (x + 2) % 6));
    CHECK(g.has_edge(x, (x + 3) % 6));
    CHECK(g.degree(x) == 3);
  }
}

TEST_CASE("folner masses on the 8-cycle") {
  auto a = cyclic_rotation(8, {1});
  MassAssignment lambda = folner_lambda(a, power_words(0, 4));
  for (int k = 0; k < 4; ++k) CHECK(lambda.value(0, k) == Rational(1, 4));
  CHECK(lambda.value(0, 4) == Rational(0));
  CHECK(l1_by_map(lambda.row(0), lambda.row(1)) == Rational(1, 2));

  Graph cycle = schreier_graph(a, {0});
  Metric m(cycle);
  CHECK(invariance_defect(m, lambda, Rational(2)) == Rational(1, 2));
}

TEST_CASE("identity folner set gives point masses with defect 2") {
  auto a = cyclic_rotation(6, {1});
  MassAssignment lambda = folner_lambda(a, {GroupWord{}});
  CHECK(lambda.row(3) == MassRow{{3, Rational(1)}});
  Graph cycle = schreier_graph(a, {0});
  Metric m(cycle);
  CHECK(invariance_defect(m, lambda, Rational(2)) == Rational(2));
}

TEST_CASE("quarter folner window on Z/100") {
  auto a = cyclic_rotation(100, {1});
  MassAssignment lambda = folner_lambda(a, power_words(0, 25));
  Graph cycle = schreier_graph(a, {0});
  Metric m(cycle);
  CHECK(invariance_defect(m, lambda, Rational(2)) == Rational(2, 25));
}

TEST_CASE("empty folner set is rejected") {
  auto a = cyclic_rotation(4, {1});
  CHECK_THROWS_AS(folner_lambda(a, {}), Error);
  try {
    folner_lambda(a, {});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyFolnerSet);
  }
}
