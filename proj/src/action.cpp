#include "asdim/action.hpp"

#include <algorithm>

#include "asdim/errors.hpp"

namespace asdim {

FiniteAction FiniteAction::create(int points, std::vector<std::vector<int>> generators,
                                  std::vector<std::string> labels) {
  if (points < 0) fail(ErrorCode::InvalidArgument, "negative point count");
  FiniteAction a;
  a.points_ = points;
  a.inverses_.reserve(generators.size());
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    const auto& perm = generators[gi];
    if (static_cast<int>(perm.size()) != points) {
      fail(ErrorCode::InvalidGenerator,
           "generator " + std::to_string(gi) + " has wrong length");
    }
    std::vector<int> inverse(points, -1);
    for (int x = 0; x < points; ++x) {
      int y = perm[x];
      if (y < 0 || y >= points || inverse[y] != -1) {
        fail(ErrorCode::InvalidGenerator,
             "generator " + std::to_string(gi) + " is not a bijection");
      }
      inverse[y] = x;
    }
    a.inverses_.push_back(std::move(inverse));
  }
  a.generators_ = std::move(generators);
  if (!labels.empty() && labels.size() != a.generators_.size()) {
    fail(ErrorCode::InvalidArgument, "label list does not match generators");
  }
  a.labels_ = std::move(labels);
  return a;
}

int FiniteAction::apply_generator(int gen, int point) const {
  if (gen < 0 || gen >= generator_count()) {
    fail(ErrorCode::InvalidGenerator, "generator index " + std::to_string(gen));
  }
  return generators_[gen][point];
}

int FiniteAction::apply_inverse(int gen, int point) const {
  if (gen < 0 || gen >= generator_count()) {
    fail(ErrorCode::InvalidGenerator, "generator index " + std::to_string(gen));
  }
  return inverses_[gen][point];
}

int FiniteAction::apply_word(const GroupWord& word, int point) const {
  if (point < 0 || point >= points_) {
    fail(ErrorCode::InvalidVertex, "point " + std::to_string(point) + " out of range");
  }
  int x = point;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int letter = *it;
    x = letter >= 0 ? apply_generator(letter, x) : apply_inverse(-letter - 1, x);
  }
  return x;
}

Graph schreier_graph(const FiniteAction& action, const std::vector<int>& generator_subset) {
  std::vector<EdgePair> edges;
  for (int gen : generator_subset) {
    if (gen < 0 || gen >= action.generator_count()) {
      fail(ErrorCode::InvalidGenerator, "generator index " + std::to_string(gen));
    }
    for (int x = 0; x < action.points(); ++x) {
      int y = action.apply_generator(gen, x);
      if (x != y) edges.emplace_back(std::min(x, y), std::max(x, y));
    }
  }
  return Graph::build(action.points(), std::move(edges));
}

MassAssignment folner_lambda(const FiniteAction& action,
                             const std::vector<GroupWord>& words) {
  if (words.empty()) fail(ErrorCode::EmptyFolnerSet, "empty word list");
  long long size = static_cast<long long>(words.size());
  std::vector<MassRow> rows(action.points());
  std::vector<long long> hits(action.points(), 0);
  std::vector<int> touched;
  for (int x = 0; x < action.points(); ++x) {
    touched.clear();
    for (const auto& word : words) {
      int y = action.apply_word(word, x);
      if (hits[y] == 0) touched.push_back(y);
      hits[y]++;
    }
    std::sort(touched.begin(), touched.end());
    MassRow row;
    row.reserve(touched.size());
    for (int y : touched) {
      row.emplace_back(y, Rational(hits[y], size));
      hits[y] = 0;
    }
    rows[x] = std::move(row);
  }
  return explicit_lambda(std::move(rows));
}

}  // namespace asdim
