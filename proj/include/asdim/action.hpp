#pragma once

#include <string>
#include <vector>

#include "asdim/graph.hpp"
#include "asdim/mass.hpp"

namespace asdim {

/// A word over the generators of an action: entry k >= 0 applies generator k,
/// entry k < 0 applies the inverse of generator (-k-1). Words act rightmost
/// letter first (function composition).
using GroupWord = std::vector<int>;

/// Finite permutation action: points 0..points-1 and one permutation per
/// generator.
class FiniteAction {
 public:
  /// Validates that every generator is a bijection on the points
  /// (Error(InvalidGenerator) otherwise).
  static FiniteAction create(int points, std::vector<std::vector<int>> generators,
                             std::vector<std::string> labels = {});

  int points() const { return points_; }
  int generator_count() const { return static_cast<int>(generators_.size()); }
  const std::vector<std::vector<int>>& generators() const { return generators_; }
  const std::vector<std::string>& labels() const { return labels_; }

  int apply_generator(int gen, int point) const;
  int apply_inverse(int gen, int point) const;
  int apply_word(const GroupWord& word, int point) const;

 private:
  FiniteAction() = default;

  int points_ = 0;
  std::vector<std::vector<int>> generators_;
  std::vector<std::vector<int>> inverses_;
  std::vector<std::string> labels_;
};

/// Graph on the action's points with an edge {x, y} whenever some chosen
/// generator or its inverse maps x to y, x != y.
Graph schreier_graph(const FiniteAction& action, const std::vector<int>& generator_subset);

/// lambda_x(y) = |{w in words : w.x = y}| / |words|. The word list stands for
/// a finite subset of the acting group; entries count with multiplicity.
/// Throws Error(EmptyFolnerSet) when the list is empty.
MassAssignment folner_lambda(const FiniteAction& action,
                             const std::vector<GroupWord>& words);

}  // namespace asdim
