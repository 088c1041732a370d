#pragma once

#include <string>
#include <vector>

#include "asdim/deletion.hpp"
#include "asdim/graph.hpp"
#include "asdim/orientation.hpp"
#include "asdim/partition.hpp"
#include "asdim/rational.hpp"

namespace asdim {

/// How verification sweeps over vertices are performed. Exhaustive visits
/// every vertex; sampled mode draws `samples` vertices from a seeded
/// deterministic generator.
struct VerifyOptions {
  bool exhaustive = true;
  unsigned long long seed = 0;
  long long samples = 50000;
};

/// A finite certificate that r-balls meet few classes of a uniformly bounded
/// partition.
struct CoverWitness {
  Rational r;
  EquivPartition partition;
  int max_classes_met = 0;      // measured with the builder's VerifyOptions
  Rational diameter_bound;      // every class has diameter <= this
};

/// Max number of distinct partition classes met by B(x, r), over all (or
/// sampled) vertices x.
int measure_max_classes(const Graph& g, const EquivPartition& partition,
                        const Rational& r, const VerifyOptions& opts = {});

/// Orientation of everything outside the deleted edges: combines the given
/// R0 arrows with an anchor-directed orientation of G2 = (X, R1 \ Q).
/// Each nontrivial G2 component is directed toward its unique arrow-emitting
/// vertex when one exists (two of them throw Error(AnchorConflict)), else
/// toward its minimum id. f maps every vertex to its arrow target, or to
/// itself when it emits nothing.
struct CombinedOrientation {
  std::vector<std::pair<Vertex, Vertex>> arrows;
  std::vector<Vertex> f;
  std::vector<Vertex> anchors;
};

CombinedOrientation complete_orientation(const Graph& g, const OrientedPartition& p,
                                         const DeletionSet& d);

/// Cover certificate for a graph that is the functional graph of f (i.e.
/// R = {{x, f(x)} : f(x) != x} exactly, acyclic): classes are depth annuli of
/// width 2*floor(r) toward the unique f-fixed root of each component, keyed
/// by the ancestor floor(r) levels above the annulus floor. Every r-ball
/// meets at most 2 classes; class diameters stay <= 4r - 2 on degree-<=2
/// graphs (where the classes are exactly the connected annulus pieces) and
/// <= 6*floor(r) - 2 in the presence of branching.
CoverWitness functional_cover(const Graph& g, const std::vector<Vertex>& f,
                              const Rational& r, const VerifyOptions& opts = {});

/// Brute-force re-verification of a witness: recomputes class diameters and
/// ball-class counts and compares them against the witness claims.
struct CoverCheck {
  int max_classes_met = 0;
  long long max_diameter = 0;
  bool pass = true;
  std::vector<std::string> violations;
};

CoverCheck verify_cover(const Graph& g, const CoverWitness& w,
                        const VerifyOptions& opts = {});

}  // namespace asdim
