#pragma once

#include <string>

#include "asdim/cover.hpp"
#include "asdim/deletion.hpp"
#include "asdim/graph.hpp"
#include "asdim/mass.hpp"
#include "asdim/orientation.hpp"
#include "asdim/theta.hpp"

namespace asdim {

struct PipelineOptions {
  VerifyOptions verify;
};

struct SeparationCheck {
  bool pass = true;
  std::string detail;
};

/// Everything the end-to-end construction produces for radius r:
/// theta table -> threshold orientation -> conditions at 4(2r)+6 ->
/// edge deletion on G1 at 2r -> completed orientation -> functional cover of
/// (X, R \ Q) at 2r -> final witness on g at r with class bound 4 and
/// diameter bound 4(2r).
struct PipelineArtifacts {
  Rational r;
  Rational defect_gate_radius;   // 4(2r)+6+2
  Rational conditions_value;     // 4(2r)+6
  ThetaTable theta;
  OrientedPartition partition;
  ConditionsReport conditions;
  DeletionSet deletion;
  CombinedOrientation orientation;
  CoverWitness functional_witness;  // on (X, R \ Q) at radius 2r
  CoverWitness witness;             // on g at radius r
  CoverCheck witness_check;
  SeparationCheck q_separation;
  long long residual_component_max = 0;  // largest component of (X, R1 \ Q)
  bool pass = false;
};

/// Runs the full construction. Throws Error(InsufficientInvariance) when the
/// measured defect reaches 1/12 within the gate radius, and propagates stage
/// errors (DichotomyViolation, ConditionsFailed, AnchorConflict, ...).
/// Verification failures after a successful construction are reported through
/// `pass` and the embedded checks, not thrown.
PipelineArtifacts run_pipeline(const Graph& g, const MassAssignment& lambda,
                               const Rational& r, const PipelineOptions& opts = {});

/// The certificate alone; throws when the construction fails or when the
/// final verification does not confirm the 4-class bound.
CoverWitness asdim_cover(const Graph& g, const MassAssignment& lambda,
                         const Rational& r, const PipelineOptions& opts = {});

}  // namespace asdim
