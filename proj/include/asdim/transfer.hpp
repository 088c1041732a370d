#pragma once

#include <vector>

#include "asdim/mass.hpp"
#include "asdim/partition.hpp"

namespace asdim {

/// Per-vertex enumeration of that vertex's coarse class: enumeration[z] lists
/// the class of z in the order F_0(z), F_1(z), ... Every vertex of the class
/// must appear at least once; repeats are allowed.
using ClassEnumeration = std::vector<std::vector<Vertex>>;

/// The default enumeration: ascending vertex ids, shared by all members of a
/// class.
ClassEnumeration id_order_enumeration(const EquivPartition& coarse);

/// Pushes a mass assignment living on the classes of `coarse` down to the
/// refining partition `fine`: writing N(x,z) = min{k : x ~fine enumeration[z][k]}
/// and P(x,z) = enumeration[z][N(x,z)],
///
///   lambda'_x(y) = sum of lambda_x(z) over z in the coarse class of x with
///                  P(x,z) = y.
///
/// The result is again normalized, and for x ~fine y the defect contracts:
/// ||lambda'_x - lambda'_y||_1 <= ||lambda_x - lambda_y||_1.
///
/// Throws Error(NotASubrelation) when `fine` does not refine `coarse`, and
/// Error(InvalidMass) when some row's support escapes its coarse class.
MassAssignment transfer_lambda(const MassAssignment& lambda,
                               const EquivPartition& coarse,
                               const EquivPartition& fine);
MassAssignment transfer_lambda(const MassAssignment& lambda,
                               const EquivPartition& coarse,
                               const EquivPartition& fine,
                               const ClassEnumeration& enumeration);

}  // namespace asdim
