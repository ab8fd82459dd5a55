#pragma once

#include "tropcy/pl_function.hpp"

namespace tropcy {

/// A validated nef partition of a reflexive polytope together with its dual
/// partition and the support-function decompositions on both normal fans.
struct NefPartition {
  int r = 0;
  Polytope delta;                          // the reflexive polytope
  Polytope delta_star;                     // its polar dual
  std::shared_ptr<const Fan> sigma;        // normal fan of delta
  PLFunction anticanonical;                // support function of delta
  std::vector<Polytope> parts;             // Minkowski summands
  std::vector<PLFunction> part_supports;   // their support functions on sigma
  std::vector<int> ray_assignment;         // sigma ray index -> part index
  std::vector<Polytope> nabla_parts;       // duals conv(0, rays of part i)
  Polytope nabla;                          // sum of the dual parts, reflexive
  Polytope nabla_star;
  std::shared_ptr<const Fan> sigma_check;  // normal fan of nabla
  PLFunction dual_anticanonical;           // support function of nabla
  std::vector<PLFunction> dual_part_supports;
};

/// Validates a Minkowski decomposition as a nef partition and assembles the
/// dual data. Throws with a witness message on each violated condition.
NefPartition validate_nef_partition(const Polytope& delta,
                                    const std::vector<Polytope>& parts);

/// Same, but from the assignment of each boundary ray of the normal fan to a
/// part (0-based part indices, aligned with primitive ray generators).
NefPartition nef_partition_from_assignment(
    const Polytope& delta, const std::vector<std::pair<VecZ, int>>& assignment);

/// The face {n in mu : part_support_i(n) = 1} of a lattice polytope mu
/// contained in the boundary of delta_star; empty polytope when the value 1
/// is not attained.
Polytope beta_star(const NefPartition& nef, int i, const Polytope& mu);

/// Minkowski sum of the beta_star faces over all parts; empty when any
/// summand is empty.
Polytope beta_inverted(const NefPartition& nef, const Polytope& mu);

}  // namespace tropcy
