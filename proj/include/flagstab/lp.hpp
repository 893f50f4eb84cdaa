#pragma once

#include <optional>
#include <vector>

#include "flagstab/linalg.hpp"

namespace flagstab {

// Feasibility of {x >= 0 : A x = b} decided by an exact phase-1 simplex with
// Bland's rule. Exactly one of the two certificates is populated:
//   feasible   -> solution x with x >= 0 and A x = b
//   infeasible -> farkas y with y^T A <= 0 (componentwise) and y^T b > 0
// Both certificates are re-verified before returning.
struct LpFeasibility {
  bool feasible = false;
  QVector solution;
  QVector farkas;
};

LpFeasibility lp_feasible_eq_nonneg(const QMatrix& a, const QVector& b);

// Membership of `target` in the rational cone spanned by `generators`
// (nonnegative rational combinations), with a checkable certificate either
// way: coefficients when inside, a separating functional otherwise
// ((separator, g) >= 0 for every generator and (separator, target) < 0,
// pairing = dot product on the given coordinates).
struct ConeMembership {
  bool inside = false;
  QVector coefficients;  // one per generator, >= 0
  QVector separator;
};

ConeMembership cone_member(const QVector& target, const std::vector<QVector>& generators);

// Feasibility of a free-variable system {x : ineq_lhs x >= ineq_rhs,
// eq_lhs x = eq_rhs}, reduced to the standard form above. Returns a feasible
// point or nothing. Used for strict-interior probes (>= 1 rows emulate
// strict inequalities of homogeneous systems).
std::optional<QVector> lp_feasible_system(const QMatrix& ineq_lhs, const QVector& ineq_rhs,
                                          const QMatrix& eq_lhs, const QVector& eq_rhs);

}  // namespace flagstab
