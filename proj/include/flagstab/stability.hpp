#pragma once

#include <vector>

#include "flagstab/cones.hpp"
#include "flagstab/rootsys.hpp"
#include "flagstab/weyl.hpp"

namespace flagstab {

// All weights below are in simple-root coordinates and chi is required to
// be strictly dominant (interior of the Weyl chamber); violations raise
// std::invalid_argument naming the offending wall.

// The numerical stability function of the flag point indexed by w against
// the one-parameter subgroup lambda from the closed chamber: the pairing
// (w chi, lambda).
Rat mumford_mu(const RootSystem& rs, const QVector& chi, const QMatrix& w,
               const QVector& lambda);

// Semistability of the cell of w: w chi must be a nonnegative combination
// of negative simple roots.
bool is_semistable(const RootSystem& rs, const QVector& chi,
                   const QMatrix& w);

// Indices of all semistable elements, in enumeration order.
std::vector<int> semistable_set(const WeylGroup& wg, const QVector& chi);

// Codimension of the unstable locus: length of the longest element minus
// the maximal length over non-semistable elements.
int unstable_codimension(const WeylGroup& wg, const QVector& chi);

// The cone of weights GIT-equivalent to chi: the chamber cut by the image
// chambers w(A) of every w whose inverse sends chi to a nonnegative
// simple-root combination.
ConeH git_cone(const WeylGroup& wg, const QVector& chi);

// Per-simple-root values (pi_i, pi_i) - (alpha_i, alpha_i)/2; nonnegative
// exactly when every component avoids type A. Requires an irreducible
// system.
std::vector<Rat> fundamental_weight_margins(const RootSystem& rs);

struct StabilityReport {
  QVector chi;            // simple-root coordinates
  std::vector<int> wst;   // semistable element indices, enumeration order
  int unstable_codim = 0;
  ConeH sigma;
  bool has_type_a_factor = false;
};

StabilityReport stability_report(const WeylGroup& wg, const QVector& chi);

}  // namespace flagstab
