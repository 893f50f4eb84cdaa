#pragma once

#include <vector>

#include "flagstab/linalg.hpp"
#include "flagstab/rootsys.hpp"
#include "flagstab/saturated.hpp"
#include "flagstab/weyl.hpp"

namespace flagstab {

// Contribution of one group element w with w w0 semistable: the intersected
// span of its qualifying subsystems and the basis of that span's orthogonal
// complement under the invariant form. Each complement vector n yields one
// linear condition (n, w w0 mu0 + mu1) = 0.
struct PicardConstraintRecord {
  int w_index = 0;
  Subspace profile;
  std::vector<QVector> complement;
};

// Linear system on the pair (mu0, mu1), written in doubled simple-root
// coordinates of length 2r, together with its solution space and rank.
struct PicardCertificate {
  QVector chi;  // simple-root coordinates
  QMatrix constraints;  // deduplicated canonical rows
  std::vector<PicardConstraintRecord> per_w;
  QMatrix nullspace_basis;  // rows span the solutions
  int rank = -1;            // 2r - rank(constraints); -1 until finalized
  bool an_caveat = false;   // set when the system has an A factor
};

// Builds chi, per_w, and the deduplicated constraint matrix; rank, nullspace,
// and the caveat flag stay unset. Inherits the rank <= 6 guard of the
// subsystem enumeration.
PicardCertificate assemble_constraints(const WeylGroup& wg, const QVector& chi);

// Assembled certificate with rank, nullspace basis, and caveat filled in.
PicardCertificate picard_certificate(const WeylGroup& wg, const QVector& chi);

int picard_rank(const WeylGroup& wg, const QVector& chi);

// Intersection of the spans of all saturated subsystems containing w0 chi.
// Agrees with span_profile at the identity element.
Subspace open_cell_constraints(const WeylGroup& wg, const QVector& chi);

}  // namespace flagstab
