#pragma once

#include <string>
#include <vector>

#include "flagstab/cones.hpp"
#include "flagstab/rootsys.hpp"
#include "flagstab/stability.hpp"
#include "flagstab/weyl.hpp"

namespace flagstab {

// One maximal cone of the fan: its inequality description (canonical facet
// normals), a strictly dominant rational point in its interior, and the
// semistable set shared by every interior point.
struct GitFanCone {
  ConeH cone;
  QVector interior_sample;  // simple-root coordinates
  std::vector<int> wst;     // sorted Weyl element indices
};

// Subdivision of the dominant chamber into the cones on which the semistable
// set is constant. Walls are the arrangement hyperplanes that actually cut
// through the open chamber.
struct GitFan {
  std::string type_spec;
  int rank = 0;
  std::vector<QVector> walls;  // primitive normals, one sign per line, sorted
  std::vector<GitFanCone> maximal_cones;
  // Arrangement chambers absorbed into an already-seen cone because their
  // semistable sets coincided.
  int chambers_merged = 0;
};

// Builds the fan: collects the images of the coordinate hyperplanes under
// the group, keeps the ones meeting the open chamber, splits the chamber
// into full-dimensional arrangement cells by exact feasibility, computes the
// cone of each cell sample, and merges cells with equal semistable sets
// (asserting their cones agree). Rank is guarded to 4 by default; the
// override extends it to 6.
GitFan compute_fan(const WeylGroup& wg, bool allow_rank_above_default = false);

// Maximal cones whose closure contains chi. Exactly one means chi lies in
// that cone's interior; several mean chi sits on a shared face.
struct ConeLocation {
  std::vector<int> containing;
  bool interior = false;
};

ConeLocation classify(const GitFan& fan, const RootSystem& rs, const QVector& chi);

// Fan axioms checked with witnesses: grid support (every strictly dominant
// grid ray is covered, multiply covered only on a wall), the face test for
// every pair of maximal cones, interior semistable-set constancy on seeded
// samples, agreement of each stored sample with its fingerprint, and
// pairwise distinct fingerprints.
struct FanValidation {
  bool ok = true;
  std::vector<std::string> problems;
};

FanValidation validate_fan(const GitFan& fan, const WeylGroup& wg,
                           int interior_samples_per_cone = 100,
                           unsigned long seed = 1);

// Wall diagram for a rank-2 fan: the chamber sectors drawn to metric angles,
// one filled wedge per maximal cone. Floating point is confined to this
// rendering step.
std::string fan_svg(const GitFan& fan, const WeylGroup& wg);

}  // namespace flagstab
