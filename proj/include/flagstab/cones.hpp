#pragma once

#include <stdexcept>
#include <vector>

#include "flagstab/linalg.hpp"
#include "flagstab/lp.hpp"

namespace flagstab {

// Raised when an input exceeds a built-in scale guard (maps to CLI exit 3).
struct ScaleGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Closed convex cone as an inequality system {x : (n, x) >= 0 for all
// normals n}, dot-product pairing on the ambient coordinates. Normals are
// kept primitive-integer (positive scaling only, which preserves the
// halfspace) and deduplicated.
struct ConeH {
  std::size_t dim = 0;
  std::vector<QVector> normals;

  static ConeH make(std::size_t dim, std::vector<QVector> normals);
  bool contains(const QVector& x) const;
  bool contains_strictly(const QVector& x) const;  // all inequalities strict
};

// Affine cone vertex + nonnegative span of generators. Generator list is
// deduplicated exactly.
struct AffCone {
  QVector vertex;
  std::vector<QVector> generators;

  static AffCone make(QVector vertex, std::vector<QVector> generators);
};

// V-representation of an H-cone, split into the extreme rays of the pointed
// part and a basis of the lineality space. The cone is the sum of the two.
struct ConeV {
  std::vector<QVector> rays;       // canonical primitive, sorted
  std::vector<QVector> lineality;  // canonical subspace basis (RREF rows)
};

// Extreme rays by active-set enumeration: ambient dim <= 8 guard.
ConeV extreme_rays(const ConeH& cone);
// rays plus +/- lineality basis; generates the cone.
std::vector<QVector> cone_generators(const ConeH& cone);

// H-representation of the nonnegative span of `generators` (dim <= 8 guard).
// Computed through the dual cone's extreme rays; linear-span equations show
// up as paired opposite normals.
ConeH dual_description(std::size_t dim, const std::vector<QVector>& generators);

// A rational point in the relative interior: the sum of the generating rays
// restricted to the cone's linear span (origin for a subspace or the zero
// cone; any strict combination is valid).
QVector relative_interior_point(const ConeH& cone);
QVector relative_interior_point(std::size_t dim, const std::vector<QVector>& generators);

// Drops normals that do not support facets, keeping the lineality-cutting
// pairs. For a full-dimensional cone the result is the unique facet system
// (canonical after sorting), so syntactic equality decides cone equality.
ConeH irredundant(const ConeH& cone);

// Largest t >= 0 with start + t*dir inside the affine cone, plus the
// generators of the face hit (empty list = the vertex alone). Requires
// start in the cone; unbounded when the ray never leaves.
struct RayHit {
  bool unbounded = false;
  Rat t;
  QVector point;
  std::vector<QVector> face_generators;
};

RayHit ray_hit_boundary(const QVector& start, const QVector& direction, const AffCone& cone);

}  // namespace flagstab
