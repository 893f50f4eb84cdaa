#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flagstab/cones.hpp"
#include "flagstab/rootsys.hpp"
#include "flagstab/weyl.hpp"

namespace flagstab {

// Root subsystem cut out by a linear subspace: it contains every root of the
// ambient system that lies in the span, so it is closed under taking any root
// in its own linear hull. Carries the combinatorial data derived from that
// root set.
struct SaturatedSubsystem {
  Subspace span;
  std::vector<int> roots;           // indices into all_roots
  std::vector<int> positive_roots;  // indices into the positive-root list
  // Indecomposable positive roots of the subsystem, in root order. Acts as a
  // simple system: every positive root of the subsystem is a nonnegative
  // integer combination of these.
  std::vector<QVector> base;
  std::vector<std::vector<int>> components;  // partition of base indices
  std::vector<QVector> highest_roots;        // one per component, same order
  std::string type_label;                    // e.g. "A1+B2", "0" when empty
};

// Builds the subsystem data for a span. The span must itself be spanned by
// roots (any span produced from subsets of roots works); otherwise the base
// cannot match the dimension and a logic_error is thrown.
SaturatedSubsystem saturate_span(const RootSystem& rs, const Subspace& span);

// All saturated subsystems, including the empty one and the full system,
// ordered by span dimension and then by the canonical subspace order. Spans
// are grown one positive root at a time, which reaches exactly the spans of
// root subsets. Guarded to rank <= 6.
std::vector<SaturatedSubsystem> enumerate_saturated(const RootSystem& rs);

// Indices into sats of the subsystems whose span contains v, in enumeration
// order.
std::vector<int> spans_containing(const QVector& v,
                                  const std::vector<SaturatedSubsystem>& sats);

// True iff -w w0 chi is a nonnegative rational combination of the positive
// roots alpha of the subsystem with w^{-1} alpha again positive, i.e. iff
// 0 lies in w w0 chi shifted by that cone. Containment of w w0 chi in the
// span is a necessary condition and is checked first. chi is given in
// simple-root coordinates and must be strictly dominant.
bool subsystem_qualifies(const WeylGroup& wg, const SaturatedSubsystem& sat,
                         int w_index, const QVector& chi);

// The memberships 0 in (w w0 chi + cone of all positive roots) and 0 in
// (w w0 chi + cone of the positive roots kept positive by w^{-1}). The two
// booleans agree for every w; the first one is the semistability test for
// w w0.
std::pair<bool, bool> zero_membership_pair(const WeylGroup& wg, int w_index,
                                           const QVector& chi);

// Piecewise-linear descent from the origin to w w0 chi. Segment i starts at
// points[i] inside the affine cone with vertex w w0 chi spanned by the
// positive roots of chain[i], moves along -betas[i] for length ks[i], and
// lands on a face of that cone; chain[i+1] is the saturated subsystem of the
// landing face. Every point also pairs <= 0 with the base of its subsystem.
struct Path {
  int w_index = 0;
  QVector chi;     // simple-root coordinates
  QVector target;  // w w0 chi
  std::vector<SaturatedSubsystem> chain;  // one system per point
  std::vector<QVector> points;            // origin first, target last
  std::vector<QVector> betas;             // component highest root per segment
  std::vector<Rat> ks;                    // step lengths, all >= 0
  Int scaling;  // positive N making every N*point and N*k integral
};

// Constructs the path for a qualifying (subsystem, w, chi) triple and checks
// it with verify_path before returning. Throws invalid_argument when the
// qualification test fails and logic_error when the step count exceeds
// |positive roots| * rank, which would indicate a broken invariant rather
// than a legitimate long path.
Path build_path(const WeylGroup& wg, const SaturatedSubsystem& sat,
                int w_index, const QVector& chi);

// Rechecks every path invariant from scratch; throws logic_error naming the
// first violated one.
void verify_path(const WeylGroup& wg, const Path& path);

// Intersection of the spans of all subsystems in sats that qualify for this
// w. Requires w w0 semistable for chi (the full system then always qualifies,
// contributing no constraint).
Subspace span_profile(const WeylGroup& wg, int w_index, const QVector& chi,
                      const std::vector<SaturatedSubsystem>& sats);

}  // namespace flagstab
