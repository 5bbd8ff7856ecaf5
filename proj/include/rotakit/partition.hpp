// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "rotakit/geometry.hpp"
#include "rotakit/symmetry.hpp"

namespace rotakit {

// Standard k-partition: k inradius spokes from the center to nearest
// boundary points, equally rotated; subsets are the wedges between
// consecutive spokes (two half-planes per wedge, one per side for k=2).
struct StandardPartition {
  int k{0};
  Point2 center;
  std::vector<Point2> endpoints;             // size k, at distance inradius
  std::vector<std::vector<Point2>> subsets;  // size k, counterclockwise
};

// Points of the boundary at minimal distance from the center, one candidate
// per edge (foot of perpendicular or nearest endpoint), deduplicated and
// sorted by polar angle.
std::vector<Point2> nearest_boundary_points(
    const ConvexBody& body, const Tolerance& tol = Tolerance::analytic());

// Canonical standard partition: anchored at the nearest boundary point with
// the smallest polar angle in [0, 2pi/k). Requires is_k_symmetric(body, k).
// Verifies endpoint radii, subset congruence under rotation by 2pi/k and
// area tiling; throws NotSymmetric or ToleranceViolation.
StandardPartition standard_partition(const ConvexBody& body, int k,
                                     const Tolerance& tol = Tolerance::analytic());

// Same construction anchored at a caller-chosen nearest boundary point
// (used to check that the anchor choice does not affect the max diameter).
StandardPartition standard_partition_anchored(
    const ConvexBody& body, int k, Point2 anchor,
    const Tolerance& tol = Tolerance::analytic());

// Closed form max(R, 2 r sin(pi/k)) for the standard partition's max subset
// diameter, valid for k >= 3 only; throws FormulaNotApplicable for k = 2.
double dM_formula(const ConvexBody& body, int k);

// Max subset diameter by exhaustive vertex pairs; the geometric oracle.
double dM_bruteforce(const StandardPartition& partition);

// True when for every spoke endpoint x the line through x orthogonal to
// center->x supports the body: dot(v - x, u) <= tol.eps_geom * R for all
// vertices v.
bool supporting_line_check(const ConvexBody& body,
                           const StandardPartition& partition,
                           const Tolerance& tol = Tolerance::analytic());

// Largest violation of the supporting-line property over all endpoints,
// in units of length (<= 0 when the property holds exactly).
double supporting_line_slack(const ConvexBody& body,
                             const StandardPartition& partition);

struct ChainEntry {
  int k{0};
  std::optional<double> formula;  // empty for k = 2
  double brute{0.0};
  bool equals_R{false};
};

// Max subset diameters of the standard partitions over all symmetry degrees
// of a multi-rotationally-symmetric body, ascending in k.
struct ChainReport {
  SymmetryProfile profile;
  double R{0.0};
  double r{0.0};
  std::vector<ChainEntry> entries;
  bool equality_chain{false};  // all entries equal within tolerance
  bool unique_minimum{false};  // minimum attained only at the last entry
};

// Builds the chain and verifies its proven structure: formula agrees with
// brute force for k >= 3, values are nonincreasing in k, and the first step
// is strictly decreasing when the minimal degree is 2. Throws
// NotMultiRotational for bodies with a single symmetry degree and
// TheoremViolation when the structure fails.
ChainReport chain_report(const ConvexBody& body,
                         const Tolerance& tol = Tolerance::analytic());

// The four pairwise-equivalent predicates characterizing all-equal chains
// for bodies with minimal degree >= 3.
struct EqualityClassification {
  bool observed_equality_chain{false};
  bool dM_chi_equals_R{false};
  bool chi_ge_7{false};
  bool prime_factors_ge_7{false};
  bool all_agree{false};
};

// Evaluates the predicates on a finished report (minimal degree >= 3) and
// throws EquivalenceViolation when they disagree.
EqualityClassification classify_equality_chain(const ChainReport& report);

}  // namespace rotakit
