// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rotakit/geometry.hpp"

namespace rotakit {

// ---- Center-chord sweep (2-partitions) ----

struct SweepSample {
    double angle{0.0};  // chord direction in [0, pi)
    double value{0.0};  // larger of the two half diameters
};

struct SweepResult {
    std::vector<SweepSample> samples;  // grid order, extras appended
    double best_angle{0.0};
    double best_value{0.0};
};

// Evaluates the 2-partition by the chord through the center at every grid
// angle pi*j/angle_count plus the given extra angles. Best is the first
// sample attaining the minimal value, so results are deterministic.
SweepResult sweep_center_chords(const ConvexBody& body, int angle_count = 720,
                                std::span<const double> extra_angles = {});

// ---- Random spoke partitions (k >= 3) ----

// k rays from an interior hub at sorted angles; the k regions between
// consecutive rays partition the body.
struct SpokePartition {
    Point2 hub;
    std::vector<double> angles;  // sorted, in [0, 2pi)
};

// Region polygons, counterclockwise: hub, first ray hit, boundary arc,
// next ray hit. Reference implementation for tests and rendering.
std::vector<std::vector<Point2>> materialize_spoke_subsets(
    const ConvexBody& body, const SpokePartition& partition);

// Max region diameter in O(n + k log k) without materializing regions:
// rays are matched to edges by one angular merge pass, region diameters
// come from rotating calipers over boundary arcs plus hub checks.
double evaluate_spoke_partition(const ConvexBody& body,
                                const SpokePartition& partition);

struct SearchResult {
    int k{0};
    double formula_value{0.0};
    double best_value{0.0};
    SpokePartition best;
    std::size_t samples{0};
    std::size_t evaluations{0};  // including refinement probes
    bool beaten{false};          // best < formula - margin
    double margin{0.0};          // absolute margin used
};

// Monte-Carlo search for a spoke partition with smaller max diameter than
// the standard construction: `samples` random (hub, angles) draws followed
// by a coordinate hill climb from the best draw. Requires k >= 3 (the k = 2
// case is the chord sweep). Deterministic for a fixed seed.
SearchResult search_min_dM(const ConvexBody& body, int k, std::size_t samples,
                           std::uint64_t seed, double margin_rel = 1e-4);

// Throws MinimalityViolation when the search beat the closed form by more
// than the margin.
void require_minimality(const SearchResult& result);

}  // namespace rotakit
