// SPDX-License-Identifier: Apache-2.0
#include "rotakit/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rotakit/errors.hpp"

namespace rotakit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Wedge between consecutive spokes spans 2pi/k <= 2pi/3 for k >= 3, so two
// half-plane cuts through the center suffice and stay convex.
std::vector<Point2> wedge_subset(const ConvexBody& body, Point2 u_lo, Point2 u_hi)
{
    auto part = clip_halfplane(body.vertices, body.center, perp(u_lo));
    return clip_halfplane(part, body.center, Point2{-perp(u_hi).x, -perp(u_hi).y});
}

StandardPartition build_partition(const ConvexBody& body, int k, Point2 anchor,
                                  const Tolerance& tol)
{
    const double R = body.circumradius;
    const double r = body.inradius;
    const double sector = kTwoPi / k;

    StandardPartition part;
    part.k = k;
    part.center = body.center;
    part.endpoints.reserve(k);
    for (int i = 0; i < k; ++i)
        part.endpoints.push_back(rotate_about(anchor, body.center, i * sector));

    for (const Point2& x : part.endpoints) {
        double d = distance(x, body.center);
        if (std::abs(d - r) > tol.eps_geom * R)
            throw ToleranceViolation("spoke endpoint at distance " + std::to_string(d)
                                     + ", expected inradius " + std::to_string(r));
    }

    part.subsets.reserve(k);
    if (k == 2) {
        // Single chord through the center; both halves keep the endpoints.
        Point2 u = (anchor - body.center) * (1.0 / r);
        Point2 n = perp(u);
        part.subsets.push_back(clip_halfplane(body.vertices, body.center, n));
        part.subsets.push_back(
            clip_halfplane(body.vertices, body.center, Point2{-n.x, -n.y}));
    } else {
        std::vector<Point2> dirs(k);
        for (int i = 0; i < k; ++i)
            dirs[i] = (part.endpoints[i] - body.center) * (1.0 / r);
        for (int i = 0; i < k; ++i)
            part.subsets.push_back(wedge_subset(body, dirs[i], dirs[(i + 1) % k]));
    }

    // The subsets must tile the body.
    double total = 0.0;
    for (const auto& s : part.subsets) total += polygon_area(s);
    double area = polygon_area(body.vertices);
    if (std::abs(total - area) > tol.eps_geom * k * std::max(area, R * R))
        throw ToleranceViolation("partition areas sum to " + std::to_string(total)
                                 + ", body area " + std::to_string(area));

    // Rotation by one sector must carry each subset onto the next.
    for (int i = 0; i < k; ++i) {
        auto image = rotate_about(part.subsets[i], body.center, sector);
        double h = hausdorff_distance(image, part.subsets[(i + 1) % k]);
        if (h > 16.0 * tol.eps_geom * R)
            throw ToleranceViolation("subsets " + std::to_string(i) + " and "
                                     + std::to_string((i + 1) % k)
                                     + " not congruent, hausdorff "
                                     + std::to_string(h));
    }

    return part;
}

}  // namespace

std::vector<Point2> nearest_boundary_points(const ConvexBody& body,
                                            const Tolerance& tol)
{
    const auto& v = body.vertices;
    const size_t n = v.size();
    const double R = body.circumradius;

    std::vector<Point2> feet;
    feet.reserve(n);
    double rmin = std::numeric_limits<double>::infinity();
    std::vector<double> dist(n);
    for (size_t i = 0; i < n; ++i) {
        Point2 q;
        dist[i] = point_segment_distance(body.center, v[i], v[(i + 1) % n], &q);
        feet.push_back(q);
        rmin = std::min(rmin, dist[i]);
    }

    std::vector<Point2> keep;
    for (size_t i = 0; i < n; ++i)
        if (dist[i] - rmin <= tol.eps_geom * R) keep.push_back(feet[i]);

    std::sort(keep.begin(), keep.end(), [&](Point2 a, Point2 b) {
        return polar_angle(a - body.center) < polar_angle(b - body.center);
    });

    // Adjacent edges can report the same corner; drop near-duplicates,
    // including the wrap-around pair.
    std::vector<Point2> out;
    for (const Point2& p : keep) {
        if (!out.empty() && distance(out.back(), p) <= tol.eps_geom * R) continue;
        out.push_back(p);
    }
    if (out.size() > 1 && distance(out.front(), out.back()) <= tol.eps_geom * R)
        out.pop_back();
    return out;
}

StandardPartition standard_partition(const ConvexBody& body, int k,
                                     const Tolerance& tol)
{
    if (k < 2) throw std::invalid_argument("partition degree must be >= 2");
    if (!is_k_symmetric(body, k, tol))
        throw NotSymmetric("body is not " + std::to_string(k) + "-fold symmetric");

    auto candidates = nearest_boundary_points(body, tol);
    if (candidates.empty())
        throw NumericalFailure("no nearest boundary points found");

    // The candidate set is invariant under rotation by 2pi/k, so one
    // candidate falls in the first sector; anchor at the smallest angle.
    const double sector = kTwoPi / k;
    for (const Point2& p : candidates) {
        if (polar_angle(p - body.center) < sector)
            return build_partition(body, k, p, tol);
    }
    // Only reachable when a candidate sits on the sector seam and rounding
    // pushed it just past; fall back to the first candidate.
    return build_partition(body, k, candidates.front(), tol);
}

StandardPartition standard_partition_anchored(const ConvexBody& body, int k,
                                              Point2 anchor, const Tolerance& tol)
{
    if (k < 2) throw std::invalid_argument("partition degree must be >= 2");
    if (!is_k_symmetric(body, k, tol))
        throw NotSymmetric("body is not " + std::to_string(k) + "-fold symmetric");
    return build_partition(body, k, anchor, tol);
}

double dM_formula(const ConvexBody& body, int k)
{
    if (k < 2) throw std::invalid_argument("partition degree must be >= 2");
    if (k == 2)
        throw FormulaNotApplicable(
            "no closed form for k = 2; use dM_bruteforce on the partition");
    return std::max(body.circumradius,
                    2.0 * body.inradius * std::sin(std::numbers::pi / k));
}

double dM_bruteforce(const StandardPartition& partition)
{
    double best = 0.0;
    for (const auto& s : partition.subsets) best = std::max(best, diameter(s));
    return best;
}

double supporting_line_slack(const ConvexBody& body,
                             const StandardPartition& partition)
{
    double worst = -std::numeric_limits<double>::infinity();
    for (const Point2& x : partition.endpoints) {
        Point2 u = x - body.center;
        u = u * (1.0 / norm(u));
        for (const Point2& v : body.vertices)
            worst = std::max(worst, dot(v - x, u));
    }
    return worst;
}

bool supporting_line_check(const ConvexBody& body,
                           const StandardPartition& partition,
                           const Tolerance& tol)
{
    return supporting_line_slack(body, partition)
           <= tol.eps_geom * body.circumradius;
}

ChainReport chain_report(const ConvexBody& body, const Tolerance& tol)
{
    ChainReport rep;
    rep.profile = detect_symmetry(body, tol);
    if (!rep.profile.is_multi)
        throw NotMultiRotational("body has a single rotational symmetry degree "
                                 + std::to_string(rep.profile.max_degree));
    rep.R = body.circumradius;
    rep.r = body.inradius;

    const double quantum = tol.eps_dm * rep.R;
    for (int k : rep.profile.divisors) {
        ChainEntry e;
        e.k = k;
        auto part = standard_partition(body, k, tol);
        e.brute = dM_bruteforce(part);
        if (k >= 3) {
            e.formula = dM_formula(body, k);
            if (std::abs(*e.formula - e.brute) > quantum)
                throw TheoremViolation(
                    "closed form " + std::to_string(*e.formula)
                    + " disagrees with brute force " + std::to_string(e.brute)
                    + " at k = " + std::to_string(k));
        }
        double dm = e.formula ? *e.formula : e.brute;
        e.equals_R = std::abs(dm - rep.R) <= quantum;
        rep.entries.push_back(e);
    }

    auto value = [](const ChainEntry& e) { return e.formula ? *e.formula : e.brute; };

    for (size_t i = 1; i < rep.entries.size(); ++i) {
        if (value(rep.entries[i]) > value(rep.entries[i - 1]) + quantum)
            throw TheoremViolation("chain increases from k = "
                                   + std::to_string(rep.entries[i - 1].k) + " to k = "
                                   + std::to_string(rep.entries[i].k));
    }
    if (rep.profile.min_degree == 2
        && value(rep.entries[0]) <= value(rep.entries[1]) + quantum)
        throw TheoremViolation("first chain step is not strictly decreasing "
                               "although the minimal degree is 2");

    double front = value(rep.entries.front());
    rep.equality_chain = true;
    for (const auto& e : rep.entries)
        if (std::abs(value(e) - front) > quantum) rep.equality_chain = false;

    const size_t n = rep.entries.size();
    if (rep.profile.min_degree >= 3) {
        // Minimum is unique exactly when the next-to-last value differs
        // from the circumradius.
        rep.unique_minimum = std::abs(value(rep.entries[n - 2]) - rep.R) > quantum;
    } else {
        double minv = value(rep.entries.back());
        rep.unique_minimum = true;
        for (size_t i = 0; i + 1 < n; ++i)
            if (value(rep.entries[i]) - minv <= quantum) rep.unique_minimum = false;
    }
    return rep;
}

EqualityClassification classify_equality_chain(const ChainReport& report)
{
    if (report.profile.min_degree < 3)
        throw std::invalid_argument(
            "equality classification requires minimal degree >= 3");

    EqualityClassification c;
    c.observed_equality_chain = report.equality_chain;
    c.dM_chi_equals_R = report.entries.front().equals_R;
    c.chi_ge_7 = report.profile.min_degree >= 7;
    c.prime_factors_ge_7 = all_prime_factors_ge(report.profile.max_degree, 7);
    c.all_agree = c.observed_equality_chain == c.dM_chi_equals_R
                  && c.dM_chi_equals_R == c.chi_ge_7
                  && c.chi_ge_7 == c.prime_factors_ge_7;
    if (!c.all_agree)
        throw EquivalenceViolation(
            "equality-chain predicates disagree: observed="
            + std::to_string(c.observed_equality_chain)
            + " dM(P_chi)=R:" + std::to_string(c.dM_chi_equals_R)
            + " chi>=7:" + std::to_string(c.chi_ge_7)
            + " spf>=7:" + std::to_string(c.prime_factors_ge_7));
    return c;
}

}  // namespace rotakit
