// SPDX-License-Identifier: Apache-2.0
#include "rotakit/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rotakit/errors.hpp"
#include "rotakit/partition.hpp"
#include "rotakit/rng.hpp"

namespace rotakit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Reused buffers; the evaluator runs hot inside the random search.
struct Scratch {
    std::vector<double> psi;     // vertex pseudo-angles around the hub
    std::vector<double> angs;    // sorted ray angles
    std::vector<std::size_t> q;  // per ray: count of vertices at or before it
    std::vector<Point2> hits;    // per ray: boundary intersection
    std::vector<Point2> chain;   // current region's boundary arc
};

thread_local Scratch g_scratch;

// Rays must be matched to the edges whose angular interval around the hub
// contains them; one merge pass over both sorted sequences does it.
void match_rays(const ConvexBody& body, Point2 hub, Scratch& s)
{
    const auto& v = body.vertices;
    const std::size_t n = v.size();
    const std::size_t k = s.angs.size();

    s.psi.resize(n);
    for (std::size_t j = 0; j < n; ++j) s.psi[j] = pseudo_angle(v[j] - hub);
    std::size_t j0 = 0;
    for (std::size_t j = 1; j < n; ++j)
        if (s.psi[j] < s.psi[j0]) j0 = j;

    auto psit = [&](std::size_t t) { return s.psi[(j0 + t) % n]; };

    s.q.resize(k);
    s.hits.resize(k);
    std::size_t t = 0;
    for (std::size_t i = 0; i < k; ++i) {
        double a = s.angs[i];
        double p = pseudo_angle({std::cos(a), std::sin(a)});
        while (t < n && psit(t) <= p) ++t;
        s.q[i] = t;

        std::size_t ea = (t == 0) ? (j0 + n - 1) % n : (j0 + t - 1) % n;
        Point2 va = v[ea];
        Point2 vb = v[(ea + 1) % n];
        Point2 d{std::cos(a), std::sin(a)};
        Point2 e = vb - va;
        double den = cross(d, e);
        if (std::abs(den) < 1e-300) {
            s.hits[i] = va;
        } else {
            double tr = cross(va - hub, e) / den;
            s.hits[i] = hub + d * tr;
        }
    }
}

double chain_diameter(const std::vector<Point2>& chain, Point2 hub)
{
    double best = 0.0;
    const std::size_t c = chain.size();
    if (c + 1 <= 24) {
        for (std::size_t i = 0; i < c; ++i) {
            best = std::max(best, norm2(chain[i] - hub));
            for (std::size_t j = i + 1; j < c; ++j)
                best = std::max(best, norm2(chain[i] - chain[j]));
        }
        return std::sqrt(best);
    }
    for (const Point2& p : chain) best = std::max(best, norm2(p - hub));
    // The arc closed by its chord is the body cut by one half-plane, so the
    // chain is a convex polygon and calipers apply.
    return std::max(std::sqrt(best), diameter_calipers(chain));
}

void push_chain_point(std::vector<Point2>& chain, Point2 p, double dedup2)
{
    if (!chain.empty() && norm2(chain.back() - p) <= dedup2) return;
    chain.push_back(p);
}

double evaluate_sorted(const ConvexBody& body, Point2 hub, Scratch& s)
{
    const auto& v = body.vertices;
    const std::size_t n = v.size();
    const std::size_t k = s.angs.size();
    match_rays(body, hub, s);

    std::size_t j0 = 0;
    for (std::size_t j = 1; j < n; ++j)
        if (s.psi[j] < s.psi[j0]) j0 = j;

    const double dedup2 = 1e-28 * body.circumradius * body.circumradius;
    double worst = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t i2 = (i + 1) % k;
        s.chain.clear();
        push_chain_point(s.chain, s.hits[i], dedup2);
        if (i + 1 < k) {
            for (std::size_t t = s.q[i]; t < s.q[i2]; ++t)
                push_chain_point(s.chain, v[(j0 + t) % n], dedup2);
        } else {
            for (std::size_t t = s.q[i]; t < n; ++t)
                push_chain_point(s.chain, v[(j0 + t) % n], dedup2);
            for (std::size_t t = 0; t < s.q[i2]; ++t)
                push_chain_point(s.chain, v[(j0 + t) % n], dedup2);
        }
        push_chain_point(s.chain, s.hits[i2], dedup2);
        if (s.chain.size() > 2 && norm2(s.chain.front() - s.chain.back()) <= dedup2)
            s.chain.pop_back();
        worst = std::max(worst, chain_diameter(s.chain, hub));
    }
    return worst;
}

void load_sorted_angles(const SpokePartition& partition, Scratch& s)
{
    s.angs.resize(partition.angles.size());
    for (std::size_t i = 0; i < partition.angles.size(); ++i) {
        double a = std::fmod(partition.angles[i], kTwoPi);
        if (a < 0) a += kTwoPi;
        s.angs[i] = a;
    }
    std::sort(s.angs.begin(), s.angs.end());
}

}  // namespace

SweepResult sweep_center_chords(const ConvexBody& body, int angle_count,
                                std::span<const double> extra_angles)
{
    if (angle_count < 1) throw std::invalid_argument("need at least one sweep angle");

    SweepResult res;
    res.samples.reserve(std::size_t(angle_count) + extra_angles.size());
    for (int j = 0; j < angle_count; ++j)
        res.samples.push_back({kPi * j / angle_count, 0.0});
    for (double a : extra_angles) {
        double w = std::fmod(a, kPi);
        if (w < 0) w += kPi;
        res.samples.push_back({w, 0.0});
    }

    res.best_value = std::numeric_limits<double>::infinity();
    for (auto& sample : res.samples) {
        Point2 u{std::cos(sample.angle), std::sin(sample.angle)};
        Point2 nrm = perp(u);
        auto left = clip_halfplane(body.vertices, body.center, nrm);
        auto right =
            clip_halfplane(body.vertices, body.center, Point2{-nrm.x, -nrm.y});
        sample.value = std::max(diameter_calipers(left), diameter_calipers(right));
        if (sample.value < res.best_value) {
            res.best_value = sample.value;
            res.best_angle = sample.angle;
        }
    }
    return res;
}

std::vector<std::vector<Point2>> materialize_spoke_subsets(
    const ConvexBody& body, const SpokePartition& partition)
{
    if (partition.angles.size() < 2)
        throw std::invalid_argument("spoke partition needs at least 2 rays");
    Scratch s;
    load_sorted_angles(partition, s);
    match_rays(body, partition.hub, s);

    const auto& v = body.vertices;
    const std::size_t n = v.size();
    const std::size_t k = s.angs.size();
    std::size_t j0 = 0;
    for (std::size_t j = 1; j < n; ++j)
        if (s.psi[j] < s.psi[j0]) j0 = j;

    const double dedup2 = 1e-28 * body.circumradius * body.circumradius;
    std::vector<std::vector<Point2>> out(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t i2 = (i + 1) % k;
        auto& poly = out[i];
        push_chain_point(poly, partition.hub, dedup2);
        push_chain_point(poly, s.hits[i], dedup2);
        if (i + 1 < k) {
            for (std::size_t t = s.q[i]; t < s.q[i2]; ++t)
                push_chain_point(poly, v[(j0 + t) % n], dedup2);
        } else {
            for (std::size_t t = s.q[i]; t < n; ++t)
                push_chain_point(poly, v[(j0 + t) % n], dedup2);
            for (std::size_t t = 0; t < s.q[i2]; ++t)
                push_chain_point(poly, v[(j0 + t) % n], dedup2);
        }
        push_chain_point(poly, s.hits[i2], dedup2);
        if (poly.size() > 2 && norm2(poly.front() - poly.back()) <= dedup2)
            poly.pop_back();
    }
    return out;
}

double evaluate_spoke_partition(const ConvexBody& body,
                                const SpokePartition& partition)
{
    if (partition.angles.size() < 2)
        throw std::invalid_argument("spoke partition needs at least 2 rays");
    Scratch& s = g_scratch;
    load_sorted_angles(partition, s);
    return evaluate_sorted(body, partition.hub, s);
}

SearchResult search_min_dM(const ConvexBody& body, int k, std::size_t samples,
                           std::uint64_t seed, double margin_rel)
{
    if (k < 3)
        throw std::invalid_argument(
            "spoke search requires k >= 3; 2-partitions are swept by "
            "sweep_center_chords");
    if (samples == 0) throw std::invalid_argument("need at least one sample");

    const double R = body.circumradius;
    const double r = body.inradius;

    SearchResult res;
    res.k = k;
    res.formula_value = dM_formula(body, k);
    res.samples = samples;
    res.margin = margin_rel * R;

    Scratch& s = g_scratch;
    res.best_value = std::numeric_limits<double>::infinity();
    SpokePartition cur;
    cur.angles.resize(k);

    for (std::size_t i = 0; i < samples; ++i) {
        std::uint64_t state = mix_seed(seed, i);
        double ha = kTwoPi * uniform01(state);
        double hr = 0.8 * r * std::sqrt(uniform01(state));
        cur.hub = body.center + Point2{std::cos(ha), std::sin(ha)} * hr;
        for (int j = 0; j < k; ++j) cur.angles[j] = kTwoPi * uniform01(state);

        s.angs = cur.angles;
        std::sort(s.angs.begin(), s.angs.end());
        double val = evaluate_sorted(body, cur.hub, s);
        ++res.evaluations;
        if (val < res.best_value) {
            res.best_value = val;
            res.best.hub = cur.hub;
            res.best.angles = s.angs;
        }
    }

    // Greedy coordinate descent from the best draw: probe +-step on the hub
    // coordinates and every ray angle, halving steps when a full round
    // stalls. The probe budget keeps large k affordable.
    const std::size_t probe_cap = std::max<std::size_t>(4000, 4 * std::size_t(k + 2));
    std::size_t probes = 0;
    double step_pos = 0.1 * r;
    double step_ang = 0.1;
    const double floor_pos = 1e-6 * r;
    const double floor_ang = 1e-6;

    auto try_probe = [&](SpokePartition& cand) -> bool {
        load_sorted_angles(cand, s);
        double val = evaluate_sorted(body, cand.hub, s);
        ++res.evaluations;
        ++probes;
        if (val < res.best_value) {
            res.best_value = val;
            res.best.hub = cand.hub;
            res.best.angles = s.angs;
            return true;
        }
        return false;
    };

    for (int round = 0; round < 200 && probes < probe_cap; ++round) {
        bool improved = false;
        for (int c = 0; c < k + 2 && probes < probe_cap; ++c) {
            for (double sign : {1.0, -1.0}) {
                if (probes >= probe_cap) break;
                SpokePartition cand = res.best;
                if (c == 0 || c == 1) {
                    (c == 0 ? cand.hub.x : cand.hub.y) += sign * step_pos;
                    if (distance(cand.hub, body.center) > 0.9 * r) continue;
                } else {
                    cand.angles[c - 2] += sign * step_ang;
                }
                if (try_probe(cand)) improved = true;
            }
        }
        if (!improved) {
            if (step_pos <= floor_pos && step_ang <= floor_ang) break;
            step_pos = std::max(step_pos * 0.5, floor_pos);
            step_ang = std::max(step_ang * 0.5, floor_ang);
        }
    }

    res.beaten = res.best_value < res.formula_value - res.margin;
    return res;
}

void require_minimality(const SearchResult& result)
{
    if (result.beaten)
        throw MinimalityViolation(
            "random spoke partition with max diameter "
            + std::to_string(result.best_value) + " beats the closed form "
            + std::to_string(result.formula_value) + " at k = "
            + std::to_string(result.k) + " by more than "
            + std::to_string(result.margin));
}

}  // namespace rotakit
