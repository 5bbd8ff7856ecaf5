// SPDX-License-Identifier: Apache-2.0
#include "rotakit/generator.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "rotakit/errors.hpp"
#include "rotakit/rng.hpp"
#include "rotakit/symmetry.hpp"

namespace rotakit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double bump_arch(double t) { return std::pow(std::sin(std::numbers::pi * t), 2); }

double bump_quartic(double t) { return 16.0 * t * t * (1.0 - t) * (1.0 - t); }

// Peak of t^2 (1-t)^3 sits at t = 2/5 with value 108/3125.
double bump_skew(double t)
{
    return t * t * (1.0 - t) * (1.0 - t) * (1.0 - t) * (3125.0 / 108.0);
}

}  // namespace

const char* bump_name(BumpKind kind)
{
    switch (kind) {
        case BumpKind::arch: return "arch";
        case BumpKind::quartic: return "quartic";
        case BumpKind::skew: return "skew";
        case BumpKind::mix: return "mix";
    }
    return "unknown";
}

std::optional<BumpKind> bump_from_name(const std::string& name)
{
    if (name == "arch") return BumpKind::arch;
    if (name == "quartic") return BumpKind::quartic;
    if (name == "skew") return BumpKind::skew;
    if (name == "mix") return BumpKind::mix;
    return std::nullopt;
}

BumpProfile::BumpProfile(BumpKind kind, std::uint64_t seed) : kind_(kind)
{
    if (kind_ != BumpKind::mix) return;
    std::uint64_t state = seed;
    for (double& w : w_) w = 0.1 + 0.9 * uniform01(state);
    double peak = 0.0;
    for (int i = 0; i <= 2048; ++i) {
        double t = i / 2048.0;
        double v = w_[0] * bump_arch(t) + w_[1] * bump_quartic(t) + w_[2] * bump_skew(t);
        peak = std::max(peak, v);
    }
    scale_ = peak;
}

double BumpProfile::operator()(double t) const
{
    switch (kind_) {
        case BumpKind::arch: return bump_arch(t);
        case BumpKind::quartic: return bump_quartic(t);
        case BumpKind::skew: return bump_skew(t);
        case BumpKind::mix:
            return (w_[0] * bump_arch(t) + w_[1] * bump_quartic(t)
                    + w_[2] * bump_skew(t))
                   / scale_;
    }
    return 0.0;
}

ConvexBody regular_polygon(int n, double circumradius, const Tolerance& tol)
{
    if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    if (circumradius <= 0.0) throw std::invalid_argument("circumradius must be positive");
    std::vector<Point2> v;
    v.reserve(n);
    for (int i = 0; i < n; ++i) {
        double a = kTwoPi * i / n;
        v.push_back({circumradius * std::cos(a), circumradius * std::sin(a)});
    }
    return normalize_body(v, tol);
}

ConvexBody rectangle(double half_width, double half_height, const Tolerance& tol)
{
    if (half_width <= 0.0 || half_height <= 0.0)
        throw std::invalid_argument("rectangle sides must be positive");
    std::vector<Point2> v{{half_width, half_height},
                          {-half_width, half_height},
                          {-half_width, -half_height},
                          {half_width, -half_height}};
    return normalize_body(v, tol);
}

SectorBody make_sector_body(const SectorProfile& profile, const Tolerance& tol)
{
    if (profile.m < 2) throw std::invalid_argument("symmetry degree must be >= 2");
    if (profile.samples < 8) throw std::invalid_argument("need >= 8 samples per sector");
    if (!(profile.eps > 0.0) || profile.eps > 0.3)
        throw std::invalid_argument("bump amplitude must be in (0, 0.3]");

    BumpProfile bump(profile.bump, profile.seed);
    const int m = profile.m;
    const int s = profile.samples;
    const int n = m * s;
    const double sector = kTwoPi / m;

    std::vector<Point2> ring(n);
    double eps = profile.eps;
    bool convex = false;
    for (int attempt = 0; attempt <= 8 && !convex; ++attempt) {
        eps = profile.eps / double(1 << attempt);
        // One sector of samples, replicated by rotation so every copy is
        // bitwise-consistent with the symmetry check.
        std::vector<Point2> base(s);
        for (int j = 0; j < s; ++j) {
            double t = double(j) / s;
            double rho = 1.0 + eps * bump(t);
            double a = sector * t;
            base[j] = {rho * std::cos(a), rho * std::sin(a)};
        }
        for (int i = 0; i < m; ++i) {
            double c = std::cos(sector * i), sn = std::sin(sector * i);
            for (int j = 0; j < s; ++j)
                ring[i * s + j] = {c * base[j].x - sn * base[j].y,
                                   sn * base[j].x + c * base[j].y};
        }
        // Every turn must clear the collinearity merge threshold, otherwise
        // normalization could drop vertices asymmetrically.
        double scale2 = 0.0;
        for (const Point2& p : ring) scale2 = std::max(scale2, norm2(p));
        double margin = 8.0 * tol.eps_geom * scale2;
        convex = true;
        for (int i = 0; i < n && convex; ++i) {
            Point2 e0 = ring[(i + 1) % n] - ring[i];
            Point2 e1 = ring[(i + 2) % n] - ring[(i + 1) % n];
            if (cross(e0, e1) < margin) convex = false;
        }
    }
    if (!convex)
        throw ConvexityUnreachable("profile stays non-convex after 8 halvings: "
                                   + describe_profile(profile, eps));

    SectorBody out;
    out.body = normalize_body(ring, tol);
    out.profile = profile;
    out.eps_used = eps;
    if (int(out.body.vertices.size()) != n)
        throw SymmetryBroken("normalization changed the vertex count for "
                             + describe_profile(profile, eps));
    auto sym = detect_symmetry(out.body, tol);
    if (sym.max_degree != m)
        throw SymmetryBroken("built body has maximal degree "
                             + std::to_string(sym.max_degree) + ", wanted "
                             + std::to_string(m));
    return out;
}

std::string describe_profile(const SectorProfile& profile, double eps_used)
{
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "m=%d samples=%d bump=%s eps=%.6g eps_used=%.6g seed=%llu",
                  profile.m, profile.samples, bump_name(profile.bump), profile.eps,
                  eps_used, static_cast<unsigned long long>(profile.seed));
    return buf;
}

std::vector<CorpusBody> build_corpus(std::uint64_t seed)
{
    std::vector<CorpusBody> corpus;
    corpus.reserve(760);

    for (int n = 3; n <= 60; ++n) {
        CorpusBody c;
        c.id = "E_" + std::to_string(n);
        c.generator = "regular";
        c.tol = Tolerance::analytic();
        c.body = regular_polygon(n, 1.0, c.tol);
        corpus.push_back(std::move(c));
    }

    {
        CorpusBody c;
        c.id = "circle_2520";
        c.generator = "circle";
        c.tol = Tolerance::analytic();
        c.body = regular_polygon(2520, 1.0, c.tol);
        corpus.push_back(std::move(c));
    }
    {
        CorpusBody c;
        c.id = "rect_4x2";
        c.generator = "rect";
        c.tol = Tolerance::analytic();
        c.body = rectangle(2.0, 1.0, c.tol);
        corpus.push_back(std::move(c));
    }

    std::uint64_t state = seed;
    const BumpKind kinds[4] = {BumpKind::arch, BumpKind::quartic, BumpKind::skew,
                               BumpKind::mix};
    const int m2_samples[6] = {8, 12, 16, 24, 32, 48};

    // Two-fold bodies; the slice the chord sweep mines for partitions that
    // beat the standard one.
    for (int i = 0; i < 350; ++i) {
        SectorProfile p;
        p.m = 2;
        p.samples = m2_samples[i % 6];
        p.bump = kinds[i % 4];
        p.eps = 0.05 + 0.25 * uniform01(state);
        p.seed = mix_seed(seed, 1000 + i);
        auto made = make_sector_body(p, Tolerance::generated());
        CorpusBody c;
        char buf[48];
        std::snprintf(buf, sizeof buf, "sector_%03d_m2", i);
        c.id = buf;
        c.generator = "sector";
        c.tol = Tolerance::generated();
        c.body = std::move(made.body);
        c.profile = p;
        c.eps_used = made.eps_used;
        corpus.push_back(std::move(c));
    }

    // Higher symmetry degrees; amplitude shrinks as 1/m^2 to keep the ring
    // convex, vertex count capped at 300.
    const int ms[12] = {3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 21, 25};
    const int all_samples[6] = {8, 12, 16, 24, 32, 48};
    for (int i = 0; i < 350; ++i) {
        SectorProfile p;
        p.m = ms[i % 12];
        std::vector<int> opts;
        for (int sc : all_samples)
            if (p.m * sc <= 300) opts.push_back(sc);
        p.samples = opts[size_t(uniform01(state) * opts.size()) % opts.size()];
        p.bump = kinds[i % 4];
        double cap = std::min(0.3, 8.0 / (double(p.m) * p.m));
        p.eps = (0.5 + 0.5 * uniform01(state)) * cap;
        p.seed = mix_seed(seed, 2000 + i);
        auto made = make_sector_body(p, Tolerance::generated());
        CorpusBody c;
        char buf[48];
        std::snprintf(buf, sizeof buf, "sector_%03d_m%d", 350 + i, p.m);
        c.id = buf;
        c.generator = "sector";
        c.tol = Tolerance::generated();
        c.body = std::move(made.body);
        c.profile = p;
        c.eps_used = made.eps_used;
        corpus.push_back(std::move(c));
    }

    return corpus;
}

}  // namespace rotakit
