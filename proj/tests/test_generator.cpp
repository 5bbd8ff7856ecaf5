// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include <doctest.h>

#include "rotakit/errors.hpp"
#include "rotakit/generator.hpp"
#include "rotakit/symmetry.hpp"

using namespace rotakit;

TEST_CASE("regular polygon basics")
{
    auto hex = regular_polygon(6);
    CHECK(hex.vertices.size() == 6);
    CHECK(hex.circumradius == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(hex.inradius
          == doctest::Approx(std::cos(std::numbers::pi / 6.0)).epsilon(1e-12));
    CHECK(std::abs(hex.center.x) <= 1e-12);
    CHECK(std::abs(hex.center.y) <= 1e-12);
    CHECK_THROWS_AS(regular_polygon(2), std::invalid_argument);
}

TEST_CASE("bump profiles vanish smoothly at sector seams and peak at 1")
{
    for (BumpKind kind : {BumpKind::arch, BumpKind::quartic, BumpKind::skew}) {
        BumpProfile b(kind);
        CHECK(std::abs(b(0.0)) <= 1e-12);
        CHECK(std::abs(b(1.0)) <= 1e-12);
        CHECK(std::abs(b(1e-6)) / 1e-6 <= 1e-4);          // flat left end
        CHECK(std::abs(b(1.0 - 1e-6)) / 1e-6 <= 1e-4);    // flat right end
        double peak = 0.0;
        for (int i = 0; i <= 4096; ++i) peak = std::max(peak, b(i / 4096.0));
        CHECK(peak == doctest::Approx(1.0).epsilon(1e-3));
    }
    for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
        BumpProfile b(BumpKind::mix, seed);
        CHECK(std::abs(b(0.0)) <= 1e-12);
        CHECK(std::abs(b(1.0)) <= 1e-12);
        double peak = 0.0;
        for (int i = 0; i <= 4096; ++i) {
            double v = b(i / 4096.0);
            CHECK(v >= -1e-12);
            peak = std::max(peak, v);
        }
        CHECK(peak == doctest::Approx(1.0).epsilon(1e-3));
    }
}

TEST_CASE("bump names round-trip")
{
    for (BumpKind kind :
         {BumpKind::arch, BumpKind::quartic, BumpKind::skew, BumpKind::mix})
        CHECK(bump_from_name(bump_name(kind)) == kind);
    CHECK_FALSE(bump_from_name("wedge").has_value());
}

TEST_CASE("sector bodies are convex, near-round and exactly m-symmetric")
{
    SectorProfile p;
    p.m = 2;
    p.samples = 16;
    p.eps = 0.2;
    p.bump = BumpKind::arch;
    auto made = make_sector_body(p);
    CHECK(made.body.vertices.size() == 32);
    CHECK(made.eps_used <= p.eps);
    CHECK(made.eps_used > 0.0);
    CHECK(made.body.circumradius <= 1.0 + p.eps + 1e-9);
    CHECK(made.body.circumradius >= 1.0);
    CHECK(made.body.inradius > 0.9);
    auto prof = detect_symmetry(made.body, Tolerance::generated());
    CHECK(prof.max_degree == 2);
}

TEST_CASE("sector body input validation")
{
    SectorProfile p;
    p.m = 1;
    CHECK_THROWS_AS(make_sector_body(p), std::invalid_argument);
    p.m = 2;
    p.samples = 4;
    CHECK_THROWS_AS(make_sector_body(p), std::invalid_argument);
    p.samples = 16;
    p.eps = 0.0;
    CHECK_THROWS_AS(make_sector_body(p), std::invalid_argument);
    p.eps = 0.5;
    CHECK_THROWS_AS(make_sector_body(p), std::invalid_argument);
}

TEST_CASE("amplitudes below the symmetry resolution are rejected")
{
    // A ripple of 1e-9 is invisible at the generated tolerance, so the body
    // looks like a regular 32-gon and the m = 2 postcondition must fire.
    SectorProfile p;
    p.m = 2;
    p.samples = 16;
    p.eps = 1e-9;
    p.bump = BumpKind::quartic;
    CHECK_THROWS_AS(make_sector_body(p), SymmetryBroken);
}

TEST_CASE("profiles that cannot be made convex are refused")
{
    // 320 vertices put the baseline turn below the merge threshold margin;
    // no amount of amplitude halving can fix that.
    SectorProfile p;
    p.m = 40;
    p.samples = 8;
    p.eps = 0.01;
    p.bump = BumpKind::arch;
    CHECK_THROWS_AS(make_sector_body(p), ConvexityUnreachable);
}

TEST_CASE("corpus is complete, unique and deterministic")
{
    auto corpus = build_corpus(42);
    CHECK(corpus.size() == 760);

    std::set<std::string> ids;
    for (const auto& c : corpus) ids.insert(c.id);
    CHECK(ids.size() == corpus.size());
    CHECK(ids.count("E_3"));
    CHECK(ids.count("E_45"));
    CHECK(ids.count("E_60"));
    CHECK(ids.count("circle_2520"));
    CHECK(ids.count("rect_4x2"));

    std::size_t m2 = 0, higher = 0;
    for (const auto& c : corpus) {
        if (!c.profile) continue;
        if (c.profile->m == 2) ++m2;
        else ++higher;
    }
    CHECK(m2 == 350);
    CHECK(higher == 350);

    auto again = build_corpus(42);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        REQUIRE(again[i].id == corpus[i].id);
        REQUIRE(again[i].body.vertices.size() == corpus[i].body.vertices.size());
        for (std::size_t j = 0; j < corpus[i].body.vertices.size(); ++j) {
            CHECK(again[i].body.vertices[j].x == corpus[i].body.vertices[j].x);
            CHECK(again[i].body.vertices[j].y == corpus[i].body.vertices[j].y);
        }
    }
}

TEST_CASE("corpus sector slice stays within its amplitude contract")
{
    auto corpus = build_corpus(42);
    for (const auto& c : corpus) {
        if (!c.profile) continue;
        const auto& p = *c.profile;
        CHECK(p.eps > 0.0);
        CHECK(p.eps <= 0.3 + 1e-12);
        if (p.m > 2) {
            CHECK(p.eps <= 8.0 / (double(p.m) * p.m) + 1e-12);
            CHECK(p.m * p.samples <= 300);
        }
        CHECK(c.eps_used <= p.eps + 1e-12);
    }
}
