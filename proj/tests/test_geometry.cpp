// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "rotakit/errors.hpp"
#include "rotakit/generator.hpp"
#include "rotakit/geometry.hpp"

using namespace rotakit;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Point2> unit_square_cw()
{
    return {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
}

}  // namespace

TEST_CASE("pseudo_angle increases with the true angle")
{
    double prev = -1.0;
    for (int i = 0; i < 720; ++i) {
        double a = 2.0 * kPi * i / 720.0;
        double p = pseudo_angle({std::cos(a), std::sin(a)});
        CHECK(p >= 0.0);
        CHECK(p < 4.0);
        CHECK(p > prev);
        prev = p;
    }
}

TEST_CASE("tolerance invariant is enforced")
{
    CHECK_NOTHROW(Tolerance::analytic().validate());
    CHECK_NOTHROW(Tolerance::generated().validate());
    CHECK_THROWS_AS((Tolerance{0.0, 1e-7}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((Tolerance{1e-6, 1e-7}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((Tolerance{1e-4, 1e-3}.validate()), std::invalid_argument);
}

TEST_CASE("normalize_body orients, dedups and canonicalizes")
{
    auto body = normalize_body(unit_square_cw());
    REQUIRE(body.vertices.size() == 4);
    CHECK(polygon_area(body.vertices) == doctest::Approx(1.0));
    CHECK(body.center.x == doctest::Approx(0.5));
    CHECK(body.center.y == doctest::Approx(0.5));
    CHECK(body.inradius == doctest::Approx(0.5));
    CHECK(body.circumradius == doctest::Approx(std::sqrt(0.5)));

    // Scrambled input with duplicates lands on the same polygon.
    std::vector<Point2> scrambled{{1, 1}, {0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 0}};
    auto same = normalize_body(scrambled);
    REQUIRE(same.vertices.size() == body.vertices.size());
    for (std::size_t i = 0; i < same.vertices.size(); ++i) {
        CHECK(same.vertices[i].x == doctest::Approx(body.vertices[i].x));
        CHECK(same.vertices[i].y == doctest::Approx(body.vertices[i].y));
    }
}

TEST_CASE("normalize_body merges collinear midpoints")
{
    std::vector<Point2> with_midpoints;
    auto square = unit_square_cw();
    std::reverse(square.begin(), square.end());  // ccw
    for (std::size_t i = 0; i < square.size(); ++i) {
        Point2 a = square[i];
        Point2 b = square[(i + 1) % square.size()];
        with_midpoints.push_back(a);
        with_midpoints.push_back(0.5 * (a + b));
    }
    auto body = normalize_body(with_midpoints);
    CHECK(body.vertices.size() == 4);
}

TEST_CASE("normalize_body rejects bad input")
{
    // A vertex pushed inside makes a reflex turn.
    std::vector<Point2> dented{{0, 0}, {1, 0}, {0.5, 0.2}, {1, 1}, {0, 1}};
    CHECK_THROWS_AS(normalize_body(dented), NonConvexInput);

    std::vector<Point2> collinear{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
    CHECK_THROWS_AS(normalize_body(collinear), DegenerateInput);

    std::vector<Point2> two{{0, 0}, {1, 0}};
    CHECK_THROWS_AS(normalize_body(two), DegenerateInput);

    std::vector<Point2> same{{1, 1}, {1, 1}, {1, 1}};
    CHECK_THROWS_AS(normalize_body(same), DegenerateInput);
}

TEST_CASE("diameter agrees between brute force and calipers")
{
    for (int n = 3; n <= 40; ++n) {
        auto body = regular_polygon(n);
        double b = diameter(body.vertices);
        double c = diameter_calipers(body.vertices);
        CHECK(std::abs(b - c) <= 1e-12);
    }

    // Clipped polygons exercise unequal edge lengths.
    for (int n = 5; n <= 25; n += 5) {
        auto body = regular_polygon(n);
        for (int j = 0; j < 8; ++j) {
            double a = 2.0 * kPi * j / 8.0;
            auto half =
                clip_halfplane(body.vertices, body.center,
                               Point2{std::cos(a), std::sin(a)});
            REQUIRE(half.size() >= 3);
            CHECK(std::abs(diameter(half) - diameter_calipers(half)) <= 1e-12);
        }
    }
}

TEST_CASE("clip_halfplane splits areas and keeps the cut points")
{
    auto square = normalize_body(unit_square_cw());
    auto right = clip_halfplane(square.vertices, {0.5, 0.5}, {1, 0});
    CHECK(polygon_area(right) == doctest::Approx(0.5));

    // Flat-top hexagon cut along y = 0 leaves a pentagon whose diameter
    // pairs a cut point with an opposite top vertex.
    std::vector<Point2> hex;
    for (int i = 0; i < 6; ++i) {
        double a = kPi / 6.0 + i * kPi / 3.0;
        hex.push_back({std::cos(a), std::sin(a)});
    }
    auto top = clip_halfplane(hex, {0, 0}, {0, 1});
    REQUIRE(top.size() == 5);
    CHECK(diameter(top) == doctest::Approx(std::sqrt(3.25)).epsilon(1e-12));
}

TEST_CASE("point and polygon distances")
{
    CHECK(point_segment_distance({0, 1}, {-1, 0}, {1, 0}) == doctest::Approx(1.0));
    CHECK(point_segment_distance({3, 0}, {-1, 0}, {1, 0}) == doctest::Approx(2.0));

    auto square = normalize_body(unit_square_cw());
    CHECK(point_polygon_distance({0.5, 0.5}, square.vertices) == 0.0);
    CHECK(point_polygon_distance({2.0, 0.5}, square.vertices)
          == doctest::Approx(1.0));

    auto shifted = square.vertices;
    for (auto& p : shifted) p.x += 0.25;
    CHECK(hausdorff_distance(square.vertices, shifted)
          == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("rotation happens about the given center")
{
    Point2 p{2, 1};
    Point2 q = rotate_about(p, {1, 1}, kPi / 2.0);
    CHECK(q.x == doctest::Approx(1.0));
    CHECK(q.y == doctest::Approx(2.0));

    auto body = regular_polygon(7);
    auto back = rotate_about(
        rotate_about(body.vertices, body.center, 0.7), body.center, -0.7);
    for (std::size_t i = 0; i < back.size(); ++i)
        CHECK(distance(back[i], body.vertices[i]) <= 1e-12);
}

TEST_CASE("ray_boundary_intersection finds the crossing edge")
{
    auto square = normalize_body(unit_square_cw());
    auto hit = ray_boundary_intersection(square, {0.5, 0.5}, {1, 0});
    CHECK(hit.point.x == doctest::Approx(1.0));
    CHECK(hit.point.y == doctest::Approx(0.5));
    CHECK(hit.t == doctest::Approx(0.5));

    auto corner = ray_boundary_intersection(square, {0.5, 0.5}, {1, 1});
    CHECK(corner.point.x == doctest::Approx(1.0));
    CHECK(corner.point.y == doctest::Approx(1.0));

    CHECK_THROWS_AS(ray_boundary_intersection(square, {0.5, 0.5}, {0, 0}),
                    NumericalFailure);
}

TEST_CASE("polar_angle wraps into [0, 2pi)")
{
    CHECK(polar_angle({1, 0}) == doctest::Approx(0.0));
    CHECK(polar_angle({0, 1}) == doctest::Approx(kPi / 2.0));
    CHECK(polar_angle({0, -1}) == doctest::Approx(1.5 * kPi));
    CHECK(polar_angle(Point2{2, 1}, Point2{1, 1}) == doctest::Approx(0.0));
}
