// SPDX-License-Identifier: Apache-2.0
#include <vector>

#include <doctest.h>

#include "rotakit/errors.hpp"
#include "rotakit/generator.hpp"
#include "rotakit/symmetry.hpp"

using namespace rotakit;

TEST_CASE("divisor and prime factor helpers")
{
    CHECK(divisors_gt1(10) == std::vector<int>{2, 5, 10});
    CHECK(divisors_gt1(7) == std::vector<int>{7});
    CHECK(divisors_gt1(45) == std::vector<int>{3, 5, 9, 15, 45});
    CHECK(divisors_gt1(2520).size() == 47);

    CHECK(smallest_prime_factor(2) == 2);
    CHECK(smallest_prime_factor(45) == 3);
    CHECK(smallest_prime_factor(49) == 7);
    CHECK(smallest_prime_factor(77) == 7);
    CHECK(smallest_prime_factor(97) == 97);

    CHECK(all_prime_factors_ge(49, 7));
    CHECK(all_prime_factors_ge(77, 7));   // 7 * 11
    CHECK(all_prime_factors_ge(91, 7));   // 7 * 13
    CHECK(all_prime_factors_ge(35, 5));
    CHECK_FALSE(all_prime_factors_ge(45, 7));
    CHECK_FALSE(all_prime_factors_ge(91, 11));
}

TEST_CASE("is_k_symmetric matches rotated vertices")
{
    auto body = regular_polygon(12);
    for (int k : {2, 3, 4, 6, 12}) CHECK(is_k_symmetric(body, k));
    CHECK_FALSE(is_k_symmetric(body, 5));
    CHECK_FALSE(is_k_symmetric(body, 7));
    CHECK_THROWS_AS(is_k_symmetric(body, 1), std::invalid_argument);
}

TEST_CASE("detect_symmetry on regular polygons")
{
    for (int n : {3, 4, 7, 10, 12, 45, 60}) {
        auto prof = detect_symmetry(regular_polygon(n));
        CHECK(prof.max_degree == n);
        CHECK(prof.min_degree == smallest_prime_factor(n));
        CHECK(prof.divisors == divisors_gt1(n));
        CHECK(prof.is_multi == (prof.divisors.size() >= 2));
    }
}

TEST_CASE("detect_symmetry on non- and barely-symmetric bodies")
{
    std::vector<Point2> scalene{{0, 0}, {3, 0}, {1, 1.5}};
    CHECK_THROWS_AS(detect_symmetry(normalize_body(scalene)),
                    NoRotationalSymmetry);

    auto rect = rectangle(2.0, 1.0);
    auto prof = detect_symmetry(rect);
    CHECK(prof.max_degree == 2);
    CHECK(prof.min_degree == 2);
    CHECK_FALSE(prof.is_multi);
}

TEST_CASE("sector bodies keep exactly their construction degree")
{
    SectorProfile p;
    p.m = 6;
    p.samples = 16;
    p.eps = 0.05;
    p.bump = BumpKind::quartic;
    auto made = make_sector_body(p);
    auto prof = detect_symmetry(made.body, Tolerance::generated());
    CHECK(prof.max_degree == 6);
    CHECK(prof.divisors == std::vector<int>{2, 3, 6});
    CHECK(is_k_symmetric(made.body, 3, Tolerance::generated()));
    CHECK_FALSE(is_k_symmetric(made.body, 4, Tolerance::generated()));
}
