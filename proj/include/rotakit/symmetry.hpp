// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "rotakit/geometry.hpp"

namespace rotakit {

// Rotational symmetry structure of a body. max_degree is the largest k such
// that rotation by 2pi/k about the centroid maps the vertex set onto itself;
// divisors are all divisors > 1 of max_degree, ascending. min_degree is the
// smallest of them, i.e. the smallest prime factor of max_degree.
struct SymmetryProfile {
  int max_degree{0};
  int min_degree{0};
  std::vector<int> divisors;
  bool is_multi{false};
};

// Divisors of k greater than 1, ascending (includes k itself).
std::vector<int> divisors_gt1(int k);

int smallest_prime_factor(int k);

// True iff every prime factor of k is >= bound.
bool all_prime_factors_ge(int k, int bound);

// Tests whether rotation by 2pi/k about the body's center maps the vertex
// set onto itself within tol.eps_geom * R. k must be >= 2.
bool is_k_symmetric(const ConvexBody& body, int k,
                    const Tolerance& tol = Tolerance::analytic());

// Finds the maximal rotation degree among divisors of the vertex count and
// asserts divisor closure (every k in 2..max_degree is a symmetry degree
// exactly when it divides max_degree). Throws NoRotationalSymmetry when no
// degree >= 2 fits and DivisorClosureViolation when closure fails.
SymmetryProfile detect_symmetry(const ConvexBody& body,
                                const Tolerance& tol = Tolerance::analytic());

}  // namespace rotakit
