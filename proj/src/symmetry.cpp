// SPDX-License-Identifier: Apache-2.0
#include "rotakit/symmetry.hpp"

#include <algorithm>
#include <numbers>

namespace rotakit {

std::vector<int> divisors_gt1(int k) {
  if (k < 1) throw std::invalid_argument("divisors_gt1: k must be >= 1");
  std::vector<int> out;
  for (int d = 2; d * d <= k; ++d) {
    if (k % d == 0) {
      out.push_back(d);
      if (d != k / d) out.push_back(k / d);
    }
  }
  if (k > 1) out.push_back(k);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int smallest_prime_factor(int k) {
  if (k < 2) throw std::invalid_argument("smallest_prime_factor: k must be >= 2");
  for (int d = 2; d * d <= k; ++d) {
    if (k % d == 0) return d;
  }
  return k;
}

bool all_prime_factors_ge(int k, int bound) {
  if (k < 2) throw std::invalid_argument("all_prime_factors_ge: k must be >= 2");
  int rest = k;
  for (int d = 2; d * d <= rest; ++d) {
    while (rest % d == 0) {
      if (d < bound) return false;
      rest /= d;
    }
  }
  return rest == 1 || rest >= bound;
}

bool is_k_symmetric(const ConvexBody& body, int k, const Tolerance& tol) {
  if (k < 2) throw std::invalid_argument("is_k_symmetric: k must be >= 2");
  const std::size_t n = body.vertices.size();
  // A fixed-point-free rotation partitions the vertex set into orbits of
  // size exactly k, so k must divide n.
  if (n % static_cast<std::size_t>(k) != 0) return false;

  // Vertices are in counterclockwise order around the interior center, so
  // rotation by 2pi/k maps vertex i onto vertex i + n/k.
  const std::size_t shift = n / static_cast<std::size_t>(k);
  const double angle = 2.0 * std::numbers::pi / static_cast<double>(k);
  const double c = std::cos(angle), s = std::sin(angle);
  const double lim2 = tol.eps_geom * body.circumradius;
  const double lim = lim2 * lim2;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 d = body.vertices[i] - body.center;
    const Point2 r{body.center.x + c * d.x - s * d.y,
                   body.center.y + s * d.x + c * d.y};
    if (norm2(r - body.vertices[(i + shift) % n]) > lim) return false;
  }
  return true;
}

SymmetryProfile detect_symmetry(const ConvexBody& body, const Tolerance& tol) {
  const int n = static_cast<int>(body.vertices.size());
  const std::vector<int> candidates = divisors_gt1(n);

  int max_degree = 0;
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    if (is_k_symmetric(body, *it, tol)) {
      max_degree = *it;
      break;
    }
  }
  if (max_degree == 0) {
    throw NoRotationalSymmetry("no rotation degree >= 2 fits the vertex set");
  }

  for (int k = 2; k <= max_degree; ++k) {
    const bool divides = max_degree % k == 0;
    if (is_k_symmetric(body, k, tol) != divides) {
      throw DivisorClosureViolation(
          "degree " + std::to_string(k) + " vs max degree " +
          std::to_string(max_degree));
    }
  }

  SymmetryProfile profile;
  profile.max_degree = max_degree;
  profile.divisors = divisors_gt1(max_degree);
  profile.min_degree = profile.divisors.front();
  profile.is_multi = profile.divisors.size() >= 2;
  return profile;
}

}  // namespace rotakit
