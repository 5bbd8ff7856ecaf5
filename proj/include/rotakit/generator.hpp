// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rotakit/geometry.hpp"

namespace rotakit {

// Regular n-gon with one vertex on the positive x axis.
ConvexBody regular_polygon(int n, double circumradius = 1.0,
                           const Tolerance& tol = Tolerance::analytic());

// Axis-aligned rectangle centered at the origin.
ConvexBody rectangle(double half_width, double half_height,
                     const Tolerance& tol = Tolerance::analytic());

// Radial bump shapes on [0, 1]: value and slope vanish at both ends so the
// profile stitches C1 across sector seams, and the maximum is 1.
enum class BumpKind { arch, quartic, skew, mix };

const char* bump_name(BumpKind kind);
std::optional<BumpKind> bump_from_name(const std::string& name);

// Evaluable bump; `mix` draws its blend weights from the seed, the other
// kinds ignore it.
class BumpProfile {
  public:
    BumpProfile(BumpKind kind, std::uint64_t seed = 0);
    double operator()(double t) const;
    BumpKind kind() const { return kind_; }

  private:
    BumpKind kind_;
    double w_[3]{0.0, 0.0, 0.0};
    double scale_{1.0};
};

// Recipe for an m-fold symmetric body: one sector of the radial profile
// rho(t) = 1 + eps * bump(t) sampled at `samples` angles, replicated by
// exact rotations.
struct SectorProfile {
    int m{2};
    int samples{16};  // vertices per sector, >= 8
    double eps{0.1};  // bump amplitude, in (0, 0.3]
    BumpKind bump{BumpKind::arch};
    std::uint64_t seed{0};
};

struct SectorBody {
    ConvexBody body;
    SectorProfile profile;  // as requested
    double eps_used{0.0};   // after convexity halvings
};

// Builds the body, halving eps up to 8 times until the vertex ring is
// strictly convex with margin against the merge threshold. Throws
// ConvexityUnreachable when halving cannot fix it and SymmetryBroken when
// the finished body does not have maximal rotation degree exactly m.
SectorBody make_sector_body(const SectorProfile& profile,
                            const Tolerance& tol = Tolerance::generated());

struct CorpusBody {
    std::string id;
    std::string generator;  // "regular", "circle", "rect" or "sector"
    ConvexBody body;
    Tolerance tol;
    std::optional<SectorProfile> profile;  // sector bodies only
    double eps_used{0.0};
};

// One-line description of a sector profile for logs and reports.
std::string describe_profile(const SectorProfile& profile, double eps_used);

// Deterministic evaluation corpus: regular polygons E_3..E_60, a 2520-gon
// circle stand-in, a 4x2 rectangle, 350 two-fold sector bodies and 350
// sector bodies with higher symmetry degrees.
std::vector<CorpusBody> build_corpus(std::uint64_t seed = 42);

}  // namespace rotakit
