// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace rotakit {

// Base class for all rotakit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- geometry ---

// Input polygon has a reflex turn beyond tolerance.
struct NonConvexInput : Error {
  using Error::Error;
};

// Input polygon has (near-)zero area or fewer than three distinct vertices.
struct DegenerateInput : Error {
  using Error::Error;
};

// A numeric routine failed to produce a usable result (e.g. a ray from an
// interior point found no boundary crossing).
struct NumericalFailure : Error {
  using Error::Error;
};

// File contents could not be parsed.
struct ParseError : Error {
  using Error::Error;
};

// --- symmetry ---

// No rotation degree k >= 2 maps the vertex set onto itself.
struct NoRotationalSymmetry : Error {
  using Error::Error;
};

// Symmetry degrees found on a body are not exactly the divisors of the
// maximal degree.
struct DivisorClosureViolation : Error {
  using Error::Error;
};

// --- partitions ---

// Requested partition degree does not divide the body's symmetry degree.
struct NotSymmetric : Error {
  using Error::Error;
};

// Constructed partition failed a congruence/containment check at tolerance.
struct ToleranceViolation : Error {
  using Error::Error;
};

// The closed-form max-diameter expression is undefined for this degree (k=2).
struct FormulaNotApplicable : Error {
  using Error::Error;
};

// The body has only one symmetry degree > 1, so there is no chain to report.
struct NotMultiRotational : Error {
  using Error::Error;
};

// A chain violated the proven monotonicity/strictness structure.
struct TheoremViolation : Error {
  using Error::Error;
};

// The four equality-chain predicates disagreed on a body.
struct EquivalenceViolation : Error {
  using Error::Error;
};

// --- search ---

// A randomized search produced a value below the proven minimum.
struct MinimalityViolation : Error {
  using Error::Error;
};

// --- generators ---

// Amplitude halving could not reach a convex sample set.
struct ConvexityUnreachable : Error {
  using Error::Error;
};

// Generated body does not have the requested symmetry degree.
struct SymmetryBroken : Error {
  using Error::Error;
};

}  // namespace rotakit
