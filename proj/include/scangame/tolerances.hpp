#pragma once
// Central numeric tolerances.  Every comparison slack used by the library is
// named here so tests and documentation can reference one definition.

namespace scangame::tol {

// Absolute payoff difference treated as a tie (argmax co-maximizers, the
// tiling regime boundary, and indifference checks).
inline constexpr double kTie = 1e-12;

// Dispatch decisions landing closer than this to a case threshold set the
// near-boundary diagnostic flag on the solved equilibrium.
inline constexpr double kBoundaryDiag = 1e-9;

// Slack for closed-box domain checks, so grid endpoints computed in floating
// point still count as inside [a, b] x [a, c].
inline constexpr double kDomainSlack = 1e-12;

// Required agreement between literal and expanded payoff algebra.
inline constexpr double kAlgebra = 1e-12;

// Slack for the closed-interval hit test used when sweeping band placements
// against a tiling: real-analysis touching points must not be lost to the
// last-ulp rounding of band endpoints.
inline constexpr double kIntersectSlack = 1e-12;

// Slack for band containment / width / gap invariant checks on constructed
// tilings.
inline constexpr double kGeometry = 1e-12;

} // namespace scangame::tol
