#pragma once
// Step two of the game: the players pick band widths x in [a, b] and
// y in [a, c] under the linearized detection probability x + y.  The
// Scanner's payoff is linear in x, so its best response is bang-bang around
// the indifference level R; the Invader's payoff is strictly concave in y
// with apex L(x).  Their crossing yields a closed-form Nash equilibrium
// classified into eleven cases (plus a dedicated branch when the Invader is
// known to be the passive type, q = 0).

#include "scangame/model.hpp"

#include <string>

namespace scangame {

enum class CaseId {
    i1, i2, i3,    // R below the box: Scanner saturates at b
    i4, i5, i6,    // R above the box: Scanner stays at a
    i7,            // interior crossing on the indifference line
    i8, i9,        // indifference level inside the box, Invader pulled low
    i10, i11,      // indifference level inside the box, Invader pulled high
    q0             // passive-type-only branch of the unknown regime
};

const char* case_name(CaseId id);

// Scanner's best response to the Invader width y: a point below the
// indifference level, a point above it, and the whole interval [a, b] at
// exact indifference.
struct BestResponse {
    bool is_interval = false;
    double value = 0.0;   // the point when !is_interval
    double lo = 0.0;      // interval bounds when is_interval
    double hi = 0.0;

    bool contains(double v) const {
        return is_interval ? (v >= lo && v <= hi) : v == value;
    }
};

// Uses the regime's indifference level R; unknown regime requires q > 0.
BestResponse best_response_scanner(const GameParams& p, double y, Regime regime);

// Always single-valued: clamp(L(x), a, c) by strict concavity.
double best_response_invader(const GameParams& p, double x);

struct Equilibrium {
    Regime regime = Regime::known;
    double q = 1.0;               // prior used (1 under the known regime)
    CaseId case_id = CaseId::i1;
    double x = 0.0;
    double y = 0.0;
    double p_detect = 0.0;        // linearized detection probability x + y
    double p_detect_exact = 0.0;  // placement-game value at (x, y)
    double v_S = 0.0;             // Scanner payoff (expected one when unknown)
    double v_I = 0.0;             // strategic Invader's payoff
    double dispatch_margin = 0.0; // smallest |comparison| consulted by dispatch
    bool near_boundary = false;   // dispatch_margin < tol::kBoundaryDiag
};

// Closed-form equilibrium when the Invader's type is common knowledge.
Equilibrium solve_known_type(const GameParams& p);

// Closed-form equilibrium under the prior q.  q = 1 coincides with the known
// regime; q = 0 returns (argmax of the expected Scanner payoff against width
// a, a) without consulting the indifference level.
Equilibrium solve_unknown_type(const GameParams& p);

// Structured "key value" text record.
std::string serialize_equilibrium(const Equilibrium& eq);

} // namespace scangame
