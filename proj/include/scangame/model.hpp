#pragma once
// Core model of the two-step band-scanning game: the parameter set shared by
// every solver, interval geometry for spectrum bands, and the step-two payoff
// functions in both their literal and expanded algebraic forms.

#include <stdexcept>
#include <string>

namespace scangame {

// Thrown when a parameter set, config file, or CLI input violates a
// documented constraint.  The message names the constraint that failed.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Model parameters.
//   a     lower width bound for both players
//   b     upper width bound for the Scanner's band
//   c     upper width bound for the Invader's band
//   U     Invader's utility rate per unit of usable bandwidth
//   V     Scanner's loss rate for undetected invader bandwidth
//   C_S   Scanner's scanning cost per unit width
//   C_I   Invader's transmission cost per unit width
//   F     fine charged on detection, per unit of combined width
//   q     probability that the Invader values the band (the strategic type);
//         with probability 1-q it transmits at the minimal width a
struct GameParams {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double U = 0.0;
    double V = 0.0;
    double C_S = 0.0;
    double C_I = 0.0;
    double F = 0.0;
    double q = 1.0;
};

// Which information structure the Scanner faces: `known` means the Invader's
// type is common knowledge; `unknown` means only the prior q is known.
enum class Regime { known, unknown };

const char* regime_name(Regime r);

// Closed interval [start, start + width] of spectrum.
struct Band {
    double start = 0.0;
    double width = 0.0;
    double end() const { return start + width; }
};

// Validates every structural constraint on the parameter set:
//   0 < a <= c <= b < 1/2,  U, V, C_S, C_I > 0,  F >= 0,  0 <= q <= 1.
// (c may equal b: the Invader's cap matching the Scanner's is a benchmark
// configuration, even though the caps are typically strict.)
// Throws ValidationError naming the violated constraint.
void validate_params(const GameParams& p);

// Aggregated thresholds the width solvers dispatch on.
//   T        largest width budget at which intruding is still worthwhile
//   R        Scanner's indifference level for the Invader's width
struct DerivedConstants {
    double T = 0.0;
    double R = 0.0;
};

// T = (U - F - C_I) / U.
double threshold_T(const GameParams& p);

// Scanner indifference level.  Known type: R = (C_S - F) / V.  Unknown type:
// R = (C_S - F - (1-q) V a) / (q V), defined only for q > 0 (throws
// std::domain_error at q = 0; that regime is solved by a dedicated branch).
double threshold_R(const GameParams& p, Regime regime);

DerivedConstants derived_constants(const GameParams& p, Regime regime);

// Unconstrained maximizer of the Invader's payoff in y: L(x) = (T - x) / 2.
double invader_apex(const GameParams& p, double x);

// Same apex written directly from the payoff coefficients:
// (U (1 - x) - F - C_I) / (2U).  Kept for cross-checking the algebra.
double invader_apex_expanded(const GameParams& p, double x);

// Step-two payoffs under the linearized detection probability x + y.
// Domain: x in [a, b], y in [a, c] (closed, tiny slack for grid endpoints);
// violations throw std::domain_error.
//
// Invader:  U (1 - x - y) y - F (x + y) - C_I y
double payoff_invader(const GameParams& p, double x, double y);
// Scanner:  F (x + y) - V y (1 - x - y) - C_S x
double payoff_scanner(const GameParams& p, double x, double y);
// Scanner vs an Invader of unknown type: q-mixture of facing width y (type
// values the band) and width a (type does not).
double payoff_scanner_expected(const GameParams& p, double x, double y);

// Expanded polynomial forms of the same payoffs.  These must agree with the
// literal forms to within tol::kAlgebra; the test suite enforces it.
//   invader:  (U (1 - x) - F - C_I) y - U y^2 - F x
//   scanner:  x (F + V y - C_S) + y (F - V + V y)
//   expected: (F - C_S + (1-q) V a + V q y) x + q y (F - V + V y)
//             + (1-q) a (F - V + V a)
double payoff_invader_expanded(const GameParams& p, double x, double y);
double payoff_scanner_expanded(const GameParams& p, double x, double y);
double payoff_scanner_expected_expanded(const GameParams& p, double x, double y);

} // namespace scangame
