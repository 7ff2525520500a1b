#include "scangame/equilibrium.hpp"

#include "scangame/textfmt.hpp"
#include "scangame/tiling.hpp"
#include "scangame/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace scangame {

const char* case_name(CaseId id) {
    switch (id) {
        case CaseId::i1: return "i1";
        case CaseId::i2: return "i2";
        case CaseId::i3: return "i3";
        case CaseId::i4: return "i4";
        case CaseId::i5: return "i5";
        case CaseId::i6: return "i6";
        case CaseId::i7: return "i7";
        case CaseId::i8: return "i8";
        case CaseId::i9: return "i9";
        case CaseId::i10: return "i10";
        case CaseId::i11: return "i11";
        case CaseId::q0: return "q0";
    }
    return "?";
}

BestResponse best_response_scanner(const GameParams& p, double y, Regime regime) {
    if (y < p.a - tol::kDomainSlack || y > p.c + tol::kDomainSlack)
        throw std::domain_error("y=" + g17(y) + " outside [a, c]");
    double R = threshold_R(p, regime);
    BestResponse br;
    if (y == R) {
        br.is_interval = true;
        br.lo = p.a;
        br.hi = p.b;
    } else {
        br.value = y < R ? p.a : p.b;
    }
    return br;
}

double best_response_invader(const GameParams& p, double x) {
    if (x < p.a - tol::kDomainSlack || x > p.b + tol::kDomainSlack)
        throw std::domain_error("x=" + g17(x) + " outside [a, b]");
    return std::clamp(invader_apex(p, x), p.a, p.c);
}

namespace {

// Equilibrium selection per dispatch region.  R >= c routes to the x = a
// family: at R == c the Scanner is indifferent against y = c and the game
// has a continuum of equilibria {(x, c)}; the a-side member is both the
// limit of the equilibria for R > c and the selection consistent with the
// comparative statics reported for this model.
Equilibrium dispatch(const GameParams& p, Regime regime, double R) {
    double La = invader_apex(p, p.a);
    double Lb = invader_apex(p, p.b);
    double T = threshold_T(p);

    Equilibrium eq;
    eq.regime = regime;
    eq.q = regime == Regime::known ? 1.0 : p.q;

    if (R < p.a) {
        // Scanning never pays at any Invader width: Scanner saturates at b.
        eq.x = p.b;
        if (Lb < p.a) {
            eq.case_id = CaseId::i1;
            eq.y = p.a;
        } else if (Lb <= p.c) {
            eq.case_id = CaseId::i2;
            eq.y = Lb;
        } else {
            eq.case_id = CaseId::i3;
            eq.y = p.c;
        }
    } else if (R >= p.c) {
        // Scanning is too dear at every feasible width: Scanner stays at a.
        eq.x = p.a;
        if (La < p.a) {
            eq.case_id = CaseId::i4;
            eq.y = p.a;
        } else if (La <= p.c) {
            eq.case_id = CaseId::i5;
            eq.y = La;
        } else {
            eq.case_id = CaseId::i6;
            eq.y = p.c;
        }
    } else if (Lb <= R && R <= La) {
        // Interior crossing: the Invader sits exactly on the indifference
        // line and the Scanner's width makes the apex meet it.
        eq.case_id = CaseId::i7;
        eq.x = std::clamp(T - 2.0 * R, p.a, p.b);
        eq.y = R;
    } else if (R > La) {
        eq.x = p.a;
        if (La <= p.a) {
            eq.case_id = CaseId::i8;
            eq.y = p.a;
        } else {
            eq.case_id = CaseId::i9;  // a < La < R
            eq.y = La;
        }
    } else {
        // R < Lb: even the widest scan leaves the apex above the line.
        eq.x = p.b;
        if (Lb >= p.c) {
            eq.case_id = CaseId::i10;
            eq.y = p.c;
        } else {
            eq.case_id = CaseId::i11;  // R < Lb < c
            eq.y = Lb;
        }
    }

    // Distance of the dispatch inputs from every case threshold; decisions
    // within tol::kBoundaryDiag of one are flagged for the caller.
    double margins[] = {std::abs(R - p.a),  std::abs(R - p.c),
                        std::abs(La - p.a), std::abs(La - p.c),
                        std::abs(Lb - p.a), std::abs(Lb - p.c),
                        std::abs(R - La),   std::abs(R - Lb)};
    eq.dispatch_margin = *std::min_element(std::begin(margins), std::end(margins));
    eq.near_boundary = eq.dispatch_margin < tol::kBoundaryDiag;
    return eq;
}

Equilibrium finish(const GameParams& p, Equilibrium eq) {
    eq.p_detect = eq.x + eq.y;
    eq.p_detect_exact = detection_probability_exact(eq.x, eq.y);
    eq.v_S = eq.regime == Regime::known ? payoff_scanner(p, eq.x, eq.y)
                                        : payoff_scanner_expected(p, eq.x, eq.y);
    eq.v_I = payoff_invader(p, eq.x, eq.y);
    return eq;
}

} // namespace

Equilibrium solve_known_type(const GameParams& p) {
    validate_params(p);
    return finish(p, dispatch(p, Regime::known, threshold_R(p, Regime::known)));
}

Equilibrium solve_unknown_type(const GameParams& p) {
    validate_params(p);
    if (p.q == 0.0) {
        // Only the passive type exists: it transmits at width a regardless,
        // and the Scanner maximizes x * (F + V a - C_S) + const.  At exact
        // indifference any x is optimal; report the a-side point.
        double coef = p.F + p.V * p.a - p.C_S;
        Equilibrium eq;
        eq.regime = Regime::unknown;
        eq.q = 0.0;
        eq.case_id = CaseId::q0;
        eq.x = coef > 0.0 ? p.b : p.a;
        eq.y = p.a;
        eq.dispatch_margin = std::abs(coef);
        eq.near_boundary = eq.dispatch_margin < tol::kBoundaryDiag;
        return finish(p, eq);
    }
    return finish(p, dispatch(p, Regime::unknown, threshold_R(p, Regime::unknown)));
}

std::string serialize_equilibrium(const Equilibrium& eq) {
    std::ostringstream out;
    out << "regime " << regime_name(eq.regime) << "\n"
        << "q " << g17(eq.q) << "\n"
        << "case " << case_name(eq.case_id) << "\n"
        << "x " << g17(eq.x) << "\n"
        << "y " << g17(eq.y) << "\n"
        << "p_detect_linear " << g17(eq.p_detect) << "\n"
        << "p_detect_exact " << g17(eq.p_detect_exact) << "\n"
        << "v_S " << g17(eq.v_S) << "\n"
        << "v_I " << g17(eq.v_I) << "\n"
        << "dispatch_margin " << g17(eq.dispatch_margin) << "\n"
        << "near_boundary " << (eq.near_boundary ? 1 : 0) << "\n";
    return out.str();
}

} // namespace scangame
