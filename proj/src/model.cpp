#include "scangame/model.hpp"

#include "scangame/tolerances.hpp"
#include "scangame/textfmt.hpp"

#include <cmath>

namespace scangame {

const char* regime_name(Regime r) {
    return r == Regime::known ? "known" : "unknown";
}

namespace {

[[noreturn]] void fail(const std::string& what) {
    throw ValidationError(what);
}

void check_finite(const char* name, double v) {
    if (!std::isfinite(v)) fail(std::string(name) + " must be finite (got " + g17(v) + ")");
}

void check_domain(const GameParams& p, double x, double y) {
    if (x < p.a - tol::kDomainSlack || x > p.b + tol::kDomainSlack)
        throw std::domain_error("x=" + g17(x) + " outside the Scanner width box [" +
                                g17(p.a) + ", " + g17(p.b) + "]");
    if (y < p.a - tol::kDomainSlack || y > p.c + tol::kDomainSlack)
        throw std::domain_error("y=" + g17(y) + " outside the Invader width box [" +
                                g17(p.a) + ", " + g17(p.c) + "]");
}

} // namespace

void validate_params(const GameParams& p) {
    check_finite("a", p.a);
    check_finite("b", p.b);
    check_finite("c", p.c);
    check_finite("U", p.U);
    check_finite("V", p.V);
    check_finite("C_S", p.C_S);
    check_finite("C_I", p.C_I);
    check_finite("F", p.F);
    check_finite("q", p.q);
    if (!(p.a > 0.0)) fail("a must be > 0 (got " + g17(p.a) + ")");
    if (!(p.a <= p.c)) fail("a must be <= c (got a=" + g17(p.a) + ", c=" + g17(p.c) + ")");
    if (!(p.c <= p.b)) fail("c must be <= b (got c=" + g17(p.c) + ", b=" + g17(p.b) + ")");
    if (!(p.b < 0.5)) fail("b must be < 0.5 (got b=" + g17(p.b) + ")");
    if (!(p.U > 0.0)) fail("U must be > 0 (got " + g17(p.U) + ")");
    if (!(p.V > 0.0)) fail("V must be > 0 (got " + g17(p.V) + ")");
    if (!(p.C_S > 0.0)) fail("C_S must be > 0 (got " + g17(p.C_S) + ")");
    if (!(p.C_I > 0.0)) fail("C_I must be > 0 (got " + g17(p.C_I) + ")");
    if (!(p.F >= 0.0)) fail("F must be >= 0 (got " + g17(p.F) + ")");
    if (!(p.q >= 0.0 && p.q <= 1.0)) fail("q must lie in [0, 1] (got " + g17(p.q) + ")");
}

double threshold_T(const GameParams& p) {
    return (p.U - p.F - p.C_I) / p.U;
}

double threshold_R(const GameParams& p, Regime regime) {
    if (regime == Regime::known) return (p.C_S - p.F) / p.V;
    if (p.q == 0.0)
        throw std::domain_error("indifference level undefined at q = 0; "
                                "that regime has a dedicated solver branch");
    return (p.C_S - p.F - (1.0 - p.q) * p.V * p.a) / (p.q * p.V);
}

DerivedConstants derived_constants(const GameParams& p, Regime regime) {
    return DerivedConstants{threshold_T(p), threshold_R(p, regime)};
}

double invader_apex(const GameParams& p, double x) {
    return (threshold_T(p) - x) / 2.0;
}

double invader_apex_expanded(const GameParams& p, double x) {
    return (p.U * (1.0 - x) - p.F - p.C_I) / (2.0 * p.U);
}

double payoff_invader(const GameParams& p, double x, double y) {
    check_domain(p, x, y);
    return p.U * (1.0 - x - y) * y - p.F * (x + y) - p.C_I * y;
}

double payoff_scanner(const GameParams& p, double x, double y) {
    check_domain(p, x, y);
    return p.F * (x + y) - p.V * y * (1.0 - x - y) - p.C_S * x;
}

double payoff_scanner_expected(const GameParams& p, double x, double y) {
    check_domain(p, x, y);
    double vs_type = p.F * (x + y) - p.V * y * (1.0 - x - y) - p.C_S * x;
    double vs_min = p.F * (x + p.a) - p.V * p.a * (1.0 - x - p.a) - p.C_S * x;
    return p.q * vs_type + (1.0 - p.q) * vs_min;
}

double payoff_invader_expanded(const GameParams& p, double x, double y) {
    check_domain(p, x, y);
    return (p.U * (1.0 - x) - p.F - p.C_I) * y - p.U * y * y - p.F * x;
}

double payoff_scanner_expanded(const GameParams& p, double x, double y) {
    check_domain(p, x, y);
    return x * (p.F + p.V * y - p.C_S) + y * (p.F - p.V + p.V * y);
}

double payoff_scanner_expected_expanded(const GameParams& p, double x, double y) {
    check_domain(p, x, y);
    return (p.F - p.C_S + (1.0 - p.q) * p.V * p.a + p.V * p.q * y) * x +
           p.q * y * (p.F - p.V + p.V * y) +
           (1.0 - p.q) * p.a * (p.F - p.V + p.V * p.a);
}

} // namespace scangame
