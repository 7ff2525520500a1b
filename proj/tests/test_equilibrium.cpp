#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "scangame/equilibrium.hpp"
#include "scangame/rng.hpp"
#include "scangame/tolerances.hpp"

using namespace scangame;

namespace {

// a=0.01, b=0.3, c=0.2, unit rates, C_S=0.4, C_I=0.1: the benchmark box.
GameParams bench_params(double F = 0.2) {
    GameParams p;
    p.a = 0.01;
    p.b = 0.3;
    p.c = 0.2;
    p.U = 1.0;
    p.V = 1.0;
    p.C_S = 0.4;
    p.C_I = 0.1;
    p.F = F;
    return p;
}

GameParams random_params(std::uint64_t seed, std::uint64_t n) {
    RngStream rng{seed + n * 1000003ULL, 0};
    GameParams p;
    p.a = rng.next_in(0.001, 0.1);
    p.c = rng.next_in(p.a, 0.45);
    p.b = rng.next_in(p.c, 0.499);
    p.U = rng.next_in(0.1, 3.0);
    p.V = rng.next_in(0.1, 3.0);
    p.C_S = rng.next_in(0.01, 2.0);
    p.C_I = rng.next_in(0.01, 2.0);
    p.F = rng.next_in(0.0, 1.5);
    p.q = rng.next_in(0.0, 1.0);
    return p;
}

// Brute-force argmax of the Scanner payoff over an x grid.
double grid_best_x(const GameParams& p, double y, int n = 2001) {
    double best_x = p.a;
    double best_v = payoff_scanner(p, p.a, y);
    for (int i = 1; i < n; ++i) {
        const double x =
            i == n - 1 ? p.b : p.a + (p.b - p.a) * i / (n - 1);
        const double v = payoff_scanner(p, x, y);
        if (v > best_v) {
            best_v = v;
            best_x = x;
        }
    }
    return best_x;
}

// Brute-force argmax of the Invader payoff over a y grid.
double grid_best_y(const GameParams& p, double x, int n = 2001) {
    double best_y = p.a;
    double best_v = payoff_invader(p, x, p.a);
    for (int j = 1; j < n; ++j) {
        const double y =
            j == n - 1 ? p.c : p.a + (p.c - p.a) * j / (n - 1);
        const double v = payoff_invader(p, x, y);
        if (v > best_v) {
            best_v = v;
            best_y = y;
        }
    }
    return best_y;
}

} // namespace

TEST_CASE("scanner best response is bang-bang around the indifference level") {
    GameParams p = bench_params(0.2);  // R = (0.4 - 0.2) / 1 = 0.2
    p.c = 0.3;                         // allow y above 0.2 in this check

    SUBCASE("below the level: minimal scan") {
        const BestResponse br = best_response_scanner(p, 0.1, Regime::known);
        CHECK_FALSE(br.is_interval);
        CHECK(br.value == p.a);
        CHECK(grid_best_x(p, 0.1) == p.a);
    }
    SUBCASE("above the level: saturated scan") {
        const BestResponse br = best_response_scanner(p, 0.25, Regime::known);
        CHECK_FALSE(br.is_interval);
        CHECK(br.value == p.b);
        CHECK(grid_best_x(p, 0.25) == p.b);
    }
    SUBCASE("at the level: the whole interval") {
        const BestResponse br = best_response_scanner(p, 0.2, Regime::known);
        CHECK(br.is_interval);
        CHECK(br.lo == p.a);
        CHECK(br.hi == p.b);
        CHECK(br.contains(0.17));
        // Payoff is flat in x at indifference.
        CHECK(payoff_scanner(p, p.a, 0.2) ==
              doctest::Approx(payoff_scanner(p, p.b, 0.2)).epsilon(1e-12));
    }
    SUBCASE("domain enforced") {
        CHECK_THROWS_AS(best_response_scanner(p, 0.31, Regime::known),
                        std::domain_error);
        CHECK_THROWS_AS(best_response_scanner(p, 0.005, Regime::known),
                        std::domain_error);
    }
}

TEST_CASE("invader best response clamps the apex") {
    GameParams p = bench_params(0.2);  // T = 0.7
    p.c = 0.3;

    SUBCASE("interior apex") {
        CHECK(best_response_invader(p, 0.3) ==
              doctest::Approx(0.2).epsilon(1e-15));
        CHECK(std::abs(grid_best_y(p, 0.3) - 0.2) <= (p.c - p.a) / 2000.0);
    }
    SUBCASE("clamped to the cap") {
        // x <= T - 2c = 0.1 pushes the apex above c.
        CHECK(best_response_invader(p, 0.05) == p.c);
        CHECK(grid_best_y(p, 0.05) == p.c);
    }
    SUBCASE("clamped to the floor") {
        GameParams low = p;
        low.C_I = 0.7;  // T = 0.1, so T - 2a = 0.08 <= x pulls the apex under a
        CHECK(best_response_invader(low, 0.09) == low.a);
        CHECK(grid_best_y(low, 0.09) == low.a);
    }
    SUBCASE("domain enforced") {
        CHECK_THROWS_AS(best_response_invader(p, 0.35), std::domain_error);
    }
}

TEST_CASE("benchmark equilibria, known type") {
    SUBCASE("no fine: minimal scan against a capped invader") {
        const Equilibrium eq = solve_known_type(bench_params(0.0));
        CHECK(eq.case_id == CaseId::i6);
        CHECK(eq.x == 0.01);
        CHECK(eq.y == 0.2);
        CHECK(eq.p_detect == doctest::Approx(0.21).epsilon(1e-15));
    }
    SUBCASE("high fine: saturated scan, interior invader") {
        const Equilibrium eq = solve_known_type(bench_params(0.3));
        CHECK(eq.case_id == CaseId::i11);
        CHECK(eq.x == 0.3);
        CHECK(eq.y == doctest::Approx(0.15).epsilon(1e-15));
        // 0.3 * 0.45 - 0.15 * 0.55 - 0.4 * 0.3
        CHECK(eq.v_S == doctest::Approx(-0.0675).epsilon(1e-12));
    }
    SUBCASE("wider invader cap: crossing at the scanner's saturation point") {
        GameParams p = bench_params(0.2);
        p.c = 0.3;
        // R and L(b) are both exactly 0.2 here, so the profile sits on the
        // boundary between the interior crossing and the saturated-scan case;
        // rounding decides the label, but not the equilibrium point.
        const Equilibrium eq = solve_known_type(p);
        CHECK((eq.case_id == CaseId::i7 || eq.case_id == CaseId::i11));
        CHECK(eq.near_boundary);
        CHECK(eq.x == doctest::Approx(0.3).epsilon(1e-12));
        CHECK(eq.y == doctest::Approx(0.2).epsilon(1e-12));
    }
}

TEST_CASE("all eleven dispatch cases are reachable") {
    struct Fixture {
        const char* label;
        GameParams p;
        CaseId expect;
        double x;
        double y;
    };
    std::vector<Fixture> fixtures;

    {
        GameParams p = bench_params(0.395);
        p.C_I = 0.3;  // T = 0.305, L(b) = 0.0025 < a; R = 0.005 < a
        fixtures.push_back({"i1", p, CaseId::i1, 0.3, 0.01});
    }
    {
        GameParams p = bench_params(0.395);  // T = 0.505, L(b) = 0.1025
        fixtures.push_back({"i2", p, CaseId::i2, 0.3, 0.1025});
    }
    {
        GameParams p = bench_params(0.395);
        p.c = 0.05;  // L(b) = 0.1025 > c
        fixtures.push_back({"i3", p, CaseId::i3, 0.3, 0.05});
    }
    {
        GameParams p = bench_params(0.0);
        p.C_I = 0.98;  // R = 0.4 > c; T = 0.02, L(a) = 0.005 < a
        fixtures.push_back({"i4", p, CaseId::i4, 0.01, 0.01});
    }
    {
        GameParams p = bench_params(0.0);
        p.C_I = 0.7;  // T = 0.3, L(a) = 0.145
        fixtures.push_back({"i5", p, CaseId::i5, 0.01, 0.145});
    }
    {
        GameParams p = bench_params(0.0);  // R = 0.4 > c, L(a) = 0.445 > c
        fixtures.push_back({"i6", p, CaseId::i6, 0.01, 0.2});
    }
    {
        GameParams p = bench_params(0.15);
        p.c = 0.3;  // R = 0.25, L(b) = 0.225 <= R <= L(a) = 0.37
        fixtures.push_back({"i7", p, CaseId::i7, 0.25, 0.25});
    }
    {
        GameParams p = bench_params(0.25);
        p.C_I = 0.73;  // R = 0.15; T = 0.02, L(a) = 0.005 <= a
        fixtures.push_back({"i8", p, CaseId::i8, 0.01, 0.01});
    }
    {
        GameParams p = bench_params(0.25);
        p.C_I = 0.55;  // T = 0.2, L(a) = 0.095 < R = 0.15
        fixtures.push_back({"i9", p, CaseId::i9, 0.01, 0.095});
    }
    {
        GameParams p = bench_params(0.1);
        p.c = 0.1;
        p.C_S = 0.15;  // R = 0.05; T = 0.8, L(b) = 0.25 > c
        fixtures.push_back({"i10", p, CaseId::i10, 0.3, 0.1});
    }
    {
        GameParams p = bench_params(0.3);  // R = 0.1 < L(b) = 0.15 < c
        fixtures.push_back({"i11", p, CaseId::i11, 0.3, 0.15});
    }

    for (const Fixture& f : fixtures) {
        const Equilibrium eq = solve_known_type(f.p);
        INFO(f.label);
        CHECK(eq.case_id == f.expect);
        CHECK(eq.x == doctest::Approx(f.x).epsilon(1e-14));
        CHECK(eq.y == doctest::Approx(f.y).epsilon(1e-14));
    }
}

TEST_CASE("equilibria satisfy the fixed-point property") {
    int i7_seen = 0;
    for (std::uint64_t n = 0; n < 400; ++n) {
        const GameParams p = random_params(909, n);
        const Equilibrium eq = solve_known_type(p);
        INFO("n=", n, " case=", case_name(eq.case_id));

        // Invader side: y is the exact best response to x.
        CHECK(std::abs(eq.y - best_response_invader(p, eq.x)) <= tol::kTie);
        // Scanner side: x is inside the (possibly set-valued) best response.
        CHECK(best_response_scanner(p, eq.y, Regime::known).contains(eq.x));
        // Box membership.
        CHECK(eq.x >= p.a);
        CHECK(eq.x <= p.b);
        CHECK(eq.y >= p.a);
        CHECK(eq.y <= p.c);
        CHECK(eq.p_detect == eq.x + eq.y);
        if (eq.case_id == CaseId::i7) ++i7_seen;
    }
    CHECK(i7_seen > 0);  // the draw must exercise the interior case
}

TEST_CASE("interior crossing at exact dispatch boundaries") {
    // Dyadic parameters keep every threshold comparison exact in binary
    // floating point, so the boundary is hit with zero rounding slack.
    GameParams p;
    p.U = 1.0;
    p.V = 1.0;
    p.F = 0.25;
    p.C_I = 0.25;  // T = 0.5 exactly
    p.a = 0.0625;
    p.b = 0.25;

    SUBCASE("indifference level meets L(b): crossing lands on x = b") {
        p.C_S = 0.375;  // R = 0.125 = L(b)
        p.c = 0.1875;
        const Equilibrium eq = solve_known_type(p);
        CHECK(eq.case_id == CaseId::i7);
        CHECK(eq.x == 0.25);    // exactly b
        CHECK(eq.y == 0.125);   // exactly R
        CHECK(eq.near_boundary);
    }
    SUBCASE("indifference level meets L(a): crossing lands on x = a") {
        p.C_S = 0.46875;  // R = 0.21875 = L(a)
        p.c = 0.234375;
        const Equilibrium eq = solve_known_type(p);
        CHECK(eq.case_id == CaseId::i7);
        CHECK(eq.x == 0.0625);    // exactly a
        CHECK(eq.y == 0.21875);   // exactly L(a)
        CHECK(eq.near_boundary);
    }
}

TEST_CASE("indifference level exactly at the invader cap selects the a side") {
    // R == c: every (x, c) is an equilibrium; the solver reports the one
    // continuous with the R > c region.
    const GameParams p = bench_params(0.2);  // R = 0.2 == c
    const Equilibrium eq = solve_known_type(p);
    CHECK(eq.case_id == CaseId::i6);
    CHECK(eq.x == 0.01);
    CHECK(eq.y == 0.2);
    CHECK(eq.near_boundary);
}

TEST_CASE("unknown type coincides with known type at q = 1") {
    for (std::uint64_t n = 0; n < 200; ++n) {
        GameParams p = random_params(1111, n);
        p.q = 1.0;
        const Equilibrium known = solve_known_type(p);
        const Equilibrium unknown = solve_unknown_type(p);
        INFO("n=", n);
        CHECK(unknown.case_id == known.case_id);
        CHECK(unknown.x == known.x);
        CHECK(unknown.y == known.y);
        CHECK(unknown.v_S == doctest::Approx(known.v_S).epsilon(1e-12));
    }
}

TEST_CASE("benchmark equilibria, unknown type") {
    SUBCASE("even odds raise the indifference level out of the box") {
        GameParams p = bench_params(0.2);
        p.c = 0.3;
        p.q = 0.5;  // R = (0.2 - 0.005) / 0.5 = 0.39 > c
        const Equilibrium eq = solve_unknown_type(p);
        CHECK(eq.case_id == CaseId::i6);
        CHECK(eq.x == 0.01);
        CHECK(eq.y == 0.3);
    }
    SUBCASE("pure passive type: scanning cost decides alone") {
        GameParams p = bench_params(0.2);
        p.q = 0.0;  // F + V a - C_S = -0.19 < 0
        const Equilibrium eq = solve_unknown_type(p);
        CHECK(eq.case_id == CaseId::q0);
        CHECK(eq.x == 0.01);
        CHECK(eq.y == 0.01);
    }
    SUBCASE("pure passive type with a profitable fine") {
        GameParams p = bench_params(0.45);
        p.q = 0.0;  // F + V a - C_S = 0.06 > 0
        const Equilibrium eq = solve_unknown_type(p);
        CHECK(eq.case_id == CaseId::q0);
        CHECK(eq.x == 0.3);
        CHECK(eq.y == 0.01);
    }
}

TEST_CASE("fixed point holds for the unknown type with positive prior") {
    for (std::uint64_t n = 0; n < 200; ++n) {
        GameParams p = random_params(1212, n);
        if (p.q == 0.0) p.q = 0.5;
        const Equilibrium eq = solve_unknown_type(p);
        INFO("n=", n, " case=", case_name(eq.case_id));
        CHECK(std::abs(eq.y - best_response_invader(p, eq.x)) <= tol::kTie);
        CHECK(best_response_scanner(p, eq.y, Regime::unknown).contains(eq.x));
    }
}

TEST_CASE("comparative statics on the saturated-scan branch") {
    // On the branch where the Scanner saturates, the Invader's width
    // L(b) = (T - b)/2 shrinks as the fine grows, and so does detection.
    const Equilibrium lo = solve_known_type(bench_params(0.25));
    const Equilibrium hi = solve_known_type(bench_params(0.35));
    REQUIRE(lo.case_id == CaseId::i11);
    REQUIRE(hi.case_id == CaseId::i11);
    CHECK(lo.y > hi.y);
    CHECK(lo.p_detect > hi.p_detect);
    CHECK(lo.v_I > hi.v_I);  // a larger fine hurts the Invader
}

TEST_CASE("equilibrium serialization shape") {
    const std::string text = serialize_equilibrium(solve_known_type(bench_params(0.0)));
    CHECK(text.find("regime known\n") != std::string::npos);
    CHECK(text.find("case i6\n") != std::string::npos);
    CHECK(text.find("x 0.01") != std::string::npos);
    CHECK(text.find("p_detect_linear") != std::string::npos);
    CHECK(text.find("near_boundary") != std::string::npos);
}
