// Parameter sweeps over the width-selection game: re-solve the game along a
// uniform grid of F or q values and flag discontinuities in the scanner's
// equilibrium width.
#pragma once

#include <string>
#include <vector>

#include "scangame/equilibrium.hpp"
#include "scangame/model.hpp"

namespace scangame {

enum class SweepParam { F, q };

const char* sweep_param_name(SweepParam p);

struct SweepSpec {
    SweepParam param = SweepParam::F;
    double from = 0.0;
    double to = 0.0;
    int steps = 2;          // number of samples; endpoints included
    Regime regime = Regime::known;
    GameParams base;        // all fields except the swept one
};

struct SweepRow {
    double param_value = 0.0;
    Equilibrium eq;
    bool jump = false;      // scanner width moved by more than the step-
                            // proportional threshold relative to the previous row
};

// Discontinuity threshold: a step of h in the swept parameter may move x
// continuously by O(h); a change exceeding 5*h*(b-a) marks a genuine jump
// between solution branches rather than smooth drift.
double sweep_jump_threshold(const SweepSpec& spec);

// Samples spec.steps points uniformly on [from, to] (last point exactly at
// `to`), validates and solves each sampled game, and flags jumps in x.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// CSV serialization: header "param,case,x,y,p_lin,p_exact,v_S,v_I,jump",
// six fixed decimals for numeric cells, jump rendered as 0/1, '\n' endings.
std::string sweep_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows);

} // namespace scangame
