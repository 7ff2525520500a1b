#pragma once
// Independent verification of the width solvers by brute force on a grid.
// Nothing here consults the case dispatch: payoffs are evaluated exhaustively
// over [a, b] x [a, c] and a candidate equilibrium is judged purely by how
// much either player could gain by deviating to a grid point.
//
// Tolerances follow a Lipschitz model: the payoff slopes are bounded by
// K_scanner = F + C_S + V c in x and K_invader = U + F + C_I + 2 U c in y,
// so a true equilibrium can lose at most K * h to a grid of pitch h.

#include "scangame/equilibrium.hpp"
#include "scangame/model.hpp"

#include <string>
#include <vector>

namespace scangame {

// Uniform grids over [a, b] (n_x points) and [a, c] (n_y points), endpoints
// included.
struct GridSpec {
    int n_x = 2001;
    int n_y = 2001;
};

struct NashCertificate {
    bool passed = false;
    double eps_scanner = 0.0;   // best payoff gain from an x-grid deviation
    double eps_invader = 0.0;   // best payoff gain from a y-grid deviation
    double tolerance = 0.0;     // max of the per-side Lipschitz allowances
    double K_scanner = 0.0;
    double K_invader = 0.0;
    double h_x = 0.0;
    double h_y = 0.0;
    double best_x_dev = 0.0;    // most profitable deviations found
    double best_y_dev = 0.0;
    int n_x = 0;
    int n_y = 0;
};

// Checks the candidate (x, y) against every grid deviation.  The Scanner
// side uses the regime payoff; the Invader side uses the strategic type's
// payoff, and is vacuous (eps = 0) when the unknown regime has q = 0 since
// the passive type has no width choice.
NashCertificate certify_equilibrium(const GameParams& p, double x, double y,
                                    GridSpec grid, Regime regime);

// One grid profile that is a mutual argmax up to the given slacks.
struct GridCell {
    int i = 0;                 // x index
    int j = 0;                 // y index
    double x = 0.0;
    double y = 0.0;
    double gap_scanner = 0.0;  // payoff deficit to the row argmax
    double gap_invader = 0.0;  // payoff deficit to the column argmax
};

struct GridNashResult {
    std::vector<GridCell> cells;   // ordered by (j, i)
    double tie_scanner = 0.0;
    double tie_invader = 0.0;
    int n_x = 0;
    int n_y = 0;
    double h_x = 0.0;
    double h_y = 0.0;
};

// Exhaustive scan for grid Nash profiles: (x_i, y_j) such that x_i is within
// tie_scanner of the best x response to y_j and y_j within tie_invader of
// the best y response to x_i.  The defaults treat only near-exact ties as
// co-maximizers; pass the Lipschitz allowances (K * h) to enumerate every
// profile that cannot be refuted at grid resolution.
GridNashResult find_grid_nash(const GameParams& p, GridSpec grid, Regime regime,
                              double tie_scanner = 1e-12,
                              double tie_invader = 1e-12);

// 4-connected components of the returned cells, each summarized by its
// bounding box and the member with the smallest normalized deficit.
struct CellCluster {
    int min_i = 0, max_i = 0;
    int min_j = 0, max_j = 0;
    std::size_t size = 0;
    GridCell best;
};

std::vector<CellCluster> cluster_cells(const std::vector<GridCell>& cells);

std::string serialize_certificate(const NashCertificate& cert);
std::string certificate_csv_line(const NashCertificate& cert);

} // namespace scangame
