#pragma once
// Step one of the game: both players have committed to band widths x and y,
// and only the placements remain.  The value of that placement game is
// determined by how many bands of width x+y tile the unit interval; both
// players can guarantee it with uniform mixtures over explicit band lists.
//
// Two layouts arise.  With M = floor(1/(x+y)), the leftover 1 - M(x+y)
// either fits under y ("compact": the Scanner pins the value to 1/M with M
// bands) or does not ("loose": the Invader escapes to 1/(M+1) and both sides
// use M+1 bands).

#include "scangame/model.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace scangame {

enum class TileCase { compact, loose };

const char* tile_case_name(TileCase t);

// Uniform mixed strategies achieving the placement-game value.
struct TilingSolution {
    double x = 0.0;               // Scanner band width
    double y = 0.0;               // Invader band width
    long long M = 0;              // whole tiles of width x + y in [0, 1]
    TileCase tile_case = TileCase::compact;
    double epsilon = 0.0;         // separation shift used by the band layout
    double prob = 0.0;            // uniform weight on each band
    double value = 0.0;           // detection probability at equilibrium
    std::vector<Band> scanner_bands;
    std::vector<Band> invader_bands;
};

// Closed-interval overlap: touching endpoints count as a hit.
bool bands_intersect(const Band& s, const Band& i);

// Exact value of the placement game for widths x, y (0 < x, y < 1,
// x + y <= 1): 1/M when the leftover is at most y, else 1/(M+1).
// Ties at the case boundary resolve to the compact branch.
double detection_probability_exact(double x, double y);

// Builds the explicit uniform tilings achieving the value.  Separation
// shifts use the midpoint of their admissible interval; the single-tile
// loose layout degenerates to {[0, y], [1-y, 1]} with a zero shift.
TilingSolution build_tilings(double x, double y);

// Structural audit of a solution: band counts, widths, containment in
// [0, 1], gap conditions (scanner gaps <= y, invader gaps > x), uniform
// weights, and the value identity.  Returns an empty string when every
// check passes, else a description of the first failure.
std::string check_tiling_invariants(const TilingSolution& sol);

// Monte-Carlo estimate of the detection probability when both players play
// the uniform tilings.  Counter-based RNG: the same (trials, seed) pair
// yields the same estimate regardless of thread count.
struct SimResult {
    double estimate = 0.0;
    double std_error = 0.0;
    long long hits = 0;
    long long trials = 0;
    std::uint64_t seed = 0;
};

SimResult simulate_detection(const TilingSolution& sol, long long trials,
                             std::uint64_t seed);

// Grid check of the saddle bounds: every possible Invader placement is hit
// by at least one scanner band (value is guaranteed from below), and every
// possible Scanner placement hits at most one invader band (value is capped
// from above).  grid_points placements are swept per side, endpoints
// included.
struct SaddleReport {
    bool pass = false;
    double value = 0.0;
    int min_scanner_hits = 0;      // worst case over Invader placements
    double worst_invader_start = 0.0;
    int max_invader_hits = 0;      // worst case over Scanner placements
    double worst_scanner_start = 0.0;
    int grid_points = 0;
};

SaddleReport verify_saddle_bounds(const TilingSolution& sol, int grid_points);

// Plain-text record: one header line, then one line per band
// ("S <start> <width>" / "I <start> <width>").
std::string serialize_tiling(const TilingSolution& sol);

std::string serialize_saddle_report(const SaddleReport& rep);

} // namespace scangame
