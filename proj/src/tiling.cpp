#include "scangame/tiling.hpp"

#include "scangame/parallel.hpp"
#include "scangame/rng.hpp"
#include "scangame/textfmt.hpp"
#include "scangame/tolerances.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>

namespace scangame {

const char* tile_case_name(TileCase t) {
    return t == TileCase::compact ? "compact" : "loose";
}

bool bands_intersect(const Band& s, const Band& i) {
    return s.start <= i.start + i.width && i.start <= s.start + s.width;
}

namespace {

// Guard so a pathologically small x + y cannot ask for billions of bands.
constexpr long long kMaxTiles = 50'000'000;

struct TileGeometry {
    long long M = 0;
    bool compact = true;
};

void check_widths(double x, double y) {
    if (!(x > 0.0) || !(x < 1.0) || !std::isfinite(x))
        throw std::domain_error("band width x must lie in (0, 1), got " + g17(x));
    if (!(y > 0.0) || !(y < 1.0) || !std::isfinite(y))
        throw std::domain_error("band width y must lie in (0, 1), got " + g17(y));
    if (!(x + y <= 1.0))
        throw std::domain_error("band widths must satisfy x + y <= 1, got " +
                                g17(x) + " + " + g17(y));
}

// M = largest whole number of (x+y)-tiles fitting in [0, 1], evaluated on
// the given doubles so every consumer sees one consistent layout.  The
// leftover-vs-y comparison decides the case; ties (within kTie) go compact.
TileGeometry tile_geometry(double x, double y) {
    double s = x + y;
    double m = std::floor(1.0 / s);
    while ((m + 1.0) * s <= 1.0) m += 1.0;
    while (m > 1.0 && m * s > 1.0) m -= 1.0;
    double leftover = 1.0 - m * s;
    TileGeometry g;
    g.M = static_cast<long long>(m);
    g.compact = leftover <= y + tol::kTie;
    return g;
}

} // namespace

double detection_probability_exact(double x, double y) {
    check_widths(x, y);
    TileGeometry g = tile_geometry(x, y);
    double m = static_cast<double>(g.M);
    return g.compact ? 1.0 / m : 1.0 / (m + 1.0);
}

TilingSolution build_tilings(double x, double y) {
    check_widths(x, y);
    TileGeometry g = tile_geometry(x, y);
    if (g.M > kMaxTiles)
        throw std::length_error("tiling would need " + std::to_string(g.M) +
                                " bands; refusing to materialize");

    double s = x + y;
    double m = static_cast<double>(g.M);
    TilingSolution sol;
    sol.x = x;
    sol.y = y;
    sol.M = g.M;
    sol.tile_case = g.compact ? TileCase::compact : TileCase::loose;

    if (g.compact) {
        // Scanner: one band per tile, right-aligned.  Starts are computed as
        // (k-1)(x+y) + y rather than k(x+y) - x so the k = 1 band starts at
        // exactly y and the touch against an Invader band [0, y] survives
        // floating point.
        sol.scanner_bands.reserve(static_cast<std::size_t>(g.M));
        for (long long k = 1; k <= g.M; ++k)
            sol.scanner_bands.push_back(Band{(double)(k - 1) * s + y, x});

        // Invader: right-aligned in each tile, then shifted left by a ladder
        // of multiples of epsilon so consecutive gaps are x + epsilon > x.
        // Admissible range is (0, x/M); take the midpoint.
        sol.epsilon = x / (2.0 * m);
        sol.invader_bands.reserve(static_cast<std::size_t>(g.M));
        for (long long k = 1; k <= g.M; ++k) {
            double shift = sol.epsilon * static_cast<double>(g.M + 1 - k);
            sol.invader_bands.push_back(Band{(double)k * s - y - shift, y});
        }
        sol.prob = 1.0 / m;
    } else {
        // Scanner: the compact layout plus one band flush against 1.  Every
        // gap stays <= y, so width-y bands cannot hide.
        sol.scanner_bands.reserve(static_cast<std::size_t>(g.M + 1));
        for (long long k = 1; k <= g.M; ++k)
            sol.scanner_bands.push_back(Band{(double)(k - 1) * s + y, x});
        sol.scanner_bands.push_back(Band{1.0 - x, x});

        // Invader: left-aligned with stride x + y + epsilon, plus one band
        // flush against 1.  Admissible shift is (0, (1 - y - M(x+y))/(M-1));
        // with a single tile the stride is unused and epsilon degenerates
        // to zero (layout {[0, y], [1-y, 1]}).
        sol.epsilon = g.M == 1 ? 0.0 : (1.0 - y - m * s) / (2.0 * (m - 1.0));
        sol.invader_bands.reserve(static_cast<std::size_t>(g.M + 1));
        for (long long k = 1; k <= g.M; ++k)
            sol.invader_bands.push_back(Band{(double)(k - 1) * (s + sol.epsilon), y});
        sol.invader_bands.push_back(Band{1.0 - y, y});
        sol.prob = 1.0 / (m + 1.0);
    }
    sol.value = g.compact ? 1.0 / m : 1.0 / (m + 1.0);
    return sol;
}

std::string check_tiling_invariants(const TilingSolution& sol) {
    auto bad = [](const std::string& msg) { return msg; };

    std::size_t n_s = sol.scanner_bands.size();
    std::size_t n_i = sol.invader_bands.size();
    std::size_t expect =
        static_cast<std::size_t>(sol.tile_case == TileCase::compact ? sol.M : sol.M + 1);
    if (n_s != expect)
        return bad("scanner band count " + std::to_string(n_s) + " != " +
                   std::to_string(expect));
    if (n_i != expect)
        return bad("invader band count " + std::to_string(n_i) + " != " +
                   std::to_string(expect));

    if (sol.prob != 1.0 / static_cast<double>(n_s))
        return bad("band probability is not the uniform 1/count");
    if (sol.value != sol.prob)
        return bad("value does not match the uniform band probability");

    // Scanner bands may overlap (the final band of a loose layout backs onto
    // its neighbour whenever x exceeds the leftover); they only need to be
    // ordered by start.  Invader bands must be pairwise disjoint, which the
    // gap > x check below subsumes, so ordering by start suffices here too.
    auto check_list = [&](const std::vector<Band>& bands, double width,
                          const char* who) -> std::string {
        for (std::size_t k = 0; k < bands.size(); ++k) {
            const Band& band = bands[k];
            if (std::abs(band.width - width) > tol::kGeometry)
                return bad(std::string(who) + " band " + std::to_string(k) +
                           " width " + g17(band.width) + " != " + g17(width));
            if (band.start < -tol::kGeometry || band.end() > 1.0 + tol::kGeometry)
                return bad(std::string(who) + " band " + std::to_string(k) +
                           " escapes [0, 1]: [" + g17(band.start) + ", " +
                           g17(band.end()) + "]");
            if (k > 0 && band.start < bands[k - 1].start - tol::kGeometry)
                return bad(std::string(who) + " bands " + std::to_string(k - 1) +
                           " and " + std::to_string(k) + " out of order");
        }
        return std::string();
    };
    if (auto msg = check_list(sol.scanner_bands, sol.x, "scanner"); !msg.empty())
        return msg;
    if (auto msg = check_list(sol.invader_bands, sol.y, "invader"); !msg.empty())
        return msg;

    // Scanner gaps at most y (no width-y band slips through); invader gaps
    // strictly greater than x (no width-x band touches two).
    for (std::size_t k = 1; k < n_s; ++k) {
        double gap = sol.scanner_bands[k].start - sol.scanner_bands[k - 1].end();
        if (gap > sol.y + tol::kGeometry)
            return bad("scanner gap " + std::to_string(k) + " is " + g17(gap) +
                       " > y = " + g17(sol.y));
    }
    for (std::size_t k = 1; k < n_i; ++k) {
        double gap = sol.invader_bands[k].start - sol.invader_bands[k - 1].end();
        if (gap <= sol.x - tol::kGeometry)
            return bad("invader gap " + std::to_string(k) + " is " + g17(gap) +
                       " <= x = " + g17(sol.x));
    }

    // Leading/trailing scanner gaps must also stay <= y.
    if (!sol.scanner_bands.empty()) {
        if (sol.scanner_bands.front().start > sol.y + tol::kGeometry)
            return bad("leading scanner gap exceeds y");
        if (1.0 - sol.scanner_bands.back().end() > sol.y + tol::kGeometry)
            return bad("trailing scanner gap exceeds y");
    }
    return std::string();
}

SimResult simulate_detection(const TilingSolution& sol, long long trials,
                             std::uint64_t seed) {
    if (trials <= 0)
        throw std::domain_error("trials must be positive");
    if (sol.scanner_bands.empty() || sol.invader_bands.empty())
        throw std::domain_error("tiling solution has no bands");

    auto n_s = static_cast<std::uint32_t>(sol.scanner_bands.size());
    auto n_i = static_cast<std::uint32_t>(sol.invader_bands.size());
    const Band* sb = sol.scanner_bands.data();
    const Band* ib = sol.invader_bands.data();

    std::atomic<long long> total_hits{0};
    parallel_for_chunks(static_cast<std::size_t>(trials),
                        [&](std::size_t lo, std::size_t hi) {
        long long hits = 0;
        for (std::size_t t = lo; t < hi; ++t) {
            std::uint64_t ctr = static_cast<std::uint64_t>(t) * 2;
            const Band& s = sb[rng_index(rng_at(seed, ctr), n_s)];
            const Band& i = ib[rng_index(rng_at(seed, ctr + 1), n_i)];
            hits += bands_intersect(s, i) ? 1 : 0;
        }
        total_hits.fetch_add(hits, std::memory_order_relaxed);
    });

    SimResult r;
    r.hits = total_hits.load();
    r.trials = trials;
    r.seed = seed;
    r.estimate = static_cast<double>(r.hits) / static_cast<double>(trials);
    r.std_error =
        std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(trials));
    return r;
}

SaddleReport verify_saddle_bounds(const TilingSolution& sol, int grid_points) {
    if (grid_points < 2)
        throw std::domain_error("saddle verification needs at least 2 grid points");

    SaddleReport rep;
    rep.value = sol.value;
    rep.grid_points = grid_points;

    // Hit test with a hair of slack: placements that touch a band endpoint
    // in exact arithmetic must not lose the touch to endpoint rounding.
    auto hits_band = [](const Band& band, double start, double width) {
        return band.start <= start + width + tol::kIntersectSlack &&
               start <= band.end() + tol::kIntersectSlack;
    };

    // Sweeps a band of width `moving_width` over [0, 1 - moving_width] and
    // records the worst hit count against `bands`.
    auto sweep = [&](double moving_width, const std::vector<Band>& bands,
                     int& worst_hits, double& worst_start, bool track_min) {
        double span = 1.0 - moving_width;
        worst_hits = track_min ? std::numeric_limits<int>::max() : -1;
        worst_start = 0.0;
        for (int i = 0; i < grid_points; ++i) {
            double t = i == grid_points - 1
                           ? span
                           : span * static_cast<double>(i) /
                                 static_cast<double>(grid_points - 1);
            int count = 0;
            for (const Band& band : bands)
                if (hits_band(band, t, moving_width)) ++count;
            bool worse = track_min ? count < worst_hits : count > worst_hits;
            if (worse) {
                worst_hits = count;
                worst_start = t;
            }
        }
    };

    // Lower bound: any Invader band of width y meets >= 1 scanner band.
    sweep(sol.y, sol.scanner_bands, rep.min_scanner_hits,
          rep.worst_invader_start, /*track_min=*/true);
    // Upper bound: any Scanner band of width x meets <= 1 invader band.
    sweep(sol.x, sol.invader_bands, rep.max_invader_hits,
          rep.worst_scanner_start, /*track_min=*/false);

    rep.pass = rep.min_scanner_hits >= 1 && rep.max_invader_hits <= 1;
    return rep;
}

std::string serialize_tiling(const TilingSolution& sol) {
    std::ostringstream out;
    out << "tiling x=" << g17(sol.x) << " y=" << g17(sol.y) << " M=" << sol.M
        << " case=" << tile_case_name(sol.tile_case)
        << " epsilon=" << g17(sol.epsilon) << " prob=" << g17(sol.prob)
        << " value=" << g17(sol.value) << "\n";
    for (const Band& band : sol.scanner_bands)
        out << "S " << g17(band.start) << " " << g17(band.width) << "\n";
    for (const Band& band : sol.invader_bands)
        out << "I " << g17(band.start) << " " << g17(band.width) << "\n";
    return out.str();
}

std::string serialize_saddle_report(const SaddleReport& rep) {
    std::ostringstream out;
    out << "saddle pass=" << (rep.pass ? 1 : 0) << " value=" << g17(rep.value)
        << " grid_points=" << rep.grid_points << "\n"
        << "saddle min_scanner_hits=" << rep.min_scanner_hits
        << " at_invader_start=" << g17(rep.worst_invader_start) << "\n"
        << "saddle max_invader_hits=" << rep.max_invader_hits
        << " at_scanner_start=" << g17(rep.worst_scanner_start) << "\n";
    return out.str();
}

} // namespace scangame
