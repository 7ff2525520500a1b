#include "scangame/oracle.hpp"

#include "scangame/parallel.hpp"
#include "scangame/textfmt.hpp"
#include "scangame/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace scangame {

namespace {

constexpr int kMaxGridPoints = 20001;

void check_grid(GridSpec grid) {
    if (grid.n_x < 2 || grid.n_y < 2)
        throw std::domain_error("grid needs at least 2 points per axis");
    if (grid.n_x > kMaxGridPoints || grid.n_y > kMaxGridPoints)
        throw std::domain_error("grid larger than " +
                                std::to_string(kMaxGridPoints) +
                                " points per axis");
}

double grid_point(double lo, double hi, int n, int i) {
    if (i == n - 1) return hi;                     // endpoint exactly
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

double grid_pitch(double lo, double hi, int n) {
    return (hi - lo) / static_cast<double>(n - 1);
}

// Direct payoff expressions (no domain checks: the grids are in-box by
// construction and these run in the innermost loops).
double scanner_payoff_raw(const GameParams& p, Regime regime, double x, double y) {
    double vs = p.F * (x + y) - p.V * y * (1.0 - x - y) - p.C_S * x;
    if (regime == Regime::known) return vs;
    double vs_min = p.F * (x + p.a) - p.V * p.a * (1.0 - x - p.a) - p.C_S * x;
    return p.q * vs + (1.0 - p.q) * vs_min;
}

double invader_payoff_raw(const GameParams& p, double x, double y) {
    return p.U * (1.0 - x - y) * y - p.F * (x + y) - p.C_I * y;
}

} // namespace

NashCertificate certify_equilibrium(const GameParams& p, double x, double y,
                                    GridSpec grid, Regime regime) {
    validate_params(p);
    check_grid(grid);
    if (x < p.a - tol::kDomainSlack || x > p.b + tol::kDomainSlack ||
        y < p.a - tol::kDomainSlack || y > p.c + tol::kDomainSlack)
        throw std::domain_error("candidate (" + g17(x) + ", " + g17(y) +
                                ") outside the strategy box");

    NashCertificate cert;
    cert.n_x = grid.n_x;
    cert.n_y = grid.n_y;
    cert.h_x = grid_pitch(p.a, p.b, grid.n_x);
    cert.h_y = grid_pitch(p.a, p.c, grid.n_y);
    cert.K_scanner = p.F + p.C_S + p.V * p.c;
    cert.K_invader = p.U + p.F + p.C_I + 2.0 * p.U * p.c;
    cert.tolerance = std::max(cert.K_scanner * cert.h_x, cert.K_invader * cert.h_y);

    double v_here_s = scanner_payoff_raw(p, regime, x, y);
    cert.best_x_dev = x;
    for (int i = 0; i < grid.n_x; ++i) {
        double xd = grid_point(p.a, p.b, grid.n_x, i);
        double gain = scanner_payoff_raw(p, regime, xd, y) - v_here_s;
        if (gain > cert.eps_scanner) {
            cert.eps_scanner = gain;
            cert.best_x_dev = xd;
        }
    }

    cert.best_y_dev = y;
    bool invader_moot = regime == Regime::unknown && p.q == 0.0;
    if (!invader_moot) {
        double v_here_i = invader_payoff_raw(p, x, y);
        for (int j = 0; j < grid.n_y; ++j) {
            double yd = grid_point(p.a, p.c, grid.n_y, j);
            double gain = invader_payoff_raw(p, x, yd) - v_here_i;
            if (gain > cert.eps_invader) {
                cert.eps_invader = gain;
                cert.best_y_dev = yd;
            }
        }
    }

    cert.passed = std::max(cert.eps_scanner, cert.eps_invader) <= cert.tolerance;
    return cert;
}

GridNashResult find_grid_nash(const GameParams& p, GridSpec grid, Regime regime,
                              double tie_scanner, double tie_invader) {
    validate_params(p);
    check_grid(grid);
    if (regime == Regime::unknown && p.q == 0.0)
        throw std::domain_error("grid search over the passive-type-only regime "
                                "is not defined (the Invader has no choice)");

    const int nx = grid.n_x;
    const int ny = grid.n_y;

    GridNashResult res;
    res.tie_scanner = tie_scanner;
    res.tie_invader = tie_invader;
    res.n_x = nx;
    res.n_y = ny;
    res.h_x = grid_pitch(p.a, p.b, nx);
    res.h_y = grid_pitch(p.a, p.c, ny);

    std::vector<double> xs(static_cast<std::size_t>(nx));
    std::vector<double> ys(static_cast<std::size_t>(ny));
    for (int i = 0; i < nx; ++i) xs[(std::size_t)i] = grid_point(p.a, p.b, nx, i);
    for (int j = 0; j < ny; ++j) ys[(std::size_t)j] = grid_point(p.a, p.c, ny, j);

    // Payoff matrices, row-major in j.  ~32 MB each at 2001 x 2001.
    std::vector<double> S(static_cast<std::size_t>(nx) * ny);
    std::vector<double> I(static_cast<std::size_t>(nx) * ny);
    parallel_for_chunks(static_cast<std::size_t>(ny), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t j = lo; j < hi; ++j) {
            double y = ys[j];
            double* srow = S.data() + j * nx;
            double* irow = I.data() + j * nx;
            for (int i = 0; i < nx; ++i) {
                srow[i] = scanner_payoff_raw(p, regime, xs[(std::size_t)i], y);
                irow[i] = invader_payoff_raw(p, xs[(std::size_t)i], y);
            }
        }
    });

    std::vector<double> row_max_s(static_cast<std::size_t>(ny),
                                  -std::numeric_limits<double>::infinity());
    std::vector<double> col_max_i(static_cast<std::size_t>(nx),
                                  -std::numeric_limits<double>::infinity());
    for (int j = 0; j < ny; ++j) {
        const double* srow = S.data() + static_cast<std::size_t>(j) * nx;
        const double* irow = I.data() + static_cast<std::size_t>(j) * nx;
        double best = srow[0];
        for (int i = 1; i < nx; ++i) best = std::max(best, srow[i]);
        row_max_s[(std::size_t)j] = best;
        for (int i = 0; i < nx; ++i)
            col_max_i[(std::size_t)i] = std::max(col_max_i[(std::size_t)i], irow[i]);
    }

    for (int j = 0; j < ny; ++j) {
        const double* srow = S.data() + static_cast<std::size_t>(j) * nx;
        const double* irow = I.data() + static_cast<std::size_t>(j) * nx;
        for (int i = 0; i < nx; ++i) {
            double gap_s = row_max_s[(std::size_t)j] - srow[i];
            double gap_i = col_max_i[(std::size_t)i] - irow[i];
            if (gap_s <= tie_scanner && gap_i <= tie_invader) {
                GridCell cell;
                cell.i = i;
                cell.j = j;
                cell.x = xs[(std::size_t)i];
                cell.y = ys[(std::size_t)j];
                cell.gap_scanner = gap_s;
                cell.gap_invader = gap_i;
                res.cells.push_back(cell);
            }
        }
    }
    return res;
}

std::vector<CellCluster> cluster_cells(const std::vector<GridCell>& cells) {
    std::vector<CellCluster> clusters;
    if (cells.empty()) return clusters;

    std::map<std::pair<int, int>, std::size_t> index;
    for (std::size_t k = 0; k < cells.size(); ++k)
        index[{cells[k].i, cells[k].j}] = k;

    // Normalized deficit used to pick a representative: scale each side by
    // the largest deficit seen so neither dominates by units alone.
    double scale_s = 0.0, scale_i = 0.0;
    for (const GridCell& c : cells) {
        scale_s = std::max(scale_s, c.gap_scanner);
        scale_i = std::max(scale_i, c.gap_invader);
    }
    if (scale_s <= 0.0) scale_s = 1.0;
    if (scale_i <= 0.0) scale_i = 1.0;
    auto rank = [&](const GridCell& c) {
        return std::max(c.gap_scanner / scale_s, c.gap_invader / scale_i);
    };

    std::vector<bool> seen(cells.size(), false);
    std::vector<std::size_t> stack;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (seen[k]) continue;
        CellCluster cl;
        cl.min_i = cl.max_i = cells[k].i;
        cl.min_j = cl.max_j = cells[k].j;
        cl.best = cells[k];
        cl.size = 0;
        stack.assign(1, k);
        seen[k] = true;
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            const GridCell& c = cells[cur];
            ++cl.size;
            cl.min_i = std::min(cl.min_i, c.i);
            cl.max_i = std::max(cl.max_i, c.i);
            cl.min_j = std::min(cl.min_j, c.j);
            cl.max_j = std::max(cl.max_j, c.j);
            if (rank(c) < rank(cl.best) ||
                (rank(c) == rank(cl.best) &&
                 std::pair{c.j, c.i} < std::pair{cl.best.j, cl.best.i}))
                cl.best = c;
            const int di[] = {1, -1, 0, 0};
            const int dj[] = {0, 0, 1, -1};
            for (int d = 0; d < 4; ++d) {
                auto it = index.find({c.i + di[d], c.j + dj[d]});
                if (it != index.end() && !seen[it->second]) {
                    seen[it->second] = true;
                    stack.push_back(it->second);
                }
            }
        }
        clusters.push_back(cl);
    }
    return clusters;
}

std::string serialize_certificate(const NashCertificate& cert) {
    std::ostringstream out;
    out << "certificate passed=" << (cert.passed ? 1 : 0) << "\n"
        << "eps_scanner " << g17(cert.eps_scanner) << " (best x deviation "
        << g17(cert.best_x_dev) << ")\n"
        << "eps_invader " << g17(cert.eps_invader) << " (best y deviation "
        << g17(cert.best_y_dev) << ")\n"
        << "tolerance " << g17(cert.tolerance) << " K_scanner "
        << g17(cert.K_scanner) << " K_invader " << g17(cert.K_invader) << "\n"
        << "grid " << cert.n_x << "x" << cert.n_y << " h_x " << g17(cert.h_x)
        << " h_y " << g17(cert.h_y) << "\n";
    return out.str();
}

std::string certificate_csv_line(const NashCertificate& cert) {
    std::ostringstream out;
    out << "cert," << (cert.passed ? 1 : 0) << "," << fixed6(cert.eps_scanner)
        << "," << fixed6(cert.eps_invader) << "," << fixed6(cert.tolerance)
        << "," << cert.n_x << "x" << cert.n_y;
    return out.str();
}

} // namespace scangame
