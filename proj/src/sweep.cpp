#include "scangame/sweep.hpp"

#include <cmath>
#include <stdexcept>

#include "scangame/parallel.hpp"
#include "scangame/textfmt.hpp"

namespace scangame {

const char* sweep_param_name(SweepParam p) {
    return p == SweepParam::F ? "F" : "q";
}

namespace {
std::string sweep_param_name_str(const SweepSpec& spec) {
    return sweep_param_name(spec.param);
}
} // namespace

double sweep_jump_threshold(const SweepSpec& spec) {
    const double step =
        spec.steps > 1 ? std::abs(spec.to - spec.from) / (spec.steps - 1) : 0.0;
    return 5.0 * step * (spec.base.b - spec.base.a);
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    if (spec.steps < 2)
        throw ValidationError("sweep steps must be >= 2 (got " +
                              std::to_string(spec.steps) + ")");
    if (!(spec.from < spec.to))
        throw ValidationError("sweep range must satisfy from < to");
    if (spec.param == SweepParam::q && spec.regime == Regime::known)
        throw ValidationError(
            "sweeping q requires the unknown-type game (q has no effect when "
            "the invader type is known)");

    // Materialize and validate every sample up front so a bad sample aborts
    // with its offending value before any solving starts.
    std::vector<GameParams> samples(static_cast<std::size_t>(spec.steps),
                                    spec.base);
    std::vector<SweepRow> rows(static_cast<std::size_t>(spec.steps));
    for (int k = 0; k < spec.steps; ++k) {
        const double t =
            k == spec.steps - 1
                ? spec.to
                : spec.from + (spec.to - spec.from) * k / (spec.steps - 1);
        if (spec.param == SweepParam::F)
            samples[static_cast<std::size_t>(k)].F = t;
        else
            samples[static_cast<std::size_t>(k)].q = t;
        rows[static_cast<std::size_t>(k)].param_value = t;
        try {
            validate_params(samples[static_cast<std::size_t>(k)]);
        } catch (const ValidationError& e) {
            throw ValidationError("sweep sample " + sweep_param_name_str(spec) +
                                  "=" + std::to_string(t) + ": " + e.what());
        }
    }

    // Solve samples concurrently; rows stay in parameter order by index.
    parallel_for_chunks(samples.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k)
            rows[k].eq = spec.regime == Regime::known
                             ? solve_known_type(samples[k])
                             : solve_unknown_type(samples[k]);
    });

    const double threshold = sweep_jump_threshold(spec);
    for (std::size_t k = 1; k < rows.size(); ++k)
        rows[k].jump = std::abs(rows[k].eq.x - rows[k - 1].eq.x) > threshold;
    return rows;
}

std::string sweep_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
    (void)spec;
    std::string out = "param,case,x,y,p_lin,p_exact,v_S,v_I,jump\n";
    for (const SweepRow& r : rows) {
        out += fixed6(r.param_value);
        out += ',';
        out += case_name(r.eq.case_id);
        out += ',';
        out += fixed6(r.eq.x);
        out += ',';
        out += fixed6(r.eq.y);
        out += ',';
        out += fixed6(r.eq.p_detect);
        out += ',';
        out += fixed6(r.eq.p_detect_exact);
        out += ',';
        out += fixed6(r.eq.v_S);
        out += ',';
        out += fixed6(r.eq.v_I);
        out += ',';
        out += r.jump ? '1' : '0';
        out += '\n';
    }
    return out;
}

} // namespace scangame
