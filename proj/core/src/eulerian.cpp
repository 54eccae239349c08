#include "stagflow/eulerian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "stagflow/operators.hpp"
#include "stagflow/spectral.hpp"

namespace stagflow {

namespace {

struct GradStats {
    double min_dxu = 0.0;
    double max_dxu = 0.0;
    double max_abs_u = 0.0;
    bool finite = true;
};

GradStats grad_stats(const Field& u) {
    GradStats s;
    s.max_abs_u = max_abs(u);
    if (!u.all_finite()) {
        s.finite = false;
        return s;
    }
    Field ux = deriv(u, 1);
    if (!ux.all_finite()) {
        s.finite = false;
        return s;
    }
    s.min_dxu = *std::min_element(ux.values().begin(), ux.values().end());
    s.max_dxu = *std::max_element(ux.values().begin(), ux.values().end());
    return s;
}

bool exceeds_bounds(const GradStats& s, double threshold) {
    return !s.finite || s.max_abs_u > threshold ||
           std::max(std::abs(s.min_dxu), std::abs(s.max_dxu)) > threshold;
}

Field rk4_step(const Field& u, double dt, const Dimension& dim) {
    Field k1 = rhs_eq3(u, dim);

    Field stage = u;
    axpy(0.5 * dt, k1, stage);
    Field k2 = rhs_eq3(stage, dim);

    stage = u;
    axpy(0.5 * dt, k2, stage);
    Field k3 = rhs_eq3(stage, dim);

    stage = u;
    axpy(dt, k3, stage);
    Field k4 = rhs_eq3(stage, dim);

    Field out = u;
    axpy(dt / 6.0, k1, out);
    axpy(dt / 3.0, k2, out);
    axpy(dt / 3.0, k3, out);
    axpy(dt / 6.0, k4, out);
    return out;
}

}  // namespace

SimState step_rk4(const SimState& s, const SimConfig& cfg) {
    SimState next{s.t + cfg.dt, rk4_step(s.u, cfg.dt, cfg.dim)};
    GradStats stats = grad_stats(next.u);
    if (exceeds_bounds(stats, cfg.blowup_threshold))
        throw BlowUpError(next.t, stats.min_dxu, stats.max_abs_u);
    return next;
}

EvolveOutcome evolve(const Field& u0, const SimConfig& cfg,
                     const Observer& observer) {
    if (cfg.dt <= 0.0 || cfg.t_end < 0.0)
        throw ConfigError("evolve requires dt > 0 and t_end >= 0");
    if (u0.size() != cfg.grid_size)
        throw ConfigError("initial datum does not match cfg.grid_size");
    if (!u0.all_finite()) throw ConfigError("initial datum is not finite");

    EvolveOutcome out{.final_state = SimState{0.0, dealias(u0)},
                      .records = {},
                      .min_dxu_series = {}};
    Field& u = out.final_state.u;
    double& t = out.final_state.t;

    GradStats stats = grad_stats(u);
    out.min_dxu_overall = stats.min_dxu;
    out.min_dxu_series.emplace_back(t, stats.min_dxu);

    const double grad_scale = std::max(std::abs(stats.min_dxu), std::abs(stats.max_dxu));
    out.cfl_warning = cfg.dt > cfg.cfl_factor / std::max(1.0, grad_scale * cfg.grid_size);

    auto record = [&](double time, const Field& field) {
        DiagnosticsRecord rec = compute_record(time, field, cfg.dim);
        out.records.push_back(rec);
        if (observer) observer(rec);
    };
    record(t, u);

    const double band_rate =
        2.0 * std::numbers::pi * spectral::dealias_cutoff(cfg.grid_size);
    double dt = cfg.dt;
    int halvings = 0;
    long steps_since_record = 0;

    while (t < cfg.t_end - 1e-14 && out.steps_taken < cfg.max_steps) {
        if (cfg.adaptive_halving) {
            // Two budgets: RK4 stability against the advection spectrum
            // (|lambda| dt within the stability interval) and accuracy against
            // the gradient growth rate.
            const double grad = std::max(std::abs(stats.min_dxu), std::abs(stats.max_dxu));
            const double stability = 2.0 / std::max(1.0, band_rate * stats.max_abs_u);
            const double accuracy = cfg.halving_trigger / std::max(1.0, grad);
            const double allowed = std::min(stability, accuracy);
            while (dt > allowed && halvings < cfg.max_halvings) {
                dt *= 0.5;
                ++halvings;
            }
        }
        const double step = std::min(dt, cfg.t_end - t);

        Field candidate = rk4_step(u, step, cfg.dim);
        const double t_new = t + step;
        GradStats new_stats = grad_stats(candidate);
        out.min_dxu_overall = std::min(out.min_dxu_overall, new_stats.min_dxu);
        out.min_dxu_series.emplace_back(t_new, new_stats.min_dxu);
        ++out.steps_taken;

        if (exceeds_bounds(new_stats, cfg.blowup_threshold)) {
            out.blew_up = true;
            out.blowup_time = t_new;
            break;  // final_state keeps the last finite u
        }

        u = std::move(candidate);
        t = t_new;
        stats = new_stats;

        if (++steps_since_record >= cfg.record_every) {
            record(t, u);
            steps_since_record = 0;
        }
    }

    if (!out.blew_up && steps_since_record != 0) record(t, u);
    out.final_dt = dt;
    return out;
}

std::vector<ConvergenceRow> convergence_study(
    const std::function<Field(const PeriodicGrid&)>& datum, SimConfig cfg,
    const std::vector<int>& sizes, int reference_size) {
    for (size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] <= sizes[i - 1])
            throw ConfigError("grid sizes must be strictly increasing");

    cfg.grid_size = reference_size;
    PeriodicGrid ref_grid(reference_size);
    EvolveOutcome ref = evolve(datum(ref_grid), cfg);
    if (ref.blew_up) throw BlowUpError(ref.blowup_time, ref.min_dxu_overall, 0.0);

    std::vector<ConvergenceRow> rows;
    for (int m : sizes) {
        if (reference_size % m != 0)
            throw ConfigError("study grids must nest into the reference grid");
        SimConfig run_cfg = cfg;
        run_cfg.grid_size = m;
        PeriodicGrid grid(m);
        EvolveOutcome run = evolve(datum(grid), run_cfg);
        if (run.blew_up) throw BlowUpError(run.blowup_time, run.min_dxu_overall, 0.0);

        const int stride = reference_size / m;
        double err = 0.0;
        for (int j = 0; j < m; ++j)
            err = std::max(err, std::abs(run.final_state.u[j] -
                                         ref.final_state.u[j * stride]));
        rows.push_back({m, err});
    }
    return rows;
}

RichardsonResult richardson_study(const Field& u0, SimConfig cfg, double dt0) {
    auto run = [&](double dt) {
        SimConfig c = cfg;
        c.dt = dt;
        c.record_every = 1 << 30;
        EvolveOutcome o = evolve(u0, c);
        if (o.blew_up) throw BlowUpError(o.blowup_time, o.min_dxu_overall, 0.0);
        return o.final_state.u;
    };
    Field coarse = run(dt0);
    Field mid = run(dt0 / 2.0);
    Field fine = run(dt0 / 4.0);

    RichardsonResult r;
    r.coarse_error = max_abs_diff(coarse, mid);
    r.fine_error = max_abs_diff(mid, fine);
    r.observed_order = std::log2(r.coarse_error / r.fine_error);
    return r;
}

}  // namespace stagflow
