#pragma once

#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "stagflow/diagnostics.hpp"
#include "stagflow/grid.hpp"

namespace stagflow {

struct SimState {
    double t = 0.0;
    Field u;
};

struct SimConfig {
    Dimension dim;
    int grid_size = 256;
    double dt = 1e-3;
    double t_end = 1.0;
    double blowup_threshold = 1e6;
    int record_every = 10;
    /// Advisory CFL guard: warn when dt > cfl_factor / max(1, sup|u0_x| * M).
    double cfl_factor = 1.0;
    /// Halve dt whenever dt * max(sup|u_x|, 2 pi K sup|u|) crosses
    /// halving_trigger. Lets the solver track gradient growth into blow-up.
    bool adaptive_halving = false;
    double halving_trigger = 0.25;
    int max_halvings = 40;
    long max_steps = 20000000;
};

/// One classical RK4 step of size cfg.dt. Throws BlowUpError when the new
/// state leaves the configured bounds or stops being finite.
SimState step_rk4(const SimState& s, const SimConfig& cfg);

struct EvolveOutcome {
    SimState final_state;  // last finite state
    std::vector<DiagnosticsRecord> records;
    bool blew_up = false;
    double blowup_time = std::numeric_limits<double>::quiet_NaN();
    /// Running minimum of du/dx over the whole run.
    double min_dxu_overall = 0.0;
    /// (t, min du/dx) each step: near blow-up this traces the 1/(tau - t)
    /// signature for inspection.
    std::vector<std::pair<double, double>> min_dxu_series;
    bool cfl_warning = false;
    double final_dt = 0.0;
    long steps_taken = 0;
};

using Observer = std::function<void(const DiagnosticsRecord&)>;

/// March the semi-discrete equation until t_end or blow-up. The initial datum
/// is projected onto the dealiased band so quadratic products stay alias-free
/// for the whole run. Diagnostics are recorded every record_every steps (plus
/// first and last); blow-up is reported in the outcome, with the last finite
/// state attached.
EvolveOutcome evolve(const Field& u0, const SimConfig& cfg,
                     const Observer& observer = {});

struct ConvergenceRow {
    int grid_size = 0;
    double linf_error = 0.0;
};

/// Spatial self-convergence: evolve the same datum on each grid in sizes and
/// compare against the reference grid at the coarse nodes (grids must nest).
std::vector<ConvergenceRow> convergence_study(
    const std::function<Field(const PeriodicGrid&)>& datum, SimConfig cfg,
    const std::vector<int>& sizes, int reference_size);

struct RichardsonResult {
    double coarse_error = 0.0;  // || u_dt - u_{dt/2} ||_inf at t_end
    double fine_error = 0.0;    // || u_{dt/2} - u_{dt/4} ||_inf at t_end
    double observed_order = 0.0;
};

/// Temporal self-convergence of the RK4 stepper by step halving.
RichardsonResult richardson_study(const Field& u0, SimConfig cfg, double dt0);

}  // namespace stagflow
