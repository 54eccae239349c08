#pragma once

#include <span>
#include <string>
#include <vector>

#include "stagflow/grid.hpp"

namespace stagflow {

/// Per-step invariant snapshot. uxx_norm follows the dimension rule of
/// uxx_norm() for n >= 3; below n = 3 no conservation law exists and the
/// column holds the sup norm of u_xx for reference only.
struct DiagnosticsRecord {
    double t = 0.0;
    double mean_u = 0.0;
    double min_dxu = 0.0;
    double max_dxu = 0.0;
    double c1_norm_u = 0.0;  // sup|u| + sup|du/dx|
    double uxx_norm = 0.0;
    double f_value = 0.0;    // forcing f(t), always <= 0
    double dt_u_sup = 0.0;   // sup|du/dt| from the evolution equation
};

/// The conserved norm of u_xx: sup norm at n = 3, L^p with p = (n-1)/(n-3)
/// for n > 3. Throws DimensionUnsupportedError for n < 3.
double uxx_norm(const Field& u, const Dimension& dim);

/// (mean |u_xx|^p)^(1/p) for an arbitrary exponent; used as the control
/// functional that must drift when p is not the conserved exponent.
double uxx_lp_norm(const Field& u, double p);

DiagnosticsRecord compute_record(double t, const Field& u, const Dimension& dim);

/// Norms of the initial datum that the a-priori estimates are stated against.
struct InitialNorms {
    double mean0 = 0.0;
    double uxx_norm0 = 0.0;
    double c1_norm0 = 0.0;
    /// C1 bound: ||u0||_C2 for n = 3, ||u0||_C1 + ||u0''||_{(n-1)/(n-3)} for
    /// n > 3. Not applicable below n = 3.
    double c1_bound = 0.0;
    /// Bound on sup|du/dt| implied by the C1 bound:
    /// B_u * B_ux + 2 a B_ux^2 with B_* read off the C1 bound.
    double dtu_bound = 0.0;
    bool bounds_applicable = false;
};

InitialNorms initial_norms(const Field& u0, const Dimension& dim);

/// Drift statistics over a run, absolute and relative to the initial value,
/// plus flags against the a-priori bounds.
struct DriftSummary {
    double max_abs_drift_mean = 0.0;
    double max_abs_drift_uxx = 0.0;
    double max_rel_drift_uxx = 0.0;
    double max_c1 = 0.0;
    double max_dtu = 0.0;
    double c1_bound = 0.0;
    double dtu_bound = 0.0;
    bool bounds_applicable = false;  // false marks "not applicable (n < 3)"
    bool c1_bound_violated = false;
    bool dtu_bound_violated = false;
    std::string c1_bound_note;
};

DriftSummary drift_report(std::span<const DiagnosticsRecord> series,
                          const InitialNorms& init, const Dimension& dim,
                          double bound_slack = 1e-3);

}  // namespace stagflow
