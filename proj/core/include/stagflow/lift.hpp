#pragma once

#include <span>
#include <vector>

#include "stagflow/grid.hpp"
#include "stagflow/twophase.hpp"

namespace stagflow {

/// Sample location in the full space: torus coordinate x plus the (n-1)
/// transverse coordinates.
struct LiftPoint {
    double x = 0.0;
    std::vector<double> xprime;
};

/// Velocity and pressure of the lifted n-dimensional flow at one point:
///   velocity = (u(x), -u_x(x) xprime / (n-1)),
///   pressure = P(x) + f |xprime|^2 / (2(n-1)).
struct LiftedSample {
    double x = 0.0;
    std::vector<double> xprime;
    std::vector<double> velocity;
    double pressure = 0.0;
};

/// x-dependent pressure part (mean-zero) plus the forcing that sets the
/// quadratic transverse part.
struct PressureModel {
    Field P;
    double f = 0.0;
};

/// Sample the ansatz velocity (and pressure, when a model is supplied) with
/// spectral interpolation off-grid. Requires integer n >= 2.
std::vector<LiftedSample> lift_velocity(const Field& u,
                                        std::span<const LiftPoint> points,
                                        const Dimension& dim,
                                        const PressureModel* pressure = nullptr);

/// Build the pressure from a consistent (u, du/dt) pair:
/// P = inv_dx(-(ut + u u_x - mean)), f from the forcing integral. Throws
/// NonZeroMeanError when the compatibility integral mean(ut + u u_x) exceeds
/// 1e-8 — the pair cannot come from the evolution equation.
PressureModel pressure_model(const Field& u, const Field& ut, const Dimension& dim);

/// Max norm of Lap p + (n/(n-1)) (u_x)^2 on the grid; vanishes for pressure
/// built from a consistent pair.
double pressure_laplacian_residual(const Field& u, const Field& ut,
                                   const Dimension& dim);

struct ResidualRow {
    LiftPoint point;
    std::vector<double> momentum;  // n components of du/dt + u.grad u + grad p
    double divergence = 0.0;
};

struct ResidualReport {
    std::vector<ResidualRow> rows;
    double max_momentum = 0.0;
    double mean_momentum = 0.0;  // mean over points of the per-point max norm
    double max_divergence = 0.0;
};

/// Momentum and divergence residuals of the lifted flow at the sample points,
/// from a solver snapshot (u, du/dt) with the spectral pressure model.
ResidualReport euler_residual(const Field& u, const Field& ut,
                              const Dimension& dim,
                              std::span<const LiftPoint> points);

/// Same residuals for an exact two-phase state, evaluated from the closed
/// piecewise-affine profile and its piecewise-quadratic pressure; valid at
/// points off the interfaces.
ResidualReport euler_residual(const TwoPhaseState& s,
                              std::span<const LiftPoint> points);

}  // namespace stagflow
