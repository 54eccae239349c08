#pragma once

#include <optional>

#include "stagflow/grid.hpp"

namespace stagflow {

/// Separated solution u = X(x) T(t): candidate profile with its separation
/// constant and initial time factor.
struct SeparableConfig {
    double lambda = 0.0;
    double T0 = 1.0;
    Field X;
    Dimension dim;
};

struct RiccatiEval {
    /// T(t) = T0 / (1 - lambda T0 t); absent at and beyond the blow-up time.
    std::optional<double> value;
    /// t* = 1/(lambda T0) when lambda T0 > 0, else absent (global solution).
    std::optional<double> blowup_time;
};

/// Closed-form solution of dT/dt = lambda T^2. Blow-up is a returned value,
/// not a fault.
RiccatiEval riccati_T(double lambda, double T0, double t);

/// Quadrature of X' |X''|^r + X (|X''|^r)' over the torus, r = (n-1)/(n-3).
/// The integrand is the exact derivative (X |X''|^r)', so the result vanishes
/// for every periodic profile; this is the mechanism that forces
/// lambda * integral |X''|^r = 0 and rules out separable blow-up for n > 3.
/// Throws DimensionUnsupportedError for n <= 3.
double exact_derivative_identity(const Field& X, const Dimension& dim);

/// Pointwise residual of the profile equation
///   lambda X'' + ((n-3)/(n-1)) X' X'' + X X''' ,
/// used to certify candidate profiles, not to solve the boundary-value
/// problem.
Field separable_residual(const SeparableConfig& cfg);

/// Bound on |lambda| implied by a residual of the given size:
/// |lambda| <= sup|residual| * mean(|X''|^(r-1)) / mean(|X''|^r).
/// Profiles with nonvanishing X'' and tiny residual therefore force
/// lambda ~ 0. Returns nullopt when mean(|X''|^r) vanishes (the implication
/// is vacuous).
std::optional<double> lambda_bound_from_residual(const SeparableConfig& cfg);

}  // namespace stagflow
