#pragma once

#include "stagflow/grid.hpp"

namespace stagflow {

/// Torus average (1/M) sum of values — the trapezoid rule on periodic data,
/// spectrally accurate.
double mean(const Field& f);

/// Fourier-collocation derivative of the given order (1, 2 or 3).
Field deriv(const Field& f, int order);

/// The unique mean-zero periodic antiderivative. Requires |mean(f)| <= tol:
/// for nonzero mean the antiderivative is not periodic.
Field inv_dx(const Field& f, double tol_mean = 1e-10);

/// The mean-annihilating inverse derivative: inv_dx(f - mean(f)).
/// Fourier symbol 1/(2 pi i k) off the zero mode, 0 on it. Output mean-zero.
Field nonlocal(const Field& f);

/// Project onto the 2/3-rule band: zero modes above dealias_cutoff(M).
Field dealias(const Field& f);

/// Pointwise product followed by 2/3-rule truncation. Alias-free when both
/// operands are band-limited to the cutoff.
Field dealiased_product(const Field& a, const Field& b);

/// Forcing f(t) = -(n/(n-1)) * integral of (du/dx)^2 over the torus.
/// Always nonpositive.
double forcing_f(const Field& u, const Dimension& dim);

/// Right-hand side of the evolution equation
///   du/dt = (n/(n-1)) * nonlocal((du/dx)^2) - u * du/dx,
/// with both quadratic products dealiased. Mean-zero for periodic u.
Field rhs_eq3(const Field& u, const Dimension& dim);

}  // namespace stagflow
