#pragma once

#include <complex>
#include <span>
#include <vector>

#include "stagflow/grid.hpp"

namespace stagflow::spectral {

using Spectrum = std::vector<std::complex<double>>;

/// Forward real FFT, normalized so that
///   u(x) = c[0] + 2 sum_{k=1}^{M/2-1} Re(c[k] e^{2 pi i k x}) + c[M/2] cos(pi M x).
/// Returns M/2 + 1 coefficients.
Spectrum analyze(const Field& f);

/// Inverse of analyze().
Field synthesize(const PeriodicGrid& grid, const Spectrum& coeffs);

/// Multiply spectrum in place by (2 pi i k)^order. Odd orders zero the
/// Nyquist mode, as the derivative of its cosine representative is a pure
/// sine the grid cannot carry.
void apply_derivative_symbol(Spectrum& coeffs, int order);

/// Divide modes k != 0 by (2 pi i k), zero the k = 0 mode and the Nyquist.
/// This is the mean-annihilating antiderivative symbol.
void apply_inverse_derivative_symbol(Spectrum& coeffs);

/// Zero all modes with k > cutoff.
void truncate(Spectrum& coeffs, int cutoff);

/// 2/3-rule cutoff for quadratic products: largest K with 3K <= M - 1, so
/// aliased images of products of K-band-limited fields land above K.
int dealias_cutoff(int grid_size);

/// Evaluate the trigonometric interpolant at one arbitrary point.
double eval(const Spectrum& coeffs, double x);

/// Evaluate the trigonometric interpolant at many points.
std::vector<double> eval_many(const Spectrum& coeffs, std::span<const double> xs);

}  // namespace stagflow::spectral
