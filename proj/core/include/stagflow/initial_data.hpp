#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "stagflow/grid.hpp"

namespace stagflow {

/// amplitude * sin(2 pi x)
Field make_sine(const PeriodicGrid& grid, double amplitude);

/// amplitude * (sin(2 pi x) + 0.5 cos(4 pi x))
Field make_two_mode(const PeriodicGrid& grid, double amplitude);

/// Random band-limited profile: sum over 1 <= k <= kmax of
/// (a_k cos(2 pi k x) + b_k sin(2 pi k x)) with a_k, b_k uniform in
/// [-amplitude, amplitude] / k^2. Deterministic in the seed across platforms.
Field make_random_bandlimited(const PeriodicGrid& grid, int kmax,
                              double amplitude, std::uint64_t seed);

/// sum over k of coeffs[k-1].first cos(2 pi k x) + coeffs[k-1].second sin(2 pi k x)
Field from_coefficients(const PeriodicGrid& grid,
                        std::span<const std::pair<double, double>> coeffs);

}  // namespace stagflow
