#include "stagflow/initial_data.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace stagflow {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Uniform double in [-1, 1] built from the top 53 bits of the generator
// output, so streams do not depend on the standard library's distribution
// implementation.
double symmetric_uniform(std::mt19937_64& rng) {
    const double u = std::ldexp(static_cast<double>(rng() >> 11), -53);
    return 2.0 * u - 1.0;
}
}  // namespace

Field make_sine(const PeriodicGrid& grid, double amplitude) {
    Field f(grid);
    for (int j = 0; j < grid.size(); ++j)
        f[j] = amplitude * std::sin(kTwoPi * grid.node(j));
    return f;
}

Field make_two_mode(const PeriodicGrid& grid, double amplitude) {
    Field f(grid);
    for (int j = 0; j < grid.size(); ++j) {
        const double x = grid.node(j);
        f[j] = amplitude * (std::sin(kTwoPi * x) + 0.5 * std::cos(2.0 * kTwoPi * x));
    }
    return f;
}

Field make_random_bandlimited(const PeriodicGrid& grid, int kmax,
                              double amplitude, std::uint64_t seed) {
    if (kmax < 1 || kmax >= grid.size() / 2)
        throw ConfigError("random profile kmax must satisfy 1 <= kmax < M/2");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<double, double>> coeffs(static_cast<size_t>(kmax));
    for (int k = 1; k <= kmax; ++k) {
        const double scale = amplitude / (k * k);
        coeffs[static_cast<size_t>(k - 1)] = {scale * symmetric_uniform(rng),
                                              scale * symmetric_uniform(rng)};
    }
    return from_coefficients(grid, coeffs);
}

Field from_coefficients(const PeriodicGrid& grid,
                        std::span<const std::pair<double, double>> coeffs) {
    if (static_cast<int>(coeffs.size()) >= grid.size() / 2)
        throw ConfigError("too many modes for this grid");
    Field f(grid);
    for (int j = 0; j < grid.size(); ++j) {
        const double x = grid.node(j);
        double v = 0.0;
        for (size_t i = 0; i < coeffs.size(); ++i) {
            const double kx = kTwoPi * static_cast<double>(i + 1) * x;
            v += coeffs[i].first * std::cos(kx) + coeffs[i].second * std::sin(kx);
        }
        f[j] = v;
    }
    return f;
}

}  // namespace stagflow
