#pragma once

// Test-only reference computations, kept independent of the spectral
// implementation they are used to check.

#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

using Fn = std::function<double(double)>;

/// Composite Simpson on [a, b].
inline double integrate(const Fn& f, double a, double b, int panels = 4096) {
    const double h = (b - a) / panels;
    double acc = f(a) + f(b);
    for (int i = 1; i < panels; ++i)
        acc += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
    return acc * h / 3.0;
}

/// The mean-zero periodic antiderivative from its defining formula:
/// F(x) = int_{x0}^{x} f - int_0^1 int_{x0}^{y} f dy, with x0 = 0.
inline Fn inv_dx(const Fn& f) {
    auto running = [f](double x) { return integrate(f, 0.0, x, 2048); };
    const double offset = integrate(running, 0.0, 1.0, 2048);
    return [running, offset](double x) { return running(x) - offset; };
}

/// Mean-annihilating inverse derivative: inv_dx applied to f - mean(f).
inline Fn nonlocal(const Fn& f) {
    const double m = integrate(f, 0.0, 1.0, 8192);
    return inv_dx([f, m](double x) { return f(x) - m; });
}

}  // namespace oracle
