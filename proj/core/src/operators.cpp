#include "stagflow/operators.hpp"

#include <cmath>

#include "stagflow/spectral.hpp"

namespace stagflow {

double mean(const Field& f) {
    double sum = 0.0;
    for (double v : f.values()) sum += v;
    return sum / f.size();
}

Field deriv(const Field& f, int order) {
    if (order < 1 || order > 3)
        throw ConfigError("derivative order must be 1, 2 or 3");
    auto c = spectral::analyze(f);
    spectral::apply_derivative_symbol(c, order);
    return spectral::synthesize(f.grid(), c);
}

Field inv_dx(const Field& f, double tol_mean) {
    const double m = mean(f);
    if (std::abs(m) > tol_mean) throw NonZeroMeanError(m, tol_mean);
    auto c = spectral::analyze(f);
    spectral::apply_inverse_derivative_symbol(c);
    return spectral::synthesize(f.grid(), c);
}

Field nonlocal(const Field& f) {
    auto c = spectral::analyze(f);
    spectral::apply_inverse_derivative_symbol(c);  // also annihilates the mean
    return spectral::synthesize(f.grid(), c);
}

Field dealias(const Field& f) {
    auto c = spectral::analyze(f);
    spectral::truncate(c, spectral::dealias_cutoff(f.size()));
    return spectral::synthesize(f.grid(), c);
}

Field dealiased_product(const Field& a, const Field& b) {
    return dealias(pointwise_product(a, b));
}

double forcing_f(const Field& u, const Dimension& dim) {
    Field ux = deriv(u, 1);
    return -dim.a() * mean(pointwise_product(ux, ux));
}

Field rhs_eq3(const Field& u, const Dimension& dim) {
    Field ux = deriv(u, 1);
    Field grad_sq = dealiased_product(ux, ux);
    Field advection = dealiased_product(u, ux);
    Field out = dim.a() * nonlocal(grad_sq);
    axpy(-1.0, advection, out);
    return out;
}

}  // namespace stagflow
