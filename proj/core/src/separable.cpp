#include "stagflow/separable.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

#include "stagflow/operators.hpp"
#include "stagflow/spectral.hpp"

namespace stagflow {

RiccatiEval riccati_T(double lambda, double T0, double t) {
    RiccatiEval out;
    if (lambda * T0 > 0.0) out.blowup_time = 1.0 / (lambda * T0);
    if (out.blowup_time && t >= *out.blowup_time) return out;
    out.value = T0 / (1.0 - lambda * T0 * t);
    return out;
}

double exact_derivative_identity(const Field& X, const Dimension& dim) {
    if (dim.n() <= 3.0)
        throw DimensionUnsupportedError(
            "the exact-derivative identity needs n > 3");
    const double r = (dim.n() - 1.0) / (dim.n() - 3.0);

    // Evaluate X and its derivatives anywhere from the trigonometric
    // interpolant; adaptive quadrature then resolves the |X''|^r kinks at the
    // inflection points, where fixed grid rules lose accuracy.
    auto x0 = spectral::analyze(X);
    auto x1 = x0, x2 = x0, x3 = x0;
    spectral::apply_derivative_symbol(x1, 1);
    spectral::apply_derivative_symbol(x2, 2);
    spectral::apply_derivative_symbol(x3, 3);

    auto integrand = [&](double x) {
        const double v = spectral::eval(x0, x);
        const double d1 = spectral::eval(x1, x);
        const double d2 = spectral::eval(x2, x);
        const double d3 = spectral::eval(x3, x);
        const double a2 = std::abs(d2);
        const double pow_r = std::pow(a2, r);
        const double chain = a2 > 0.0 ? r * std::pow(a2, r - 1.0) *
                                            (d2 > 0.0 ? 1.0 : -1.0) * d3
                                      : 0.0;
        return d1 * pow_r + v * chain;
    };

    using boost::math::quadrature::gauss_kronrod;
    return gauss_kronrod<double, 31>::integrate(integrand, 0.0, 1.0, 14, 1e-12);
}

Field separable_residual(const SeparableConfig& cfg) {
    Field x1 = deriv(cfg.X, 1);
    Field x2 = deriv(cfg.X, 2);
    Field x3 = deriv(cfg.X, 3);
    Field out = cfg.lambda * x2;
    const double b = cfg.dim.b();
    for (int j = 0; j < out.size(); ++j)
        out[j] += b * x1[j] * x2[j] + cfg.X[j] * x3[j];
    return out;
}

std::optional<double> lambda_bound_from_residual(const SeparableConfig& cfg) {
    if (cfg.dim.n() <= 3.0)
        throw DimensionUnsupportedError("the residual bound needs n > 3");
    const double r = (cfg.dim.n() - 1.0) / (cfg.dim.n() - 3.0);

    Field x2 = deriv(cfg.X, 2);
    double mean_r = 0.0, mean_rm1 = 0.0;
    for (double v : x2.values()) {
        mean_r += std::pow(std::abs(v), r);
        mean_rm1 += std::pow(std::abs(v), r - 1.0);
    }
    mean_r /= x2.size();
    mean_rm1 /= x2.size();
    if (mean_r <= 0.0) return std::nullopt;

    const double res_sup = max_abs(separable_residual(cfg));
    return res_sup * mean_rm1 / mean_r;
}

}  // namespace stagflow
