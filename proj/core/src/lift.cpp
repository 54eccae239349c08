#include "stagflow/lift.hpp"

#include <cmath>
#include <functional>

#include "stagflow/operators.hpp"
#include "stagflow/spectral.hpp"

namespace stagflow {

namespace {

int transverse_count(const Dimension& dim) {
    if (!dim.is_integer() || dim.n() < 2.0)
        throw DimensionUnsupportedError(
            "the lift requires an integer dimension n >= 2");
    return static_cast<int>(std::round(dim.n())) - 1;
}

void require_point_shape(std::span<const LiftPoint> points, int transverse) {
    for (const auto& pt : points) {
        if (static_cast<int>(pt.xprime.size()) != transverse)
            throw ConfigError("lift point has wrong transverse dimension");
        if (!std::isfinite(pt.x)) throw ConfigError("lift point is not finite");
        for (double v : pt.xprime)
            if (!std::isfinite(v)) throw ConfigError("lift point is not finite");
    }
}

// Pointwise data of a 1-D profile, enough to assemble every momentum
// component of the lifted flow.
struct ProfileSample {
    double u, ux, uxx, ut, utx, px;
};

ResidualReport assemble_report(std::span<const LiftPoint> points,
                               const Dimension& dim, double forcing,
                               const std::function<ProfileSample(double)>& at) {
    const int transverse = transverse_count(dim);
    require_point_shape(points, transverse);
    const double nm1 = dim.n() - 1.0;

    ResidualReport report;
    for (const auto& pt : points) {
        ProfileSample s = at(pt.x);
        ResidualRow row{pt, std::vector<double>(static_cast<size_t>(transverse) + 1), 0.0};

        row.momentum[0] = s.ut + s.u * s.ux + s.px;
        // Transverse momentum: the bracket is the defect of the pointwise
        // identity u_tx + u u_xx - u_x^2/(n-1) = f.
        const double bracket = -s.utx - s.u * s.uxx + s.ux * s.ux / nm1 + forcing;
        for (int k = 0; k < transverse; ++k)
            row.momentum[static_cast<size_t>(k) + 1] = pt.xprime[static_cast<size_t>(k)] / nm1 * bracket;

        row.divergence = s.ux - nm1 * (s.ux / nm1);

        double pt_max = 0.0;
        for (double v : row.momentum) pt_max = std::max(pt_max, std::abs(v));
        report.max_momentum = std::max(report.max_momentum, pt_max);
        report.mean_momentum += pt_max;
        report.max_divergence =
            std::max(report.max_divergence, std::abs(row.divergence));
        report.rows.push_back(std::move(row));
    }
    if (!points.empty()) report.mean_momentum /= static_cast<double>(points.size());
    return report;
}

}  // namespace

std::vector<LiftedSample> lift_velocity(const Field& u,
                                        std::span<const LiftPoint> points,
                                        const Dimension& dim,
                                        const PressureModel* pressure) {
    const int transverse = transverse_count(dim);
    require_point_shape(points, transverse);

    auto u_hat = spectral::analyze(u);
    auto ux_hat = u_hat;
    spectral::apply_derivative_symbol(ux_hat, 1);
    const double nm1 = dim.n() - 1.0;

    std::vector<LiftedSample> out;
    out.reserve(points.size());
    for (const auto& pt : points) {
        LiftedSample s;
        s.x = pt.x;
        s.xprime = pt.xprime;
        s.velocity.resize(static_cast<size_t>(transverse) + 1);
        s.velocity[0] = spectral::eval(u_hat, pt.x);
        const double slope = spectral::eval(ux_hat, pt.x);
        double xp_sq = 0.0;
        for (int k = 0; k < transverse; ++k) {
            const double xp = pt.xprime[static_cast<size_t>(k)];
            s.velocity[static_cast<size_t>(k) + 1] = -slope * xp / nm1;
            xp_sq += xp * xp;
        }
        if (pressure) {
            auto p_hat = spectral::analyze(pressure->P);
            s.pressure = spectral::eval(p_hat, pt.x) +
                         pressure->f * xp_sq / (2.0 * nm1);
        }
        out.push_back(std::move(s));
    }
    return out;
}

PressureModel pressure_model(const Field& u, const Field& ut, const Dimension& dim) {
    detail::require_same_grid(u, ut);
    Field g = ut + pointwise_product(u, deriv(u, 1));
    const double compatibility = mean(g);
    if (std::abs(compatibility) > 1e-8)
        throw NonZeroMeanError(compatibility, 1e-8);
    for (int j = 0; j < g.size(); ++j) g[j] = -(g[j] - compatibility);
    return PressureModel{inv_dx(g), forcing_f(u, dim)};
}

double pressure_laplacian_residual(const Field& u, const Field& ut,
                                   const Dimension& dim) {
    PressureModel pm = pressure_model(u, ut, dim);
    Field lap = deriv(pm.P, 2);  // transverse part contributes exactly f
    Field ux = deriv(u, 1);
    double worst = 0.0;
    for (int j = 0; j < lap.size(); ++j)
        worst = std::max(worst,
                         std::abs(lap[j] + pm.f + dim.a() * ux[j] * ux[j]));
    return worst;
}

ResidualReport euler_residual(const Field& u, const Field& ut,
                              const Dimension& dim,
                              std::span<const LiftPoint> points) {
    PressureModel pm = pressure_model(u, ut, dim);

    auto u_hat = spectral::analyze(u);
    auto ux_hat = u_hat, uxx_hat = u_hat;
    spectral::apply_derivative_symbol(ux_hat, 1);
    spectral::apply_derivative_symbol(uxx_hat, 2);
    auto ut_hat = spectral::analyze(ut);
    auto utx_hat = ut_hat;
    spectral::apply_derivative_symbol(utx_hat, 1);
    auto px_hat = spectral::analyze(pm.P);
    spectral::apply_derivative_symbol(px_hat, 1);

    auto at = [&](double x) {
        return ProfileSample{spectral::eval(u_hat, x),  spectral::eval(ux_hat, x),
                             spectral::eval(uxx_hat, x), spectral::eval(ut_hat, x),
                             spectral::eval(utx_hat, x), spectral::eval(px_hat, x)};
    };
    return assemble_report(points, dim, pm.f, at);
}

ResidualReport euler_residual(const TwoPhaseState& s,
                              std::span<const LiftPoint> points) {
    const Dimension& dim = s.dim();
    const double a = dim.a();
    const double p = s.p(), q = s.q(), phi = s.phi(), psi = s.psi();

    TwoPhaseDerivs d = twophase_rhs(s);
    const double f =
        -a * (phi * p * p + (psi - phi) * q * q + (1.0 - psi) * p * p);
    const double alpha_dot =
        -0.5 * d.dp * (phi + psi - 1.0) - 0.5 * p * (d.dphi + d.dpsi);

    // Piecewise-constant curvature of the x-part of the pressure.
    const double curv_outer = -(a * p * p + f);
    const double curv_center = -(a * q * q + f);
    // Px(x) = Px0 + int_0^x curvature; Px0 makes Px mean-zero so P is periodic.
    auto grad_accum = [&](double x) {
        if (x <= phi) return curv_outer * x;
        if (x <= psi) return curv_outer * phi + curv_center * (x - phi);
        return curv_outer * phi + curv_center * (psi - phi) + curv_outer * (x - psi);
    };
    const double mean_accum =
        curv_outer * phi * phi / 2.0 +
        (curv_outer * phi * (psi - phi) + curv_center * (psi - phi) * (psi - phi) / 2.0) +
        ((curv_outer * phi + curv_center * (psi - phi)) * (1.0 - psi) +
         curv_outer * (1.0 - psi) * (1.0 - psi) / 2.0);
    const double px0 = -mean_accum;

    auto at = [&](double x) {
        const double xr = x - std::floor(x);
        ProfileSample out;
        out.u = sample_profile(s, xr);
        out.ux = sample_profile_slope(s, xr);
        out.uxx = 0.0;
        out.px = px0 + grad_accum(xr);
        if (xr < phi) {
            out.ut = alpha_dot + xr * d.dp;
            out.utx = d.dp;
        } else if (xr < psi) {
            out.ut = alpha_dot + d.dphi * (p - q) + phi * d.dp + (xr - phi) * d.dq;
            out.utx = d.dq;
        } else {
            out.ut = alpha_dot + (d.dphi - d.dpsi) * (p - q) + phi * d.dp +
                     (psi - phi) * d.dq + (xr - psi) * d.dp;
            out.utx = d.dp;
        }
        return out;
    };
    return assemble_report(points, dim, f, at);
}

}  // namespace stagflow
