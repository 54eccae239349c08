#include "stagflow/twophase.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace stagflow {

namespace {
constexpr double kCollapseTol = 1e-12;
constexpr double kPeriodicityTol = 1e-12;
}  // namespace

TwoPhaseState::TwoPhaseState(double p, double q, double phi, double psi,
                             Dimension dim, double c)
    : p_(p), q_(q), phi_(phi), psi_(psi), dim_(dim) {
    if (c != 0.0)
        throw ConfigError("two-phase states are normalized to conserved mean c = 0");
    if (!(0.0 < phi && phi < psi && psi < 1.0))
        throw ConfigError("two-phase interfaces must satisfy 0 < phi < psi < 1");
    if (std::abs(periodicity_defect()) > kPeriodicityTol)
        throw ConfigError(
            "two-phase data is not periodic: phi p + (psi-phi) q + (1-psi) p = " +
            std::to_string(periodicity_defect()));
}

void TwoPhaseState::set_raw(const Raw& r) {
    t_ = r.t;
    p_ = r.p;
    q_ = r.q;
    phi_ = r.phi;
    psi_ = r.psi;
    int_p_ = r.int_p;
    int_q_ = r.int_q;
}

TwoPhaseDerivs twophase_rhs(const TwoPhaseState& s) {
    const double center = s.psi() - s.phi();
    const double outer = s.phi() + (1.0 - s.psi());
    if (center < kCollapseTol || outer < kCollapseTol)
        throw PhaseCollapseError(s.t());

    const double n = s.dim().n();
    const double p = s.p(), q = s.q();
    const double alpha = s.alpha();

    TwoPhaseDerivs d;
    d.dp = (p * p + n * p * q) / (n - 1.0);
    d.dq = (q * q + n * p * q) / (n - 1.0);
    d.dphi = alpha + s.phi() * p;
    d.dpsi = alpha + s.phi() * p + center * q;
    return d;
}

TwoPhaseOutcome evolve_twophase(const TwoPhaseState& s0, double dt, double t_end,
                                int record_every) {
    if (dt <= 0.0 || t_end < 0.0)
        throw ConfigError("evolve_twophase requires dt > 0 and t_end >= 0");

    TwoPhaseOutcome out{s0, {}, 0.0, 0.0, s0.p(), s0.q(), s0.phi(), s0.psi()};
    const double outer0 = s0.phi() + 1.0 - s0.psi();
    const double center0 = s0.psi() - s0.phi();

    TwoPhaseState s = s0;
    auto make_record = [&](const TwoPhaseState& state,
                           const TwoPhaseDerivs& d) -> TwoPhaseRecord {
        const double partition = outer0 * std::exp(state.int_p()) +
                                 center0 * std::exp(state.int_q()) - 1.0;
        return {state.t(),     state.p(),      state.q(),
                state.phi(),   state.psi(),    state.alpha(),
                state.int_p(), state.int_q(),  std::abs(state.periodicity_defect()),
                std::abs(partition), d.dphi,   d.dpsi};
    };

    TwoPhaseDerivs d0 = twophase_rhs(s);
    out.records.push_back(make_record(s, d0));

    // RK4 on the packed state (p, q, phi, psi, int_p, int_q).
    auto eval = [&](const TwoPhaseState::Raw& r) {
        TwoPhaseState tmp = s;
        tmp.set_raw(r);
        TwoPhaseDerivs d = twophase_rhs(tmp);
        return std::array<double, 6>{d.dp, d.dq, d.dphi, d.dpsi, tmp.p(), tmp.q()};
    };
    auto advanced = [](const TwoPhaseState::Raw& r, double h,
                       const std::array<double, 6>& k) {
        TwoPhaseState::Raw o = r;
        o.p += h * k[0];
        o.q += h * k[1];
        o.phi += h * k[2];
        o.psi += h * k[3];
        o.int_p += h * k[4];
        o.int_q += h * k[5];
        return o;
    };

    long steps_since_record = 0;
    while (s.t() < t_end - 1e-14) {
        const double h = std::min(dt, t_end - s.t());
        TwoPhaseState::Raw r = s.raw();

        auto k1 = eval(r);
        auto k2 = eval(advanced(r, 0.5 * h, k1));
        auto k3 = eval(advanced(r, 0.5 * h, k2));
        auto k4 = eval(advanced(r, h, k3));

        TwoPhaseState::Raw next = r;
        const double w = h / 6.0;
        next.p += w * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
        next.q += w * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
        next.phi += w * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2]);
        next.psi += w * (k1[3] + 2.0 * k2[3] + 2.0 * k3[3] + k4[3]);
        next.int_p += w * (k1[4] + 2.0 * k2[4] + 2.0 * k3[4] + k4[4]);
        next.int_q += w * (k1[5] + 2.0 * k2[5] + 2.0 * k3[5] + k4[5]);
        next.t = r.t + h;
        s.set_raw(next);

        TwoPhaseDerivs d = twophase_rhs(s);
        TwoPhaseRecord rec = make_record(s, d);
        out.max_n_residual = std::max(out.max_n_residual, rec.n_residual);
        out.max_partition_residual =
            std::max(out.max_partition_residual, rec.partition_residual);
        if (++steps_since_record >= record_every) {
            out.records.push_back(rec);
            steps_since_record = 0;
        }
    }

    if (steps_since_record != 0)
        out.records.push_back(make_record(s, twophase_rhs(s)));
    out.final_state = s;
    return out;
}

double sample_profile(const TwoPhaseState& s, double x) {
    const double xr = x - std::floor(x);
    const double alpha = s.alpha();
    if (xr < s.phi()) return alpha + xr * s.p();
    if (xr < s.psi()) return alpha + s.phi() * s.p() + (xr - s.phi()) * s.q();
    return alpha + s.phi() * s.p() + (s.psi() - s.phi()) * s.q() +
           (xr - s.psi()) * s.p();
}

double sample_profile_slope(const TwoPhaseState& s, double x) {
    const double xr = x - std::floor(x);
    return (xr >= s.phi() && xr < s.psi()) ? s.q() : s.p();
}

PolarPoint polar_oracle(const TwoPhaseState& s0, double t, double tol) {
    if (!(s0.p() > 0.0 && s0.q() < 0.0))
        throw ConfigError("polar oracle requires p0 > 0 > q0");

    const double n = s0.dim().n();
    const double frac_exp = 1.0 / (n - 1.0);
    const double diff_exp = (n + 1.0) / (n - 1.0);

    auto shape = [&](double theta) {
        const double c = std::cos(theta), s = std::sin(theta);
        return std::pow(std::abs(c * s), frac_exp) *
               std::pow(std::abs(c - s), -diff_exp);
    };

    const double r0 = std::hypot(s0.p(), s0.q());
    const double theta0 = std::atan2(s0.q(), s0.p());
    const double trajectory_c = r0 / shape(theta0);
    if (t == 0.0) return {r0, theta0};

    auto theta_dot = [&](double theta) {
        const double c = std::cos(theta), s = std::sin(theta);
        return -trajectory_c * std::pow(std::abs(c * s), n / (n - 1.0)) *
               std::pow(std::abs(c - s), -2.0 / (n - 1.0));
    };

    // Adaptive RK4 with step doubling; the right side vanishes at both ends
    // of (-pi/2, 0), so steps stretch as theta approaches -pi/2.
    auto rk4 = [&](double theta, double h) {
        const double k1 = theta_dot(theta);
        const double k2 = theta_dot(theta + 0.5 * h * k1);
        const double k3 = theta_dot(theta + 0.5 * h * k2);
        const double k4 = theta_dot(theta + h * k3);
        return theta + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    };

    double theta = theta0;
    double elapsed = 0.0;
    double h = std::min(1e-2, t);
    const int max_iters = 20000000;
    for (int it = 0; it < max_iters && elapsed < t - 1e-15; ++it) {
        h = std::min(h, t - elapsed);
        const double full = rk4(theta, h);
        const double half = rk4(rk4(theta, 0.5 * h), 0.5 * h);
        const double err = std::abs(full - half) / 15.0;
        const double budget = tol * (1.0 + std::abs(theta));
        if (err <= budget) {
            theta = half;
            elapsed += h;
        }
        const double grow = err > 0.0 ? 0.9 * std::pow(budget / err, 0.2) : 5.0;
        h *= std::clamp(grow, 0.2, 5.0);
    }
    return {trajectory_c * shape(theta), theta};
}

double rh_check(std::span<const TwoPhaseRecord> series) {
    double worst = 0.0;
    for (const auto& r : series) {
        const double u_phi = r.alpha + r.phi * r.p;
        const double u_psi = r.alpha + r.phi * r.p + (r.psi - r.phi) * r.q;
        worst = std::max(worst, std::abs(r.dphi - u_phi));
        worst = std::max(worst, std::abs(r.dpsi - u_psi));
    }
    return worst;
}

}  // namespace stagflow
