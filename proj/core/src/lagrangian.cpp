#include "stagflow/lagrangian.hpp"

#include <algorithm>
#include <cmath>

#include "stagflow/interp.hpp"
#include "stagflow/operators.hpp"
#include "stagflow/spectral.hpp"

namespace stagflow {

namespace {

// Label-space spectral derivative of a periodic label function.
std::vector<double> label_deriv(const PeriodicGrid& grid,
                                const std::vector<double>& periodic_values) {
    return deriv(Field(grid, periodic_values), 1).values();
}

// gamma = identity + periodic part; its label derivative is 1 + (part)_l.
std::vector<double> gamma_label_deriv(const PeriodicGrid& grid,
                                      const std::vector<double>& gamma) {
    std::vector<double> part(gamma.size());
    for (size_t j = 0; j < gamma.size(); ++j)
        part[j] = gamma[j] - grid.node(static_cast<int>(j));
    std::vector<double> out = label_deriv(grid, part);
    for (double& v : out) v += 1.0;
    return out;
}

struct StageDeriv {
    std::vector<double> dgamma;  // = gdot
    std::vector<double> dgdot;   // acceleration
    std::vector<double> djac;    // u_x at particles
};

class FlowSystem {
  public:
    FlowSystem(const FlowConfig& cfg)
        : cfg_(cfg), grid_(cfg.grid_size), nodes_(grid_.nodes()) {}

    const PeriodicGrid& grid() const { return grid_; }

    Field velocity_on_grid(const std::vector<double>& gamma,
                           const std::vector<double>& gdot) const {
        for (size_t j = 1; j < gamma.size(); ++j)
            if (!(gamma[j] > gamma[j - 1]))
                throw FlowDegenerateError(current_t_, 0.0);
        MonotonePeriodicCubic inverse(gamma, nodes_, 1.0, 1.0);
        std::vector<double> labels(nodes_.size());
        for (size_t i = 0; i < nodes_.size(); ++i) labels[i] = inverse(nodes_[i]);
        auto gdot_hat = spectral::analyze(Field(grid_, gdot));
        return Field(grid_, spectral::eval_many(gdot_hat, labels));
    }

    StageDeriv derivative(const std::vector<double>& gamma,
                          const std::vector<double>& gdot) const {
        Field u = velocity_on_grid(gamma, gdot);
        Field ux = deriv(u, 1);
        Field force = cfg_.dim.a() * nonlocal(dealiased_product(ux, ux));

        auto force_hat = spectral::analyze(force);
        auto ux_hat = spectral::analyze(ux);
        StageDeriv d;
        d.dgamma = gdot;
        d.dgdot = spectral::eval_many(force_hat, gamma);
        d.djac = spectral::eval_many(ux_hat, gamma);
        return d;
    }

    void set_time(double t) { current_t_ = t; }

  private:
    FlowConfig cfg_;
    PeriodicGrid grid_;
    std::vector<double> nodes_;
    double current_t_ = 0.0;
};

void axpy_vec(double s, const std::vector<double>& x, std::vector<double>& y) {
    for (size_t i = 0; i < y.size(); ++i) y[i] += s * x[i];
}

}  // namespace

FlowOutcome evolve_flow(const Field& u0, const FlowConfig& cfg) {
    if (u0.size() != cfg.grid_size)
        throw ConfigError("initial datum does not match cfg.grid_size");
    if (cfg.dt <= 0.0) throw ConfigError("evolve_flow requires dt > 0");

    FlowSystem sys(cfg);
    const PeriodicGrid& grid = sys.grid();
    const size_t m = static_cast<size_t>(cfg.grid_size);

    FlowState s;
    s.t = 0.0;
    s.gamma = grid.nodes();
    s.gdot = u0.values();
    s.jac_integral.assign(m, 0.0);

    FlowOutcome out{s, {s}};
    long steps_since_record = 0;

    auto check_jacobian = [&](const FlowState& state) {
        auto jac = gamma_label_deriv(grid, state.gamma);
        const double jmin = *std::min_element(jac.begin(), jac.end());
        if (jmin < cfg.eps_jac) throw FlowDegenerateError(state.t, jmin);
    };

    while (s.t < cfg.t_end - 1e-14) {
        const double dt = std::min(cfg.dt, cfg.t_end - s.t);
        sys.set_time(s.t);

        StageDeriv k1 = sys.derivative(s.gamma, s.gdot);

        std::vector<double> g2 = s.gamma, v2 = s.gdot;
        axpy_vec(0.5 * dt, k1.dgamma, g2);
        axpy_vec(0.5 * dt, k1.dgdot, v2);
        StageDeriv k2 = sys.derivative(g2, v2);

        std::vector<double> g3 = s.gamma, v3 = s.gdot;
        axpy_vec(0.5 * dt, k2.dgamma, g3);
        axpy_vec(0.5 * dt, k2.dgdot, v3);
        StageDeriv k3 = sys.derivative(g3, v3);

        std::vector<double> g4 = s.gamma, v4 = s.gdot;
        axpy_vec(dt, k3.dgamma, g4);
        axpy_vec(dt, k3.dgdot, v4);
        StageDeriv k4 = sys.derivative(g4, v4);

        for (size_t j = 0; j < m; ++j) {
            s.gamma[j] += dt / 6.0 *
                          (k1.dgamma[j] + 2.0 * k2.dgamma[j] + 2.0 * k3.dgamma[j] +
                           k4.dgamma[j]);
            s.gdot[j] += dt / 6.0 *
                         (k1.dgdot[j] + 2.0 * k2.dgdot[j] + 2.0 * k3.dgdot[j] +
                          k4.dgdot[j]);
            s.jac_integral[j] +=
                dt / 6.0 * (k1.djac[j] + 2.0 * k2.djac[j] + 2.0 * k3.djac[j] +
                            k4.djac[j]);
        }
        s.t += dt;
        check_jacobian(s);

        if (++steps_since_record >= cfg.record_every) {
            out.records.push_back(s);
            steps_since_record = 0;
        }
    }

    if (steps_since_record != 0) out.records.push_back(s);
    out.final_state = s;
    return out;
}

Field reconstruct_velocity(const FlowState& fs, const PeriodicGrid& grid) {
    MonotonePeriodicCubic inverse(fs.gamma, grid.nodes(), 1.0, 1.0);
    std::vector<double> labels(static_cast<size_t>(grid.size()));
    for (int i = 0; i < grid.size(); ++i)
        labels[static_cast<size_t>(i)] = inverse(grid.node(i));
    auto gdot_hat = spectral::analyze(Field(grid, fs.gdot));
    return Field(grid, spectral::eval_many(gdot_hat, labels));
}

std::vector<double> flow_jacobian(const FlowState& fs) {
    PeriodicGrid grid(static_cast<int>(fs.gamma.size()));
    return gamma_label_deriv(grid, fs.gamma);
}

std::vector<double> jacobian_exponential(const FlowState& fs) {
    std::vector<double> out(fs.jac_integral.size());
    for (size_t j = 0; j < out.size(); ++j) out[j] = std::exp(fs.jac_integral[j]);
    return out;
}

std::vector<double> ux_on_particles(const FlowState& fs) {
    PeriodicGrid grid(static_cast<int>(fs.gamma.size()));
    auto gdot_l = label_deriv(grid, fs.gdot);
    auto gamma_l = gamma_label_deriv(grid, fs.gamma);
    std::vector<double> out(gdot_l.size());
    for (size_t j = 0; j < out.size(); ++j) out[j] = gdot_l[j] / gamma_l[j];
    return out;
}

std::vector<double> uxx_on_particles(const FlowState& fs) {
    PeriodicGrid grid(static_cast<int>(fs.gamma.size()));
    auto ux = ux_on_particles(fs);
    auto ux_l = label_deriv(grid, ux);
    auto gamma_l = gamma_label_deriv(grid, fs.gamma);
    std::vector<double> out(ux_l.size());
    for (size_t j = 0; j < out.size(); ++j) out[j] = ux_l[j] / gamma_l[j];
    return out;
}

std::vector<double> transported_uxx(const FlowState& fs, const Field& u0xx,
                                    const Dimension& dim) {
    if (u0xx.size() != static_cast<int>(fs.gamma.size()))
        throw ConfigError("u0'' grid does not match flow state");
    auto gamma_l = flow_jacobian(fs);
    std::vector<double> out(gamma_l.size());
    for (size_t j = 0; j < out.size(); ++j) {
        if (gamma_l[j] <= 0.0) throw FlowDegenerateError(fs.t, gamma_l[j]);
        out[j] = u0xx[static_cast<int>(j)] * std::pow(gamma_l[j], -dim.b());
    }
    return out;
}

}  // namespace stagflow
