#pragma once

#include <span>
#include <vector>

#include "stagflow/grid.hpp"

namespace stagflow {

/// Exact piecewise-affine two-phase state: outer slope p on (0,phi) u (psi,1),
/// center slope q on (phi,psi), offset velocity alpha fixed algebraically by
/// the conserved (zero) mean. int_p and int_q accumulate the time integrals
/// of p and q that the closed-form phase fractions are written in.
class TwoPhaseState {
  public:
    TwoPhaseState(double p, double q, double phi, double psi, Dimension dim,
                  double c = 0.0);

    double t() const { return t_; }
    double p() const { return p_; }
    double q() const { return q_; }
    double phi() const { return phi_; }
    double psi() const { return psi_; }
    double int_p() const { return int_p_; }
    double int_q() const { return int_q_; }
    const Dimension& dim() const { return dim_; }

    /// Offset velocity from the conserved mean (c = 0):
    /// alpha = -p/2 (phi + psi - 1).
    double alpha() const { return -0.5 * p_ * (phi_ + psi_ - 1.0); }

    /// Periodicity defect N = phi p + (psi - phi) q + (1 - psi) p; zero on
    /// admissible states and preserved by the dynamics.
    double periodicity_defect() const {
        return phi_ * p_ + (psi_ - phi_) * q_ + (1.0 - psi_) * p_;
    }

    // Mutable access for the integrator.
    struct Raw {
        double t, p, q, phi, psi, int_p, int_q;
    };
    Raw raw() const { return {t_, p_, q_, phi_, psi_, int_p_, int_q_}; }
    void set_raw(const Raw& r);

  private:
    double t_ = 0.0;
    double p_, q_, phi_, psi_;
    double int_p_ = 0.0, int_q_ = 0.0;
    Dimension dim_;
};

struct TwoPhaseDerivs {
    double dp, dq, dphi, dpsi;
};

/// The autonomous system
///   dp/dt = (p^2 + n p q)/(n-1),  dq/dt = (q^2 + n p q)/(n-1),
///   dphi/dt = alpha + phi p,      dpsi/dt = alpha + phi p + (psi - phi) q,
/// with alpha recomputed from the conserved mean at every evaluation.
/// Throws PhaseCollapseError when either phase fraction is below 1e-12.
TwoPhaseDerivs twophase_rhs(const TwoPhaseState& s);

struct TwoPhaseRecord {
    double t, p, q, phi, psi, alpha, int_p, int_q;
    double n_residual;          // |periodicity defect|
    double partition_residual;  // closed-form phase partition identity
    double dphi, dpsi;          // interface speeds from the state equations
};

struct TwoPhaseOutcome {
    TwoPhaseState final_state;
    std::vector<TwoPhaseRecord> records;
    double max_n_residual = 0.0;
    double max_partition_residual = 0.0;
    // Initial data the closed forms refer to.
    double p0, q0, phi0, psi0;
};

/// RK4 integration to t_end; int_p and int_q accumulate with the same stages.
/// Global existence is exact for admissible data, so a collapse means the
/// integrator failed.
TwoPhaseOutcome evolve_twophase(const TwoPhaseState& s0, double dt, double t_end,
                                int record_every = 100);

/// The three-piece affine profile at position x (any real, reduced mod 1).
double sample_profile(const TwoPhaseState& s, double x);

/// Slope of the profile at x: p in the outer phase, q in the center phase.
double sample_profile_slope(const TwoPhaseState& s, double x);

struct PolarPoint {
    double r, theta;
};

/// Independent polar-form solution of the (p, q) system for p0 > 0 > q0:
/// integrates the scalar theta equation with the trajectory constant fixed
/// from the initial data and reads r from the closed form. theta stays in
/// (-pi/2, 0); the right side vanishes at both ends, handled by adaptive
/// stepping.
PolarPoint polar_oracle(const TwoPhaseState& s0, double t, double tol = 1e-12);

/// Max over the series of the Rankine-Hugoniot interface residuals
/// |dphi - u(phi-)| and |dpsi - u(psi-)|: discontinuities must ride the flow.
double rh_check(std::span<const TwoPhaseRecord> series);

}  // namespace stagflow
