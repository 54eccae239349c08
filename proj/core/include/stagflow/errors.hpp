#pragma once

#include <stdexcept>
#include <string>

namespace stagflow {

/// Invalid user-supplied configuration (grids, dimensions, run parameters).
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// The mean-zero inverse derivative was applied to an integrand with
/// non-negligible mean; its periodic antiderivative does not exist.
class NonZeroMeanError : public std::runtime_error {
  public:
    NonZeroMeanError(double mean, double tol);
    double mean() const { return mean_; }

  private:
    double mean_;
};

/// An operation requested a dimension for which the quantity is undefined
/// (e.g. the conserved second-derivative norm below n = 3).
class DimensionUnsupportedError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Candidate finite-time singularity: the solution or its gradient left the
/// configured bounds, or stopped being finite.
class BlowUpError : public std::runtime_error {
  public:
    BlowUpError(double t, double min_dxu, double max_abs_u);
    double time() const { return t_; }
    double min_dxu() const { return min_dxu_; }
    double max_abs_u() const { return max_abs_u_; }

  private:
    double t_;
    double min_dxu_;
    double max_abs_u_;
};

/// The discrete flow map stopped being a diffeomorphism (Jacobian below the
/// configured floor); particle positions can no longer be inverted.
class FlowDegenerateError : public std::runtime_error {
  public:
    FlowDegenerateError(double t, double min_jacobian);
    double time() const { return t_; }
    double min_jacobian() const { return min_jacobian_; }

  private:
    double t_;
    double min_jacobian_;
};

/// A two-phase phase fraction collapsed to zero width. The exact dynamics
/// keeps both fractions positive for all time, so this signals integrator
/// failure, not model failure.
class PhaseCollapseError : public std::runtime_error {
  public:
    explicit PhaseCollapseError(double t);
    double time() const { return t_; }

  private:
    double t_;
};

inline NonZeroMeanError::NonZeroMeanError(double mean, double tol)
    : std::runtime_error("integrand mean " + std::to_string(mean) +
                         " exceeds tolerance " + std::to_string(tol) +
                         "; the periodic antiderivative requires mean-zero input"),
      mean_(mean) {}

inline BlowUpError::BlowUpError(double t, double min_dxu, double max_abs_u)
    : std::runtime_error("blow-up detected at t = " + std::to_string(t)),
      t_(t), min_dxu_(min_dxu), max_abs_u_(max_abs_u) {}

inline FlowDegenerateError::FlowDegenerateError(double t, double min_jacobian)
    : std::runtime_error("flow map degenerate at t = " + std::to_string(t) +
                         " (min Jacobian " + std::to_string(min_jacobian) + ")"),
      t_(t), min_jacobian_(min_jacobian) {}

inline PhaseCollapseError::PhaseCollapseError(double t)
    : std::runtime_error("two-phase interface collapse at t = " + std::to_string(t)),
      t_(t) {}

}  // namespace stagflow
