#pragma once

#include <cmath>
#include <vector>

#include "stagflow/errors.hpp"

namespace stagflow {

/// Uniform collocation grid on the unit torus T = R/Z with nodes x_j = j/M.
/// M must be even (spectral symmetry) and at least 8.
class PeriodicGrid {
  public:
    explicit PeriodicGrid(int num_points) : m_(num_points) {
        if (m_ < 8 || m_ % 2 != 0)
            throw ConfigError("grid size must be even and >= 8, got " +
                              std::to_string(num_points));
    }

    int size() const { return m_; }
    double spacing() const { return 1.0 / m_; }
    double node(int j) const { return static_cast<double>(j) / m_; }

    std::vector<double> nodes() const {
        std::vector<double> x(m_);
        for (int j = 0; j < m_; ++j) x[j] = node(j);
        return x;
    }

    friend bool operator==(const PeriodicGrid& a, const PeriodicGrid& b) {
        return a.m_ == b.m_;
    }

  private:
    int m_;
};

/// Spatial dimension parameter n > 1 of the ambient Euler flow, with the two
/// derived coefficients that appear throughout the reduced equation.
class Dimension {
  public:
    explicit Dimension(double n) : n_(n) {
        if (!(n > 1.0))
            throw ConfigError("dimension parameter must satisfy n > 1, got " +
                              std::to_string(n));
    }

    double n() const { return n_; }
    /// n/(n-1), the coefficient of the nonlocal forcing term.
    double a() const { return n_ / (n_ - 1.0); }
    /// (n-3)/(n-1), the transport exponent; zero at n = 3.
    double b() const { return (n_ - 3.0) / (n_ - 1.0); }

    bool is_integer() const { return std::abs(n_ - std::round(n_)) < 1e-12; }

  private:
    double n_;
};

/// Real-valued periodic function sampled on a PeriodicGrid.
class Field {
  public:
    Field(PeriodicGrid grid, std::vector<double> values)
        : grid_(grid), values_(std::move(values)) {
        if (static_cast<int>(values_.size()) != grid_.size())
            throw ConfigError("field length does not match grid size");
    }

    /// Zero field on the given grid.
    explicit Field(PeriodicGrid grid)
        : grid_(grid), values_(static_cast<size_t>(grid.size()), 0.0) {}

    const PeriodicGrid& grid() const { return grid_; }
    int size() const { return grid_.size(); }

    std::vector<double>& values() { return values_; }
    const std::vector<double>& values() const { return values_; }

    double operator[](int j) const { return values_[static_cast<size_t>(j)]; }
    double& operator[](int j) { return values_[static_cast<size_t>(j)]; }

    bool all_finite() const {
        for (double v : values_)
            if (!std::isfinite(v)) return false;
        return true;
    }

  private:
    PeriodicGrid grid_;
    std::vector<double> values_;
};

namespace detail {
inline void require_same_grid(const Field& a, const Field& b) {
    if (!(a.grid() == b.grid()))
        throw ConfigError("fields live on different grids");
}
}  // namespace detail

inline Field operator+(const Field& a, const Field& b) {
    detail::require_same_grid(a, b);
    Field out = a;
    for (int j = 0; j < out.size(); ++j) out[j] += b[j];
    return out;
}

inline Field operator-(const Field& a, const Field& b) {
    detail::require_same_grid(a, b);
    Field out = a;
    for (int j = 0; j < out.size(); ++j) out[j] -= b[j];
    return out;
}

inline Field operator*(double s, const Field& f) {
    Field out = f;
    for (int j = 0; j < out.size(); ++j) out[j] *= s;
    return out;
}

/// out += s * f, the only combination the time steppers need in bulk.
inline void axpy(double s, const Field& f, Field& out) {
    detail::require_same_grid(f, out);
    for (int j = 0; j < out.size(); ++j) out[j] += s * f[j];
}

inline Field pointwise_product(const Field& a, const Field& b) {
    detail::require_same_grid(a, b);
    Field out = a;
    for (int j = 0; j < out.size(); ++j) out[j] *= b[j];
    return out;
}

inline double max_abs(const Field& f) {
    double m = 0.0;
    for (double v : f.values()) m = std::max(m, std::abs(v));
    return m;
}

inline double max_abs_diff(const Field& a, const Field& b) {
    detail::require_same_grid(a, b);
    double m = 0.0;
    for (int j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
    return m;
}

}  // namespace stagflow
