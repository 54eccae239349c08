#include "stagflow/interp.hpp"

#include <algorithm>
#include <cmath>

namespace stagflow {

MonotonePeriodicCubic::MonotonePeriodicCubic(std::vector<double> xs,
                                             std::vector<double> ys,
                                             double period, double shift)
    : xs_(std::move(xs)), ys_(std::move(ys)), period_(period), shift_(shift) {
    const size_t n = xs_.size();
    if (n < 4 || ys_.size() != n) throw ConfigError("interpolant needs >= 4 knots");
    for (size_t i = 1; i < n; ++i)
        if (!(xs_[i] > xs_[i - 1]))
            throw ConfigError("interpolation abscissae must be strictly increasing");
    if (!(xs_[n - 1] - xs_[0] < period_))
        throw ConfigError("knots must span less than one period");

    // Close the period with the wrapped first knot, then estimate derivatives
    // from the periodic extension on both sides.
    xs_.push_back(xs_[0] + period_);
    ys_.push_back(ys_[0] + shift_);

    const size_t m = xs_.size();  // n + 1 knots, n intervals
    std::vector<double> h(m - 1), d(m - 1);
    for (size_t i = 0; i + 1 < m; ++i) {
        h[i] = xs_[i + 1] - xs_[i];
        d[i] = (ys_[i + 1] - ys_[i]) / h[i];
    }

    auto secant_before = [&](size_t i) {
        // secant of the interval ending at knot i, wrapping periodically
        return i == 0 ? d[m - 2] : d[i - 1];
    };
    auto width_before = [&](size_t i) { return i == 0 ? h[m - 2] : h[i - 1]; };

    slopes_.resize(m);
    for (size_t i = 0; i < m - 1; ++i) {
        const double d0 = secant_before(i), d1 = d[i];
        const double h0 = width_before(i), h1 = h[i];
        if (d0 * d1 <= 0.0) {
            slopes_[i] = 0.0;
            continue;
        }
        // Weighted harmonic mean (Fritsch-Butland form): monotone by
        // construction and third-order accurate on smooth data.
        const double w0 = 2.0 * h1 + h0;
        const double w1 = h1 + 2.0 * h0;
        slopes_[i] = (w0 + w1) / (w0 / d0 + w1 / d1);
    }
    slopes_[m - 1] = slopes_[0];
}

double MonotonePeriodicCubic::operator()(double x) const {
    // Reduce into the covered window [xs_[0], xs_[0] + period).
    const double wind = std::floor((x - xs_.front()) / period_);
    const double xr = x - wind * period_;

    auto it = std::upper_bound(xs_.begin(), xs_.end(), xr);
    size_t i = static_cast<size_t>(std::distance(xs_.begin(), it));
    i = std::clamp<size_t>(i, 1, xs_.size() - 1) - 1;

    const double h = xs_[i + 1] - xs_[i];
    const double s = (xr - xs_[i]) / h;
    const double y0 = ys_[i], y1 = ys_[i + 1];
    const double m0 = slopes_[i] * h, m1 = slopes_[i + 1] * h;

    const double s2 = s * s, s3 = s2 * s;
    const double value = (2.0 * s3 - 3.0 * s2 + 1.0) * y0 + (s3 - 2.0 * s2 + s) * m0 +
                         (-2.0 * s3 + 3.0 * s2) * y1 + (s3 - s2) * m1;
    return value + wind * shift_;
}

}  // namespace stagflow
