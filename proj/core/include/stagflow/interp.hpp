#pragma once

#include <vector>

#include "stagflow/errors.hpp"

namespace stagflow {

/// Shape-preserving cubic Hermite interpolant (Fritsch-Carlson limited
/// derivative estimates) on a periodic graph with a winding shift:
///   y(x + period) = y(x) + shift.
/// Built for inverting lifted circle maps: with abscissae gamma_j and values
/// x_j (both increasing, shift = 1) the interpolant is gamma^{-1}, and the
/// limiter keeps it monotone wherever the data is.
class MonotonePeriodicCubic {
  public:
    /// xs strictly increasing, spanning less than one period.
    MonotonePeriodicCubic(std::vector<double> xs, std::vector<double> ys,
                          double period, double shift);

    double operator()(double x) const;

  private:
    std::vector<double> xs_;      // n + 1 knots: xs plus wrapped first knot
    std::vector<double> ys_;
    std::vector<double> slopes_;  // limited derivative at each knot
    double period_;
    double shift_;
};

}  // namespace stagflow
