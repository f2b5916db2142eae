#pragma once

#include <functional>
#include <span>

#include "murmur/weight.hpp"

namespace murmur {

struct QuadratureOptions {
  double abs_tolerance = 1e-9;
  int max_intervals = 4000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  int intervals = 0;
};

/// Globally adaptive 15-point Gauss-Kronrod integration of f over the
/// interval. Subdivides the panel with the largest error estimate until the
/// summed estimate is below abs_tolerance. Throws AccuracyError (carrying
/// the best value and its error estimate) when the interval budget runs out.
QuadratureResult quadrature(const std::function<double(double)>& f,
                            Interval interval, QuadratureOptions options = {});

/// Integrates over [breaks.front(), breaks.back()], starting with one panel
/// per consecutive pair. Use for integrands with known kinks or jumps.
QuadratureResult quadrature(const std::function<double(double)>& f,
                            std::span<const double> breaks,
                            QuadratureOptions options = {});

}  // namespace murmur
