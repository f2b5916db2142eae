#pragma once

// Individual Bessel evaluation schemes. bessel_j dispatches between them;
// they are public so tests can compare neighbouring regimes at the switch
// points.

namespace murmur::special::detail {

double bessel_series(int order, double x);
double bessel_miller(int order, double x);
double bessel_hankel_forward(int order, double x);

}  // namespace murmur::special::detail
