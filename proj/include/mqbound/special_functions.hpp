#pragma once

#include "mqbound/signed_log.hpp"

namespace mqbound {

// Gamma(x) as (sign, ln|Gamma(x)|).  Valid for any real x that is not a pole
// (0, -1, -2, ...); for negative x the sign alternates between integers.
SignedLog gamma_signed(double x);

// ln(l!) for l >= 0.
double ln_factorial(long l);

// ln C(a, b) for 0 <= b <= a.
double ln_binomial(long a, long b);

// ln(volume of the unit ball in R^n), n >= 1.
double unit_ball_volume_ln(int n);

}  // namespace mqbound
