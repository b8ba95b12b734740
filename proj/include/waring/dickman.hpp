#pragma once

namespace waring {

// Dickman's function: rho(x) = 1 on [0,1], x*rho'(x) = -rho(x-1) beyond.
// Solved on a uniform grid by midpoint quadrature of the integral form
//   rho(x) = rho(x0) - int_{x0}^{x} rho(t-1)/t dt,
// then evaluated by linear interpolation.  Absolute error is well under
// 1e-8 for x <= 10 at the default step.
double dickman_rho(double x);

// Same solver with an explicit grid step (used by the step-halving checks).
double dickman_rho(double x, double step);

} // namespace waring
