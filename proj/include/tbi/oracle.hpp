#pragma once

#include <array>
#include <functional>

#include "tbi/types.hpp"

namespace tbi::oracle {

// Per-axis rule for the tensor-product quadrature over perimetric coordinates.
// laguerre matches exponential decay with known rates and is exact for
// polynomial integrands; double_exponential handles integrands with algebraic
// decay (the rates are then ignored).
enum class AxisRule { laguerre, double_exponential };

// Brute-force evaluation target: the distance-space integral
//
//   2 * int int int F(r32, r31, r21) [r32 r31 r21] exp(-alpha*r32 - ...) du1 du2 du3
//
// over perimetric coordinates, with the bracketed volume weight optional.
// This module is the independent reference every closed form and series is
// validated against, so it shares no code with them beyond the type layer.
struct OracleSpec {
    std::function<double(const RelativePoint&)> integrand;
    ExpParams params;
    bool include_volume_weight = true;
    int nodes_per_axis = 128;
};

// Tensor-product quadrature of the spec above. The error estimate compares
// the requested grid with one of twice the per-axis node count; the returned
// value is from the finer grid. converged means the grids agree to 1e-9
// relative, the threshold used when freezing reference values.
IntegralResult quad3d(const OracleSpec& spec);

// Lower-level kernel: int over (0,inf)^3 of
//   g(u1, u2, u3) * exp(-rates[0]*u1 - rates[1]*u2 - rates[2]*u3) du1 du2 du3
// with no Jacobian factor. For AxisRule::double_exponential the exponential
// factor is not applied (pass rates {0,0,0}); g carries the whole integrand.
// Deterministic: fixed summation order, slab-parallel with ordered reduction.
double quad3d_perimetric(const std::function<double(double, double, double)>& g,
                         const std::array<double, 3>& rates, int nodes_per_axis,
                         AxisRule rule = AxisRule::laguerre);

// int_0^inf f(x) dx by double-exponential transform with node-doubling error
// control. decay_rate centers the rule (pass 0 when unknown); shared by the
// one-dimensional reductions and the Bessel-type cosh integrals.
IntegralResult quad1d_semiinfinite(const std::function<double(double)>& f, double decay_rate,
                                   double rel_tol);

}  // namespace tbi::oracle
