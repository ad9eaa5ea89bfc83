#pragma once

#include "tbi/types.hpp"

namespace tbi::bessel {

// Which radial coordinate carries the spherical Bessel factor.  The integrals
// below are stated for j_L(V*r32); the other two choices are handled by
// permuting indices and exponential parameters before evaluation.
enum class RadialArg { r32, r31, r21 };

struct BesselIntegralSpec {
    PowerIndices idx;
    ExpParams params;
    double V = 0.0;  // wave number multiplying the radial argument
    int L = 0;       // spherical Bessel order
    RadialArg arg = RadialArg::r32;
};

// B(0) = /// j_0(V r32) r32^k r31^l r21^n exp(-alpha r32 - beta r31 - gamma r21) d3r,
// evaluated as an alternating series of polynomial integrals with even powers
// of V.  Truncation: stop once `stall_count` consecutive terms are below
// rel_tol times the running partial sum; the reported abs_error_estimate is
// the magnitude of the first omitted term.  V=0 reduces to the polynomial
// integral itself.
IntegralResult bessel0_integral(const BesselIntegralSpec& spec,
                                const SeriesControl& ctl = {});

// Same integral with j_1 in place of j_0 (odd powers of V); vanishes at V=0.
IntegralResult bessel1_integral(const BesselIntegralSpec& spec,
                                const SeriesControl& ctl = {});

// General order L >= 0.  Reduces to the two operations above for L=0,1 via
// factorial identities; the series carries an overall V^L prefactor.
IntegralResult besselL_integral(const BesselIntegralSpec& spec,
                                const SeriesControl& ctl = {});

// Spherical Bessel function j_L(x) for L >= -1 and x >= 0.
//   L = -1: cos(x)/x (domain error at x = 0)
//   L =  0: sin(x)/x with the usual limit at 0
//   L =  1: sin(x)/x^2 - cos(x)/x, series-evaluated near 0
//   L >= 2: ascending series for small x, forward recurrence for large x,
//           backward (Miller) recurrence in between.
double spherical_jL(int L, double x);

}  // namespace tbi::bessel
