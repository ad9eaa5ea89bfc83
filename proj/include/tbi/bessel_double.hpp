#pragma once

#include "tbi/types.hpp"

namespace tbi::bessel {

struct DoubleBesselSpec {
    PowerIndices idx;
    ExpParams params;
    double V = 0.0;  // common wave number for both Bessel factors
    int L1 = 0;      // order attached to r32
    int L2 = 0;      // order attached to r31
};

// Default truncation control for the double series below.  Convergence is
// slower than in the single-Bessel case (the inner binomial sum effectively
// doubles the wave number relative to the exponential rates), so the term
// cap is raised to 150.
SeriesControl double_series_control();

// B(L1,L2) = /// j_L1(V r32) j_L2(V r31) r32^k r31^l r21^n exp(...) d3r,
// evaluated as an alternating series over p whose inner q-sum couples the
// two Bessel expansions; carries a V^(L1+L2) prefactor.  Truncation contract
// and error estimate as in the single-Bessel series.  Convergence is
// geometric in (2V/(alpha+beta))^2; at 2V = alpha+beta the terms decay only
// algebraically and the result may legitimately come back non-converged with
// an honest first-omitted-term bound.
IntegralResult double_bessel_integral(const DoubleBesselSpec& spec,
                                      const SeriesControl& ctl = double_series_control());

// /// sin(V r32) sin(V r31) r32^k r31^l r21^n exp(...) d3r via the direct
// double sum in even powers of V.  Identical to V^2 times the (L1,L2)=(0,0)
// integral at indices (k+1, l+1, n), which the tests enforce.
IntegralResult sin_sin_integral(const PowerIndices& idx, const ExpParams& params,
                                double V,
                                const SeriesControl& ctl = double_series_control());

// Truncated double series for the pointwise product j_L1(a*x) * j_L2(b*y).
// The (p,q) coefficient layout is the one used by double_bessel_integral;
// summing this series and replacing each monomial x^i y^j by the matching
// polynomial integral reproduces that operation.
double product_jj_series(int L1, int L2, double a, double b, double x, double y,
                         int p_max);

}  // namespace tbi::bessel
