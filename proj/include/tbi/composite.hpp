#pragma once

#include <vector>

#include "tbi/types.hpp"

namespace tbi::composite {

// One term A * r^n (optionally damped by exp(-B r)) of a radial function
// expanded over the r32 coordinate.
struct SeriesTerm {
    double A = 0.0;
    int n = 0;
    double B = 0.0;  // damping exponent, consulted only in damped mode
};

struct SeriesFunction {
    std::vector<SeriesTerm> terms;
};

// Shifted-argument cosine integral J: radial weight r32^k r31^l r21^n times
// cos(sqrt(r32^2 - 2 t r32)) under the usual exponential; (0,0,0) extra
// powers give the bare kernel.  Evaluated as a series in t whose kappa-th
// term is t^kappa/kappa! times a Bessel-type integral of order kappa-1 at
// unit wave number.
struct JSpec {
    PowerIndices idx;
    ExpParams params;
    double t = 0.0;
    int kappa_max = 40;
};

// Sum_n A_n * Gamma_{n+1;1;1}: matrix elements of a polynomial (damped:
// polynomial-times-exponential) radial function f(r32) against the basis
// weight r32 r31 r21 exp(...).  damped=true shifts alpha by B_n per term.
IntegralResult series_integral(const SeriesFunction& f, const ExpParams& params,
                               bool damped);

// J(spec) = sum_kappa (t^kappa / kappa!) B^(kappa-1)_{k+1;l;n}(V=1), with the
// kappa=0 term supplied by bessel_neg1_integral.  Same truncation contract as
// the single-Bessel series, capped at kappa_max.
IntegralResult j_integral(const JSpec& spec, const SeriesControl& ctl = {});

// /// r32^{k-1} r31^l r21^n cos(V r32) exp(...) d3r, the order -1 member of
// the Bessel-integral family (cos x = x j_{-1}(x)).  Assembled from the
// order-0 and order-1 series via cos(Vx) = j0(Vx) - Vx j1(Vx); requires
// k >= 1 so the 1/r32 pole of j_{-1} is cancelled.
IntegralResult bessel_neg1_integral(const PowerIndices& idx,
                                    const ExpParams& params, double V,
                                    const SeriesControl& ctl = {});

}  // namespace tbi::composite
