#pragma once

#include "tbi/loggamma.hpp"
#include "tbi/types.hpp"

namespace tbi::core {

// Base moment integral over the three interparticle distances:
//
//   Gamma_{k;l;n}(alpha, beta, gamma) =
//     int_0^inf int_0^inf int_0^inf r32^k r31^l r21^n
//       exp(-alpha*r32 - beta*r31 - gamma*r21) dr32 dr31 dr21
//
// restricted to triangle-compatible triples, i.e. the integral is taken over
// perimetric coordinates with Jacobian 2. Evaluated by the closed-form triple
// finite sum; exact up to rounding.
IntegralResult gamma_klm(const PowerIndices& idx, const ExpParams& p);

// log of gamma_klm without ever forming the (possibly overflowing) value.
// All summands are positive, so the result is a plain log magnitude. The
// series modules combine this with log coefficients per term; the integral
// itself can exceed double range at large k even though series terms do not.
long double gamma_klm_log(const PowerIndices& idx, const ExpParams& p);

// One summand of the gamma_klm triple sum (Jacobian factor folded in) as a
// log magnitude and sign. Exponentiating and summing every (k1, l1, n1)
// reproduces gamma_klm. Summands are positive whenever the pairwise sums of
// the exponents are positive.
SignedLog log_term_magnitude(int k1, int l1, int n1, const PowerIndices& idx, const ExpParams& p);

// Parameters of the basic perimetric-coordinate integral
//
//   B(a,b,c; p1,p2,p3; q0,q1,q2,q3; s) =
//     int u1^p1 u2^p2 u3^p3 exp(-a*u1 - b*u2 - c*u3)
//       / (q0 + q1*u1 + q2*u2 + q3*u3)^s du1 du2 du3
//
// and of its exponential-free power-type companion G (same integrand without
// the exponential factor). Powers p_i may be non-integer.
struct BasicBSpec {
    double a = 1.0, b = 1.0, c = 1.0;
    double p1 = 0.0, p2 = 0.0, p3 = 0.0;
    double q0 = 1.0, q1 = 0.0, q2 = 0.0, q3 = 0.0;
    double s = 1.0;
};

// Evaluates B via its exact reduction to a single semi-infinite integral,
//
//   B = Gamma(p1+1)Gamma(p2+1)Gamma(p3+1)/Gamma(s) *
//       int_0^inf exp(-q0*x) x^(s-1)
//         / ((a+q1*x)^(p1+1) (b+q2*x)^(p2+1) (c+q3*x)^(p3+1)) dx,
//
// by double-exponential quadrature. Requires a, b, c, s > 0, p_i >= 0,
// q_i >= 0. With q1 = q2 = q3 = 0, s = 1, q0 = 1 this reduces to the closed
// form Gamma(p1+1)Gamma(p2+1)Gamma(p3+1) / (a^(p1+1) b^(p2+1) c^(p3+1)).
IntegralResult basic_b(const BasicBSpec& spec, double rel_tol = 1e-12);

// Closed form of the power-type integral G:
//
//   G = Gamma(p1+1)Gamma(p2+1)Gamma(p3+1)/Gamma(s)
//       * Gamma(s - p1 - p2 - p3 - 3)
//       / (q1^(p1+1) q2^(p2+1) q3^(p3+1) q0^(s - p1 - p2 - p3 - 3)).
//
// Requires s > p1 + p2 + p3 + 3 (otherwise the integral diverges) and all
// q's positive. The a, b, c fields of the spec are ignored.
IntegralResult power_g(const BasicBSpec& spec);

// Perimetric coordinates from distances: u1 = (r31 + r21 - r32)/2 and cyclic.
// Throws std::domain_error if the triangle conditions fail (any u_i < 0).
PerimetricPoint to_perimetric(const RelativePoint& r);

// Distances from perimetric coordinates: r32 = u2 + u3, r31 = u1 + u3,
// r21 = u1 + u2. Throws std::domain_error if any u_i < 0.
RelativePoint from_perimetric(const PerimetricPoint& u);

}  // namespace tbi::core
