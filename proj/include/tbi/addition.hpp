#pragma once

#include <complex>

namespace tbi::addition {

// Planar configuration of the two position vectors r31, r32 (and their
// difference r21 = r31 - r32) together with a wave vector k, described by the
// angles theta_ij between k and each r_ij.  The representation is restricted
// to configurations where the three angles sum to pi; from_angles constructs
// exactly those, solving for the side lengths that realize a given angle
// pair.
struct TriangleGeometry {
    double r31 = 1.0;
    double r32 = 1.0;
    double theta21 = 0.0;
    double theta31 = 0.0;
    double theta32 = 0.0;

    // Length of r31 - r32 from the planar embedding.
    double r21() const;

    // Throws std::domain_error when the fields are inconsistent (negative
    // lengths, angles outside [0, pi], angle sum != pi, or an embedding whose
    // difference vector does not point along theta21).
    void validate(const char* where) const;
};

// Builds the unique geometry with the given r31 and angles theta31, theta32,
// taking theta21 = pi - theta31 - theta32.  Not every angle pair is
// realizable with non-negative side lengths; infeasible pairs throw
// std::domain_error.
TriangleGeometry from_angles(double r31, double theta31, double theta32);

// Legendre polynomial P_L(x) by the three-term recurrence.
double legendre_p(int L, double x);

// Partial Rayleigh sum  sum_{L=0}^{L_max} i^L (2L+1) j_L(kr) P_L(cos theta);
// converges to exp(i kr cos theta).
std::complex<double> rayleigh_partial_sum(double kr, double cos_theta,
                                          int L_max);

// |LHS - RHS| of the truncated plane-wave product identity
//   exp(i k r21 cos t21) = exp(i k r31 cos t31) * exp(-i k r32 cos t32)
// with both sides expanded as Rayleigh sums up to L_max.  Vanishes as L_max
// grows for any valid geometry.
double product_identity_residual(const TriangleGeometry& geom, double k,
                                 int L_max);

// |LHS - RHS| of the conjectured per-order identity
//   (2L+1) j_L(k r21) P_L(cos t21)
//     =? sum_l (-1)^(L-l) (2l+1)(2L-2l+1) j_l(k r31) j_{L-l}(k r32)
//                P_l(cos t31) P_{L-l}(cos t32).
// Measured and reported only; nothing in the library asserts it holds.
double termwise_identity_residual(const TriangleGeometry& geom, double k,
                                  int L);

}  // namespace tbi::addition
