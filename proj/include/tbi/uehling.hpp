#pragma once

#include "tbi/types.hpp"

namespace tbi::uehling {

// Charges and scales for the vacuum-polarization matrix element.  `b` is the
// inverse fine-structure constant and sets the length scale of the kernel
// argument 2*b*xi; the two fields must stay consistent.
struct UehlingSystem {
    double q1 = 1.0;
    double q2 = 1.0;
    double q3 = 1.0;
    double fine_structure = 1.0 / 137.035999;
    double b = 137.035999;
    double nuclear_charge = 1.0;
};

// Controls the 1D xi-quadrature of the matrix element.
enum class XiMapping { inverse_u };  // xi = 1/u, u in (0,1]

struct XiQuadSpec {
    int node_count = 64;  // floor on quadrature resolution
    XiMapping mapping = XiMapping::inverse_u;
    double tol = 1e-10;
};

enum class Pair { p21 = 21, p31 = 31, p32 = 32 };

enum class PointMode { integral, ki_form };

// Screened Coulomb matrix element V0 * /// (1/r32) exp(-mu r32) r32 r31 r21
// exp(-alpha r32 - beta r31 - gamma r21) d3r, evaluated in closed form as
// V0 * Gamma_{0;1;1}(alpha + mu, beta, gamma).
IntegralResult yukawa_matrix_element(const ExpParams& params, double mu,
                                     double V0);

// Closed four-term rational expression for the shifted pair matrix element
// /// (1/r_ij) exp(-shift * r_ij) r32 r31 r21 exp(...) d3r.  The pair selects
// which interparticle distance carries the screening factor; 31 and 32 are
// obtained from the 21 expression by cyclic parameter permutation.  Agrees
// with gamma_klm at shifted parameters, which the tests enforce.
double ubar_kernel(Pair pair, const ExpParams& params, double shift);

// Uehling (vacuum-polarization) correction to all three pairwise Coulomb
// interactions: (2 a_fs / 3 pi) * Int_1^inf [sum_ij q_i q_j Ubar_ij(2 b xi)]
// * (1 + 1/(2 xi^2)) * sqrt(xi^2 - 1) / xi^2 dxi, with the xi-integral done
// after the substitution xi = 1/u on (0,1] to tame the endpoint.
IntegralResult uehling_matrix_element(const UehlingSystem& sys,
                                      const ExpParams& params,
                                      const XiQuadSpec& quad = {});

// Pointwise Uehling potential around a charge Q at distance r.  Both modes
// evaluate (2 a_fs Q / 3 pi r) * B(2 b r): `integral` computes B by the
// xi-integral, `ki_form` by the equivalent K0/Ki1/Ki2 combination
//   B(z) = (1 + z^2/12) K0(z) - (z/12) Ki1(z) - (z^2/12 + 5/6) Ki2(z).
double uehling_potential_point(const UehlingSystem& sys, double r,
                               PointMode mode);

// Modified Bessel function K0: ascending series for z < 2, cosh-integral
// representation otherwise.
double bessel_k0(double z);

// Repeated integrals Ki_n(z) = Int_0^inf exp(-z cosh t) / cosh^n t dt for
// n >= 1; satisfies d Ki_n / dz = -Ki_{n-1} with Ki_0 = K0.
double ki_n(int n, double z);

}  // namespace tbi::uehling
